#pragma once

// Normal forms in G_{m,n} through the central extension
//   1 -> <z> -> G_{m,n} -> Z_m * Z_n -> 1,   z = x^m = y^n.
// An element is z^c followed by an alternating product of x^e (0 < e < m)
// and y^e (0 < e < n). That section of the quotient is unique, so equality
// of normal forms decides the word problem.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordcalc/params.hpp"
#include "ordcalc/words.hpp"

namespace ordcalc {

enum class Axis : int { X = 0, Y = 1 };

struct Syllable {
  Axis axis = Axis::X;
  int exponent = 1;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

struct NormalForm {
  long central = 0;
  std::vector<Syllable> syllables;

  bool is_identity() const noexcept { return central == 0 && syllables.empty(); }

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const noexcept {
    std::size_t h = std::hash<long>{}(nf.central);
    for (const auto& s : nf.syllables) {
      std::size_t v = static_cast<std::size_t>(s.exponent) * 2 + static_cast<std::size_t>(s.axis);
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline int axis_order(Axis axis, const GroupParams& params) {
  return axis == Axis::X ? params.m() : params.n();
}

namespace detail {

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Right-multiply by a syllable whose exponent is already in 1..order-1.
inline void push_syllable(NormalForm& nf, Axis axis, int e, const GroupParams& params) {
  const int order = axis_order(axis, params);
  if (!nf.syllables.empty() && nf.syllables.back().axis == axis) {
    int sum = nf.syllables.back().exponent + e;
    if (sum >= order) {
      ++nf.central;
      sum -= order;
    }
    if (sum == 0)
      nf.syllables.pop_back();
    else
      nf.syllables.back().exponent = sum;
    return;
  }
  nf.syllables.push_back({axis, e});
}

}  // namespace detail

/// Right-multiply `nf` in place by x^k or y^k.
inline void multiply_letter(NormalForm& nf, Axis axis, long k, const GroupParams& params) {
  const long order = axis_order(axis, params);
  nf.central += detail::floor_div(k, order);
  long r = k - detail::floor_div(k, order) * order;
  if (r > 0) detail::push_syllable(nf, axis, static_cast<int>(r), params);
}

inline NormalForm multiply(const NormalForm& u, const NormalForm& v, const GroupParams& params) {
  NormalForm out = u;
  out.central += v.central;
  // Pushing syllable by syllable cascades cancellations at the junction.
  for (const auto& s : v.syllables) detail::push_syllable(out, s.axis, s.exponent, params);
  return out;
}

inline NormalForm invert(const NormalForm& u, const GroupParams& params) {
  NormalForm out;
  out.central = -u.central - static_cast<long>(u.syllables.size());
  out.syllables.reserve(u.syllables.size());
  for (auto it = u.syllables.rbegin(); it != u.syllables.rend(); ++it)
    out.syllables.push_back({it->axis, axis_order(it->axis, params) - it->exponent});
  return out;
}

inline NormalForm power(const NormalForm& u, long k, const GroupParams& params) {
  NormalForm base = k < 0 ? invert(u, params) : u;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  NormalForm acc;
  while (e) {
    if (e & 1UL) acc = multiply(acc, base, params);
    e >>= 1;
    if (e) base = multiply(base, base, params);
  }
  return acc;
}

inline NormalForm normal_form(const Word& w, const GroupParams& params) {
  Word xy = w.alphabet() == Alphabet::XY ? w : translate(w, Alphabet::XY, params);
  NormalForm nf;
  for (const auto& p : xy.powers())
    multiply_letter(nf, p.letter == 0 ? Axis::X : Axis::Y, p.exponent, params);
  return nf;
}

inline NormalForm normal_form(std::string_view text, Alphabet alphabet, const GroupParams& params) {
  return normal_form(parse_word(text, alphabet), params);
}

/// Abelianizing weight with x -> n/g, y -> m/g (so z -> mn/g).
inline long weight(const NormalForm& u, const GroupParams& params) {
  long w = u.central * params.weight_z();
  for (const auto& s : u.syllables)
    w += s.exponent * (s.axis == Axis::X ? params.weight_x() : params.weight_y());
  return w;
}

/// s2 = x^{m-1} y^{-1}.
inline NormalForm s2_element(const GroupParams& params) {
  return normal_form(Word::letter(Alphabet::S, 1), params);
}

/// Returns q with u = s2^q, if such q exists.
inline std::optional<long> s2_power_of(const NormalForm& u, const GroupParams& params) {
  const NormalForm s2 = s2_element(params);
  const long ws2 = weight(s2, params);
  if (ws2 != 0) {
    long wu = weight(u, params);
    if (wu % ws2 != 0) return std::nullopt;
    long q = wu / ws2;
    if (power(s2, q, params) == u) return q;
    return std::nullopt;
  }
  // Klein case: s2 has weight zero, so search a bounded window.
  long bound = static_cast<long>(u.syllables.size()) + std::labs(u.central) * params.m() + 1;
  for (long q = 0; q <= bound; ++q) {
    if (power(s2, q, params) == u) return q;
    if (q && power(s2, -q, params) == u) return -q;
  }
  return std::nullopt;
}

/// Rewrites `u` as a word: x^{mc} followed by its syllables, then translated.
inline Word to_word(const NormalForm& u, Alphabet alphabet, const GroupParams& params) {
  Word w(Alphabet::XY);
  w.push_back(0, u.central * params.m());
  for (const auto& s : u.syllables) w.push_back(s.axis == Axis::X ? 0 : 1, s.exponent);
  return translate(w, alphabet, params);
}

/// Canonical text "z^c · X^e1 Y^e2 ..." with unit syllable exponents omitted.
inline std::string to_string(const NormalForm& u) {
  std::string out = "z^" + std::to_string(u.central);
  if (u.syllables.empty()) return out;
  out += " \xc2\xb7";
  for (const auto& s : u.syllables) {
    out += ' ';
    out += s.axis == Axis::X ? 'X' : 'Y';
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

}  // namespace ordcalc
