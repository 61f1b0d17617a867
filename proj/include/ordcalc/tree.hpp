#pragma once

// Points of the lifted end space of the Bass-Serre tree of Z_m * Z_n.
//
// An end is written (N; ±l1 l2 l3 ...): an integer level N, a side, and an
// infinite label sequence. On the plus side labels alternate X-range
// (1..m-1), Y-range (1..n-1), X-range, ...; on the minus side they start in
// the Y-range. Every end reachable from E = (0; -111...) and F = (0; +111...)
// is eventually periodic, stored as a preperiod followed by a repeating
// period. Ends are ordered lexicographically: level, then minus < plus,
// then labels by integer value.

#include <algorithm>
#include <compare>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordcalc/group.hpp"
#include "ordcalc/params.hpp"
#include "ordcalc/words.hpp"

namespace ordcalc {

enum class Side : int { Minus = 0, Plus = 1 };

struct End {
  long level = 0;
  Side side = Side::Plus;
  std::vector<int> preperiod;
  std::vector<int> period{1};

  int label(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
  }

  friend bool operator==(const End&, const End&) = default;
};

class EndError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Label range bound at position `i` (0-based) for an end on `side`.
inline int label_bound(Side side, std::size_t i, const GroupParams& params) {
  bool x_range = (side == Side::Plus) == (i % 2 == 0);
  return (x_range ? params.m() : params.n()) - 1;
}

namespace detail {

inline void minimize(End& e) {
  const std::size_t p = e.period.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = e.period[i] == e.period[i - d];
    if (ok) {
      e.period.resize(d);
      break;
    }
  }
  while (!e.preperiod.empty() && e.preperiod.back() == e.period.back()) {
    e.preperiod.pop_back();
    std::rotate(e.period.rbegin(), e.period.rbegin() + 1, e.period.rend());
  }
}

inline void pop_front(End& e) {
  if (!e.preperiod.empty())
    e.preperiod.erase(e.preperiod.begin());
  else
    std::rotate(e.period.begin(), e.period.begin() + 1, e.period.end());
}

inline void push_front(End& e, int label) { e.preperiod.insert(e.preperiod.begin(), label); }

}  // namespace detail

/// Validate `raw` and return its minimal (preperiod, period) representation.
inline End canonical_end(End raw, const GroupParams& params) {
  if (raw.period.empty()) throw EndError("end period must be nonempty");
  const std::size_t span = raw.preperiod.size() + 2 * raw.period.size();
  for (std::size_t i = 0; i < span; ++i) {
    int l = raw.label(i);
    int bound = label_bound(raw.side, i, params);
    if (l < 1 || l > bound)
      throw EndError("label " + std::to_string(l) + " at position " + std::to_string(i) +
                     " is outside 1.." + std::to_string(bound));
  }
  detail::minimize(raw);
  return raw;
}

inline End end_E() { return End{0, Side::Minus, {}, {1}}; }
inline End end_F() { return End{0, Side::Plus, {}, {1}}; }

inline std::strong_ordering compare_ends(const End& a, const End& b) {
  if (auto c = a.level <=> b.level; c != 0) return c;
  if (auto c = a.side <=> b.side; c != 0) return c;
  const std::size_t bound = a.preperiod.size() + b.preperiod.size() +
                            std::lcm(a.period.size(), b.period.size());
  for (std::size_t i = 0; i < bound; ++i)
    if (auto c = a.label(i) <=> b.label(i); c != 0) return c;
  return std::strong_ordering::equal;
}

inline bool operator<(const End& a, const End& b) { return compare_ends(a, b) < 0; }

namespace detail {

inline void set_head(End& e, int label) {
  if (!e.preperiod.empty()) {
    e.preperiod.front() = label;
    return;
  }
  pop_front(e);
  push_front(e, label);
}

}  // namespace detail

/// Action of x^{±1} or y^{±1} on an end, in place.
inline void apply_letter(Axis axis, bool inverse, End& e, const GroupParams& params) {
  const int m = params.m(), n = params.n();
  const int head = e.label(0);
  if (axis == Axis::X && !inverse) {
    if (e.side == Side::Plus && head != m - 1) {
      detail::set_head(e, head + 1);
    } else if (e.side == Side::Plus) {
      detail::pop_front(e);
      ++e.level;
      e.side = Side::Minus;
    } else {
      detail::push_front(e, 1);
      e.side = Side::Plus;
    }
  } else if (axis == Axis::X) {
    if (e.side == Side::Plus && head >= 2) {
      detail::set_head(e, head - 1);
    } else if (e.side == Side::Plus) {
      detail::pop_front(e);
      e.side = Side::Minus;
    } else {
      detail::push_front(e, m - 1);
      --e.level;
      e.side = Side::Plus;
    }
  } else if (!inverse) {
    if (e.side == Side::Plus) {
      detail::push_front(e, 1);
      ++e.level;
      e.side = Side::Minus;
    } else if (head != n - 1) {
      detail::set_head(e, head + 1);
    } else {
      detail::pop_front(e);
      e.side = Side::Plus;
    }
  } else {
    if (e.side == Side::Plus) {
      detail::push_front(e, n - 1);
      e.side = Side::Minus;
    } else if (head >= 2) {
      detail::set_head(e, head - 1);
    } else {
      detail::pop_front(e);
      --e.level;
      e.side = Side::Plus;
    }
  }
  detail::minimize(e);
}

/// Left action of a word: the rightmost letter acts first.
inline End apply_element(const Word& g, End e, const GroupParams& params) {
  const Word xy = translate(g, Alphabet::XY, params);
  const auto& powers = xy.powers();
  for (auto it = powers.rbegin(); it != powers.rend(); ++it) {
    const Axis axis = it->letter == 0 ? Axis::X : Axis::Y;
    for (long i = 0; i < std::labs(it->exponent); ++i) apply_letter(axis, it->exponent < 0, e, params);
  }
  return e;
}

/// Left action of a group element given in normal form. The central factor
/// z^c shifts the level by c.
inline End apply_element(const NormalForm& g, End e, const GroupParams& params) {
  for (auto it = g.syllables.rbegin(); it != g.syllables.rend(); ++it)
    for (int i = 0; i < it->exponent; ++i) apply_letter(it->axis, false, e, params);
  e.level += g.central;
  return e;
}

inline std::string to_string(const End& e) {
  std::string out = "(" + std::to_string(e.level) + "; ";
  out += e.side == Side::Plus ? '+' : '-';
  for (int l : e.preperiod) out += std::to_string(l) + " ";
  out += "[";
  for (std::size_t i = 0; i < e.period.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(e.period[i]);
  }
  out += "])";
  return out;
}

/// Parse "(N; ±l1 l2 ... [p1 p2 ...])" and canonicalize.
inline End parse_end(std::string_view text, const GroupParams& params) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto number = [&](bool allow_sign) {
    skip();
    std::size_t start = pos;
    bool neg = false;
    if (allow_sign && pos < text.size() && text[pos] == '-') neg = true, ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected a number", start);
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos++] - '0');
      if (v > 1'000'000'000L) throw ParseError("number too large", start);
    }
    return neg ? -v : v;
  };

  End e;
  e.period.clear();
  expect('(');
  e.level = number(true);
  expect(';');
  skip();
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    e.side = text[pos] == '+' ? Side::Plus : Side::Minus;
    ++pos;
  } else {
    throw ParseError("expected '+' or '-'", pos);
  }
  for (;;) {
    skip();
    if (pos < text.size() && text[pos] == '[') break;
    e.preperiod.push_back(static_cast<int>(number(false)));
  }
  expect('[');
  for (;;) {
    skip();
    if (pos < text.size() && text[pos] == ']') break;
    e.period.push_back(static_cast<int>(number(false)));
  }
  expect(']');
  expect(')');
  skip();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  if (e.period.empty()) throw ParseError("period must be nonempty", pos);
  return canonical_end(std::move(e), params);
}

}  // namespace ordcalc
