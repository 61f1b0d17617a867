#pragma once

// Decision procedures for the Dehornoy-like ordering <_D (via the action on
// the ends E, F), the isolated ordering <_A, and right-shifted orderings
// g <' h  <=>  g t < h t.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordcalc/ball.hpp"
#include "ordcalc/group.hpp"
#include "ordcalc/params.hpp"
#include "ordcalc/tree.hpp"
#include "ordcalc/words.hpp"

namespace ordcalc {

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

inline char sign_char(Sign s) {
  switch (s) {
    case Sign::Positive: return '+';
    case Sign::Negative: return '-';
    case Sign::Zero: return '0';
  }
  return '?';
}

inline Sign sign_of(long v) { return v > 0 ? Sign::Positive : v < 0 ? Sign::Negative : Sign::Zero; }

inline Sign sign_of(std::strong_ordering c) {
  return c > 0 ? Sign::Positive : c < 0 ? Sign::Negative : Sign::Zero;
}

/// Sign of g under <_D: compare (g(E), g(F)) with (E, F) lexicographically.
inline Sign sign_d(const NormalForm& g, const GroupParams& params) {
  if (g.is_identity()) return Sign::Zero;
  const End gE = apply_element(g, end_E(), params);
  if (auto c = compare_ends(gE, end_E()); c != 0) return sign_of(c);
  if (params.klein()) {
    // F is not moved by s2 here, so the stabilizer of E is read off directly.
    if (auto q = s2_power_of(g, params)) return sign_of(*q);
    throw std::logic_error("element fixes E but is not a power of s2: " + to_string(g));
  }
  const End gF = apply_element(g, end_F(), params);
  if (auto c = compare_ends(gF, end_F()); c != 0) return sign_of(c);
  throw std::logic_error("non-identity element fixes both E and F: " + to_string(g));
}

/// Sign of g under <_A. Outside <s2> it agrees with <_D; on <s2> = <b> the
/// order is reversed, since b = s2^{-1} generates the positive cone there.
inline Sign sign_a(const NormalForm& g, const GroupParams& params) {
  if (auto q = s2_power_of(g, params)) return sign_of(-*q);
  return sign_d(g, params);
}

inline constexpr std::size_t kMaxShiftDepth = 4;

class OrderSpec {
public:
  enum class Base { DehornoyLike, Isolated };

  static OrderSpec dehornoy_like() { return OrderSpec(Base::DehornoyLike); }
  static OrderSpec isolated() { return OrderSpec(Base::Isolated); }

  /// Shifted(*this, t): g <' h iff g t < h t.
  OrderSpec shifted(const NormalForm& t, const GroupParams& params, std::string label = {}) const {
    if (shifts_.size() >= kMaxShiftDepth)
      throw std::invalid_argument("order spec nesting exceeds " + std::to_string(kMaxShiftDepth));
    OrderSpec out = *this;
    out.shifts_.push_back(t);
    out.labels_.push_back(label.empty() ? ordcalc::to_string(t) : std::move(label));
    out.total_ = multiply(t, total_, params);
    out.total_inv_ = invert(out.total_, params);
    return out;
  }

  Base base() const noexcept { return base_; }
  const std::vector<NormalForm>& shifts() const noexcept { return shifts_; }
  bool is_shifted() const noexcept { return !shifts_.empty(); }

  /// The combined shift T; sign(h) = sign_base(T^{-1} h T).
  const NormalForm& total_shift() const noexcept { return total_; }
  const NormalForm& total_shift_inverse() const noexcept { return total_inv_; }

  std::string to_string() const {
    std::string out = base_ == Base::DehornoyLike ? "D" : "A";
    for (const auto& l : labels_) out += ".shift(" + l + ")";
    return out;
  }

private:
  explicit OrderSpec(Base base) : base_(base) {}

  Base base_;
  std::vector<NormalForm> shifts_;
  std::vector<std::string> labels_;
  NormalForm total_;
  NormalForm total_inv_;
};

inline Sign sign(const OrderSpec& spec, const NormalForm& g, const GroupParams& params) {
  NormalForm h = g;
  if (spec.is_shifted())
    h = multiply(multiply(spec.total_shift_inverse(), g, params), spec.total_shift(), params);
  return spec.base() == OrderSpec::Base::DehornoyLike ? sign_d(h, params) : sign_a(h, params);
}

/// Compare g and h: g < h iff g^{-1} h is positive.
inline std::strong_ordering compare(const OrderSpec& spec, const NormalForm& g, const NormalForm& h,
                                    const GroupParams& params) {
  switch (sign(spec, multiply(invert(g, params), h, params), params)) {
    case Sign::Positive: return std::strong_ordering::less;
    case Sign::Negative: return std::strong_ordering::greater;
    case Sign::Zero: break;
  }
  return std::strong_ordering::equal;
}

inline std::string_view ordering_name(std::strong_ordering c) {
  return c < 0 ? "LT" : c > 0 ? "GT" : "EQ";
}

/// Parse "D", "A", "D.shift(w1).shift(w2)". Shift words use `alphabet`, or
/// the alphabet detected from their letters when none is given.
inline OrderSpec parse_order_spec(std::string_view text, const GroupParams& params,
                                  std::optional<Alphabet> alphabet = std::nullopt) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size()) throw ParseError("empty order spec", pos);
  OrderSpec spec = OrderSpec::dehornoy_like();
  if (text[pos] == 'D')
    spec = OrderSpec::dehornoy_like();
  else if (text[pos] == 'A')
    spec = OrderSpec::isolated();
  else
    throw ParseError("order spec must start with 'D' or 'A'", pos);
  ++pos;
  constexpr std::string_view kShift = ".shift(";
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text.substr(pos, kShift.size()) != kShift) throw ParseError("expected '.shift('", pos);
    pos += kShift.size();
    std::size_t start = pos;
    int depth = 1;
    while (pos < text.size() && depth > 0) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      if (depth > 0) ++pos;
    }
    if (depth != 0) throw ParseError("unclosed '.shift('", start);
    std::string_view body = text.substr(start, pos - start);
    ++pos;
    Alphabet a = alphabet ? *alphabet : detect_alphabet(body);
    Word w;
    try {
      w = parse_word(body, a);
    } catch (const ParseError& e) {
      throw ParseError(std::string("in shift word: ") + e.what(), start + e.position());
    }
    spec = spec.shifted(normal_form(w, params), params, format_word(w));
  }
  return spec;
}

/// Least positive element of the word-length ball under `spec`.
inline BallElement minimal_positive_probe(const OrderSpec& spec, Alphabet alphabet, int radius,
                                          const GroupParams& params, std::size_t limit = kDefaultBallLimit) {
  if (radius < 1) throw std::invalid_argument("minimal_positive_probe needs radius >= 1");
  const Ball b = ball(alphabet, radius, params, limit);
  const BallElement* best = nullptr;
  for (const auto& e : b.elements) {
    if (sign(spec, e.element, params) != Sign::Positive) continue;
    if (!best || compare(spec, e.element, best->element, params) < 0) best = &e;
  }
  if (!best) throw std::logic_error("no positive element in the ball");
  return *best;
}

}  // namespace ordcalc
