#pragma once

// Abstract words over two-letter alphabets: parsing, formatting, free
// reduction, alphabet translation for G_{m,n}, and the twist/detwist
// transforms on ordered generating sets.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordcalc/params.hpp"

namespace ordcalc {

/// XY = {x, y}, S = {s1, s2}, A = {a, b}. Free = {g1, g2, ...} is only used
/// for generic twist/detwist work on ordered sets of arbitrary size.
enum class Alphabet { XY, S, A, Free };

inline std::string_view alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::XY: return "xy";
    case Alphabet::S: return "s";
    case Alphabet::A: return "a";
    case Alphabet::Free: return "free";
  }
  return "?";
}

inline std::optional<Alphabet> parse_alphabet_name(std::string_view s) {
  if (s == "xy" || s == "XY") return Alphabet::XY;
  if (s == "s" || s == "S") return Alphabet::S;
  if (s == "a" || s == "A" || s == "ab") return Alphabet::A;
  if (s == "free") return Alphabet::Free;
  return std::nullopt;
}

inline std::string letter_name(Alphabet a, int letter) {
  switch (a) {
    case Alphabet::XY: return letter == 0 ? "x" : "y";
    case Alphabet::S: return letter == 0 ? "s1" : "s2";
    case Alphabet::A: return letter == 0 ? "a" : "b";
    case Alphabet::Free: return "g" + std::to_string(letter + 1);
  }
  return "?";
}

/// Error raised by the word, end and order-spec parsers.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

struct LetterPower {
  int letter = 0;
  long exponent = 1;
  friend bool operator==(const LetterPower&, const LetterPower&) = default;
};

/// A word as written: a sequence of letter powers with nonzero exponents.
/// Adjacent powers of the same letter are merged only when their signs agree,
/// so cancellation happens exclusively in free_reduce().
class Word {
public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<LetterPower> powers) : alphabet_(alphabet) {
    for (const auto& p : powers) push_back(p.letter, p.exponent);
  }

  static Word letter(Alphabet alphabet, int letter, long exponent = 1) {
    Word w(alphabet);
    w.push_back(letter, exponent);
    return w;
  }

  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::vector<LetterPower>& powers() const noexcept { return powers_; }
  bool empty() const noexcept { return powers_.empty(); }

  /// Number of letters counted with multiplicity.
  long length() const noexcept {
    long len = 0;
    for (const auto& p : powers_) len += std::labs(p.exponent);
    return len;
  }

  void push_back(int letter, long exponent) {
    if (exponent == 0) return;
    if (!powers_.empty() && powers_.back().letter == letter &&
        (powers_.back().exponent > 0) == (exponent > 0)) {
      powers_.back().exponent += exponent;
      return;
    }
    powers_.push_back({letter, exponent});
  }

  void append(const Word& other) {
    check_same_alphabet(other);
    for (const auto& p : other.powers_) push_back(p.letter, p.exponent);
  }

  Word inverse() const {
    Word w(alphabet_);
    for (auto it = powers_.rbegin(); it != powers_.rend(); ++it)
      w.push_back(it->letter, -it->exponent);
    return w;
  }

  Word pow(long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word w(alphabet_);
    for (long i = 0; i < std::labs(k); ++i) w.append(base);
    return w;
  }

  friend Word operator*(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }

  friend bool operator==(const Word&, const Word&) = default;

  void check_same_alphabet(const Word& other) const {
    if (other.alphabet_ != alphabet_ && !other.empty() && !empty())
      throw std::invalid_argument("cannot combine words over different alphabets");
  }

private:
  Alphabet alphabet_ = Alphabet::XY;
  std::vector<LetterPower> powers_;
};

/// Cancel adjacent inverse pairs until none remain.
inline Word free_reduce(const Word& w) {
  std::vector<LetterPower> stack;
  for (const auto& p : w.powers()) {
    if (!stack.empty() && stack.back().letter == p.letter) {
      stack.back().exponent += p.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(p);
    }
  }
  Word out(w.alphabet());
  for (const auto& p : stack) out.push_back(p.letter, p.exponent);
  return out;
}

inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& p : w.powers()) {
    if (!out.empty()) out += ' ';
    out += letter_name(w.alphabet(), p.letter);
    if (p.exponent != 1) out += "^" + std::to_string(p.exponent);
  }
  return out;
}

namespace detail {

class WordParser {
public:
  WordParser(std::string_view text, Alphabet alphabet) : text_(text), alphabet_(alphabet) {}

  Word parse() {
    skip_separators();
    if (pos_ < text_.size() && text_[pos_] == '1') {
      std::size_t save = pos_++;
      skip_separators();
      if (pos_ == text_.size()) return Word(alphabet_);
      pos_ = save;
    }
    Word w = parse_word();
    skip_separators();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError("unexpected character", pos_);
    }
    return w;
  }

private:
  static constexpr long kMaxLength = 1'000'000;

  Word parse_word() {
    Word w(alphabet_);
    bool any = false;
    for (;;) {
      skip_separators();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      w.append(parse_factor());
      if (w.length() > kMaxLength) throw ParseError("word too long", pos_);
      any = true;
    }
    if (!any) throw ParseError("expected a letter or '('", pos_);
    return w;
  }

  Word parse_factor() {
    Word atom = parse_atom();
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_spaces();
      long k = parse_int();
      if (std::labs(k) > kMaxLength || atom.length() * std::labs(k) > kMaxLength)
        throw ParseError("exponent too large", pos_);
      return atom.pow(k);
    }
    return atom;
  }

  Word parse_atom() {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == '(') {
      std::size_t open = pos_++;
      Word inner = parse_word();
      skip_separators();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("unclosed '('", open);
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    int letter = parse_letter();
    if (letter < 0) throw ParseError("unknown letter for alphabet '" +
                                         std::string(alphabet_name(alphabet_)) + "'",
                                     start);
    return Word::letter(alphabet_, letter);
  }

  int parse_letter() {
    auto starts = [&](std::string_view s) { return text_.substr(pos_, s.size()) == s; };
    switch (alphabet_) {
      case Alphabet::XY:
        if (starts("x")) return ++pos_, 0;
        if (starts("y")) return ++pos_, 1;
        return -1;
      case Alphabet::A:
        if (starts("a")) return ++pos_, 0;
        if (starts("b")) return ++pos_, 1;
        return -1;
      case Alphabet::S:
        for (std::string_view prefix : {std::string_view("s"), std::string_view("\xcf\x83")}) {
          if (starts(prefix) && pos_ + prefix.size() < text_.size()) {
            char c = text_[pos_ + prefix.size()];
            bool more_digits = pos_ + prefix.size() + 1 < text_.size() &&
                               std::isdigit(static_cast<unsigned char>(text_[pos_ + prefix.size() + 1]));
            if ((c == '1' || c == '2') && !more_digits) {
              pos_ += prefix.size() + 1;
              return c - '1';
            }
          }
        }
        return -1;
      case Alphabet::Free: {
        if (!starts("g")) return -1;
        std::size_t p = pos_ + 1;
        long v = 0;
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p])) && v < 1'000'000)
          v = v * 10 + (text_[p++] - '0');
        if (p == pos_ + 1 || v < 1) return -1;
        pos_ = p;
        return static_cast<int>(v - 1);
      }
    }
    return -1;
  }

  long parse_int() {
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer exponent", pos_);
    if (text_[pos_] == '0') throw ParseError("exponent must be a nonzero integer without leading zeros", start);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > kMaxLength) throw ParseError("exponent too large", start);
    }
    return neg ? -v : v;
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }

  std::string_view text_;
  Alphabet alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse `text` over `alphabet`. Grammar:
///   word := factor+ ; factor := atom ("^" int)? ; atom := letter | "(" word ")"
/// Whitespace and '*' separate factors; "1" alone denotes the empty word.
inline Word parse_word(std::string_view text, Alphabet alphabet) {
  return detail::WordParser(text, alphabet).parse();
}

/// Guess the alphabet from the letters used. Throws ParseError when letters
/// from two alphabets are mixed or no letter is present.
inline Alphabet detect_alphabet(std::string_view text) {
  std::optional<Alphabet> found;
  auto note = [&](Alphabet a, std::size_t pos) {
    if (found && *found != a) throw ParseError("word mixes letters from different alphabets", pos);
    found = a;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'x' || c == 'y') note(Alphabet::XY, i);
    else if (c == 'a' || c == 'b') note(Alphabet::A, i);
    else if (c == 's' || static_cast<unsigned char>(c) == 0xcf) note(Alphabet::S, i);
    else if (c == 'g') note(Alphabet::Free, i);
  }
  if (!found) {
    if (text.find('1') != std::string_view::npos) return Alphabet::XY;
    throw ParseError("no letters found", 0);
  }
  return *found;
}

namespace detail {

inline Word xy_image(Alphabet from, int letter, const GroupParams& params) {
  const long m = params.m();
  switch (from) {
    case Alphabet::XY:
      return Word::letter(Alphabet::XY, letter);
    case Alphabet::S:
      if (letter == 0) return Word(Alphabet::XY, {{0, 1}, {1, 1}, {0, 1 - m}});
      return Word(Alphabet::XY, {{0, m - 1}, {1, -1}});
    case Alphabet::A:
      if (letter == 0) return Word::letter(Alphabet::XY, 0);
      return Word(Alphabet::XY, {{1, 1}, {0, 1 - m}});
    case Alphabet::Free:
      break;
  }
  throw std::invalid_argument("free-alphabet words have no meaning in G_{m,n}");
}

inline Word image_of_xy(Alphabet to, int letter, const GroupParams& params) {
  const long m = params.m();
  switch (to) {
    case Alphabet::XY:
      return Word::letter(Alphabet::XY, letter);
    case Alphabet::S: {
      Word x(Alphabet::S, {{0, 1}, {1, 1}});
      if (letter == 0) return x;
      // y = s2^{-1} x^{m-1}
      return Word::letter(Alphabet::S, 1, -1) * x.pow(m - 1);
    }
    case Alphabet::A:
      if (letter == 0) return Word::letter(Alphabet::A, 0);
      return Word(Alphabet::A, {{1, 1}, {0, m - 1}});
    case Alphabet::Free:
      break;
  }
  throw std::invalid_argument("cannot translate into the free alphabet");
}

inline Word substitute(const Word& w, Alphabet target, auto&& image) {
  Word out(target);
  for (const auto& p : w.powers()) out.append(image(p.letter).pow(p.exponent));
  return free_reduce(out);
}

}  // namespace detail

/// Rewrite `w` over `target`, representing the same element of G_{m,n}.
/// The result is freely reduced.
inline Word translate(const Word& w, Alphabet target, const GroupParams& params) {
  if (w.alphabet() == target) return free_reduce(w);
  Word xy = detail::substitute(w, Alphabet::XY, [&](int l) {
    return detail::xy_image(w.alphabet(), l, params);
  });
  if (target == Alphabet::XY) return xy;
  return detail::substitute(xy, target, [&](int l) {
    return detail::image_of_xy(target, l, params);
  });
}

/// Twisted generating set: a_i = (g_i g_{i+1} ... g_N)^{(-1)^{N-i+1}}.
inline std::vector<Word> twist_set(const std::vector<Word>& gens) {
  if (gens.empty()) throw std::invalid_argument("twist_set needs at least one generator");
  const std::size_t count = gens.size();
  std::vector<Word> out(count);
  Word suffix(gens.front().alphabet());
  for (std::size_t k = count; k-- > 0;) {
    suffix = gens[k] * suffix;
    // exponent (-1)^{N-i+1} with i = k+1
    bool positive = (count - k) % 2 == 0;
    out[k] = free_reduce(positive ? suffix : suffix.inverse());
  }
  return out;
}

/// Detwisted generating set, the preimage of `gens` under twist_set().
inline std::vector<Word> detwist_set(const std::vector<Word>& gens) {
  if (gens.empty()) throw std::invalid_argument("detwist_set needs at least one generator");
  const std::size_t count = gens.size();
  std::vector<Word> out(count);
  out[count - 1] = free_reduce(gens[count - 1].inverse());
  for (std::size_t k = 0; k + 1 < count; ++k) {
    std::size_t gap = count - (k + 1);
    Word pair = gens[k] * gens[k + 1];
    out[k] = free_reduce(gap % 2 == 0 ? gens[k].inverse() * gens[k + 1].inverse() : pair);
  }
  return out;
}

struct SigmaClass {
  enum class Kind { Positive, Negative, Identity, Indeterminate };
  Kind kind = Kind::Identity;
  int index = 0;  // 1-based generator index for Positive / Negative

  static SigmaClass positive(int i) { return {Kind::Positive, i}; }
  static SigmaClass negative(int i) { return {Kind::Negative, i}; }
  static SigmaClass identity() { return {Kind::Identity, 0}; }
  static SigmaClass indeterminate() { return {Kind::Indeterminate, 0}; }

  friend bool operator==(const SigmaClass&, const SigmaClass&) = default;
};

inline std::string to_string(const SigmaClass& c) {
  switch (c.kind) {
    case SigmaClass::Kind::Positive: return std::to_string(c.index) + "-positive";
    case SigmaClass::Kind::Negative: return std::to_string(c.index) + "-negative";
    case SigmaClass::Kind::Identity: return "identity";
    case SigmaClass::Kind::Indeterminate: return "indeterminate";
  }
  return "?";
}

/// Syntactic i-positivity of a word as written: the least index occurring
/// decides, and it must occur with a single sign.
inline SigmaClass sigma_classify(const Word& w) {
  if (w.alphabet() != Alphabet::S && w.alphabet() != Alphabet::Free)
    throw std::invalid_argument("sigma_classify expects a word over s1, s2");
  if (w.empty()) return SigmaClass::identity();
  int least = w.powers().front().letter;
  for (const auto& p : w.powers()) least = std::min(least, p.letter);
  bool pos = false, neg = false;
  for (const auto& p : w.powers()) {
    if (p.letter != least) continue;
    (p.exponent > 0 ? pos : neg) = true;
  }
  if (pos && neg) return SigmaClass::indeterminate();
  return pos ? SigmaClass::positive(least + 1) : SigmaClass::negative(least + 1);
}

}  // namespace ordcalc
