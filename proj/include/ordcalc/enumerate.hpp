#pragma once

// Exhaustive generators: sigma-positive word streams, ordering fingerprints on
// word-length balls, and breadth-first factorization into the positive
// monoid generated by a and b.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordcalc/ball.hpp"
#include "ordcalc/group.hpp"
#include "ordcalc/orders.hpp"
#include "ordcalc/words.hpp"

namespace ordcalc {

/// Visit every syntactically i-positive word over s1^{±1}, s2^{±1} of length
/// 1..max_len exactly once, shortest first. Letters inside a word are taken
/// as written, so unreduced words such as s1 s2 s2^-1 are included.
inline void for_each_sigma_positive_word(int i, int max_len, const std::function<void(const Word&)>& visit) {
  if (i != 1 && i != 2) throw std::invalid_argument("sigma index must be 1 or 2");
  std::vector<LetterPower> letters;
  if (i == 1) letters = {{0, 1}, {1, 1}, {1, -1}};
  else letters = {{1, 1}};
  const int required = i - 1;

  std::vector<int> picks;
  std::function<void(int, bool)> rec = [&](int remaining, bool has_required) {
    if (remaining == 0) {
      if (!has_required) return;
      Word w(Alphabet::S);
      for (int k : picks) w.push_back(letters[k].letter, letters[k].exponent);
      visit(w);
      return;
    }
    for (std::size_t k = 0; k < letters.size(); ++k) {
      picks.push_back(static_cast<int>(k));
      rec(remaining - 1, has_required || (letters[k].letter == required && letters[k].exponent > 0));
      picks.pop_back();
    }
  };
  for (int len = 1; len <= max_len; ++len) rec(len, false);
}

inline std::vector<Word> sigma_positive_words(int i, int max_len) {
  std::vector<Word> out;
  for_each_sigma_positive_word(i, max_len, [&](const Word& w) { out.push_back(w); });
  return out;
}

/// Every word in the letters a, b (no inverses) of length 1..max_len.
inline void for_each_positive_ab_word(int max_len, const std::function<void(const Word&, const NormalForm&)>& visit,
                                      const GroupParams& params) {
  const NormalForm gen[2] = {normal_form(Word::letter(Alphabet::A, 0), params),
                             normal_form(Word::letter(Alphabet::A, 1), params)};
  std::vector<int> picks;
  std::function<void(const NormalForm&, int)> rec = [&](const NormalForm& acc, int depth) {
    if (depth > 0) {
      Word word(Alphabet::A);
      for (int k : picks) word.push_back(k, 1);
      visit(word, acc);
    }
    if (depth == max_len) return;
    for (int k = 0; k < 2; ++k) {
      picks.push_back(k);
      rec(multiply(acc, gen[k], params), depth + 1);
      picks.pop_back();
    }
  };
  rec(NormalForm{}, 0);
}

/// Elements of the monoid generated by a and b, each with one shortest word.
struct PositiveMonoidIndex {
  int max_len = 0;
  std::unordered_map<NormalForm, Word, NormalFormHash> shortest;
};

inline PositiveMonoidIndex positive_monoid_index(int max_len, const GroupParams& params) {
  PositiveMonoidIndex idx;
  idx.max_len = max_len;
  const NormalForm gen[2] = {normal_form(Word::letter(Alphabet::A, 0), params),
                             normal_form(Word::letter(Alphabet::A, 1), params)};
  std::vector<std::pair<NormalForm, Word>> frontier{{NormalForm{}, Word(Alphabet::A)}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<NormalForm, Word>> next;
    for (const auto& [g, w] : frontier) {
      for (int k = 0; k < 2; ++k) {
        NormalForm h = multiply(g, gen[k], params);
        if (idx.shortest.count(h)) continue;
        Word hw = w;
        hw.push_back(k, 1);
        idx.shortest.emplace(h, hw);
        next.emplace_back(std::move(h), std::move(hw));
      }
    }
    frontier = std::move(next);
  }
  return idx;
}

/// Shortest positive {a, b}-word of length <= max_len equal to g, if any.
/// A miss is inconclusive, not a proof that g lies outside the monoid.
inline std::optional<Word> factorize_in_cone(const NormalForm& g, int max_len, const GroupParams& params) {
  if (max_len < 1) throw std::invalid_argument("factorize_in_cone needs max_len >= 1");
  const NormalForm gen[2] = {normal_form(Word::letter(Alphabet::A, 0), params),
                             normal_form(Word::letter(Alphabet::A, 1), params)};
  std::unordered_map<NormalForm, Word, NormalFormHash> seen;
  std::vector<std::pair<NormalForm, Word>> frontier{{NormalForm{}, Word(Alphabet::A)}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<NormalForm, Word>> next;
    for (const auto& [h, w] : frontier) {
      for (int k = 0; k < 2; ++k) {
        NormalForm p = multiply(h, gen[k], params);
        if (seen.count(p)) continue;
        Word pw = w;
        pw.push_back(k, 1);
        if (p == g) return pw;
        seen.emplace(p, pw);
        next.emplace_back(std::move(p), std::move(pw));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

struct FingerprintEntry {
  NormalForm element;
  std::string text;
  Word word;
  Sign sign = Sign::Zero;
};

/// Restriction of an ordering's sign function to a word-length ball.
struct Fingerprint {
  std::string spec;
  Alphabet alphabet = Alphabet::A;
  int radius = 0;
  std::vector<FingerprintEntry> entries;  // sorted by canonical text

  bool same_signs(const Fingerprint& other) const {
    if (entries.size() != other.entries.size()) return false;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].element != other.entries[i].element || entries[i].sign != other.entries[i].sign) return false;
    return true;
  }
};

inline Fingerprint fingerprint(const OrderSpec& spec, const Ball& b, const GroupParams& params) {
  Fingerprint fp;
  fp.spec = spec.to_string();
  fp.alphabet = b.alphabet;
  fp.radius = b.radius;
  fp.entries.reserve(b.size());
  for (const auto& e : b.elements) fp.entries.push_back({e.element, e.text, e.word, sign(spec, e.element, params)});
  return fp;
}

inline Fingerprint fingerprint(const OrderSpec& spec, Alphabet alphabet, int radius, const GroupParams& params,
                               std::size_t limit = kDefaultBallLimit) {
  if (radius < 1) throw std::invalid_argument("fingerprint needs radius >= 1");
  return fingerprint(spec, ball(alphabet, radius, params, limit), params);
}

/// Entries (by index) on which two fingerprints of the same ball disagree.
inline std::vector<std::size_t> fingerprint_differences(const Fingerprint& a, const Fingerprint& b) {
  if (a.entries.size() != b.entries.size()) throw std::invalid_argument("fingerprints over different balls");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].element != b.entries[i].element) throw std::invalid_argument("fingerprints over different balls");
    if (a.entries[i].sign != b.entries[i].sign) out.push_back(i);
  }
  return out;
}

}  // namespace ordcalc
