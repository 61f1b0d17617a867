#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordcalc/group.hpp"
#include "ordcalc/params.hpp"
#include "ordcalc/words.hpp"

namespace ordcalc {

inline constexpr std::size_t kDefaultBallLimit = 2'000'000;

class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BallElement {
  NormalForm element;
  Word word;  // a shortest word over the ball's alphabet
  std::string text;
};

/// Word-length ball in G_{m,n}, deduplicated by normal form and sorted by
/// canonical text.
struct Ball {
  Alphabet alphabet = Alphabet::XY;
  int radius = 0;
  std::vector<BallElement> elements;
  std::unordered_map<NormalForm, std::size_t, NormalFormHash> index;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const NormalForm& g) const { return index.count(g) != 0; }
  const BallElement* find(const NormalForm& g) const {
    auto it = index.find(g);
    return it == index.end() ? nullptr : &elements[it->second];
  }
};

/// The four one-letter words l^{±1} over a two-letter alphabet.
inline std::vector<Word> generator_words(Alphabet alphabet) {
  return {Word::letter(alphabet, 0, 1), Word::letter(alphabet, 0, -1),
          Word::letter(alphabet, 1, 1), Word::letter(alphabet, 1, -1)};
}

inline Ball ball(Alphabet alphabet, int radius, const GroupParams& params,
                 std::size_t limit = kDefaultBallLimit) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  if (alphabet == Alphabet::Free) throw std::invalid_argument("balls need a group alphabet");
  const auto gens = generator_words(alphabet);
  std::vector<NormalForm> gen_nf;
  for (const auto& g : gens) gen_nf.push_back(normal_form(g, params));

  std::unordered_map<NormalForm, Word, NormalFormHash> seen;
  std::vector<NormalForm> frontier{NormalForm{}};
  seen.emplace(NormalForm{}, Word(alphabet));
  for (int r = 0; r < radius; ++r) {
    std::vector<NormalForm> next;
    for (const auto& g : frontier) {
      const Word& gw = seen.at(g);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        NormalForm h = multiply(g, gen_nf[k], params);
        if (seen.count(h)) continue;
        seen.emplace(h, gw * gens[k]);
        next.push_back(std::move(h));
        if (seen.size() > limit)
          throw ResourceLimitError("ball exceeds the element limit of " + std::to_string(limit));
      }
    }
    frontier = std::move(next);
  }

  Ball out;
  out.alphabet = alphabet;
  out.radius = radius;
  out.elements.reserve(seen.size());
  for (auto& [nf, w] : seen) out.elements.push_back({nf, w, to_string(nf)});
  std::sort(out.elements.begin(), out.elements.end(),
            [](const BallElement& a, const BallElement& b) { return a.text < b.text; });
  for (std::size_t i = 0; i < out.elements.size(); ++i) out.index.emplace(out.elements[i].element, i);
  return out;
}

}  // namespace ordcalc
