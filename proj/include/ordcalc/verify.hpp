#pragma once

// Desk-scale checks of the ordering-theoretic statements about G_{m,n}.
// Every check returns a Report; failing reports carry witnesses that can be
// re-evaluated independently (words over a named alphabet plus the relation
// that was violated).

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ordcalc/ball.hpp"
#include "ordcalc/enumerate.hpp"
#include "ordcalc/group.hpp"
#include "ordcalc/orders.hpp"
#include "ordcalc/params.hpp"
#include "ordcalc/tree.hpp"
#include "ordcalc/words.hpp"

namespace ordcalc {

using json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Inconclusive, NotApplicable };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct Report {
  std::string check;
  int m = 0;
  int n = 0;
  json config = json::object();
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Pass;
  json witnesses = json::array();
  json stats = json::object();  // "items", "millis" plus check-specific figures
  long items = 0;
  long millis = 0;

  bool passed() const noexcept { return verdict == Verdict::Pass; }

  /// Timing is left out (reported as 0) unless requested, so repeated runs
  /// produce identical output.
  json to_json(bool include_timing = false) const {
    json j;
    j["check"] = check;
    j["m"] = m;
    j["n"] = n;
    j["config"] = config;
    j["seed"] = seed;
    j["verdict"] = verdict_name(verdict);
    j["witnesses"] = witnesses;
    json s = stats;
    s["items"] = items;
    s["millis"] = include_timing ? millis : 0;
    j["stats"] = s;
    return j;
  }
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

namespace detail {

template <class Body>
Report timed_check(std::string name, const GroupParams& params, std::uint64_t seed, Body&& body) {
  Report r;
  r.check = std::move(name);
  r.m = params.m();
  r.n = params.n();
  r.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.millis = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  if (r.verdict == Verdict::Fail && r.witnesses.empty())
    r.witnesses.push_back({{"note", "failure without a recorded witness"}});
  return r;
}

inline std::string word_text(const NormalForm& g, Alphabet a, const GroupParams& params) {
  return format_word(to_word(g, a, params));
}

inline Report not_applicable(std::string name, const GroupParams& params, json config, std::string why) {
  Report r;
  r.check = std::move(name);
  r.m = params.m();
  r.n = params.n();
  r.config = std::move(config);
  r.verdict = Verdict::NotApplicable;
  r.stats["note"] = std::move(why);
  return r;
}

inline const char* kKleinNote = "the Klein bottle group G_{2,2} is excluded from this statement";

inline std::size_t pick(std::mt19937_64& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

}  // namespace detail

/// A random valid end: level in [-2, 2], random side, short random preperiod,
/// period of length 1 or 2.
inline End random_end(std::mt19937_64& rng, const GroupParams& params) {
  End e;
  e.level = std::uniform_int_distribution<long>(-2, 2)(rng);
  e.side = std::uniform_int_distribution<int>(0, 1)(rng) ? Side::Plus : Side::Minus;
  const std::size_t pre = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
  auto label = [&](std::size_t pos) {
    return std::uniform_int_distribution<int>(1, label_bound(e.side, pos, params))(rng);
  };
  e.preperiod.clear();
  for (std::size_t i = 0; i < pre; ++i) e.preperiod.push_back(label(i));
  e.period.clear();
  if (std::uniform_int_distribution<int>(0, 1)(rng)) {
    e.period = {label(pre), label(pre + 1)};
  } else {
    e.period = {std::uniform_int_distribution<int>(1, std::min(params.m(), params.n()) - 1)(rng)};
  }
  return canonical_end(std::move(e), params);
}

/// A random word over x^{±1}, y^{±1} with length in [0, max_len].
inline Word random_xy_word(std::mt19937_64& rng, int max_len) {
  Word w(Alphabet::XY);
  int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  for (int i = 0; i < len; ++i) {
    int k = std::uniform_int_distribution<int>(0, 3)(rng);
    w.push_back(k / 2, k % 2 ? -1 : 1);
  }
  return w;
}

// ---------------------------------------------------------------------------

/// Defining relation (b a^{m-1})^{n-1} b = a, and normal_form(uv) =
/// normal_form(u) normal_form(v) on random word pairs. Weight additivity is
/// checked on the same pairs.
inline Report check_normal_form(const GroupParams& params, int pairs = 10000, int max_len = 12,
                                std::uint64_t seed = kDefaultSeed) {
  return detail::timed_check("normal_form", params, seed, [&](Report& r) {
    r.config = {{"pairs", pairs}, {"max_len", max_len}};
    Word rel = (Word(Alphabet::A, {{1, 1}, {0, params.m() - 1}}).pow(params.n() - 1)) * Word::letter(Alphabet::A, 1);
    if (normal_form(rel, params) != normal_form(Word::letter(Alphabet::A, 0), params)) {
      r.verdict = Verdict::Fail;
      r.witnesses.push_back({{"relation", format_word(rel) + " = a"}, {"lhs", to_string(normal_form(rel, params))}});
    }
    std::mt19937_64 rng(seed);
    long violations = 0;
    for (int i = 0; i < pairs; ++i) {
      Word u = random_xy_word(rng, max_len), v = random_xy_word(rng, max_len);
      NormalForm nu = normal_form(u, params), nv = normal_form(v, params);
      NormalForm nuv = normal_form(u * v, params);
      bool ok = nuv == multiply(nu, nv, params) && weight(nuv, params) == weight(nu, params) + weight(nv, params);
      ++r.items;
      if (!ok) {
        ++violations;
        if (r.witnesses.size() < 10)
          r.witnesses.push_back({{"alphabet", "xy"}, {"u", format_word(u)}, {"v", format_word(v)},
                                 {"relation", "normal_form(uv) = normal_form(u) * normal_form(v)"}});
      }
    }
    r.stats["violations"] = violations;
    if (violations) r.verdict = Verdict::Fail;
  });
}

/// No sigma-positive S-word of length <= max_len and no nonempty positive
/// {a,b}-word of length <= ab_max_len represents the identity.
inline Report check_property_a(const GroupParams& params, int max_len = 8, std::optional<int> ab_max_len = {}) {
  return detail::timed_check("property_a", params, 0, [&](Report& r) {
    const int ab_len = ab_max_len.value_or(max_len);
    r.config = {{"max_len", max_len}, {"ab_max_len", ab_len}};
    long sigma_words = 0, ab_words = 0;
    for (int i = 1; i <= 2; ++i) {
      for_each_sigma_positive_word(i, max_len, [&](const Word& w) {
        ++sigma_words;
        if (normal_form(w, params).is_identity() && r.witnesses.size() < 10)
          r.witnesses.push_back({{"alphabet", "s"}, {"word", format_word(w)}, {"relation", "word = 1"}});
      });
    }
    for_each_positive_ab_word(ab_len, [&](const Word& w, const NormalForm& g) {
      ++ab_words;
      if (g.is_identity() && r.witnesses.size() < 10)
        r.witnesses.push_back({{"alphabet", "a"}, {"word", format_word(w)}, {"relation", "word = 1"}});
    }, params);
    r.items = sigma_words + ab_words;
    r.stats["sigma_words"] = sigma_words;
    r.stats["ab_words"] = ab_words;
    r.stats["violations"] = r.witnesses.size();
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
  });
}

/// Every non-identity element of the S-ball that has a sigma-positive or
/// sigma-negative representative of length <= search_len must get the
/// matching sign from sign_d. Coverage below 100% is inconclusive.
inline Report check_property_c_coverage(const GroupParams& params, int radius = 3, int search_len = 10) {
  const json config = {{"radius", radius}, {"search_len", search_len}};
  if (params.klein()) return detail::not_applicable("property_c", params, config, detail::kKleinNote);
  return detail::timed_check("property_c", params, 0, [&](Report& r) {
    r.config = config;
    const Ball b = ball(Alphabet::S, radius, params);
    std::unordered_map<NormalForm, Word, NormalFormHash> positive;
    for (int i = 1; i <= 2; ++i)
      for_each_sigma_positive_word(i, search_len, [&](const Word& w) {
        NormalForm g = normal_form(w, params);
        if (b.contains(g) || b.contains(invert(g, params))) positive.try_emplace(std::move(g), w);
      });
    long covered = 0, total = 0;
    json uncovered = json::array();
    for (const auto& e : b.elements) {
      if (e.element.is_identity()) continue;
      ++total;
      auto pos = positive.find(e.element);
      auto neg = positive.find(invert(e.element, params));
      if (pos == positive.end() && neg == positive.end()) {
        if (uncovered.size() < 20) uncovered.push_back(format_word(e.word));
        continue;
      }
      ++covered;
      const Sign s = sign_d(e.element, params);
      if (pos != positive.end() && s != Sign::Positive)
        r.witnesses.push_back({{"alphabet", "s"}, {"element", format_word(e.word)},
                               {"representative", format_word(pos->second)}, {"class", "sigma-positive"},
                               {"sign_d", std::string(1, sign_char(s))}});
      if (neg != positive.end() && s != Sign::Negative)
        r.witnesses.push_back({{"alphabet", "s"}, {"element", format_word(e.word)},
                               {"representative", format_word(neg->second.inverse())}, {"class", "sigma-negative"},
                               {"sign_d", std::string(1, sign_char(s))}});
    }
    r.items = total;
    r.stats["covered"] = covered;
    r.stats["coverage"] = total ? static_cast<double>(covered) / static_cast<double>(total) : 1.0;
    if (!uncovered.empty()) r.stats["uncovered_sample"] = uncovered;
    if (!r.witnesses.empty()) r.verdict = Verdict::Fail;
    else r.verdict = covered == total ? Verdict::Pass : Verdict::Inconclusive;
  });
}

/// Conjugation compatibility of the twisted filtration: a b^{-r} a^{-1} and
/// a^{-1} b^{-r} a are <_A-positive and lie outside <b> for 1 <= r <= max_r.
/// The four sign variants p q^{±1} p^{-1}, p^{-1} q^{±1} p (p = a, q = b) are
/// evaluated and recorded as well.
inline Report check_property_f(const GroupParams& params, int max_r = 5) {
  const json config = {{"max_r", max_r}};
  const NormalForm a = normal_form(Word::letter(Alphabet::A, 0), params);
  const NormalForm b = normal_form(Word::letter(Alphabet::A, 1), params);
  const NormalForm ai = invert(a, params);
  if (multiply(multiply(b, a, params), b, params) == a) {
    Report r = detail::not_applicable("property_f", params, config,
                                      "hypothesis violated: b a b = a holds (Klein bottle relation)");
    return r;
  }
  return detail::timed_check("property_f", params, 0, [&](Report& r) {
    r.config = config;
    auto in_cone_outside_b = [&](const NormalForm& g) {
      return sign_a(g, params) == Sign::Positive && !s2_power_of(g, params);
    };
    for (int k = 1; k <= max_r; ++k) {
      const NormalForm bk = power(b, -k, params);
      const std::pair<std::string, NormalForm> cases[] = {
          {"a b^-" + std::to_string(k) + " a^-1", multiply(multiply(a, bk, params), ai, params)},
          {"a^-1 b^-" + std::to_string(k) + " a", multiply(multiply(ai, bk, params), a, params)}};
      for (const auto& [text, g] : cases) {
        ++r.items;
        if (!in_cone_outside_b(g))
          r.witnesses.push_back({{"alphabet", "a"}, {"word", text}, {"sign_a", std::string(1, sign_char(sign_a(g, params)))},
                                 {"in_b_subgroup", s2_power_of(g, params).has_value()},
                                 {"relation", "word in P_A and outside <b>"}});
      }
    }
    json variants = json::object();
    const NormalForm bi = invert(b, params);
    variants["a b^-1 a^-1"] = in_cone_outside_b(multiply(multiply(a, bi, params), ai, params));
    variants["a^-1 b^-1 a"] = in_cone_outside_b(multiply(multiply(ai, bi, params), a, params));
    variants["a b a^-1"] = in_cone_outside_b(multiply(multiply(a, b, params), ai, params));
    variants["a^-1 b a"] = in_cone_outside_b(multiply(multiply(ai, b, params), a, params));
    r.stats["key_lemma_variants"] = variants;
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
  });
}

/// Default ball alphabet for an order spec: S for <_D, A otherwise.
inline Alphabet default_alphabet(const OrderSpec& spec) {
  return spec.base() == OrderSpec::Base::DehornoyLike && !spec.is_shifted() ? Alphabet::S : Alphabet::A;
}

/// Left-ordering axioms on a ball: trichotomy, sign(g^{-1}) = -sign(g), cone
/// closure on all positive pairs, left-invariance and transitivity on
/// sampled triples.
inline Report check_order_axioms(const GroupParams& params, const OrderSpec& spec, int radius = 3,
                                 int samples = 500, std::uint64_t seed = kDefaultSeed,
                                 std::optional<Alphabet> alphabet = {}) {
  const Alphabet alpha = alphabet.value_or(default_alphabet(spec));
  const json config = {{"spec", spec.to_string()}, {"alphabet", alphabet_name(alpha)},
                       {"radius", radius}, {"samples", samples}};
  if (params.klein()) return detail::not_applicable("order_axioms", params, config, detail::kKleinNote);
  return detail::timed_check("order_axioms", params, seed, [&](Report& r) {
    r.config = config;
    const Ball b = ball(alpha, radius, params);
    auto w = [&](const BallElement& e) { return format_word(e.word); };
    std::vector<Sign> signs;
    signs.reserve(b.size());
    long violations = 0;
    auto fail = [&](json witness) {
      ++violations;
      if (r.witnesses.size() < 20) {
        witness["alphabet"] = alphabet_name(alpha);
        witness["spec"] = spec.to_string();
        r.witnesses.push_back(std::move(witness));
      }
    };
    for (const auto& e : b.elements) {
      const Sign s = sign(spec, e.element, params);
      signs.push_back(s);
      ++r.items;
      if ((s == Sign::Zero) != e.element.is_identity())
        fail({{"axiom", "trichotomy"}, {"g", w(e)}, {"sign", std::string(1, sign_char(s))}});
      const Sign si = sign(spec, invert(e.element, params), params);
      if (si != negate(s))
        fail({{"axiom", "inverse"}, {"g", w(e)}, {"sign", std::string(1, sign_char(s))},
              {"sign_inverse", std::string(1, sign_char(si))}});
    }
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (signs[i] == Sign::Positive) positive.push_back(i);
    long closure_pairs = 0;
    for (std::size_t i : positive)
      for (std::size_t j : positive) {
        ++closure_pairs;
        const NormalForm prod = multiply(b.elements[i].element, b.elements[j].element, params);
        if (sign(spec, prod, params) != Sign::Positive)
          fail({{"axiom", "cone closure"}, {"g", w(b.elements[i])}, {"h", w(b.elements[j])}});
      }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
      const auto& f = b.elements[detail::pick(rng, b.size())];
      const auto& g = b.elements[detail::pick(rng, b.size())];
      const auto& h = b.elements[detail::pick(rng, b.size())];
      const auto gh = compare(spec, g.element, h.element, params);
      const auto fgfh = compare(spec, multiply(f.element, g.element, params), multiply(f.element, h.element, params), params);
      if (gh != fgfh)
        fail({{"axiom", "left invariance"}, {"f", w(f)}, {"g", w(g)}, {"h", w(h)}});
      const auto hf = compare(spec, h.element, f.element, params);
      if (gh < 0 && hf < 0 && compare(spec, g.element, f.element, params) >= 0)
        fail({{"axiom", "transitivity"}, {"g", w(g)}, {"h", w(h)}, {"k", w(f)}});
    }
    r.stats["closure_pairs"] = closure_pairs;
    r.stats["violations"] = violations;
    r.verdict = violations ? Verdict::Fail : Verdict::Pass;
  });
}

/// Strict monotonicity of the action: g(e1) < g(e2) for every XY-ball
/// element g and sampled end pairs e1 < e2.
inline Report check_monotone_action(const GroupParams& params, int radius = 4, int end_samples = 100,
                                    std::uint64_t seed = kDefaultSeed) {
  return detail::timed_check("monotone_action", params, seed, [&](Report& r) {
    r.config = {{"radius", radius}, {"end_samples", end_samples}};
    const Ball b = ball(Alphabet::XY, radius, params);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<End, End>> pairs;
    while (static_cast<int>(pairs.size()) < end_samples) {
      End e1 = random_end(rng, params), e2 = random_end(rng, params);
      auto c = compare_ends(e1, e2);
      if (c == 0) continue;
      if (c > 0) std::swap(e1, e2);
      pairs.emplace_back(std::move(e1), std::move(e2));
    }
    long violations = 0;
    for (const auto& e : b.elements) {
      for (const auto& [e1, e2] : pairs) {
        ++r.items;
        if (compare_ends(apply_element(e.element, e1, params), apply_element(e.element, e2, params)) < 0) continue;
        ++violations;
        if (r.witnesses.size() < 10)
          r.witnesses.push_back({{"alphabet", "xy"}, {"g", format_word(e.word)}, {"e1", to_string(e1)},
                                 {"e2", to_string(e2)}, {"relation", "g(e1) < g(e2)"}});
      }
    }
    r.stats["violations"] = violations;
    r.verdict = violations ? Verdict::Fail : Verdict::Pass;
  });
}

/// The action on (E, F) decides the ordering: every g != 1 of the S-ball
/// moves E or F, and g fixes E exactly when g is a power of s2.
inline Report check_stabilizer(const GroupParams& params, int radius = 5) {
  const json config = {{"radius", radius}};
  if (params.klein()) return detail::not_applicable("stabilizer", params, config, detail::kKleinNote);
  return detail::timed_check("stabilizer", params, 0, [&](Report& r) {
    r.config = config;
    const Ball b = ball(Alphabet::S, radius, params);
    long fixes_e = 0;
    for (const auto& e : b.elements) {
      ++r.items;
      const End gE = apply_element(e.element, end_E(), params);
      const End gF = apply_element(e.element, end_F(), params);
      const bool fix_e = gE == end_E(), fix_f = gF == end_F();
      const bool in_s2 = s2_power_of(e.element, params).has_value();
      if (fix_e) ++fixes_e;
      if (!e.element.is_identity() && fix_e && fix_f)
        r.witnesses.push_back({{"alphabet", "s"}, {"g", format_word(e.word)}, {"relation", "g moves E or F"}});
      if (fix_e != in_s2)
        r.witnesses.push_back({{"alphabet", "s"}, {"g", format_word(e.word)}, {"fixes_E", fix_e}, {"in_s2_subgroup", in_s2},
                               {"relation", "g(E) = E iff g in <s2>"}});
    }
    r.stats["fix_E"] = fixes_e;
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
  });
}

/// g < w g for every g in the S-ball and every w in `letters`. The ball is
/// scanned shortest word first, so the first witness is a shortest one.
inline Report check_subword(const GroupParams& params, const OrderSpec& spec, const std::vector<Word>& letters,
                            int radius = 4) {
  json letter_text = json::array();
  for (const auto& l : letters) letter_text.push_back(format_word(l));
  const json config = {{"spec", spec.to_string()}, {"letters", letter_text}, {"radius", radius}};
  if (params.klein()) return detail::not_applicable("subword", params, config, detail::kKleinNote);
  return detail::timed_check("subword", params, 0, [&](Report& r) {
    r.config = config;
    const Ball b = ball(Alphabet::S, radius, params);
    std::vector<const BallElement*> order;
    for (const auto& e : b.elements) order.push_back(&e);
    std::stable_sort(order.begin(), order.end(), [](const BallElement* x, const BallElement* y) {
      if (x->word.length() != y->word.length()) return x->word.length() < y->word.length();
      return format_word(x->word) < format_word(y->word);
    });
    long violations = 0;
    for (const auto* e : order) {
      for (const auto& l : letters) {
        ++r.items;
        const NormalForm wg = multiply(normal_form(l, params), e->element, params);
        if (compare(spec, e->element, wg, params) < 0) continue;
        ++violations;
        if (r.witnesses.size() < 10)
          r.witnesses.push_back({{"alphabet", alphabet_name(l.alphabet())}, {"w", format_word(l)},
                                 {"g", format_word(translate(e->word, l.alphabet(), params))},
                                 {"spec", spec.to_string()}, {"relation", "g < w g"}});
      }
    }
    r.stats["violations"] = violations;
    r.verdict = violations ? Verdict::Fail : Verdict::Pass;
  });
}

/// Property S (g < s g for s in {s1, s2}) holds exactly for (3,2): pass iff
/// the subword check agrees with that, with a verified witness otherwise.
inline Report check_property_s(const GroupParams& params, int radius = 4) {
  const std::vector<Word> letters = {Word::letter(Alphabet::S, 0), Word::letter(Alphabet::S, 1)};
  Report r = check_subword(params, OrderSpec::dehornoy_like(), letters, radius);
  r.check = "property_s";
  if (r.verdict == Verdict::NotApplicable) return r;
  const bool braid = params.m() == 3 && params.n() == 2;
  r.stats["expected"] = braid ? "holds" : "fails";
  if (braid) return r;
  r.verdict = r.verdict == Verdict::Fail ? Verdict::Pass : Verdict::Fail;
  if (r.verdict == Verdict::Fail)
    r.witnesses.push_back({{"relation", "expected a counterexample to g < s g in the ball"}});
  return r;
}

/// Failure of the Conradian condition (f^{-1} g f^2 > 1 for positive f, g).
/// For <_A: f = b^k a, g = b. For <_D: f = a b^{k+1} a b^{k+1}, g = a b^{k+2}.
/// Pass iff some k <= kmax gives f^{-1} g f^2 <= 1 with f, g positive.
inline Report check_conradian_witness(const GroupParams& params, const OrderSpec& spec, int kmax = 10) {
  const json config = {{"spec", spec.to_string()}, {"kmax", kmax}};
  const NormalForm a = normal_form(Word::letter(Alphabet::A, 0), params);
  const NormalForm b = normal_form(Word::letter(Alphabet::A, 1), params);
  if (multiply(multiply(b, a, params), b, params) == a)
    return detail::not_applicable("conradian", params, config,
                                  "hypothesis violated: b a b = a holds (Klein bottle relation)");
  return detail::timed_check("conradian", params, 0, [&](Report& r) {
    r.config = config;
    const bool isolated = spec.base() == OrderSpec::Base::Isolated;
    for (int k = 0; k <= kmax; ++k) {
      ++r.items;
      Word f_word(Alphabet::A), g_word(Alphabet::A);
      if (isolated) {
        f_word = Word(Alphabet::A, {{1, k}, {0, 1}});
        g_word = Word::letter(Alphabet::A, 1);
      } else {
        f_word = Word(Alphabet::A, {{0, 1}, {1, k + 1}, {0, 1}, {1, k + 1}});
        g_word = Word(Alphabet::A, {{0, 1}, {1, k + 2}});
      }
      const NormalForm f = normal_form(f_word, params), g = normal_form(g_word, params);
      if (sign(spec, f, params) != Sign::Positive || sign(spec, g, params) != Sign::Positive) continue;
      const NormalForm probe = multiply(multiply(invert(f, params), g, params), power(f, 2, params), params);
      if (sign(spec, probe, params) == Sign::Positive) continue;
      r.stats["k"] = k;
      r.witnesses.push_back({{"alphabet", "a"}, {"f", format_word(f_word)}, {"g", format_word(g_word)},
                             {"spec", spec.to_string()}, {"relation", "f > 1, g > 1, f^-1 g f^2 <= 1"}});
      r.verdict = Verdict::Pass;
      return;
    }
    r.verdict = Verdict::Fail;
    r.witnesses.push_back({{"note", "no witness with k <= kmax"}});
  });
}

/// Convergence of the conjugates <_k = <_D shifted by b^k a (k = 1..kmax):
/// (i) some K <= kmax has fingerprint(<_k) = fingerprint(<_D) on the radius
/// ball for all K <= k <= kmax, and (ii) for every k <= kmax some element of
/// the witness_radius ball distinguishes <_k from <_D.
inline Report check_convergence(const GroupParams& params, int radius = 3, int kmax = 4, int witness_radius = 6) {
  const json config = {{"radius", radius}, {"kmax", kmax}, {"witness_radius", witness_radius}};
  if (params.klein()) return detail::not_applicable("convergence", params, config, detail::kKleinNote);
  return detail::timed_check("convergence", params, 0, [&](Report& r) {
    r.config = config;
    const OrderSpec d = OrderSpec::dehornoy_like();
    const Ball small = ball(Alphabet::A, radius, params);
    const Ball wide = ball(Alphabet::A, witness_radius, params);
    const Fingerprint base_small = fingerprint(d, small, params);
    const Fingerprint base_wide = fingerprint(d, wide, params);
    const NormalForm a = normal_form(Word::letter(Alphabet::A, 0), params);
    const NormalForm b = normal_form(Word::letter(Alphabet::A, 1), params);

    std::vector<bool> agrees(static_cast<std::size_t>(kmax) + 1, false);
    json per_k = json::array();
    bool all_distinguished = true;
    for (int k = 1; k <= kmax; ++k) {
      const OrderSpec shifted = d.shifted(multiply(power(b, k, params), a, params), params,
                                          "b^" + std::to_string(k) + " a");
      const auto diff_small = fingerprint_differences(base_small, fingerprint(shifted, small, params));
      const auto diff_wide = fingerprint_differences(base_wide, fingerprint(shifted, wide, params));
      r.items += static_cast<long>(small.size() + wide.size());
      agrees[static_cast<std::size_t>(k)] = diff_small.empty();
      json entry = {{"k", k}, {"differences", diff_small.size()}, {"wide_differences", diff_wide.size()}};
      if (!diff_wide.empty()) {
        std::size_t best = diff_wide.front();
        for (std::size_t i : diff_wide)
          if (wide.elements[i].word.length() < wide.elements[best].word.length()) best = i;
        entry["distinguisher"] = format_word(wide.elements[best].word);
      } else {
        all_distinguished = false;
        r.witnesses.push_back({{"k", k}, {"relation", "some element of the witness ball distinguishes <_k from <_D"},
                               {"witness_radius", witness_radius}});
      }
      per_k.push_back(std::move(entry));
    }
    std::optional<int> stable_from;
    for (int k = kmax; k >= 1 && agrees[static_cast<std::size_t>(k)]; --k) stable_from = k;
    if (kmax < 1) stable_from = 0;  // empty range: agreement holds vacuously
    r.stats["per_k"] = per_k;
    if (stable_from) r.stats["K"] = *stable_from;
    if (!stable_from)
      r.witnesses.push_back({{"relation", "fingerprints of <_k agree with <_D for all large k <= kmax"}});
    r.verdict = stable_from && all_distinguished ? Verdict::Pass : Verdict::Fail;
  });
}

/// 1 <= g s2^k g^{-1} s2^{-k} < g under <_D for every 1-positive g of the
/// S-ball and 1 <= k <= kmax.
inline Report check_commutator_inequality(const GroupParams& params, int radius = 3, int kmax = 4) {
  const json config = {{"radius", radius}, {"kmax", kmax}};
  if (params.klein()) return detail::not_applicable("commutator", params, config, detail::kKleinNote);
  return detail::timed_check("commutator", params, 0, [&](Report& r) {
    r.config = config;
    const OrderSpec d = OrderSpec::dehornoy_like();
    const Ball b = ball(Alphabet::S, radius, params);
    const NormalForm s2 = s2_element(params);
    long one_positive = 0;
    for (const auto& e : b.elements) {
      if (sign_d(e.element, params) != Sign::Positive || s2_power_of(e.element, params)) continue;
      ++one_positive;
      const NormalForm gi = invert(e.element, params);
      for (int k = 1; k <= kmax; ++k) {
        ++r.items;
        const NormalForm c = multiply(multiply(multiply(e.element, power(s2, k, params), params), gi, params),
                                      power(s2, -k, params), params);
        if (sign_d(c, params) != Sign::Negative && compare(d, c, e.element, params) < 0) continue;
        r.witnesses.push_back({{"alphabet", "s"}, {"g", format_word(e.word)}, {"k", k},
                               {"relation", "1 <= g s2^k g^-1 s2^-k < g"}});
      }
    }
    r.stats["one_positive"] = one_positive;
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
  });
}

/// Every <_A-positive element of the A-ball should factor as a positive
/// {a,b}-word. Unfactored elements (within `cap`) are inconclusive; a
/// product mismatch or a non-positive element with a positive factorization
/// fails.
inline Report check_cone_generation(const GroupParams& params, int radius = 3, int cap = 12) {
  const json config = {{"radius", radius}, {"cap", cap}};
  if (params.klein()) return detail::not_applicable("cone_generation", params, config, detail::kKleinNote);
  return detail::timed_check("cone_generation", params, 0, [&](Report& r) {
    r.config = config;
    const Ball b = ball(Alphabet::A, radius, params);
    const PositiveMonoidIndex index = positive_monoid_index(cap, params);
    long contradictions = 0;
    for (const auto& [g, w] : index.shortest) {
      if (normal_form(w, params) != g || sign_a(g, params) != Sign::Positive) {
        ++contradictions;
        if (r.witnesses.size() < 10)
          r.witnesses.push_back({{"alphabet", "a"}, {"word", format_word(w)}, {"relation", "positive word is <_A-positive"}});
      }
    }
    long positive = 0, factored = 0;
    json unfactored = json::array();
    for (const auto& e : b.elements) {
      const Sign s = sign_a(e.element, params);
      if (s != Sign::Positive) continue;
      ++positive;
      if (index.shortest.count(e.element))
        ++factored;
      else if (unfactored.size() < 50)
        unfactored.push_back(format_word(e.word));
    }
    r.items = positive;
    r.stats["positive"] = positive;
    r.stats["factored"] = factored;
    r.stats["fraction"] = positive ? static_cast<double>(factored) / static_cast<double>(positive) : 1.0;
    r.stats["monoid_elements"] = index.shortest.size();
    r.stats["contradictions"] = contradictions;
    if (!unfactored.empty()) r.stats["unfactored"] = unfactored;
    if (contradictions) r.verdict = Verdict::Fail;
    else r.verdict = factored == positive ? Verdict::Pass : Verdict::Inconclusive;
  });
}

/// The least positive element: s2 for <_D, b for <_A, and T m T^{-1} for a
/// spec shifted by T with base minimum m. Pass iff the expected element lies
/// in the ball, is positive, and no ball element lies strictly between 1 and
/// it. Inconclusive if the expected element is outside the ball.
inline Report check_minimal_positive(const GroupParams& params, const OrderSpec& spec, int radius = 4,
                                     std::optional<Alphabet> alphabet = {}) {
  const Alphabet alpha = alphabet.value_or(default_alphabet(spec));
  const json config = {{"spec", spec.to_string()}, {"alphabet", alphabet_name(alpha)}, {"radius", radius}};
  if (params.klein()) return detail::not_applicable("minimal_positive", params, config, detail::kKleinNote);
  return detail::timed_check("minimal_positive", params, 0, [&](Report& r) {
    r.config = config;
    NormalForm expected = spec.base() == OrderSpec::Base::DehornoyLike
                              ? s2_element(params)
                              : normal_form(Word::letter(Alphabet::A, 1), params);
    if (spec.is_shifted())
      expected = multiply(multiply(spec.total_shift(), expected, params), spec.total_shift_inverse(), params);
    const Ball b = ball(alpha, radius, params);
    const BallElement* in_ball = b.find(expected);
    r.stats["expected"] = in_ball ? format_word(in_ball->word) : detail::word_text(expected, alpha, params);
    const BallElement probe = minimal_positive_probe(spec, alpha, radius, params);
    r.stats["probe"] = format_word(probe.word);
    if (!b.contains(expected)) {
      r.verdict = Verdict::Inconclusive;
      r.stats["note"] = "expected minimum lies outside the ball";
      return;
    }
    if (sign(spec, expected, params) != Sign::Positive)
      r.witnesses.push_back({{"alphabet", alphabet_name(alpha)}, {"g", r.stats["expected"]}, {"relation", "1 < g"}});
    for (const auto& e : b.elements) {
      ++r.items;
      if (sign(spec, e.element, params) == Sign::Positive && compare(spec, e.element, expected, params) < 0)
        r.witnesses.push_back({{"alphabet", alphabet_name(alpha)}, {"g", format_word(e.word)},
                               {"minimum", r.stats["expected"]}, {"relation", "no g with 1 < g < minimum"}});
    }
    if (probe.element != expected && r.witnesses.empty())
      r.witnesses.push_back({{"probe", format_word(probe.word)}, {"relation", "probe equals expected minimum"}});
    r.verdict = r.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
  });
}

/// {"spec", "alphabet", "radius", "signs": {element text: "+" | "0" | "-"}}
inline json fingerprint_json(const Fingerprint& fp) {
  json signs = json::object();
  for (const auto& e : fp.entries) signs[e.text] = std::string(1, sign_char(e.sign));
  return {{"spec", fp.spec}, {"alphabet", alphabet_name(fp.alphabet)}, {"radius", fp.radius}, {"signs", signs}};
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "normal_form", "property_a",  "property_c",  "property_f",      "order_axioms",    "monotone_action",
      "stabilizer",  "property_s",  "weak_subword", "conradian",      "convergence",     "commutator",
      "cone_generation", "minimal_positive"};
  return names;
}

/// Runs one named check (or a family, e.g. all order specs for
/// "order_axioms") with its default desk-scale configuration.
inline std::vector<Report> run_default_check(const std::string& name, const GroupParams& params,
                                             std::uint64_t seed = kDefaultSeed) {
  const OrderSpec d = OrderSpec::dehornoy_like(), a = OrderSpec::isolated();
  const NormalForm ba = normal_form(Word(Alphabet::A, {{1, 1}, {0, 1}}), params);
  if (name == "normal_form") return {check_normal_form(params, 10000, 12, seed)};
  if (name == "property_a") return {check_property_a(params, 8, 10)};
  if (name == "property_c") return {check_property_c_coverage(params, 3, 10)};
  if (name == "property_f") return {check_property_f(params, 5)};
  if (name == "order_axioms") {
    std::vector<Report> out = {check_order_axioms(params, d, 3, 500, seed), check_order_axioms(params, a, 3, 500, seed)};
    if (!params.klein()) out.push_back(check_order_axioms(params, d.shifted(ba, params, "b a"), 2, 200, seed));
    return out;
  }
  if (name == "monotone_action") return {check_monotone_action(params, 4, 100, seed)};
  if (name == "stabilizer") return {check_stabilizer(params, 5)};
  if (name == "property_s") return {check_property_s(params, 4)};
  if (name == "weak_subword") {
    Report r = check_subword(params, d, {Word::letter(Alphabet::S, 1)}, 5);
    r.check = "weak_subword";
    return {r};
  }
  if (name == "conradian") return {check_conradian_witness(params, d, 10), check_conradian_witness(params, a, 10)};
  if (name == "convergence") return {check_convergence(params, 3, 4, 6)};
  if (name == "commutator") return {check_commutator_inequality(params, 3, 4)};
  if (name == "cone_generation") return {check_cone_generation(params, 3, 14)};
  if (name == "minimal_positive") return {check_minimal_positive(params, d, 4), check_minimal_positive(params, a, 4)};
  throw std::invalid_argument("unknown check '" + name + "'");
}

inline std::vector<Report> run_default_suite(const GroupParams& params, std::uint64_t seed = kDefaultSeed) {
  std::vector<Report> out;
  for (const auto& name : check_names())
    for (auto& r : run_default_check(name, params, seed)) out.push_back(std::move(r));
  return out;
}

}  // namespace ordcalc
