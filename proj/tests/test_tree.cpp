#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ordcalc/ordcalc.hpp"

using namespace ordcalc;

namespace {

const std::vector<std::pair<int, int>> kParams = {{3, 2}, {4, 2}, {3, 3}, {4, 3}, {5, 4}};

End end(const char* t, const GroupParams& p) { return parse_end(t, p); }

Word S(const char* t) { return parse_word(t, Alphabet::S); }

}  // namespace

TEST(End, ParseFormatRoundTrip) {
  const GroupParams p(4, 3);
  for (const char* t : {"(0; -[1])", "(0; +[1])", "(-3; +3 2 [1])", "(2; -1 3 [2 1])"})
    EXPECT_EQ(to_string(end(t, p)), t);
  EXPECT_EQ(to_string(end("(0; + 1 1 [1 1])", p)), "(0; +[1])");
  EXPECT_EQ(to_string(end("(0; +2 [1 1 1 1])", p)), "(0; +2 [1])");
  EXPECT_EQ(to_string(end("(0; +1 2 [1 2])", p)), "(0; +[1 2])");
}

TEST(End, RejectsInvalid) {
  const GroupParams p(3, 2);
  EXPECT_THROW(end("(0; +3 [1])", p), EndError);   // X-range is 1..2
  EXPECT_THROW(end("(0; +1 2 [1])", p), EndError);  // Y-range is 1..1
  EXPECT_THROW(end("(0; +[2])", p), EndError);      // period hits the Y-range
  EXPECT_THROW(end("(0 +[1])", p), ParseError);
  EXPECT_THROW(end("(0; +[])", p), ParseError);
  EXPECT_THROW(end("(0; *[1])", p), ParseError);
}

TEST(End, LexicographicOrder) {
  const GroupParams p(4, 3);
  EXPECT_LT(end("(0; -[1])", p), end("(0; +[1])", p));
  EXPECT_LT(end("(-1; +3 [1])", p), end("(0; -[1])", p));
  EXPECT_LT(end("(0; +1 [1])", p), end("(0; +2 [1])", p));
  EXPECT_LT(end("(0; +[1])", p), end("(0; +1 1 1 [1 2])", p));
  EXPECT_EQ(compare_ends(end("(0; +[1 1])", p), end("(0; +[1])", p)), std::strong_ordering::equal);
  EXPECT_EQ(compare_ends(end("(0; +1 [2 1])", p), end("(0; +[1 2])", p)), std::strong_ordering::equal);
}

TEST(Action, LetterExamples) {
  for (auto [m, n] : kParams) {
    const GroupParams p(m, n);
    End e = end_E();
    apply_letter(Axis::X, false, e, p);
    EXPECT_EQ(e, end_F());
    End top{0, Side::Plus, {m - 1}, {1}};
    top = canonical_end(top, p);
    apply_letter(Axis::X, false, top, p);
    EXPECT_EQ(to_string(top), "(1; -[1])");
  }
}

TEST(Action, LetterInverses) {
  std::mt19937_64 rng(29);
  for (auto [m, n] : kParams) {
    const GroupParams p(m, n);
    for (int i = 0; i < 300; ++i) {
      const End e = random_end(rng, p);
      for (Axis a : {Axis::X, Axis::Y}) {
        End f = e;
        apply_letter(a, false, f, p);
        apply_letter(a, true, f, p);
        EXPECT_EQ(f, e) << to_string(e);
        apply_letter(a, true, f, p);
        apply_letter(a, false, f, p);
        EXPECT_EQ(f, e) << to_string(e);
      }
    }
  }
}

TEST(Action, WordExamples) {
  for (auto [m, n] : kParams) {
    const GroupParams p(m, n);
    const End top = canonical_end(End{0, Side::Plus, {m - 1, n - 1}, {1}}, p);
    EXPECT_EQ(apply_element(S("s2 s1"), end_E(), p), top);
    EXPECT_EQ(apply_element(S("s2"), end_F(), p), top);
    if (m > 2 && n != 2) EXPECT_EQ(to_string(apply_element(S("s1 s2 s1"), end_E(), p)), "(0; +2 [1])");
  }
}

TEST(Action, ComposedLettersMatchDerivedTables) {
  using oracle::Derived;
  const std::pair<Derived, const char*> cases[] = {
      {Derived::S1, "s1"}, {Derived::S2, "s2"}, {Derived::S2Inverse, "s2^-1"}};
  for (auto [m, n] : kParams) {
    const GroupParams p(m, n);
    long checked = 0;
    for (const End& e : oracle::cylinder_ends(4, p))
      for (auto [which, word] : cases) {
        ++checked;
        EXPECT_EQ(apply_element(S(word), e, p), oracle::derived_table(which, e, p))
            << word << " on " << to_string(e) << " at (" << m << "," << n << ")";
      }
    EXPECT_GT(checked, 0);
  }
}

TEST(Action, WordAndNormalFormAgree) {
  std::mt19937_64 rng(31);
  for (auto [m, n] : kParams) {
    const GroupParams p(m, n);
    for (int i = 0; i < 200; ++i) {
      const Word w = random_xy_word(rng, 10);
      const End e = random_end(rng, p);
      EXPECT_EQ(apply_element(w, e, p), apply_element(normal_form(w, p), e, p)) << format_word(w);
    }
  }
}

TEST(Action, IsLeftAction) {
  std::mt19937_64 rng(37);
  for (auto [m, n] : kParams) {
    const GroupParams p(m, n);
    const Ball b = ball(Alphabet::XY, 3, p);
    std::vector<End> ends;
    for (int i = 0; i < 50; ++i) ends.push_back(random_end(rng, p));
    for (int i = 0; i < 200; ++i) {
      const auto& g = b.elements[rng() % b.size()];
      const auto& h = b.elements[rng() % b.size()];
      const End& e = ends[rng() % ends.size()];
      EXPECT_EQ(apply_element(multiply(g.element, h.element, p), e, p),
                apply_element(g.element, apply_element(h.element, e, p), p));
    }
  }
}

TEST(Action, CentralElementShiftsLevel) {
  std::mt19937_64 rng(41);
  for (auto [m, n] : kParams) {
    const GroupParams p(m, n);
    const Word z = Word::letter(Alphabet::XY, 0, m), zy = Word::letter(Alphabet::XY, 1, n);
    for (int i = 0; i < 100; ++i) {
      End e = random_end(rng, p);
      End shifted = e;
      ++shifted.level;
      EXPECT_EQ(apply_element(z, e, p), shifted);
      EXPECT_EQ(apply_element(zy, e, p), shifted);
    }
  }
}

TEST(Action, PreservesOrder) {
  std::mt19937_64 rng(43);
  for (auto [m, n] : kParams) {
    const GroupParams p(m, n);
    const Ball b = ball(Alphabet::XY, 4, p);
    for (int i = 0; i < 30; ++i) {
      End e1 = random_end(rng, p), e2 = random_end(rng, p);
      if (compare_ends(e1, e2) == 0) continue;
      if (e2 < e1) std::swap(e1, e2);
      for (const auto& g : b.elements)
        EXPECT_LT(apply_element(g.element, e1, p), apply_element(g.element, e2, p))
            << format_word(g.word) << " " << to_string(e1) << " " << to_string(e2);
    }
  }
}

TEST(Action, StabilizerOfE) {
  for (auto [m, n] : kParams) {
    const GroupParams p(m, n);
    for (const auto& g : ball(Alphabet::S, 5, p).elements)
      EXPECT_EQ(apply_element(g.element, end_E(), p) == end_E(), s2_power_of(g.element, p).has_value())
          << format_word(g.word);
  }
}
