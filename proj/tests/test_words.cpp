#include <gtest/gtest.h>

#include "ordcalc/ordcalc.hpp"

using namespace ordcalc;

namespace {

Word S(const char* t) { return parse_word(t, Alphabet::S); }

bool same_powers(const Word& w, std::vector<LetterPower> expected) {
  if (w.powers().size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (w.powers()[i].letter != expected[i].letter || w.powers()[i].exponent != expected[i].exponent) return false;
  return true;
}

}  // namespace

TEST(ParseWord, Tokenizes) {
  EXPECT_TRUE(same_powers(parse_word("x y^-2", Alphabet::XY), {{0, 1}, {1, -2}}));
  EXPECT_TRUE(same_powers(S("(s1 s2)^2"), {{0, 1}, {1, 1}, {0, 1}, {1, 1}}));
  EXPECT_TRUE(same_powers(parse_word("a*b*b", Alphabet::A), {{0, 1}, {1, 2}}));
  EXPECT_TRUE(parse_word("1", Alphabet::XY).empty());
}

TEST(ParseWord, NestedGroupsAndNegativePowers) {
  EXPECT_EQ(format_word(S("((s1 s2)^2 s1)^-1")), "s1^-1 s2^-1 s1^-1 s2^-1 s1^-1");
}

TEST(ParseWord, SigmaAliases) {
  EXPECT_EQ(format_word(S("\xcf\x83\x31 \xcf\x83\x32^-1")), "s1 s2^-1");
}

TEST(ParseWord, RejectsBadInput) {
  EXPECT_THROW(parse_word("b^0", Alphabet::A), ParseError);
  EXPECT_THROW(parse_word("b^01", Alphabet::A), ParseError);
  EXPECT_THROW(parse_word("x y", Alphabet::A), ParseError);
  EXPECT_THROW(parse_word("(a b", Alphabet::A), ParseError);
  EXPECT_THROW(parse_word("", Alphabet::A), ParseError);
  EXPECT_THROW(parse_word("s3", Alphabet::S), ParseError);
  try {
    parse_word("a b c", Alphabet::A);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(ParseWord, KeepsCancellingPairsAsWritten) {
  EXPECT_EQ(S("s1 s1^-1").length(), 2);
  EXPECT_EQ(format_word(S("s1 s1 s2")), "s1^2 s2");
}

TEST(FormatWord, RoundTripsCanonicalWords) {
  for (const char* t : {"1", "x", "x^3 y^-1", "s1 s2^-1 s1", "a^-2 b a^5"}) {
    const Alphabet a = detect_alphabet(t);
    EXPECT_EQ(format_word(parse_word(t, a)), t);
    EXPECT_EQ(format_word(parse_word(format_word(parse_word(t, a)), a)), t);
  }
}

TEST(DetectAlphabet, FindsOrRejects) {
  EXPECT_EQ(detect_alphabet("x y"), Alphabet::XY);
  EXPECT_EQ(detect_alphabet("s1 s2"), Alphabet::S);
  EXPECT_EQ(detect_alphabet("a^2 b"), Alphabet::A);
  EXPECT_THROW(detect_alphabet("x a"), ParseError);
}

TEST(FreeReduce, Examples) {
  EXPECT_TRUE(free_reduce(S("s1 s1^-1")).empty());
  EXPECT_TRUE(same_powers(free_reduce(Word(Alphabet::XY, {{0, 2}, {0, -1}})), {{0, 1}}));
  EXPECT_TRUE(free_reduce(Word(Alphabet::XY)).empty());
  EXPECT_EQ(format_word(free_reduce(S("s1 s2 s2^-1 s1^-1 s2"))), "s2");
}

TEST(FreeReduce, IdempotentAndShortening) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_xy_word(rng, 12);
    const Word r = free_reduce(w);
    EXPECT_LE(r.length(), w.length());
    EXPECT_EQ(format_word(free_reduce(r)), format_word(r));
  }
}

TEST(Translate, Substitutions) {
  const GroupParams p(3, 2);
  EXPECT_EQ(format_word(translate(parse_word("a", Alphabet::A), Alphabet::XY, p)), "x");
  EXPECT_EQ(format_word(translate(parse_word("y", Alphabet::XY), Alphabet::A, p)), "b a^2");
  for (auto [m, n] : {std::pair{3, 2}, {4, 2}, {3, 3}, {4, 3}, {2, 2}}) {
    const GroupParams q(m, n);
    EXPECT_EQ(format_word(translate(S("s2"), Alphabet::A, q)), "b^-1");
    EXPECT_EQ(format_word(translate(S("s1"), Alphabet::XY, q)), "x y x^" + std::to_string(1 - m));
  }
}

TEST(Translate, CompositesAgreeInTheGroup) {
  std::mt19937_64 rng(11);
  for (auto [m, n] : {std::pair{3, 2}, {4, 3}, {5, 2}}) {
    const GroupParams p(m, n);
    for (int i = 0; i < 200; ++i) {
      const Word w = random_xy_word(rng, 8);
      for (Alphabet t1 : {Alphabet::S, Alphabet::A, Alphabet::XY})
        for (Alphabet t2 : {Alphabet::S, Alphabet::A, Alphabet::XY}) {
          const Word twice = translate(translate(w, t1, p), t2, p);
          EXPECT_EQ(twice.alphabet(), t2);
          EXPECT_EQ(normal_form(twice, p), normal_form(w, p)) << format_word(w);
        }
    }
  }
}

TEST(Twist, Examples) {
  auto texts = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(format_word(w));
    return out;
  };
  using V = std::vector<std::string>;
  EXPECT_EQ(texts(twist_set({S("s1"), S("s2")})), (V{"s1 s2", "s2^-1"}));
  EXPECT_EQ(texts(twist_set({parse_word("g1", Alphabet::Free)})), (V{"g1^-1"}));
  // N = 3: exponents (-1)^3, (-1)^2, (-1)^1.
  const std::vector<Word> g3 = {parse_word("g1", Alphabet::Free), parse_word("g2", Alphabet::Free),
                                parse_word("g3", Alphabet::Free)};
  EXPECT_EQ(texts(twist_set(g3)), (V{"g3^-1 g2^-1 g1^-1", "g2 g3", "g3^-1"}));
  EXPECT_EQ(texts(detwist_set({S("s1"), S("s2")})), (V{"s1 s2", "s2^-1"}));
  EXPECT_EQ(texts(detwist_set({parse_word("g1", Alphabet::Free)})), (V{"g1^-1"}));
  EXPECT_EQ(texts(twist_set(detwist_set({S("s1"), S("s2")}))), (V{"s1", "s2"}));
}

TEST(Twist, TwistUndoesDetwistOnAbstractLetters) {
  for (int count = 1; count <= 4; ++count) {
    std::vector<Word> gens;
    for (int i = 0; i < count; ++i) gens.push_back(Word::letter(Alphabet::Free, i));
    const auto back = twist_set(detwist_set(gens));
    ASSERT_EQ(back.size(), gens.size());
    for (int i = 0; i < count; ++i) EXPECT_EQ(format_word(back[i]), format_word(gens[i])) << count;
  }
}

TEST(SigmaClassify, Examples) {
  EXPECT_EQ(sigma_classify(S("s1 s2^-1 s1")), SigmaClass::positive(1));
  EXPECT_EQ(sigma_classify(S("s2^-3")), SigmaClass::negative(2));
  EXPECT_EQ(sigma_classify(S("s1 s1^-1")), SigmaClass::indeterminate());
  EXPECT_EQ(sigma_classify(Word(Alphabet::S)), SigmaClass::identity());
  EXPECT_THROW(sigma_classify(parse_word("a", Alphabet::A)), std::invalid_argument);
}

TEST(SigmaClassify, InverseFlipsSign) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    Word w(Alphabet::S);
    const int len = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) w.push_back(static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1);
    const SigmaClass c = sigma_classify(w), ci = sigma_classify(w.inverse());
    if (c.kind == SigmaClass::Kind::Positive) EXPECT_EQ(ci, SigmaClass::negative(c.index));
    if (c.kind == SigmaClass::Kind::Indeterminate) EXPECT_EQ(ci, SigmaClass::indeterminate());
  }
}
