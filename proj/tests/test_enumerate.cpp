#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "ordcalc/ordcalc.hpp"

using namespace ordcalc;

TEST(SigmaWords, CountsAndClassification) {
  for (int len = 1; len <= 7; ++len) {
    std::size_t ones = 0, twos = 0;
    for_each_sigma_positive_word(1, len, [&](const Word& w) {
      if (static_cast<int>(w.length()) == len) ++ones;
      EXPECT_EQ(sigma_classify(w), SigmaClass::positive(1)) << format_word(w);
    });
    for_each_sigma_positive_word(2, len, [&](const Word& w) {
      if (static_cast<int>(w.length()) == len) ++twos;
      EXPECT_EQ(sigma_classify(w), SigmaClass::positive(2)) << format_word(w);
    });
    EXPECT_EQ(ones, static_cast<std::size_t>(std::pow(3, len) - std::pow(2, len)));
    EXPECT_EQ(twos, 1u);
  }
}

TEST(SigmaWords, NoDuplicatesAndShortestFirst) {
  std::set<std::string> seen;
  std::size_t last = 0;
  for_each_sigma_positive_word(1, 6, [&](const Word& w) {
    EXPECT_GE(static_cast<std::size_t>(w.length()), last);
    last = static_cast<std::size_t>(w.length());
    EXPECT_TRUE(seen.insert(format_word(w)).second) << format_word(w);
  });
  EXPECT_THROW(for_each_sigma_positive_word(3, 2, [](const Word&) {}), std::invalid_argument);
}

TEST(PositiveWords, CountAndElements) {
  const GroupParams p(3, 2);
  std::size_t count = 0;
  for_each_positive_ab_word(10, [&](const Word& w, const NormalForm& g) {
    ++count;
    EXPECT_EQ(g, normal_form(w, p)) << format_word(w);
  }, p);
  EXPECT_EQ(count, 2046u);
}

TEST(MonoidIndex, ShortestWordsAndPositivity) {
  for (auto [m, n] : {std::pair{3, 2}, {4, 2}, {3, 3}, {4, 3}}) {
    const GroupParams p(m, n);
    const auto idx = positive_monoid_index(8, p);
    EXPECT_FALSE(idx.shortest.count(NormalForm{}));
    for (const auto& [g, w] : idx.shortest) {
      EXPECT_EQ(normal_form(w, p), g);
      EXPECT_LE(static_cast<int>(w.length()), 8);
      EXPECT_EQ(sign_a(g, p), Sign::Positive) << format_word(w);
    }
  }
}

TEST(Factorize, FindsShortestWords) {
  const GroupParams p(3, 2);
  auto w = factorize_in_cone(normal_form("a^2 b a", Alphabet::A, p), 6, p);
  ASSERT_TRUE(w);
  EXPECT_EQ(normal_form(*w, p), normal_form("a^2 b a", Alphabet::A, p));
  EXPECT_LE(w->length(), 4);
  auto z = factorize_in_cone(normal_form("x^3", Alphabet::XY, p), 6, p);
  ASSERT_TRUE(z);
  EXPECT_EQ(normal_form(*z, p), normal_form("x^3", Alphabet::XY, p));
  EXPECT_FALSE(factorize_in_cone(normal_form("b^-1", Alphabet::A, p), 8, p));
  EXPECT_FALSE(factorize_in_cone(NormalForm{}, 8, p));
  EXPECT_THROW(factorize_in_cone(NormalForm{}, 0, p), std::invalid_argument);
}

TEST(Fingerprint, DifferencesBetweenOrders) {
  const GroupParams p(3, 2);
  const Ball b = ball(Alphabet::A, 3, p);
  const Fingerprint d = fingerprint(OrderSpec::dehornoy_like(), b, p);
  const Fingerprint a = fingerprint(OrderSpec::isolated(), b, p);
  EXPECT_EQ(d.entries.size(), b.size());
  EXPECT_TRUE(d.same_signs(d));
  EXPECT_FALSE(d.same_signs(a));
  const auto diff = fingerprint_differences(d, a);
  ASSERT_FALSE(diff.empty());
  for (auto i : diff) EXPECT_TRUE(s2_power_of(d.entries[i].element, p).has_value()) << d.entries[i].text;
  const Fingerprint small = fingerprint(OrderSpec::dehornoy_like(), Alphabet::A, 2, p);
  EXPECT_THROW(fingerprint_differences(d, small), std::invalid_argument);
  EXPECT_THROW(fingerprint(OrderSpec::dehornoy_like(), Alphabet::A, 0, p), std::invalid_argument);
}

TEST(Fingerprint, SignsAreAntisymmetric) {
  const GroupParams p(4, 3);
  const auto spec = parse_order_spec("A.shift(b a)", p);
  const Fingerprint fp = fingerprint(spec, Alphabet::A, 3, p);
  const Ball b = ball(Alphabet::A, 3, p);
  for (const auto& e : fp.entries) {
    const BallElement* inv = b.find(invert(e.element, p));
    ASSERT_NE(inv, nullptr);
    EXPECT_EQ(fp.entries[b.index.at(inv->element)].sign, negate(e.sign)) << e.text;
  }
}
