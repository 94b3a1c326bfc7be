#include <gtest/gtest.h>

#include <random>

#include "bennequin/alexander.hpp"
#include "bennequin/sampling.hpp"
#include "bennequin/seifert.hpp"
#include "support/oracles.hpp"

using namespace bennequin;

namespace {

LaurentPoly poly(std::vector<std::pair<int, long long>> terms) { return LaurentPoly::from_terms(terms); }
const LaurentPoly kT = LaurentPoly::t();

}  // namespace

TEST(Laurent, Arithmetic) {
  const LaurentPoly one(1);
  const auto tinv = LaurentPoly::monomial(1, -1);
  EXPECT_EQ((kT - one) * (tinv - one), poly({{0, 2}, {1, -1}, {-1, -1}}));
  EXPECT_EQ(-(kT - one), one - kT);
  EXPECT_TRUE((kT - kT).is_zero());
  EXPECT_EQ((kT * kT).max_degree(), 2);
  EXPECT_EQ(poly({{3, 2}, {-1, 5}}).min_degree(), -1);
  EXPECT_EQ(poly({{3, 2}, {-1, 5}}).leading_coefficient(), BigInt(2));
  EXPECT_EQ(poly({{3, 2}, {-1, 5}}).coefficient(0), BigInt(0));
}

TEST(Laurent, Evaluate) {
  const auto p = kT - LaurentPoly(1) + LaurentPoly::monomial(1, -1);
  EXPECT_EQ(p.eval_at(Rational(-1)), Rational(-3));
  EXPECT_EQ(p.eval_at(Rational(2)), Rational(3, 2));
  EXPECT_EQ(LaurentPoly(7).eval_at(Rational(0)), Rational(7));
}

TEST(Laurent, ExactDivision) {
  const auto a = (kT - LaurentPoly(1)) * (kT * kT + LaurentPoly(3));
  EXPECT_EQ(divide_exact(a, kT - LaurentPoly(1)), kT * kT + LaurentPoly(3));
  EXPECT_THROW(divide_exact(kT + LaurentPoly(1), kT - LaurentPoly(1)), Error);
}

TEST(Laurent, Normalization) {
  const auto p = poly({{0, -1}, {1, 1}, {2, -1}});  // -(1 - t + t^2)
  EXPECT_EQ(p.normalized(), poly({{-1, 1}, {0, -1}, {1, 1}}));
  EXPECT_EQ(p.shifted(5).normalized(), p.normalized());
  EXPECT_EQ(p.normalized().to_pairs(), "-1:1 0:-1 1:1");
  EXPECT_EQ(p.normalized().to_display(), "t - 1 + t^-1");
  EXPECT_EQ(LaurentPoly(1).to_pairs(), "0:1");
}

TEST(Laurent, Determinant) {
  LaurentMatrix one(1, 1);
  one(0, 0) = kT + LaurentPoly(2);
  EXPECT_EQ(det(one), kT + LaurentPoly(2));
  std::mt19937 rng(79);
  std::uniform_int_distribution<int> c(-2, 2), e(-2, 2);
  // cofactor path against Bareiss path: a block matrix diag(X, I) of size 7
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 4;
    LaurentMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = LaurentPoly::monomial(c(rng), e(rng)) + LaurentPoly(c(rng));
    LaurentMatrix big(7, 7);
    for (std::size_t i = 0; i < 7; ++i) big(i, i) = LaurentPoly(1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) big(i, j) = x(i, j);
    EXPECT_EQ(det(big), det(x));
  }
}

TEST(Alexander, FromSeifert) {
  EXPECT_EQ(alexander_from_seifert(IntMatrix{{-1, 1}, {0, -1}}), poly({{-1, 1}, {0, -1}, {1, 1}}));
  EXPECT_EQ(alexander_from_seifert(IntMatrix(0, 0)), LaurentPoly(1));
  EXPECT_EQ(alexander_from_seifert(fixture_V1()), burau_alexander(family_beta(1)));
}

TEST(Alexander, HandExpanded2x2) {
  std::mt19937 rng(83);
  std::uniform_int_distribution<int> entry(-3, 3);
  int tested = 0;
  while (tested < 100) {
    IntMatrix v{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
    const auto by_hand = oracle::alexander_2x2(v);
    if (by_hand.empty()) continue;
    std::vector<std::pair<int, long long>> terms(by_hand.begin(), by_hand.end());
    EXPECT_EQ(alexander_from_seifert(v), poly(terms).normalized());
    ++tested;
  }
}

TEST(Alexander, Burau) {
  EXPECT_EQ(burau_alexander(BraidWord(2, {1, 1, 1})), poly({{-1, 1}, {0, -1}, {1, 1}}));
  EXPECT_EQ(burau_alexander(BraidWord(1)), LaurentPoly(1));
  EXPECT_EQ(burau_alexander(BraidWord(2, {1})), LaurentPoly(1));
  // figure eight
  EXPECT_EQ(burau_alexander(BraidWord(3, {1, -2, 1, -2})), poly({{-1, -1}, {0, 3}, {1, -1}}));
  EXPECT_THROW(burau_alexander(BraidWord(2, {1, 1})), Error);
}

TEST(Alexander, OracleEquivalence) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(alexander_from_seifert(seifert_matrix(family_beta(n)).matrix), burau_alexander(family_beta(n)));
  std::mt19937 rng(89);
  for (int i = 0; i < 150; ++i) {
    const auto w = random_knot_word(rng, 5, 14);
    const auto p = burau_alexander(w);
    EXPECT_EQ(alexander_from_seifert(seifert_matrix(w).matrix), p) << to_string(w);
    EXPECT_EQ(p, p.reflected().normalized());
    EXPECT_EQ(p.eval_at(Rational(1)), Rational(1));
  }
}

TEST(Alexander, Determinant) {
  EXPECT_EQ(knot_determinant(BraidWord(2, {1, 1, 1})), BigInt(3));
  EXPECT_EQ(knot_determinant(BraidWord(1)), BigInt(1));
  EXPECT_EQ(knot_determinant(family_beta(1)), BigInt(11));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(knot_determinant(family_beta(n)), BigInt(2 * n + 9));
}

TEST(Alexander, BurauGeneratorInverse) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      const auto a = burau_generator(n, i), b = burau_generator(n, -i);
      const auto p = a * b;
      for (std::size_t r = 0; r < p.rows(); ++r)
        for (std::size_t c = 0; c < p.cols(); ++c) EXPECT_EQ(p(r, c), LaurentPoly(r == c ? 1 : 0));
    }
}
