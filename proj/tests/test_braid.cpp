#include <gtest/gtest.h>

#include <random>

#include "bennequin/braid.hpp"
#include "bennequin/sampling.hpp"
#include "support/oracles.hpp"

using namespace bennequin;

namespace {

std::vector<int> letters(const BraidWord& w) { return {w.letters().begin(), w.letters().end()}; }

ErrorCode parse_error(const std::string& text, int strands) {
  try {
    parse_braid(text, strands);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ErrorCode::kInvariantViolation;
}

}  // namespace

TEST(Parse, CaretForm) {
  EXPECT_EQ(letters(parse_braid("-1^5 2 1^3 2", 3)), (std::vector<int>{-1, -1, -1, -1, -1, 2, 1, 1, 1, 2}));
  EXPECT_EQ(parse_braid("-1^5 2 1^3 2", 3), family_beta(1));
}

TEST(Parse, Separators) {
  EXPECT_EQ(letters(parse_braid(" 1,\t-2\n1 ", 3)), (std::vector<int>{1, -2, 1}));
}

TEST(Parse, EmptyIsTrivial) {
  const auto w = parse_braid("", 1);
  EXPECT_TRUE(w.empty());
  EXPECT_EQ(w.strands(), 1);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error("3", 3), ErrorCode::kGeneratorOutOfRange);
  EXPECT_EQ(parse_error("-3", 3), ErrorCode::kGeneratorOutOfRange);
  EXPECT_EQ(parse_error("0", 3), ErrorCode::kZeroToken);
  EXPECT_EQ(parse_error("1^", 3), ErrorCode::kMalformedCaret);
  EXPECT_EQ(parse_error("1^-2", 3), ErrorCode::kMalformedCaret);
  EXPECT_EQ(parse_error("2^0", 3), ErrorCode::kMalformedCaret);
  EXPECT_EQ(parse_error("^2", 3), ErrorCode::kMalformedCaret);
  EXPECT_EQ(parse_error("x", 3), ErrorCode::kMalformedToken);
  EXPECT_EQ(parse_error("1.5", 3), ErrorCode::kMalformedToken);
  EXPECT_EQ(parse_error("1", 0), ErrorCode::kBadStrandCount);
}

TEST(Parse, RoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto w = random_word(rng, 2 + i % 5, i % 17);
    const auto text = to_string(w);
    EXPECT_EQ(parse_braid(text, w.strands()), w);
    EXPECT_EQ(to_string(parse_braid(text, w.strands())), text);
  }
}

TEST(Counts, ExponentSum) {
  EXPECT_EQ(exponent_sum(family_beta(1)), 0);
  EXPECT_EQ(exponent_sum(BraidWord(1)), 0);
  EXPECT_EQ(exponent_sum(BraidWord(2, {1, 1, 1})), 3);
  for (int n = 1; n <= 50; ++n) EXPECT_EQ(exponent_sum(family_beta(n)), 2 - 2 * n);
}

TEST(Counts, SelfLinking) {
  for (int n = 1; n <= 100; ++n) EXPECT_EQ(self_linking(family_beta(n)), -2 * n - 1) << n;
  EXPECT_EQ(self_linking(BraidWord(1)), -1);
  EXPECT_EQ(self_linking(BraidWord(2, {1, 1, 1})), 1);
}

TEST(Closure, Components) {
  EXPECT_EQ(closure_components(BraidWord(3)), 3);
  EXPECT_EQ(closure_components(BraidWord(2, {1})), 1);
  EXPECT_EQ(closure_components(BraidWord(2, {1, 1})), 2);
  for (int n = 1; n <= 100; ++n) {
    EXPECT_EQ(closure_components(family_beta(n)), oracle::cycle_count(family_beta(n)));
    EXPECT_TRUE(is_knot_closure(family_beta(n)));
    EXPECT_TRUE(is_knot_closure(family_A(n)));
  }
}

TEST(Closure, MatchesStrandWalk) {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto w = random_word(rng, 1 + i % 7, i % 20);
    EXPECT_EQ(closure_components(w), oracle::cycle_count(w)) << to_string(w);
  }
}

TEST(Closure, CycleType) {
  EXPECT_EQ(closure_permutation(BraidWord(4, {1, 3})).cycle_type(), (std::vector<int>{2, 2}));
  EXPECT_EQ(closure_permutation(BraidWord(4, {1, 2})).cycle_type(), (std::vector<int>{1, 3}));
}

TEST(Family, Words) {
  EXPECT_EQ(letters(family_beta(1)), (std::vector<int>{-1, -1, -1, -1, -1, 2, 1, 1, 1, 2}));
  EXPECT_EQ(letters(family_A(1)), (std::vector<int>{1, 2, 1, 2, 1, 2, 1, -2, -2, -2, -2, -2, -2, -2}));
  EXPECT_EQ(family_beta(3).size(), 14u);
  EXPECT_THROW(family_beta(0), Error);
  EXPECT_THROW(family_A(-1), Error);
}

TEST(Moves, Basic) {
  EXPECT_TRUE(free_reduce(BraidWord(2, {1, -1})).empty());
  EXPECT_EQ(letters(free_reduce(BraidWord(3, {2, 1, -1, -2, 1}))), (std::vector<int>{1}));
  EXPECT_EQ(letters(cyclic_shift(BraidWord(3, {-1, 2, 1}), 1)), (std::vector<int>{2, 1, -1}));
  EXPECT_EQ(letters(cyclic_shift(BraidWord(3, {-1, 2, 1}), -1)), (std::vector<int>{1, -1, 2}));
  EXPECT_EQ(letters(cyclic_shift(BraidWord(3, {-1, 2, 1}), 4)), (std::vector<int>{2, 1, -1}));
  EXPECT_TRUE(cyclic_shift(BraidWord(3), 2).empty());
  EXPECT_EQ(letters(inverse(BraidWord(3, {1, -2, 2}))), (std::vector<int>{-2, 2, -1}));
  EXPECT_EQ(letters(mirror(BraidWord(3, {1, -2}))), (std::vector<int>{-1, 2}));
  EXPECT_EQ(letters(power(BraidWord(2, {1}), 3)), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(letters(power(BraidWord(2, {1}), -2)), (std::vector<int>{-1, -1}));
  EXPECT_EQ(letters(conjugate(BraidWord(3, {1}), BraidWord(3, {2}))), (std::vector<int>{2, 1, -2}));
}

TEST(Moves, StrandMismatch) {
  try {
    concat(BraidWord(2, {1}), BraidWord(3, {2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStrandMismatch);
  }
}

TEST(Moves, InvariantsUnderConjugation) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 4;
    const auto w = random_word(rng, n, 1 + i % 12);
    const auto c = random_word(rng, n, i % 6);
    const auto v = conjugate(w, c);
    EXPECT_EQ(exponent_sum(v), exponent_sum(w));
    EXPECT_EQ(closure_permutation(v).cycle_type(), closure_permutation(w).cycle_type());
    EXPECT_EQ(closure_components(cyclic_shift(w, i)), closure_components(w));
    EXPECT_EQ(exponent_sum(mirror(w)), -exponent_sum(w));
    EXPECT_TRUE(free_reduce(concat(w, inverse(w))).empty());
  }
}

TEST(Sampling, KnotWords) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto w = random_knot_word(rng, 4, 12);
    EXPECT_EQ(oracle::cycle_count(w), 1);
    EXPECT_LE(w.size(), 12u);
    EXPECT_LE(w.strands(), 4);
  }
}
