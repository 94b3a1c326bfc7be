#include <gtest/gtest.h>

#include <random>

#include "bennequin/threebraid.hpp"

using namespace bennequin;

namespace {

BraidWord b3(std::vector<int> l) { return BraidWord(3, std::move(l)); }

}  // namespace

TEST(Type1, WordShape) {
  const auto w = MurasugiType1::type1_word(1, {{1, 7}});
  EXPECT_EQ(w, family_A(1));
  EXPECT_EQ((MurasugiType1{1, {{1, 7}}}).exponent_sum(), exponent_sum(family_A(1)));
  EXPECT_EQ(MurasugiType1::type1_word(2, {}).size(), 12u);
}

TEST(Type1, Compositions) {
  int count = 0;
  threebraid_detail::for_each_composition(5, 3, 1, [&](const std::vector<int>& p) {
    EXPECT_EQ(p[0] + p[1] + p[2], 5);
    for (int x : p) EXPECT_GE(x, 1);
    ++count;
    return false;
  });
  EXPECT_EQ(count, 6);  // C(4, 2)
  count = 0;
  threebraid_detail::for_each_composition(2, 3, 0, [&](const std::vector<int>&) { return ++count, false; });
  EXPECT_EQ(count, 6);  // C(4, 2)
}

TEST(Type1, LeastRotation) {
  EXPECT_TRUE(threebraid_detail::least_rotation({{1, 2}, {3, 0}}));
  EXPECT_FALSE(threebraid_detail::least_rotation({{3, 0}, {1, 2}}));
  EXPECT_TRUE(threebraid_detail::least_rotation({{1, 1}, {1, 1}}));
}

TEST(Type1, FamilyRecognized) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : {family_A(n), family_beta(n)}) {
      const auto m = type1_recognize(w);
      ASSERT_TRUE(m) << n;
      EXPECT_EQ(m->d, 1);
      ASSERT_EQ(m->blocks.size(), 1u);
      EXPECT_EQ(m->blocks[0], (Type1Block{1, 2 * n + 5}));
      EXPECT_TRUE(verify_certificate(w, m->word(), m->certificate.conjugator));
    }
  }
}

TEST(Type1, FullTwistAloneIsUnclassified) {
  EXPECT_FALSE(type1_recognize(b3({1, 2, 1, 2, 1, 2})));
}

TEST(Type1, NonThreeStrand) {
  EXPECT_THROW(type1_recognize(BraidWord(4, {1, 2, 3})), Error);
  EXPECT_THROW(s_invariant_type1(BraidWord(2, {1, 1, 1})), Error);
}

TEST(Type1, CandidateCap) {
  Type1Options tiny;
  tiny.candidate_cap = 1;
  try {
    // the unknot as a 3-braid needs more than one candidate
    type1_search(b3({1, 2}), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchBudgetExhausted);
  }
}

TEST(SInvariant, Family) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(s_invariant_type1(family_beta(n)), -2 * n);
  // writhe 0 at n = 1
  EXPECT_EQ(exponent_sum(family_beta(1)), 0);
}

TEST(SInvariant, Unrecognized) {
  // unknot as a 3-braid: not of the form, so no value
  EXPECT_FALSE(s_invariant_type1(b3({1, 2})));
  EXPECT_THROW(s_invariant_type1(b3({1, 1, 2, 2})), Error);
}

TEST(Detectors, Psi) {
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(psi_nonzero(family_beta(n), -2 * n));
  EXPECT_TRUE(psi_nonzero(BraidWord(1), 0));
  EXPECT_FALSE(psi_nonzero(BraidWord(2, {1, -1}), 0));
}

TEST(Detectors, ThetaAndContact) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(theta_and_contact_flags(family_beta(n), -2 * n), (TransverseFlags{true, true, true}));
  EXPECT_EQ(theta_and_contact_flags(BraidWord(1), 0), (TransverseFlags{true, true, true}));
  EXPECT_EQ(theta_and_contact_flags(BraidWord(2, {1, -1}), 0), (TransverseFlags{false, false, false}));
}
