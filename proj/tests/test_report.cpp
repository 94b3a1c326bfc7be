#include <gtest/gtest.h>

#include "bennequin/report.hpp"

using namespace bennequin;

TEST(Report, MaxSelfLinking) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(max_self_linking(family_beta(n), true), (MaxSelfLinking{-2 * n - 1, true}));
  EXPECT_EQ(max_self_linking(BraidWord(1), true), (MaxSelfLinking{-1, true}));
  EXPECT_EQ(max_self_linking(BraidWord(2, {1, -1}), false), (MaxSelfLinking{-2, false}));
}

TEST(Report, G4Bounds) {
  for (int n = 1; n <= 100; ++n) EXPECT_EQ(g4_bounds(2 * n, family_S(n), 0), (G4Bounds{n, n}));
  EXPECT_EQ(g4_bounds(0, band_presentation(1, 0), 0), (G4Bounds{0, 0}));
  EXPECT_EQ(g4_bounds(2, std::nullopt, 4), (G4Bounds{1, 4}));
  EXPECT_EQ(g4_bounds(-3, std::nullopt, 4).lower, 2);
  EXPECT_THROW(g4_bounds(6, family_S(1), 0), Error);
}

TEST(Report, Defects) {
  for (int n = 1; n <= 20; ++n) {
    const auto d = defects(-2 * n - 1, n, -2 * n, -n);
    EXPECT_EQ(d.delta4, Rational(2 * n));
    EXPECT_EQ(d.delta_s, Rational(0));
    EXPECT_EQ(d.delta_tau, Rational(0));
    EXPECT_EQ(quasipositive_verdict(d), QuasipositiveVerdict::kNotQuasipositive);
  }
  const auto unknot = defects(-1, 0, 0, 0);
  EXPECT_EQ(unknot, (Defects{Rational(0), Rational(0), Rational(0)}));
  EXPECT_EQ(quasipositive_verdict(unknot), QuasipositiveVerdict::kUnknown);
  const auto trefoil = defects(1, 1, 2, 1);
  EXPECT_EQ(trefoil, (Defects{Rational(0), Rational(0), Rational(0)}));
  EXPECT_EQ(quasipositive_verdict(trefoil), QuasipositiveVerdict::kUnknown);
  EXPECT_EQ(defects(-4, 1, std::nullopt, std::nullopt).delta4, Rational(5, 2));
  EXPECT_FALSE(defects(-4, std::nullopt, std::nullopt, std::nullopt).delta4);
  EXPECT_THROW(defects(5, 1, std::nullopt, std::nullopt), Error);
}

TEST(Report, FamilyOne) {
  const auto r = family_report(1);
  EXPECT_EQ(r.label, "10_125");
  EXPECT_EQ(r.max_self_linking.value, -3);
  EXPECT_EQ(r.signature, 2);
  EXPECT_EQ(r.g4, (G4Bounds{1, 1}));
  ASSERT_TRUE(r.s);
  EXPECT_EQ(r.s->value, -2);
  EXPECT_EQ(r.tau, TauInterval::exactly(-1));
  EXPECT_EQ(r.defects, (Defects{Rational(2), Rational(0), Rational(0)}));
  EXPECT_EQ(r.detectors, (Detectors{true, true, true, true}));
  EXPECT_EQ(r.quasipositive_verdict, QuasipositiveVerdict::kNotQuasipositive);
  EXPECT_EQ(r.determinant, BigInt(11));
}

TEST(Report, FamilyFour) {
  const auto r = family_report(4);
  EXPECT_EQ(r.defects, (Defects{Rational(8), Rational(0), Rational(0)}));
}

TEST(Report, FamilyTenCrossCheck) {
  const auto v = seifert_matrix(family_beta(10)).matrix;
  EXPECT_EQ(signature(v + v.transpose()), 20);
  EXPECT_EQ(signature(fixture_M(19)), 20);
}

TEST(Report, GenericWord) {
  const auto r = invariant_report("trefoil", BraidWord(2, {1, 1, 1}), {});
  EXPECT_EQ(r.signature, -2);
  EXPECT_EQ(r.g4, (G4Bounds{1, 1}));
  EXPECT_FALSE(r.s);
  EXPECT_FALSE(r.defects.delta4);
  EXPECT_EQ(r.quasipositive_verdict, QuasipositiveVerdict::kUnknown);
  ReportOptions assume;
  assume.minimal_index_assumed = true;
  const auto q = invariant_report("trefoil", BraidWord(2, {1, 1, 1}), assume);
  EXPECT_EQ(q.defects.delta4, Rational(0));
}

TEST(Report, ChainViolationCaught) {
  // |sigma| = 2 forces g4 >= 1 but a disk is claimed
  ReportOptions bad;
  bad.surface = band_presentation(1, 0);
  EXPECT_THROW(invariant_report("x", BraidWord(2, {1, 1, 1}), bad), Error);
}

TEST(Report, JsonRoundTrip) {
  for (int n = 1; n <= 3; ++n) {
    const auto r = family_report(n);
    const auto j = to_json(r);
    EXPECT_EQ(j.at("defects").at("delta4"), 2 * n);
    EXPECT_EQ(report_from_json(j), r);
    EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), r);
  }
  auto r = invariant_report("t", BraidWord(3, {1, 1, 1, 2}), {});
  r.defects.delta4 = Rational(5, 2);
  r.tau = {std::nullopt, 3};
  EXPECT_EQ(to_json(r).at("defects").at("delta4"), "5/2");
  EXPECT_TRUE(to_json(r).at("tau").at("lower").is_null());
  EXPECT_EQ(report_from_json(to_json(r)), r);
}

TEST(Report, Csv) {
  const auto r = family_report(2);
  EXPECT_EQ(csv_header(), "name,n,SL,sigma,g4_lower,g4_upper,s,tau,delta4,delta_s,delta_tau,verdict");
  EXPECT_EQ(csv_row(r, 2), "K_2,2,-5,4,2,2,-4,-2,4,0,0,not_quasipositive");
}
