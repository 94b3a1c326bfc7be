#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "bennequin/alexander.hpp"
#include "bennequin/braid.hpp"
#include "bennequin/garside.hpp"
#include "bennequin/quadform.hpp"
#include "bennequin/report.hpp"
#include "bennequin/sampling.hpp"
#include "bennequin/seifert.hpp"
#include "bennequin/tau.hpp"
#include "bennequin/threebraid.hpp"

namespace bennequin {

struct CheckRow {
  std::string check;
  int n = 0;  // 0 for checks that do not depend on n
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240229;
  int random_words = 50;
  Type1Options type1{};
};

namespace verify_detail {

class Table {
 public:
  void add(std::string check, int n, const std::function<std::string()>& body) {
    CheckRow row{std::move(check), n, false, {}};
    try {
      row.detail = body();
      row.passed = row.detail.empty() || row.detail.rfind("ok", 0) == 0;
    } catch (const std::exception& e) {
      row.detail = e.what();
    }
    rows_.push_back(std::move(row));
  }
  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  std::vector<CheckRow> rows_;
};

template <typename A, typename B>
std::string expect_eq(const A& got, const B& want, const std::string& what) {
  if (got == want) return "ok";
  return "mismatch in " + what;
}

inline std::string rationals(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& q : v) s += (s.empty() ? "" : " ") + to_string(q);
  return s;
}

}  // namespace verify_detail

/// Every identity of the K_n family up to max_n, plus the fixed fixtures and
/// a seeded randomized oracle check.
inline std::vector<CheckRow> verify_paper(int max_n, const VerifyOptions& options = {}) {
  if (max_n < 1) throw Error(ErrorCode::kInvalidArgument, "max_n must be >= 1");
  verify_detail::Table t;
  using verify_detail::expect_eq;

  t.add("V_1 entries (1,1)=-2 (1,3)=-1 (6,6)=1", 0, [] {
    const auto v = fixture_V1();
    return (v(0, 0) == -2 && v(0, 2) == -1 && v(5, 5) == 1) ? "ok" : "wrong entries";
  });
  t.add("lk(gamma_i, gamma_1^+) row = (-2,0,-1,0,0,0)", 0, [] {
    const auto v = fixture_V1();
    // the listed lk(gamma_i, gamma_1^+), i = 1..6, form the first printed row
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < 6; ++j) row.push_back(v(0, j));
    return expect_eq(row, std::vector<std::int64_t>{-2, 0, -1, 0, 0, 0}, "linking row");
  });
  t.add("det(V_1 - V_1^T) = 1", 0, [] {
    const auto v = fixture_V1();
    return expect_eq(determinant(to_rational(v - v.transpose())), Rational(1), "det");
  });
  t.add("gauss_pivots(M_1) = -4 -7/4 8/7 9/8 10/9 11/10", 0, [] {
    const auto p = gauss_pivots(to_rational(fixture_M(1)));
    const std::vector<Rational> want{Rational(-4), Rational(-7, 4), Rational(8, 7),
                                     Rational(9, 8), Rational(10, 9), Rational(11, 10)};
    return p == want ? std::string("ok") : "got " + verify_detail::rationals(p);
  });
  t.add("signature(M_1) = 2", 0, [] { return expect_eq(signature(fixture_M(1)), 2, "signature"); });
  t.add("|det(M_1)| = knot_determinant(beta_1) = 11", 0, [] {
    const Rational d = det_exact(to_rational(fixture_M(1)));
    return (abs(d) == 11 && knot_determinant(family_beta(1)) == 11) ? "ok" : "got " + to_string(d);
  });
  t.add("alexander(V_1) = burau_alexander(beta_1)", 0, [] {
    return expect_eq(alexander_from_seifert(fixture_V1()), burau_alexander(family_beta(1)), "Alexander polynomial");
  });
  t.add("chi(S_1) = -1, g(S_1) = 1", 0, [] {
    const auto s = family_S(1);
    return (s.euler_characteristic() == -1 && s.genus() == 1) ? "ok" : "wrong";
  });
  t.add("random knot words: Seifert and Burau Alexander agree, det(V - V^T) = 1", 0, [&] {
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.random_words; ++i) {
      const BraidWord w = random_knot_word(rng, 4, 12);
      const IntMatrix v = seifert_matrix(w).matrix;
      if (!(alexander_from_seifert(v) == burau_alexander(w))) return "Alexander mismatch on " + to_string(w);
      if (!v.empty() && determinant(to_rational(v - v.transpose())) != 1) return "det(V - V^T) != 1 on " + to_string(w);
    }
    return std::string("ok");
  });

  for (int n = 1; n <= max_n; ++n) {
    const BraidWord beta = family_beta(n);
    const BraidWord a = family_A(n);
    t.add("sl(beta_n) = -2n-1", n, [&] { return expect_eq(self_linking(beta), -2 * n - 1, "sl"); });
    t.add("closure of beta_n is a knot", n, [&] { return expect_eq(closure_components(beta), 1, "components"); });
    t.add("signature(M_n) = n+1", n, [&] { return expect_eq(signature(fixture_M(n)), n + 1, "signature"); });
    t.add("last pivot of M_n = (n+10)/(n+9)", n, [&] {
      return expect_eq(gauss_pivots(to_rational(fixture_M(n))).back(), Rational(n + 10, n + 9), "pivot");
    });
    t.add("signature(M_{2n-1}) = 2n", n, [&] { return expect_eq(signature(fixture_M(2 * n - 1)), 2 * n, "signature"); });
    t.add("knot_signature(beta_n) = 2n", n, [&] { return expect_eq(knot_signature(beta), 2 * n, "signature"); });
    t.add("burau and Seifert Alexander agree on beta_n", n, [&] {
      return expect_eq(burau_alexander(beta), alexander_from_seifert(seifert_matrix(beta).matrix), "Alexander");
    });
    t.add("g4_bounds(2n, S_n) = {n, n}", n, [&] {
      return expect_eq(g4_bounds(2 * n, family_S(n), seifert_genus_upper(beta)), G4Bounds{n, n}, "g4");
    });
    t.add("beta_n conjugate to A_n (verified certificate)", n, [&] {
      auto cert = conjugacy_decide(beta, a, options.type1.garside);
      if (!cert) return std::string("no certificate");
      return verify_certificate(beta, a, cert->conjugator) ? "ok: c = " + to_string(cert->conjugator)
                                                           : std::string("certificate does not verify");
    });
    t.add("Murasugi type 1 of beta_n: d=1, a_1=2n+5", n, [&] {
      auto m = type1_recognize(beta, options.type1);
      if (!m) return std::string("not recognized");
      const bool ok = m->d == 1 && m->blocks.size() == 1 && m->blocks[0] == Type1Block{1, 2 * n + 5};
      return ok ? std::string("ok") : "parameters d=" + std::to_string(m->d);
    });
    t.add("s(K_n) = -2n", n, [&] {
      auto s = s_invariant_type1(beta, options.type1);
      return s ? expect_eq(*s, -2 * n, "s") : std::string("rule did not apply");
    });
    t.add("tau interval after P_n edge = [-n, -n+1]", n, [&] {
      auto iv = propagate(family_tau_graph(n, false)).at(family_node_K(n));
      return expect_eq(iv, TauInterval{-n, -n + 1}, "interval " + to_string(iv));
    });
    t.add("tau(K_n) = -n", n, [&] { return expect_eq(family_tau(n), std::int64_t{-n}, "tau"); });
    t.add("psi, theta, contact nonvanishing", n, [&] {
      const bool ok = psi_nonzero(beta, -2 * n) && theta_and_contact_flags(beta, -2 * n) == TransverseFlags{true, true, true};
      return ok ? "ok" : "criterion failed";
    });
    t.add("defects (2n, 0, 0), not quasipositive", n, [&] {
      const InvariantReport r = family_report(n, options.type1);
      const bool ok = r.defects == Defects{Rational(2 * n), Rational(0), Rational(0)} &&
                      r.quasipositive_verdict == QuasipositiveVerdict::kNotQuasipositive;
      return ok ? "ok" : "got " + csv_row(r, n);
    });
  }
  return t.take();
}

inline nlohmann::json to_json(const std::vector<CheckRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"check", r.check}, {"n", r.n}, {"passed", r.passed}, {"detail", r.detail}});
  return out;
}

}  // namespace bennequin
