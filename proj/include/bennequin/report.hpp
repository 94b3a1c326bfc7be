#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bennequin/alexander.hpp"
#include "bennequin/braid.hpp"
#include "bennequin/error.hpp"
#include "bennequin/quadform.hpp"
#include "bennequin/rational.hpp"
#include "bennequin/seifert.hpp"
#include "bennequin/tau.hpp"
#include "bennequin/threebraid.hpp"

namespace bennequin {

struct MaxSelfLinking {
  int value = 0;
  /// True when the word is taken to realize the braid index, so SL = sl.
  /// Otherwise value is only a lower bound for SL.
  bool assumes_minimal_index = false;
  friend bool operator==(const MaxSelfLinking&, const MaxSelfLinking&) = default;
};

inline MaxSelfLinking max_self_linking(const BraidWord& w, bool minimal_index_assumed) {
  return {self_linking(w), minimal_index_assumed};
}

struct G4Bounds {
  int lower = 0;
  int upper = 0;
  bool exact() const { return lower == upper; }
  friend bool operator==(const G4Bounds&, const G4Bounds&) = default;
};

/// lower = ceil(|sigma| / 2); upper = genus of the given surface in B^4, or
/// the caller's Seifert genus bound when no surface is given.
inline G4Bounds g4_bounds(int sigma, const std::optional<BandPresentation>& surface, int g3_upper) {
  G4Bounds b{(std::abs(sigma) + 1) / 2, surface ? surface->genus() : g3_upper};
  if (b.upper < b.lower)
    throw Error(ErrorCode::kInvariantViolation, "four-ball genus bounds inconsistent: lower " + std::to_string(b.lower) +
                                                    " > upper " + std::to_string(b.upper));
  return b;
}

struct Defects {
  std::optional<Rational> delta4;
  std::optional<Rational> delta_s;
  std::optional<Rational> delta_tau;
  friend bool operator==(const Defects&, const Defects&) = default;
};

/// delta4 = (2 g4 - 1 - SL)/2, delta_s = (s - 1 - SL)/2,
/// delta_tau = (2 tau - 1 - SL)/2; each only when its input is exact.
inline Defects defects(int sl, std::optional<int> g4, std::optional<int> s, std::optional<std::int64_t> tau) {
  Defects d;
  auto half = [](std::int64_t v) { return Rational(v, 2); };
  if (g4) d.delta4 = half(2LL * *g4 - 1 - sl);
  if (s) d.delta_s = half(static_cast<std::int64_t>(*s) - 1 - sl);
  if (tau) d.delta_tau = half(2 * *tau - 1 - sl);
  const std::pair<const char*, const std::optional<Rational>*> all[] = {
      {"delta4", &d.delta4}, {"delta_s", &d.delta_s}, {"delta_tau", &d.delta_tau}};
  for (const auto& [name, value] : all)
    if (*value && **value < 0)
      throw Error(ErrorCode::kInvariantViolation, std::string(name) + " is negative (" + to_string(**value) +
                                                      "); an input is wrong or the word is not of minimal index");
  return d;
}

enum class QuasipositiveVerdict { kNotQuasipositive, kUnknown };

inline std::string to_string(QuasipositiveVerdict v) {
  return v == QuasipositiveVerdict::kNotQuasipositive ? "not_quasipositive" : "unknown";
}

/// Quasipositive knots have all defects zero, so any positive defect rules
/// quasipositivity out. Vanishing defects prove nothing.
inline QuasipositiveVerdict quasipositive_verdict(const Defects& d) {
  for (const auto* v : {&d.delta4, &d.delta_s, &d.delta_tau})
    if (*v && **v > 0) return QuasipositiveVerdict::kNotQuasipositive;
  return QuasipositiveVerdict::kUnknown;
}

struct SInvariant {
  int value = 0;
  std::string method;
  friend bool operator==(const SInvariant&, const SInvariant&) = default;
};

struct Detectors {
  bool psi_nonzero = false;
  bool right_veering = false;
  bool theta_nonzero = false;
  bool contact_nonzero = false;
  friend bool operator==(const Detectors&, const Detectors&) = default;
};

struct InvariantReport {
  std::string name;
  /// Knot-table name, recorded as given and never verified.
  std::string label;
  BraidWord word{1};
  int strands = 1;
  int exponent_sum = 0;
  int writhe = 0;
  int self_linking = 0;
  MaxSelfLinking max_self_linking;
  int signature = 0;
  LaurentPoly alexander;
  BigInt determinant;
  int g3_upper = 0;
  G4Bounds g4;
  std::optional<SInvariant> s;
  TauInterval tau;
  Defects defects;
  Detectors detectors;
  QuasipositiveVerdict quasipositive_verdict = QuasipositiveVerdict::kUnknown;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct ReportOptions {
  bool minimal_index_assumed = false;
  /// Exact or partial tau knowledge supplied by the caller.
  TauInterval tau = TauInterval::unbounded();
  std::optional<BandPresentation> surface;
  Type1Options type1{};
};

namespace report_detail {

/// SL <= s - 1 <= 2 g4 - 1 <= 2 g3 - 1, over whatever is known.
inline void check_chain(const InvariantReport& r) {
  const int sl = r.max_self_linking.value;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kInvariantViolation, "Bennequin chain violated: " + what);
  };
  if (r.s) {
    if (r.max_self_linking.assumes_minimal_index && sl > r.s->value - 1) fail("SL > s - 1");
    if (r.s->value - 1 > 2 * r.g4.upper - 1) fail("s - 1 > 2 g4 - 1");
  }
  if (r.max_self_linking.assumes_minimal_index && sl > 2 * r.g4.upper - 1) fail("SL > 2 g4 - 1");
  if (r.g4.upper > r.g3_upper) fail("g4 > g3");
}

}  // namespace report_detail

/// Every invariant this library can compute for the closure of w.
inline InvariantReport invariant_report(std::string name, const BraidWord& w, const ReportOptions& options = {}) {
  InvariantReport r;
  r.name = std::move(name);
  r.word = w;
  r.strands = w.strands();
  r.exponent_sum = exponent_sum(w);
  r.writhe = r.exponent_sum;
  r.self_linking = self_linking(w);
  r.max_self_linking = max_self_linking(w, options.minimal_index_assumed);

  const SeifertData seifert = seifert_matrix(w);
  r.signature = signature(seifert.matrix + seifert.matrix.transpose());
  r.alexander = burau_alexander(w);
  r.determinant = knot_determinant(w);
  r.g3_upper = seifert_genus_upper(w);
  r.g4 = g4_bounds(r.signature, options.surface, r.g3_upper);

  if (w.strands() == 3) {
    try {
      if (auto s = s_invariant_type1(w, options.type1)) r.s = SInvariant{*s, "martin_type1"};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSearchBudgetExhausted) throw;
    }
  }
  r.tau = options.tau;

  if (r.s) {
    r.detectors.psi_nonzero = psi_nonzero(w, r.s->value);
    const TransverseFlags flags = theta_and_contact_flags(w, r.s->value);
    r.detectors.right_veering = flags.right_veering;
    r.detectors.theta_nonzero = flags.theta_nonzero;
    r.detectors.contact_nonzero = flags.contact_nonzero;
  }

  if (r.max_self_linking.assumes_minimal_index) {
    r.defects = defects(r.max_self_linking.value, r.g4.exact() ? std::optional<int>(r.g4.lower) : std::nullopt,
                        r.s ? std::optional<int>(r.s->value) : std::nullopt,
                        r.tau.exact() ? r.tau.lower : std::nullopt);
  }
  r.quasipositive_verdict = quasipositive_verdict(r.defects);
  report_detail::check_chain(r);
  return r;
}

/// Report for K_n, the closure of beta_n, with every identity of the family
/// checked before returning.
inline InvariantReport family_report(int n, const Type1Options& type1 = {}) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "family index must be >= 1");
  ReportOptions options;
  options.minimal_index_assumed = true;  // braid index of K_n is 3
  options.surface = family_S(n);
  options.tau = propagate(family_tau_graph(n)).at(family_node_K(n));
  options.type1 = type1;
  InvariantReport r = invariant_report("K_" + std::to_string(n), family_beta(n), options);
  if (n == 1) r.label = "10_125";
  if (n == 2) r.label = "12n235";

  const IntMatrix m = fixture_M(2 * n - 1);
  const std::pair<const char*, bool> checks[] = {
      {"SL = -2n-1", r.max_self_linking.value == -2 * n - 1},
      {"sigma = 2n", r.signature == 2 * n},
      {"sigma = signature(M_{2n-1})", r.signature == signature(m)},
      {"g4 = n", r.g4.lower == n && r.g4.upper == n},
      {"s = -2n", r.s && r.s->value == -2 * n},
      {"tau = -n", r.tau.exact() && *r.tau.lower == -n},
      {"delta4 = 2n", r.defects.delta4 == Rational(2 * n)},
      {"delta_s = 0", r.defects.delta_s == Rational(0)},
      {"delta_tau = 0", r.defects.delta_tau == Rational(0)},
      {"psi != 0", r.detectors.psi_nonzero},
      {"theta != 0", r.detectors.theta_nonzero && r.detectors.right_veering && r.detectors.contact_nonzero},
      {"not quasipositive", r.quasipositive_verdict == QuasipositiveVerdict::kNotQuasipositive},
  };
  for (const auto& [what, ok] : checks)
    if (!ok) throw Error(ErrorCode::kInvariantViolation, "K_" + std::to_string(n) + ": " + what + " fails");
  return r;
}

// ---- serialization -------------------------------------------------------

namespace report_detail {

inline nlohmann::json rational_json(const std::optional<Rational>& q) {
  if (!q) return nullptr;
  if (boost::multiprecision::denominator(*q) == 1)
    return boost::multiprecision::numerator(*q).convert_to<long long>();
  return to_string(*q);
}

inline std::optional<Rational> rational_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return parse_rational(j.get<std::string>());
}

inline nlohmann::json bound_json(const std::optional<std::int64_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline std::optional<std::int64_t> bound_from_json(const nlohmann::json& j) {
  return j.is_null() ? std::nullopt : std::optional<std::int64_t>(j.get<std::int64_t>());
}

}  // namespace report_detail

inline nlohmann::json to_json(const InvariantReport& r) {
  using nlohmann::json;
  json alex = json::array();
  for (const auto& [e, c] : r.alexander.terms()) alex.push_back(json::array({e, c.convert_to<long long>()}));
  return json{
      {"name", r.name},
      {"label", r.label},
      {"word", to_string(r.word)},
      {"strands", r.strands},
      {"exponent_sum", r.exponent_sum},
      {"writhe", r.writhe},
      {"self_linking", r.self_linking},
      {"max_self_linking",
       {{"value", r.max_self_linking.value}, {"assumes_minimal_index", r.max_self_linking.assumes_minimal_index}}},
      {"signature", r.signature},
      {"alexander", alex},
      {"determinant", r.determinant.convert_to<long long>()},
      {"g3_upper", r.g3_upper},
      {"g4", {{"lower", r.g4.lower}, {"upper", r.g4.upper}}},
      {"s", r.s ? json{{"value", r.s->value}, {"method", r.s->method}} : json(nullptr)},
      {"tau", {{"lower", report_detail::bound_json(r.tau.lower)}, {"upper", report_detail::bound_json(r.tau.upper)}}},
      {"defects",
       {{"delta4", report_detail::rational_json(r.defects.delta4)},
        {"delta_s", report_detail::rational_json(r.defects.delta_s)},
        {"delta_tau", report_detail::rational_json(r.defects.delta_tau)}}},
      {"detectors",
       {{"psi_nonzero", r.detectors.psi_nonzero},
        {"right_veering", r.detectors.right_veering},
        {"theta_nonzero", r.detectors.theta_nonzero},
        {"contact_nonzero", r.detectors.contact_nonzero}}},
      {"quasipositive_verdict", to_string(r.quasipositive_verdict)},
  };
}

inline InvariantReport report_from_json(const nlohmann::json& j) {
  InvariantReport r;
  r.name = j.at("name").get<std::string>();
  r.label = j.value("label", std::string());
  r.strands = j.at("strands").get<int>();
  r.word = parse_braid(j.at("word").get<std::string>(), r.strands);
  r.exponent_sum = j.at("exponent_sum").get<int>();
  r.writhe = j.at("writhe").get<int>();
  r.self_linking = j.at("self_linking").get<int>();
  r.max_self_linking = {j.at("max_self_linking").at("value").get<int>(),
                        j.at("max_self_linking").at("assumes_minimal_index").get<bool>()};
  r.signature = j.at("signature").get<int>();
  std::vector<std::pair<int, long long>> terms;
  for (const auto& t : j.at("alexander")) terms.emplace_back(t.at(0).get<int>(), t.at(1).get<long long>());
  r.alexander = LaurentPoly::from_terms(terms);
  r.determinant = BigInt(j.at("determinant").get<long long>());
  r.g3_upper = j.at("g3_upper").get<int>();
  r.g4 = {j.at("g4").at("lower").get<int>(), j.at("g4").at("upper").get<int>()};
  if (!j.at("s").is_null()) r.s = SInvariant{j.at("s").at("value").get<int>(), j.at("s").at("method").get<std::string>()};
  r.tau = {report_detail::bound_from_json(j.at("tau").at("lower")),
           report_detail::bound_from_json(j.at("tau").at("upper"))};
  r.defects = {report_detail::rational_from_json(j.at("defects").at("delta4")),
               report_detail::rational_from_json(j.at("defects").at("delta_s")),
               report_detail::rational_from_json(j.at("defects").at("delta_tau"))};
  const auto& det = j.at("detectors");
  r.detectors = {det.at("psi_nonzero").get<bool>(), det.at("right_veering").get<bool>(),
                 det.at("theta_nonzero").get<bool>(), det.at("contact_nonzero").get<bool>()};
  const auto verdict = j.at("quasipositive_verdict").get<std::string>();
  if (verdict == "not_quasipositive")
    r.quasipositive_verdict = QuasipositiveVerdict::kNotQuasipositive;
  else if (verdict == "unknown")
    r.quasipositive_verdict = QuasipositiveVerdict::kUnknown;
  else
    throw Error(ErrorCode::kInvalidArgument, "unknown verdict '" + verdict + "'");
  return r;
}

inline std::string csv_header() { return "name,n,SL,sigma,g4_lower,g4_upper,s,tau,delta4,delta_s,delta_tau,verdict"; }

/// One CSV summary row; unknown values are empty, an inexact tau prints as
/// "lo..hi".
inline std::string csv_row(const InvariantReport& r, std::optional<int> n) {
  auto opt = [](const std::optional<Rational>& q) { return q ? to_string(*q) : std::string(); };
  std::string tau;
  if (r.tau.exact())
    tau = std::to_string(*r.tau.lower);
  else if (r.tau.lower || r.tau.upper)
    tau = (r.tau.lower ? std::to_string(*r.tau.lower) : "") + ".." + (r.tau.upper ? std::to_string(*r.tau.upper) : "");
  return r.name + "," + (n ? std::to_string(*n) : "") + "," + std::to_string(r.max_self_linking.value) + "," +
         std::to_string(r.signature) + "," + std::to_string(r.g4.lower) + "," + std::to_string(r.g4.upper) + "," +
         (r.s ? std::to_string(r.s->value) : "") + "," + tau + "," + opt(r.defects.delta4) + "," +
         opt(r.defects.delta_s) + "," + opt(r.defects.delta_tau) + "," + to_string(r.quasipositive_verdict);
}

}  // namespace bennequin
