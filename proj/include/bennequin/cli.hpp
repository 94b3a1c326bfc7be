#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bennequin/alexander.hpp"
#include "bennequin/braid.hpp"
#include "bennequin/error.hpp"
#include "bennequin/garside.hpp"
#include "bennequin/quadform.hpp"
#include "bennequin/report.hpp"
#include "bennequin/seifert.hpp"
#include "bennequin/tau.hpp"
#include "bennequin/verify.hpp"

namespace bennequin::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kComputation = 2,
  kVerification = 3,
};

struct CliConfig {
  std::string subcommand;
  std::string braid;
  std::string braid2;
  int strands = 0;
  int n = 1;
  std::optional<int> n_max;
  int max_n = 0;
  std::string format = "text";
  std::string matrix_path;
  std::string graph_path;
  std::string name = "K";
  bool minimal_index = false;
  bool transcript = false;
  int verbosity = 0;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t node_cap = GarsideOptions{}.node_cap;
  std::size_t candidate_cap = Type1Options{}.candidate_cap;

  Type1Options type1() const {
    Type1Options o;
    o.candidate_cap = candidate_cap;
    o.garside.node_cap = node_cap;
    return o;
  }
};

/// Malformed input is a usage error; everything else the library raises is a
/// computation error.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroToken:
    case ErrorCode::kGeneratorOutOfRange:
    case ErrorCode::kMalformedCaret:
    case ErrorCode::kBadStrandCount:
    case ErrorCode::kMalformedToken:
    case ErrorCode::kMalformedMatrix:
    case ErrorCode::kUnknownNode:
      return kUsage;
    default:
      return kComputation;
  }
}

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMalformedMatrix, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline BraidWord braid_arg(const CliConfig& c, const std::string& text) { return parse_braid(text, c.strands); }

inline void print_report(std::ostream& out, const InvariantReport& r, const std::string& format,
                         std::optional<int> n, bool header) {
  if (format == "json") {
    out << to_json(r).dump(2) << "\n";
  } else if (format == "csv") {
    if (header) out << csv_header() << "\n";
    out << csv_row(r, n) << "\n";
  } else {
    auto opt = [](const std::optional<Rational>& q) { return q ? to_string(*q) : std::string("-"); };
    out << r.name << (r.label.empty() ? "" : " (" + r.label + ")") << "\n"
        << "  word            " << to_string(r.word) << "  [" << r.strands << " strands]\n"
        << "  exponent sum    " << r.exponent_sum << "\n"
        << "  self-linking    " << r.self_linking << "\n"
        << "  SL              " << r.max_self_linking.value
        << (r.max_self_linking.assumes_minimal_index ? " (minimal index assumed)" : " (lower bound)") << "\n"
        << "  signature       " << r.signature << "\n"
        << "  Alexander       " << r.alexander.to_display() << "\n"
        << "  determinant     " << r.determinant << "\n"
        << "  g3 <=           " << r.g3_upper << "\n"
        << "  g4 in           [" << r.g4.lower << ", " << r.g4.upper << "]\n"
        << "  s               " << (r.s ? std::to_string(r.s->value) + " (" + r.s->method + ")" : "-") << "\n"
        << "  tau             " << to_string(r.tau) << "\n"
        << "  defects         delta4=" << opt(r.defects.delta4) << " delta_s=" << opt(r.defects.delta_s)
        << " delta_tau=" << opt(r.defects.delta_tau) << "\n"
        << "  detectors       psi=" << r.detectors.psi_nonzero << " right_veering=" << r.detectors.right_veering
        << " theta=" << r.detectors.theta_nonzero << " contact=" << r.detectors.contact_nonzero << "\n"
        << "  verdict         " << to_string(r.quasipositive_verdict) << "\n";
  }
}

inline TauConstraintGraph parse_tau_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedMatrix, std::string("tau graph is not JSON: ") + e.what());
  }
  TauConstraintGraph g;
  try {
    for (const auto& node : j.at("nodes")) {
      std::optional<std::int64_t> tau;
      if (node.contains("tau") && !node.at("tau").is_null()) tau = node.at("tau").get<std::int64_t>();
      g.add_node(node.at("name").get<std::string>(), tau);
    }
    for (const auto& edge : j.at("edges")) g.add_edge(edge.at(0).get<std::string>(), edge.at(1).get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedMatrix, std::string("bad tau graph: ") + e.what());
  }
  return g;
}

constexpr const char* kFormatsHelp =
    "Formats:\n"
    "  braid    whitespace-separated signed generator indices, k = sigma_k, -k = its inverse;\n"
    "           \"k^m\" repeats k m times. The strand count is always given by --strands.\n"
    "  matrix   first token the size N, then N*N entries, integers or p/q.\n"
    "  tau      JSON {\"nodes\": [{\"name\": ..., \"tau\": optional int}], \"edges\": [[from, to], ...]};\n"
    "           an edge means `to` is `from` with one negative crossing made positive.\n"
    "Exit codes: 0 ok, 1 usage error, 2 computation error, 3 verification failure.";

inline int dispatch(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const std::string& sub = c.subcommand;
  if (sub == "parse") {
    const BraidWord w = braid_arg(c, c.braid);
    if (c.format == "json") {
      out << nlohmann::json{{"strands", w.strands()},
                            {"letters", std::vector<int>(w.letters().begin(), w.letters().end())},
                            {"word", to_string(w)},
                            {"exponent_sum", exponent_sum(w)},
                            {"self_linking", self_linking(w)},
                            {"components", closure_components(w)}}
                 .dump(2)
          << "\n";
    } else {
      out << to_string(w) << "\n";
    }
    return kOk;
  }
  if (sub == "invariants") {
    ReportOptions options;
    options.minimal_index_assumed = c.minimal_index;
    options.type1 = c.type1();
    print_report(out, invariant_report(c.name, braid_arg(c, c.braid), options), c.format, std::nullopt, true);
    return kOk;
  }
  if (sub == "signature") {
    const RationalMatrix m = parse_rational_matrix(read_file(c.matrix_path));
    const CongruenceDiagnosis d = congruence_diagonalize(m, c.transcript);
    if (c.format == "json") {
      nlohmann::json j{{"signature", d.signature}, {"nullity", d.nullity}, {"determinant", to_string(d.determinant)}};
      j["diagonal"] = nlohmann::json::array();
      for (const auto& q : d.diagonal) j["diagonal"].push_back(to_string(q));
      if (c.transcript) {
        j["transcript"] = nlohmann::json::array();
        for (const auto& s : d.transcript)
          j["transcript"].push_back({{"target", s.target + 1}, {"source", s.source + 1}, {"coefficient", to_string(s.coefficient)}});
      }
      out << j.dump(2) << "\n";
    } else {
      out << "signature " << d.signature << "\nnullity " << d.nullity << "\ndeterminant " << to_string(d.determinant)
          << "\ndiagonal";
      for (const auto& q : d.diagonal) out << " " << to_string(q);
      out << "\n";
      for (const auto& s : d.transcript)
        out << "R" << s.target + 1 << " <- R" << s.target + 1 << " + (" << to_string(s.coefficient) << ") R"
            << s.source + 1 << "\n";
    }
    return kOk;
  }
  if (sub == "seifert") {
    const SeifertData s = seifert_matrix(braid_arg(c, c.braid));
    if (c.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < s.matrix.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < s.matrix.cols(); ++j) row.push_back(s.matrix(i, j));
        rows.push_back(row);
      }
      out << rows.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < s.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < s.matrix.cols(); ++j) out << (j ? "," : "") << s.matrix(i, j);
        out << "\n";
      }
    }
    return kOk;
  }
  if (sub == "alexander") {
    out << burau_alexander(braid_arg(c, c.braid)).to_pairs() << "\n";
    return kOk;
  }
  if (sub == "conj") {
    const BraidWord w1 = braid_arg(c, c.braid), w2 = braid_arg(c, c.braid2);
    GarsideOptions g;
    g.node_cap = c.node_cap;
    if (auto cert = conjugacy_decide(w1, w2, g)) {
      out << "conjugate\ncertificate " << to_string(cert->conjugator) << "\n";
    } else {
      out << "not conjugate\n";
    }
    return kOk;
  }
  if (sub == "tau") {
    const auto intervals = propagate(parse_tau_graph(read_file(c.graph_path)));
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, iv] : intervals)
      j[name] = {{"lower", iv.lower ? nlohmann::json(*iv.lower) : nlohmann::json(nullptr)},
                 {"upper", iv.upper ? nlohmann::json(*iv.upper) : nlohmann::json(nullptr)}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (sub == "family") {
    const int last = c.n_max.value_or(c.n);
    if (c.n < 1 || last < c.n) {
      err << "usage error: family needs 1 <= --n <= --n-max\n";
      return kUsage;
    }
    nlohmann::json many = nlohmann::json::array();
    for (int n = c.n; n <= last; ++n) {
      const InvariantReport r = family_report(n, c.type1());
      if (c.format == "json" && c.n_max)
        many.push_back(to_json(r));
      else
        print_report(out, r, c.format, n, n == c.n);
    }
    if (c.format == "json" && c.n_max) out << many.dump(2) << "\n";
    return kOk;
  }
  if (sub == "verify-paper") {
    if (c.max_n < 1) {
      err << "usage error: --max-n must be >= 1\n";
      return kUsage;
    }
    VerifyOptions v;
    v.seed = c.seed;
    v.type1 = c.type1();
    const auto rows = verify_paper(c.max_n, v);
    bool all = true;
    for (const auto& r : rows) all = all && r.passed;
    if (c.format == "json") {
      out << to_json(rows).dump(2) << "\n";
    } else {
      for (const auto& r : rows) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << (r.n ? "n=" + std::to_string(r.n) : std::string("   ")) << "\t"
            << r.check;
        if (!r.passed || c.verbosity > 0) out << "  [" << r.detail << "]";
        out << "\n";
      }
      std::size_t passed = 0;
      for (const auto& r : rows) passed += r.passed;
      out << passed << "/" << rows.size() << " checks passed\n";
    }
    if (!all) {
      err << "verification failure: " << (rows.size()) << " checks, at least one failed\n";
      return kVerification;
    }
    return kOk;
  }
  err << "usage error: no subcommand\n";
  return kUsage;
}

}  // namespace cli_detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CliConfig c;
  CLI::App app{"Bennequin-type invariants of closed braids", "bennequin"};
  app.footer(cli_detail::kFormatsHelp);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto braid_opts = [&](CLI::App* s) {
    s->add_option("--strands,-n", c.strands, "number of strands")->required()->check(CLI::PositiveNumber);
  };
  auto format_opt = [&](CLI::App* s, std::vector<std::string> allowed) {
    s->add_option("--format,-f", c.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto budget_opts = [&](CLI::App* s) {
    s->add_option("--node-cap", c.node_cap, "super summit set node cap");
    s->add_option("--candidate-cap", c.candidate_cap, "Murasugi candidate cap");
  };

  auto* parse = app.add_subcommand("parse", "parse a braid word and print it canonically");
  parse->add_option("braid", c.braid, "braid word")->required();
  braid_opts(parse);
  format_opt(parse, {"text", "json"});

  auto* inv = app.add_subcommand("invariants", "all computable invariants of a braid closure");
  inv->add_option("braid", c.braid, "braid word")->required();
  braid_opts(inv);
  format_opt(inv, {"text", "json", "csv"});
  inv->add_option("--name", c.name, "report name");
  inv->add_flag("--minimal-index", c.minimal_index, "assert the word realizes the braid index (SL = sl)");
  budget_opts(inv);

  auto* sig = app.add_subcommand("signature", "signature of a symmetric matrix file");
  sig->add_option("matrix", c.matrix_path, "matrix file")->required();
  sig->add_flag("--transcript", c.transcript, "print the elimination steps");
  format_opt(sig, {"text", "json"});

  auto* seif = app.add_subcommand("seifert", "Seifert matrix of a braid closure");
  seif->add_option("braid", c.braid, "braid word")->required();
  braid_opts(seif);
  format_opt(seif, {"text", "csv", "json"});

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial as exponent:coefficient pairs");
  alex->add_option("braid", c.braid, "braid word")->required();
  braid_opts(alex);

  auto* conj = app.add_subcommand("conj", "decide conjugacy of two braids");
  conj->add_option("w1", c.braid, "first braid")->required();
  conj->add_option("w2", c.braid2, "second braid")->required();
  braid_opts(conj);
  conj->add_option("--node-cap", c.node_cap, "super summit set node cap");

  auto* tau = app.add_subcommand("tau", "propagate tau bounds over a crossing-change graph");
  tau->add_option("graph", c.graph_path, "graph JSON file")->required();

  auto* fam = app.add_subcommand("family", "report for K_n, the closure of beta_n");
  fam->add_option("--n", c.n, "family index")->required();
  fam->add_option("--n-max", c.n_max, "report every index from --n to --n-max");
  format_opt(fam, {"text", "json", "csv"});
  budget_opts(fam);

  auto* ver = app.add_subcommand("verify-paper", "check every identity of the K_n family");
  ver->add_option("--max-n", c.max_n, "largest family index")->required();
  ver->add_option("--seed", c.seed, "seed for the randomized rows");
  format_opt(ver, {"text", "json"});
  budget_opts(ver);

  for (auto* s : {parse, inv, sig, seif, alex, conj, tau, fam, ver})
    s->add_flag("-v,--verbose", c.verbosity, "more detail");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  for (auto* s : app.get_subcommands()) c.subcommand = s->get_name();

  try {
    return cli_detail::dispatch(c, out, err);
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    err << (code == kUsage ? "usage error: " : "computation error: ") << e.what() << "\n";
    return code;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace bennequin::cli
