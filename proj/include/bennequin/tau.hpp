#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bennequin/error.hpp"

namespace bennequin {

/// Integer interval; an absent bound is infinite on that side.
struct TauInterval {
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;

  static TauInterval exactly(std::int64_t v) { return {v, v}; }
  static TauInterval unbounded() { return {}; }

  bool exact() const { return lower && upper && *lower == *upper; }
  bool empty() const { return lower && upper && *lower > *upper; }

  friend bool operator==(const TauInterval&, const TauInterval&) = default;
};

inline std::string to_string(const TauInterval& iv) {
  return "[" + (iv.lower ? std::to_string(*iv.lower) : std::string("-inf")) + ", " +
         (iv.upper ? std::to_string(*iv.upper) : std::string("+inf")) + "]";
}

/// Knots as named nodes. An edge (a, b) says b is a with one negative crossing
/// changed to a positive one, so tau(a) <= tau(b) <= tau(a) + 1.
class TauConstraintGraph {
 public:
  struct Node {
    std::string name;
    std::optional<std::int64_t> tau;
  };

  void add_node(std::string name, std::optional<std::int64_t> tau = std::nullopt) {
    if (index_.contains(name)) throw Error(ErrorCode::kInvalidArgument, "duplicate node '" + name + "'");
    index_.emplace(name, nodes_.size());
    nodes_.push_back({std::move(name), tau});
  }

  void add_edge(const std::string& from, const std::string& to) {
    edges_.emplace_back(node_index(from), node_index(to));
  }

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

  std::size_t node_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorCode::kUnknownNode, "no node named '" + name + "'");
    return it->second;
  }

 private:
  std::vector<Node> nodes_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

namespace tau_detail {

inline bool raise_lower(TauInterval& iv, std::optional<std::int64_t> candidate) {
  if (!candidate || (iv.lower && *iv.lower >= *candidate)) return false;
  iv.lower = candidate;
  return true;
}

inline bool cut_upper(TauInterval& iv, std::optional<std::int64_t> candidate) {
  if (!candidate || (iv.upper && *iv.upper <= *candidate)) return false;
  iv.upper = candidate;
  return true;
}

inline std::optional<std::int64_t> plus(std::optional<std::int64_t> v, std::int64_t k) {
  return v ? std::optional<std::int64_t>(*v + k) : std::nullopt;
}

}  // namespace tau_detail

/// Tightens every interval along the edges, in the given edge order, until a
/// fixed point. Throws kTauContradiction on an empty interval.
inline std::map<std::string, TauInterval> propagate(const TauConstraintGraph& g,
                                                    const std::vector<std::size_t>& edge_order) {
  const auto& nodes = g.nodes();
  const auto& edges = g.edges();
  std::vector<TauInterval> iv(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].tau) iv[i] = TauInterval::exactly(*nodes[i].tau);

  auto contradiction = [&](std::size_t node) {
    std::string msg = "empty interval " + to_string(iv[node]) + " at node '" + nodes[node].name + "'; edges:";
    for (const auto& [a, b] : edges)
      if (a == node || b == node) msg += " " + nodes[a].name + "->" + nodes[b].name;
    throw Error(ErrorCode::kTauContradiction, msg);
  };
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (iv[i].empty()) contradiction(i);

  // difference constraints with nonnegative weights: converges within |nodes| + 1 sweeps
  const std::size_t max_rounds = nodes.size() * std::max<std::size_t>(edges.size(), 1) + 1;
  for (std::size_t round = 0;; ++round) {
    if (round > max_rounds) throw Error(ErrorCode::kInvariantViolation, "tau propagation did not converge");
    bool changed = false;
    for (std::size_t e : edge_order) {
      const auto [a, b] = edges.at(e);
      changed |= tau_detail::raise_lower(iv[b], iv[a].lower);
      changed |= tau_detail::cut_upper(iv[b], tau_detail::plus(iv[a].upper, 1));
      changed |= tau_detail::raise_lower(iv[a], tau_detail::plus(iv[b].lower, -1));
      changed |= tau_detail::cut_upper(iv[a], iv[b].upper);
      if (iv[a].empty()) contradiction(a);
      if (iv[b].empty()) contradiction(b);
    }
    if (!changed) break;
  }

  std::map<std::string, TauInterval> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) out.emplace(nodes[i].name, iv[i]);
  return out;
}

inline std::map<std::string, TauInterval> propagate(const TauConstraintGraph& g) {
  std::vector<std::size_t> order(g.edges().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return propagate(g, order);
}

/// tau of the (2, q) torus knot, q odd.
inline std::int64_t torus_tau_2(std::int64_t q) {
  if (q % 2 == 0) throw Error(ErrorCode::kInvalidArgument, "torus parameter must be odd, got " + std::to_string(q));
  return q > 0 ? (q - 1) / 2 : (q + 1) / 2;
}

inline std::string family_node_K(int n) { return "K_" + std::to_string(n); }
inline std::string family_node_P(int n) { return "P_" + std::to_string(n); }
inline std::string family_node_R(int n) { return "R_" + std::to_string(n); }
inline std::string family_node_T(int n) { return "T_{2," + std::to_string(-(2 * n + 3)) + "}"; }

/// Crossing-change graph around K_n. P_n is T_{2,-(2n+1)}; with the R_n chain
/// omitted only the lower comparison P_n -> K_n remains.
inline TauConstraintGraph family_tau_graph(int n, bool include_r_chain = true) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "family index must be >= 1");
  TauConstraintGraph g;
  g.add_node(family_node_K(n));
  g.add_node(family_node_P(n), torus_tau_2(-(2 * n + 1)));
  g.add_edge(family_node_P(n), family_node_K(n));
  if (include_r_chain) {
    g.add_node(family_node_R(n));
    g.add_node(family_node_T(n), torus_tau_2(-(2 * n + 3)));
    g.add_edge(family_node_K(n), family_node_R(n));
    g.add_edge(family_node_T(n), family_node_R(n));
  }
  return g;
}

inline std::int64_t family_tau(int n) {
  const auto intervals = propagate(family_tau_graph(n));
  const TauInterval& k = intervals.at(family_node_K(n));
  if (!k.exact())
    throw Error(ErrorCode::kInvariantViolation, "tau of " + family_node_K(n) + " not pinned: " + to_string(k));
  return *k.lower;
}

}  // namespace bennequin
