#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bennequin/tau.hpp"

using namespace bennequin;

TEST(Tau, TorusLeaves) {
  EXPECT_EQ(torus_tau_2(-3), -1);
  EXPECT_EQ(torus_tau_2(-5), -2);
  EXPECT_EQ(torus_tau_2(1), 0);
  EXPECT_EQ(torus_tau_2(-1), 0);
  EXPECT_EQ(torus_tau_2(3), 1);
  EXPECT_THROW(torus_tau_2(4), Error);
}

TEST(Tau, SingleNode) {
  TauConstraintGraph g;
  g.add_node("K", -3);
  EXPECT_EQ(propagate(g).at("K"), TauInterval::exactly(-3));
  TauConstraintGraph free;
  free.add_node("U");
  EXPECT_EQ(propagate(free).at("U"), TauInterval::unbounded());
}

TEST(Tau, Contradiction) {
  TauConstraintGraph g;
  g.add_node("A", 0);
  g.add_node("B", 5);
  g.add_edge("A", "B");
  try {
    propagate(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTauContradiction);
    EXPECT_NE(std::string(e.what()).find("A->B"), std::string::npos);
  }
}

TEST(Tau, GraphErrors) {
  TauConstraintGraph g;
  g.add_node("A");
  EXPECT_THROW(g.add_node("A"), Error);
  try {
    g.add_edge("A", "Z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownNode);
  }
}

TEST(Tau, OneSided) {
  TauConstraintGraph g;
  g.add_node("A", 2);
  g.add_node("B");
  g.add_node("C");
  g.add_edge("A", "B");
  g.add_edge("C", "A");
  const auto r = propagate(g);
  EXPECT_EQ(r.at("B"), (TauInterval{2, 3}));
  EXPECT_EQ(r.at("C"), (TauInterval{1, 2}));
}

TEST(Tau, Family) {
  for (int n = 1; n <= 100; ++n) {
    EXPECT_EQ(family_tau(n), -n);
    const auto partial = propagate(family_tau_graph(n, false));
    EXPECT_EQ(partial.at(family_node_K(n)), (TauInterval{-n, -n + 1}));
    const auto full = propagate(family_tau_graph(n));
    EXPECT_EQ(full.at(family_node_K(n)), TauInterval::exactly(-n));
    EXPECT_EQ(full.at(family_node_R(n)), TauInterval::exactly(-n));
  }
  EXPECT_EQ(family_node_T(1), "T_{2,-5}");
}

TEST(Tau, ConfluentAndMonotone) {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    TauConstraintGraph g;
    const int n = 2 + trial % 6;
    std::uniform_int_distribution<int> node(0, n - 1), val(-3, 3);
    for (int i = 0; i < n; ++i) {
      if (i == 0 || std::bernoulli_distribution(0.3)(rng))
        g.add_node("v" + std::to_string(i), val(rng));
      else
        g.add_node("v" + std::to_string(i));
    }
    for (int e = 0; e < n; ++e) {
      const int a = node(rng), b = node(rng);
      if (a != b) g.add_edge("v" + std::to_string(a), "v" + std::to_string(b));
    }
    std::vector<std::size_t> order(g.edges().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::optional<std::map<std::string, TauInterval>> first;
    bool contradicted = false;
    for (int k = 0; k < 5; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      try {
        auto r = propagate(g, order);
        ASSERT_FALSE(contradicted);
        if (first) {
          EXPECT_EQ(r, *first);
        }
        first = r;
        for (const auto& nd : g.nodes()) {
          if (nd.tau) {
            EXPECT_EQ(r.at(nd.name), TauInterval::exactly(*nd.tau));
          }
        }
        for (const auto& [a, b] : g.edges()) {
          const auto& ia = r.at(g.nodes()[a].name);
          const auto& ib = r.at(g.nodes()[b].name);
          if (ia.lower && ib.lower) {
            EXPECT_LE(*ia.lower, *ib.lower);
          }
          if (ia.upper && ib.upper) {
            EXPECT_LE(*ib.upper, *ia.upper + 1);
          }
        }
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kTauContradiction);
        ASSERT_FALSE(first);
        contradicted = true;
      }
    }
  }
}

TEST(Tau, IntervalText) {
  EXPECT_EQ(to_string(TauInterval{-2, std::nullopt}), "[-2, +inf]");
  EXPECT_EQ(to_string(TauInterval::exactly(1)), "[1, 1]");
  EXPECT_TRUE((TauInterval{3, 1}).empty());
}
