#include <gtest/gtest.h>

#include <fstream>

#include "radiolab/analyze.hpp"
#include "radiolab/families.hpp"
#include "support.hpp"

using namespace radiolab;
using testsupport::data_path;

namespace {

AnalyzeOptions no_oracle() {
  AnalyzeOptions o;
  o.oracle_vertex_limit = 0;
  return o;
}

// Soundness of a verdict, checked independently of the analyzer.
void expect_sound(const Graph& g, const AnalysisVerdict& v) {
  EXPECT_EQ(v.order, g.order());
  if (v.status == Gracefulness::RadioGraceful) {
    ASSERT_TRUE(v.labeling.has_value());
    EXPECT_EQ(v.labeling->span(), g.order());
    EXPECT_TRUE(verify(g, *v.labeling).ok());
    EXPECT_EQ(v.bounds.lower, g.order());
    EXPECT_EQ(v.bounds.upper, g.order());
  }
  if (v.status == Gracefulness::NotRadioGraceful) {
    EXPECT_GE(v.bounds.lower, g.order() + 1);
    if (v.rule != "exact-oracle") {
      ASSERT_TRUE(v.obstruction.has_value());
      const Graph a = antipodal(g);
      if (v.obstruction->kind == ObstructionKind::AntipodalDisconnected) {
        EXPECT_GE(components(a).size(), 2u);
      } else {
        EXPECT_EQ(find_hamiltonian_path(a).status, SearchStatus::None);
      }
    }
  }
  if (v.bounds.upper) {
    ASSERT_TRUE(v.labeling.has_value());
    EXPECT_EQ(v.labeling->span(), *v.bounds.upper);
    EXPECT_TRUE(verify(g, *v.labeling).ok());
    EXPECT_LE(v.bounds.lower, *v.bounds.upper);
  }
}

// K_{n,n} (points 0..n-1, lines n..2n-1) minus the edges of the given
// cycles, each listed as alternating point and line vertices.
Graph bipartite_minus_two_factor(int n, const std::vector<std::vector<int>>& cycles) {
  std::set<std::pair<int, int>> removed;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      if (a >= n) std::swap(a, b);
      removed.insert({a, b});
    }
  }
  std::vector<Edge> e;
  for (int p = 0; p < n; ++p)
    for (int l = n; l < 2 * n; ++l)
      if (!removed.count({p, l})) e.emplace_back(p, l);
  return Graph::from_edges(2 * n, e);
}

}  // namespace

TEST(Analyze, CompleteBipartiteNotGraceful) {
  for (int n = 2; n <= 6; ++n) {
    const Graph g = complete_bipartite(n, n);
    const auto v = analyze(g, no_oracle());
    EXPECT_EQ(v.status, Gracefulness::NotRadioGraceful);
    EXPECT_EQ(v.rule, "bipartite-even-diameter");
    ASSERT_TRUE(v.obstruction.has_value());
    EXPECT_EQ(v.obstruction->kind, ObstructionKind::AntipodalDisconnected);
    EXPECT_EQ(v.bounds.lower, 2 * n + 1);
    expect_sound(g, v);
  }
}

TEST(Analyze, EvenCyclesNotGraceful) {
  for (int n = 2; n <= 8; ++n) {
    const Graph g = cycle_graph(2 * n);
    const auto v = analyze(g, no_oracle());
    EXPECT_EQ(v.status, Gracefulness::NotRadioGraceful);
    EXPECT_EQ(v.obstruction->kind, ObstructionKind::AntipodalDisconnected);
    expect_sound(g, v);
  }
}

TEST(Analyze, PolarityGraphs) {
  const Graph g = erdos_renyi_polarity(5);
  EXPECT_LE(2 * g.max_degree(), g.order() - 1);
  const auto v = analyze(g);
  EXPECT_EQ(v.status, Gracefulness::RadioGraceful);
  EXPECT_EQ(v.rule, "diameter-2-bounded-degree");
  expect_sound(g, v);
  for (long long q : {2, 3, 4, 7}) {
    const Graph h = erdos_renyi_polarity(q);
    const auto w = analyze(h);
    EXPECT_EQ(w.status, Gracefulness::RadioGraceful) << q;
    expect_sound(h, w);
  }
}

TEST(Analyze, MmsGraph) {
  const Graph g = mms_graph(5);
  const auto v = analyze(g);
  EXPECT_EQ(v.status, Gracefulness::RadioGraceful);
  EXPECT_EQ(v.rule, "diameter-2-bounded-degree");
  EXPECT_EQ(v.labeling->span(), 50);
  expect_sound(g, v);
}

TEST(Analyze, MooreGraphs) {
  for (const Graph& g : {petersen(), hoffman_singleton()}) {
    const auto v = analyze(g);
    EXPECT_EQ(v.status, Gracefulness::RadioGraceful);
    expect_sound(g, v);
  }
}

TEST(Analyze, ProjectivePlaneIncidence) {
  for (long long q : {2, 3, 4, 5}) {
    const Graph g = projective_plane_incidence(q);
    const auto v = analyze(g);
    EXPECT_EQ(v.status, Gracefulness::RadioGraceful);
    EXPECT_EQ(v.rule, "bipartite-diameter-3-antipodal-path");
    EXPECT_EQ(v.labeling->span(), 2 * (q * q + q + 1));
    expect_sound(g, v);
  }
}

TEST(Analyze, QuadranglesCloseTheRadioNumber) {
  for (const auto& [file, rn] : {std::pair{"cages/gq2.el", 31}, std::pair{"cages/gq3.el", 81}}) {
    std::ifstream in(data_path(file));
    const Graph g = load_edge_list(in);
    const auto v = analyze(g);
    EXPECT_EQ(v.status, Gracefulness::NotRadioGraceful);
    EXPECT_EQ(v.rule, "bipartite-even-diameter");
    EXPECT_EQ(v.bounds.lower, rn);
    EXPECT_EQ(v.bounds.upper, rn);
    expect_sound(g, v);
  }
}

TEST(Analyze, HexagonLowerBound) {
  std::ifstream in(data_path("cages/gh2.el"));
  const Graph g = load_edge_list(in);
  const auto v = analyze(g);
  EXPECT_EQ(v.status, Gracefulness::NotRadioGraceful);
  EXPECT_EQ(v.bounds.lower, 127);
  expect_sound(g, v);
}

TEST(Analyze, FourCycleUsesOracleForUpperBound) {
  const auto v = analyze(cycle_graph(4));
  EXPECT_EQ(v.status, Gracefulness::NotRadioGraceful);
  EXPECT_EQ(v.bounds.lower, 5);
  EXPECT_EQ(v.bounds.upper, 5);
}

TEST(Analyze, RegularBipartiteMinusMatching) {
  for (int n = 3; n <= 7; ++n) {
    std::vector<std::vector<int>> matching;
    for (int i = 0; i < n; ++i) matching.push_back({i, n + i});
    // Each 2-cycle removes a single edge.
    const Graph g = bipartite_minus_two_factor(n, matching);
    ASSERT_EQ(regularity(g), n - 1);
    const auto v = analyze(g, no_oracle());
    EXPECT_EQ(v.status, Gracefulness::NotRadioGraceful);
    EXPECT_EQ(v.rule, "regular-bipartite-(n-1)");
    EXPECT_EQ(v.obstruction->antipodal_components, n);
    expect_sound(g, v);
  }
}

TEST(Analyze, RegularBipartiteMinusTwoFactor) {
  // One Hamiltonian cycle removed: A(G) is a single cycle.
  for (int n = 5; n <= 7; ++n) {
    std::vector<int> cycle;
    for (int i = 0; i < n; ++i) {
      cycle.push_back(i);
      cycle.push_back(n + i);
    }
    const Graph g = bipartite_minus_two_factor(n, {cycle});
    ASSERT_EQ(regularity(g), n - 2);
    const auto v = analyze(g, no_oracle());
    EXPECT_EQ(v.status, Gracefulness::RadioGraceful) << n;
    EXPECT_EQ(v.rule, "regular-bipartite-(n-2)");
    expect_sound(g, v);
  }
  // A 4-cycle and a 6-cycle: A(G) has two components.
  const Graph g = bipartite_minus_two_factor(5, {{0, 5, 1, 6}, {2, 7, 3, 8, 4, 9}});
  ASSERT_EQ(regularity(g), 3);
  const auto v = analyze(g, no_oracle());
  EXPECT_EQ(v.status, Gracefulness::NotRadioGraceful);
  EXPECT_EQ(v.rule, "regular-bipartite-(n-2)");
  EXPECT_EQ(v.obstruction->antipodal_components, 2);
  expect_sound(g, v);
}

TEST(Analyze, SmallRegularBipartiteGoesToOracle) {
  // C_8 is 2-regular bipartite on 2*4 vertices but has diameter 4.
  const auto v = analyze(cycle_graph(8));
  EXPECT_NE(v.rule, "regular-bipartite-(n-2)");
}

TEST(Analyze, ComplementFamilies) {
  std::vector<Graph> graphs;
  for (int m = 5; m <= 12; ++m) graphs.push_back(complement(cycle_graph(m)));
  for (int n = 5; n <= 12; ++n) graphs.push_back(complement(path_graph(n)));
  for (int m = 3; m <= 11; ++m)
    for (int n = 1; m + n <= 12; ++n)
      if (m + n >= 7) graphs.push_back(complement(tadpole(m, n)));
  for (const Graph& g : graphs) {
    const auto v = analyze(g, no_oracle());
    EXPECT_EQ(v.status, Gracefulness::RadioGraceful) << g.order();
    expect_sound(g, v);
  }
}

TEST(Analyze, PentagonAndItsComplement) {
  const Graph c5 = cycle_graph(5);
  for (const Graph& g : {c5, complement(c5)}) {
    const auto v = analyze(g, no_oracle());
    EXPECT_EQ(v.status, Gracefulness::RadioGraceful);
    expect_sound(g, v);
  }
}

TEST(Analyze, UntraceableAntipodalGraph) {
  // The spider with three legs of length 2 has three leaves, so no
  // Hamiltonian path, and its complement has diameter 2.
  const Graph spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  const Graph g = complement(spider);
  ASSERT_EQ(diameter(g), 2);
  const auto v = analyze(g, no_oracle());
  EXPECT_EQ(v.status, Gracefulness::NotRadioGraceful);
  EXPECT_EQ(v.rule, "antipodal-not-traceable");
  EXPECT_EQ(v.obstruction->kind, ObstructionKind::NoHamiltonianPath);
  expect_sound(g, v);
}

TEST(Analyze, DisconnectedInput) {
  EXPECT_THROW(analyze(Graph::from_edges(4, {{0, 1}, {2, 3}})), Disconnected);
}

TEST(Analyze, BudgetExhaustionIsUnknown) {
  AnalyzeOptions o;
  o.deadline.max_nodes = 1;
  o.oracle_vertex_limit = 0;
  o.cage_labelings = false;
  const Graph g = complement(cycle_graph(40));
  const auto v = analyze(g, o);
  if (v.status == Gracefulness::Unknown) {
    EXPECT_EQ(v.bounds.lower, 40);
    EXPECT_TRUE(v.bounds.upper.has_value());
  } else {
    expect_sound(g, v);
  }
}

TEST(Analyze, AgreesWithExactOracleOnAllSmallGraphs) {
  const auto corpus = testsupport::connected_graph_corpus(8);
  int definite = 0, total = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : corpus[n]) {
      ++total;
      const auto v = analyze(g, no_oracle());
      expect_sound(g, v);
      if (v.status == Gracefulness::Unknown) continue;
      ++definite;
      const int rn = radio_number_exact(g).radio_number;
      ASSERT_EQ(v.status == Gracefulness::RadioGraceful, rn == n);
      ASSERT_LE(v.bounds.lower, rn);
      if (v.bounds.upper) { ASSERT_GE(*v.bounds.upper, rn); }
    }
  }
  EXPECT_EQ(total, 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117);
  EXPECT_GT(definite, total / 2);
}

TEST(Analyze, OracleFallbackClosesSmallGraphs) {
  const auto corpus = testsupport::connected_graph_corpus(6);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : corpus[n]) {
      const auto v = analyze(g);
      ASSERT_NE(v.status, Gracefulness::Unknown);
      ASSERT_TRUE(v.bounds.closed());
      ASSERT_EQ(*v.bounds.upper, radio_number_exact(g).radio_number);
    }
  }
}
