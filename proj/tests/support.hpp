#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "radiolab/graph.hpp"

namespace testsupport {

using radiolab::Edge;
using radiolab::Graph;
using radiolab::Vertex;

inline std::string data_path(const std::string& rel) { return std::string(RADIOLAB_DATA_DIR) + "/" + rel; }

inline Graph random_graph(int n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Floyd-Warshall with INT_MAX for unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  const int inf = std::numeric_limits<int>::max();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] != inf && d[k][j] != inf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// ---------------------------------------------------------------------------
// Exhaustive small-graph corpus: one representative per isomorphism class.

using Bits = std::uint64_t;  // upper-triangle adjacency, n <= 11

inline int pair_bit(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

inline Bits permuted(Bits g, int n, const std::vector<int>& perm) {
  Bits out = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (g >> pair_bit(u, v) & 1) out |= Bits{1} << pair_bit(perm[u], perm[v]);
  return out;
}

// Smallest image over relabelings that respect an invariant vertex ordering
// (degree, then sorted neighbour degrees); vertices only move within a class.
inline Bits canonical(Bits g, int n) {
  std::vector<int> deg(n, 0);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (g >> pair_bit(u, v) & 1) ++deg[u], ++deg[v];
  std::vector<std::vector<int>> key(n);
  for (int v = 0; v < n; ++v) {
    key[v].push_back(deg[v]);
    std::vector<int> nd;
    for (int u = 0; u < n; ++u)
      if (u != v && (g >> pair_bit(u, v) & 1)) nd.push_back(deg[u]);
    std::sort(nd.begin(), nd.end());
    key[v].insert(key[v].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) ranges of equal keys
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key[order[j]] == key[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  // perm maps old vertex -> new position; enumerate permutations inside blocks.
  Bits best = ~Bits{0};
  std::vector<int> arrangement = order;
  for (auto& [b, e] : blocks) std::sort(arrangement.begin() + b, arrangement.begin() + e);
  std::vector<int> perm(n);
  while (true) {
    for (int i = 0; i < n; ++i) perm[arrangement[i]] = i;
    best = std::min(best, permuted(g, n, perm));
    int k = static_cast<int>(blocks.size()) - 1;
    for (; k >= 0; --k) {
      auto [b, e] = blocks[k];
      if (std::next_permutation(arrangement.begin() + b, arrangement.begin() + e)) break;
    }
    if (k < 0) break;
  }
  return best;
}

inline bool connected_bits(Bits g, int n) {
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (u != v && !seen[u] && (g >> pair_bit(u, v) & 1)) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

inline Graph to_graph(Bits g, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (g >> pair_bit(u, v) & 1) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// All graphs on exactly n vertices up to isomorphism, built by adding a
// vertex with every neighbourhood to each graph on n-1 vertices.
inline std::vector<std::vector<Bits>> all_graph_classes(int max_n) {
  std::vector<std::vector<Bits>> by_order(max_n + 1);
  by_order[0] = {0};
  if (max_n >= 1) by_order[1] = {0};
  for (int n = 2; n <= max_n; ++n) {
    std::set<Bits> seen;
    for (Bits g : by_order[n - 1]) {
      for (Bits mask = 0; mask < (Bits{1} << (n - 1)); ++mask) {
        Bits h = g;
        for (int u = 0; u < n - 1; ++u)
          if (mask >> u & 1) h |= Bits{1} << pair_bit(u, n - 1);
        seen.insert(canonical(h, n));
      }
    }
    by_order[n].assign(seen.begin(), seen.end());
  }
  return by_order;
}

inline std::vector<std::vector<Graph>> connected_graph_corpus(int max_n) {
  const auto classes = all_graph_classes(max_n);
  std::vector<std::vector<Graph>> out(max_n + 1);
  for (int n = 1; n <= max_n; ++n)
    for (Bits g : classes[n])
      if (connected_bits(g, n)) out[n].push_back(to_graph(g, n));
  return out;
}

}  // namespace testsupport
