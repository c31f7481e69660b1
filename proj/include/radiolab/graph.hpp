#pragma once

// Simple undirected graphs on vertices 0..n-1 and the metric machinery the
// labeling code runs on: BFS distances, diameter, girth, antipodal graph,
// complement, bipartition, components and the Moore bounds.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "radiolab/errors.hpp"

namespace radiolab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Part labels for incidence graphs.
inline constexpr int kPointPart = 0;
inline constexpr int kLinePart = 1;

class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse; a self-loop throws LoopError.
  static Graph from_edges(int order, std::span<const Edge> edges) {
    if (order < 0) throw BadParams("negative vertex count");
    Graph g;
    g.n_ = order;
    g.matrix_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0);
    g.adj_.assign(static_cast<std::size_t>(order), {});
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= order || v >= order) {
        throw BadParams("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
      }
      if (u == v) throw LoopError(u);
      if (g.matrix_[g.slot(u, v)]) continue;
      g.matrix_[g.slot(u, v)] = 1;
      g.matrix_[g.slot(v, u)] = 1;
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      g.adj_[static_cast<std::size_t>(v)].push_back(u);
      ++g.edge_count_;
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    return g;
  }

  static Graph from_edges(int order, const std::vector<Edge>& edges) {
    return from_edges(order, std::span<const Edge>(edges));
  }

  // Same graph carrying a point/line labeling; every edge must join distinct parts.
  Graph with_parts(std::vector<int> parts) const {
    if (static_cast<int>(parts.size()) != n_) throw BadParams("part vector has wrong length");
    for (int p : parts) {
      if (p != kPointPart && p != kLinePart) throw BadParams("part labels must be 0 or 1");
    }
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (parts[static_cast<std::size_t>(u)] == parts[static_cast<std::size_t>(v)]) {
          throw BadParams("edge " + std::to_string(u) + "-" + std::to_string(v) + " lies inside one part");
        }
      }
    }
    Graph g = *this;
    g.parts_ = std::move(parts);
    return g;
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return matrix_[slot(u, v)] != 0; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  const std::optional<std::vector<int>>& parts() const { return parts_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  // Structural equality; part labels are not compared.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.matrix_ == b.matrix_; }

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Vertex>> adj_;
  std::optional<std::vector<int>> parts_;

  std::size_t slot(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
};

class DistanceMatrix {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(int order)
      : n_(order), data_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), kUnreachable) {}

  int order() const { return n_; }
  int at(Vertex u, Vertex v) const { return data_[slot(u, v)]; }
  void set(Vertex u, Vertex v, int d) { data_[slot(u, v)] = d; }
  bool reachable(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }

  bool connected() const {
    return std::none_of(data_.begin(), data_.end(), [](int d) { return d == kUnreachable; });
  }

  // Largest finite entry (0 for the empty and one-vertex graphs).
  int max_finite() const {
    int best = 0;
    for (int d : data_) {
      if (d != kUnreachable) best = std::max(best, d);
    }
    return best;
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> data_;

  std::size_t slot(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
};

inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), DistanceMatrix::kUnreachable);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == DistanceMatrix::kUnreachable) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.order(); ++t) d.set(s, t, row[static_cast<std::size_t>(t)]);
  }
  return d;
}

inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

inline int diameter(const DistanceMatrix& d) {
  if (!d.connected()) throw Disconnected();
  return d.max_finite();
}

inline int diameter(const Graph& g) {
  if (!is_connected(g)) throw Disconnected();
  return all_pairs_distances(g).max_finite();
}

// Length of a shortest cycle, or nullopt for a forest.
inline std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n), parent(n);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const auto ui = static_cast<std::size_t>(u);
      if (best && 2 * dist[ui] + 1 >= *best) break;
      for (Vertex w : g.neighbors(u)) {
        const auto wi = static_cast<std::size_t>(w);
        if (dist[wi] < 0) {
          dist[wi] = dist[ui] + 1;
          parent[wi] = u;
          queue.push_back(w);
        } else if (parent[ui] != w) {
          const int len = dist[ui] + dist[wi] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges);
}

inline Graph antipodal(const Graph& g, const DistanceMatrix& d) {
  const int diam = diameter(d);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (d.at(u, v) == diam) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges);
}

// u ~ v iff d(u, v) = diam(g).
inline Graph antipodal(const Graph& g) { return antipodal(g, all_pairs_distances(g)); }

// Subgraph on the listed vertices, renumbered by position in the list.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    position[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      const int j = position[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

// 2-coloring with color 0 on the smallest vertex of each component, or
// nullopt when an odd cycle exists.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        const int want = 1 - color[static_cast<std::size_t>(u)];
        if (cw < 0) {
          cw = want;
          queue.push_back(w);
        } else if (cw != want) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

// Part labels carried by the graph, else a computed bipartition.
inline std::optional<std::vector<int>> parts_of(const Graph& g) {
  if (g.parts()) return g.parts();
  return bipartition(g);
}

// Common degree, or nullopt if degrees differ.
inline std::optional<int> regularity(const Graph& g) {
  if (g.order() == 0) return 0;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

// 1 + delta * sum_{i<D} (delta-1)^i
inline std::int64_t moore_bound(std::int64_t delta, std::int64_t diam) {
  if (delta < 1 || diam < 1) throw BadParams("Moore bound needs delta >= 1 and D >= 1");
  std::int64_t sum = 0, term = 1;
  for (std::int64_t i = 0; i < diam; ++i) {
    sum += term;
    term *= (delta - 1);
  }
  return 1 + delta * sum;
}

// 2 * sum_{i<D} (delta-1)^i
inline std::int64_t bipartite_moore_bound(std::int64_t delta, std::int64_t diam) {
  if (delta < 1 || diam < 1) throw BadParams("Moore bound needs delta >= 1 and D >= 1");
  std::int64_t sum = 0, term = 1;
  for (std::int64_t i = 0; i < diam; ++i) {
    sum += term;
    term *= (delta - 1);
  }
  return 2 * sum;
}

}  // namespace radiolab
