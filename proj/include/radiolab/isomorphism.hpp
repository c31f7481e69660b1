#pragma once

// Backtracking isomorphism test for desk-scale graphs. Vertices are first
// split by (degree, distance profile); candidates must then preserve every
// pairwise distance to the vertices already mapped.

#include <algorithm>
#include <map>
#include <vector>

#include "radiolab/budget.hpp"
#include "radiolab/graph.hpp"

namespace radiolab {

struct IsomorphismResult {
  SearchStatus status = SearchStatus::None;
  std::vector<Vertex> mapping;  // mapping[v of g] = vertex of h
  std::uint64_t nodes = 0;
};

namespace detail {

// Degree followed by the count of vertices at each distance (unreachable last).
inline std::vector<std::vector<int>> distance_profiles(const Graph& g, const DistanceMatrix& d) {
  const int n = g.order();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> hist(static_cast<std::size_t>(n) + 2, 0);
    for (Vertex w = 0; w < n; ++w) {
      const int dist = d.at(v, w);
      ++hist[dist == DistanceMatrix::kUnreachable ? static_cast<std::size_t>(n) + 1 : static_cast<std::size_t>(dist)];
    }
    hist.insert(hist.begin(), g.degree(v));
    out[static_cast<std::size_t>(v)] = std::move(hist);
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, const DistanceMatrix& dg, const DistanceMatrix& dh,
            std::vector<int> class_g, std::vector<int> class_h, NodeCounter& counter)
      : g_(g), h_(h), dg_(dg), dh_(dh), class_g_(std::move(class_g)), class_h_(std::move(class_h)), counter_(counter) {
    const int n = g.order();
    map_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
    build_order();
  }

  bool run() { return extend(0); }
  bool timed_out() const { return timed_out_; }
  const std::vector<Vertex>& mapping() const { return map_; }

 private:
  const Graph& g_;
  const Graph& h_;
  const DistanceMatrix& dg_;
  const DistanceMatrix& dh_;
  std::vector<int> class_g_, class_h_;
  NodeCounter& counter_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  bool timed_out_ = false;

  // Rarest class first, then greedily the vertex with most mapped neighbours.
  void build_order() {
    const int n = g_.order();
    std::map<int, int> class_size;
    for (int c : class_g_) ++class_size[c];
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> links(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        const auto key = [&](Vertex x) {
          return std::make_tuple(-links[static_cast<std::size_t>(x)], class_size[class_g_[static_cast<std::size_t>(x)]], x);
        };
        if (key(v) < key(best)) best = v;
      }
      placed[static_cast<std::size_t>(best)] = 1;
      order_.push_back(best);
      for (Vertex w : g_.neighbors(best)) ++links[static_cast<std::size_t>(w)];
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (!counter_.tick()) {
      timed_out_ = true;
      return false;
    }
    const Vertex u = order_[depth];
    for (Vertex cand = 0; cand < h_.order(); ++cand) {
      if (used_[static_cast<std::size_t>(cand)] ||
          class_h_[static_cast<std::size_t>(cand)] != class_g_[static_cast<std::size_t>(u)]) {
        continue;
      }
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const Vertex w = order_[i];
        consistent = dg_.at(u, w) == dh_.at(cand, map_[static_cast<std::size_t>(w)]);
      }
      if (!consistent) continue;
      map_[static_cast<std::size_t>(u)] = cand;
      used_[static_cast<std::size_t>(cand)] = 1;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(cand)] = 0;
      map_[static_cast<std::size_t>(u)] = -1;
      if (timed_out_) return false;
    }
    return false;
  }
};

}  // namespace detail

inline IsomorphismResult are_isomorphic(const Graph& g, const Graph& h, const Deadline& deadline = {}) {
  IsomorphismResult result;
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return result;

  const DistanceMatrix dg = all_pairs_distances(g);
  const DistanceMatrix dh = all_pairs_distances(h);
  const auto pg = detail::distance_profiles(g, dg);
  const auto ph = detail::distance_profiles(h, dh);
  auto sorted_g = pg, sorted_h = ph;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return result;

  std::map<std::vector<int>, int> ids;
  for (const auto& p : sorted_g) ids.emplace(p, static_cast<int>(ids.size()));
  std::vector<int> class_g, class_h;
  for (const auto& p : pg) class_g.push_back(ids.at(p));
  for (const auto& p : ph) class_h.push_back(ids.at(p));

  NodeCounter counter(deadline);
  detail::IsoSearch search(g, h, dg, dh, std::move(class_g), std::move(class_h), counter);
  const bool found = search.run();
  result.nodes = counter.used();
  if (found) {
    result.status = SearchStatus::Found;
    result.mapping = search.mapping();
  } else {
    result.status = search.timed_out() ? SearchStatus::Timeout : SearchStatus::None;
  }
  return result;
}

// True iff mapping is a bijection carrying the edges of g exactly onto those of h.
inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& mapping) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (static_cast<int>(mapping.size()) != g.order()) return false;
  std::vector<char> hit(static_cast<std::size_t>(h.order()), 0);
  for (Vertex v : mapping) {
    if (v < 0 || v >= h.order() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!h.adjacent(mapping[static_cast<std::size_t>(u)], mapping[static_cast<std::size_t>(v)])) return false;
  }
  return true;
}

}  // namespace radiolab
