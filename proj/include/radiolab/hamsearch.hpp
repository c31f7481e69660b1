#pragma once

// Exact, node-budgeted searches for Hamiltonian paths and for l-th powers of
// Hamiltonian cycles, certificate checking, and the degree conditions that
// guarantee such structures.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "radiolab/budget.hpp"
#include "radiolab/errors.hpp"
#include "radiolab/graph.hpp"

namespace radiolab {

enum class CertificateKind { Path, CyclePower };

// kind Path: entries within `power` positions of each other are adjacent.
// kind CyclePower: the same, measured cyclically.
struct PathCertificate {
  std::vector<Vertex> ordering;
  CertificateKind kind = CertificateKind::Path;
  int power = 1;
};

struct SearchResult {
  SearchStatus status = SearchStatus::None;
  std::optional<PathCertificate> certificate;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::Found; }
};

inline bool verify_certificate(const Graph& g, const PathCertificate& cert) {
  const int n = g.order();
  if (static_cast<int>(cert.ordering.size()) != n) {
    throw BadPermutation("ordering has " + std::to_string(cert.ordering.size()) + " entries for " +
                         std::to_string(n) + " vertices");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : cert.ordering) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw BadPermutation("ordering is not a permutation of the vertices");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  if (cert.power < 1) return false;
  const auto& o = cert.ordering;
  if (cert.kind == CertificateKind::Path) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n && j - i <= cert.power; ++j) {
        if (!g.adjacent(o[static_cast<std::size_t>(i)], o[static_cast<std::size_t>(j)])) return false;
      }
    }
    return true;
  }
  if (n < 3) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int gap = std::min(j - i, n - (j - i));
      if (gap <= cert.power && !g.adjacent(o[static_cast<std::size_t>(i)], o[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {

// Vertices by increasing degree, ties by index.
inline std::vector<Vertex> by_degree(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  return order;
}

class PathSearch {
 public:
  PathSearch(const Graph& g, NodeCounter& counter) : g_(g), counter_(counter) {
    const auto n = static_cast<std::size_t>(g.order());
    used_.assign(n, 0);
    free_deg_.resize(n);
    for (Vertex v = 0; v < g.order(); ++v) free_deg_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  bool from(Vertex start) {
    place(start);
    if (extend()) return true;
    unplace(start);
    return false;
  }

  bool timed_out() const { return timed_out_; }
  const std::vector<Vertex>& path() const { return path_; }

 private:
  const Graph& g_;
  NodeCounter& counter_;
  std::vector<Vertex> path_;
  std::vector<char> used_;
  std::vector<int> free_deg_;  // unused neighbours of each vertex
  bool timed_out_ = false;

  void place(Vertex v) {
    used_[static_cast<std::size_t>(v)] = 1;
    path_.push_back(v);
    for (Vertex w : g_.neighbors(v)) --free_deg_[static_cast<std::size_t>(w)];
  }

  void unplace(Vertex v) {
    for (Vertex w : g_.neighbors(v)) ++free_deg_[static_cast<std::size_t>(w)];
    path_.pop_back();
    used_[static_cast<std::size_t>(v)] = 0;
  }

  // Every unused vertex must still be enterable, and at most one of them
  // may be forced to be the final vertex.
  bool feasible(Vertex end) const {
    const int remaining = g_.order() - static_cast<int>(path_.size());
    int terminal = 0;
    for (Vertex w = 0; w < g_.order(); ++w) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      const int inner = free_deg_[static_cast<std::size_t>(w)];
      const int avail = inner + (g_.adjacent(end, w) ? 1 : 0);
      if (avail == 0) return false;
      if (avail == 1) {
        if (inner == 0 && remaining > 1) return false;
        if (++terminal > 1) return false;
      }
    }
    return true;
  }

  bool extend() {
    if (static_cast<int>(path_.size()) == g_.order()) return true;
    if (!counter_.tick()) {
      timed_out_ = true;
      return false;
    }
    const Vertex end = path_.back();
    if (!feasible(end)) return false;
    std::vector<Vertex> cands;
    for (Vertex w : g_.neighbors(end)) {
      if (!used_[static_cast<std::size_t>(w)]) cands.push_back(w);
    }
    std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
      return free_deg_[static_cast<std::size_t>(a)] < free_deg_[static_cast<std::size_t>(b)];
    });
    for (Vertex w : cands) {
      place(w);
      if (extend()) return true;
      unplace(w);
      if (timed_out_) return false;
    }
    return false;
  }
};

class CyclePowerSearch {
 public:
  CyclePowerSearch(const Graph& g, int power, NodeCounter& counter) : g_(g), power_(power), counter_(counter) {
    const auto n = static_cast<std::size_t>(g.order());
    used_.assign(n, 0);
    free_deg_.resize(n);
    for (Vertex v = 0; v < g.order(); ++v) free_deg_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  bool from(Vertex start) {
    place(start);
    return extend();
  }

  bool timed_out() const { return timed_out_; }
  const std::vector<Vertex>& order() const { return order_; }

 private:
  const Graph& g_;
  int power_;
  NodeCounter& counter_;
  std::vector<Vertex> order_;
  std::vector<char> used_;
  std::vector<int> free_deg_;
  bool timed_out_ = false;

  void place(Vertex v) {
    used_[static_cast<std::size_t>(v)] = 1;
    order_.push_back(v);
    for (Vertex w : g_.neighbors(v)) --free_deg_[static_cast<std::size_t>(w)];
  }

  void unplace(Vertex v) {
    for (Vertex w : g_.neighbors(v)) ++free_deg_[static_cast<std::size_t>(w)];
    order_.pop_back();
    used_[static_cast<std::size_t>(v)] = 0;
  }

  // Adjacent to every placed vertex within cyclic distance `power` of slot i,
  // including the wrap-around to the first vertices near the end.
  bool fits(Vertex cand, int i) const {
    const int n = g_.order();
    for (int j = std::max(0, i - power_); j < i; ++j) {
      if (!g_.adjacent(cand, order_[static_cast<std::size_t>(j)])) return false;
    }
    for (int j = 0; j < i - power_ && (n - i) + j <= power_; ++j) {
      if (!g_.adjacent(cand, order_[static_cast<std::size_t>(j)])) return false;
    }
    return true;
  }

  bool extend() {
    const int i = static_cast<int>(order_.size());
    if (i == g_.order()) return true;
    if (!counter_.tick()) {
      timed_out_ = true;
      return false;
    }
    std::vector<Vertex> cands;
    const Vertex last = order_.back();
    for (Vertex w : g_.neighbors(last)) {
      if (!used_[static_cast<std::size_t>(w)] && fits(w, i)) cands.push_back(w);
    }
    std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
      return free_deg_[static_cast<std::size_t>(a)] < free_deg_[static_cast<std::size_t>(b)];
    });
    for (Vertex w : cands) {
      place(w);
      if (extend()) return true;
      unplace(w);
      if (timed_out_) return false;
    }
    return false;
  }
};

}  // namespace detail

inline SearchResult find_hamiltonian_path(const Graph& g, const Deadline& deadline = {}) {
  SearchResult result;
  const int n = g.order();
  if (n <= 1) {
    result.status = SearchStatus::Found;
    result.certificate = PathCertificate{std::vector<Vertex>(static_cast<std::size_t>(n), 0), CertificateKind::Path, 1};
    return result;
  }
  if (!is_connected(g)) return result;

  // A degree-1 vertex must be an endpoint, so starting there is exhaustive.
  std::vector<Vertex> starts = detail::by_degree(g);
  const auto leaves = std::count_if(starts.begin(), starts.end(), [&](Vertex v) { return g.degree(v) == 1; });
  if (leaves > 2) return result;
  if (leaves > 0) starts.resize(static_cast<std::size_t>(leaves));

  NodeCounter counter(deadline);
  for (Vertex s : starts) {
    detail::PathSearch search(g, counter);
    if (search.from(s)) {
      result.status = SearchStatus::Found;
      result.certificate = PathCertificate{search.path(), CertificateKind::Path, 1};
      result.nodes = counter.used();
      return result;
    }
    if (search.timed_out()) {
      result.status = SearchStatus::Timeout;
      result.nodes = counter.used();
      return result;
    }
  }
  result.nodes = counter.used();
  return result;
}

// Cyclic ordering in which every vertex is adjacent to the `power` vertices
// on either side of it.
inline SearchResult find_cycle_power(const Graph& g, int power, const Deadline& deadline = {}) {
  if (power < 1) throw BadParams("cycle power must be >= 1");
  SearchResult result;
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return result;
  if (g.min_degree() < std::min(2 * power, n - 1)) return result;

  // Every vertex lies on the cycle, so one start suffices.
  const Vertex start = detail::by_degree(g).front();
  NodeCounter counter(deadline);
  detail::CyclePowerSearch search(g, power, counter);
  const bool found = search.from(start);
  result.nodes = counter.used();
  if (found) {
    result.status = SearchStatus::Found;
    result.certificate = PathCertificate{search.order(), CertificateKind::CyclePower, power};
  } else if (search.timed_out()) {
    result.status = SearchStatus::Timeout;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Degree conditions

struct ConditionResult {
  std::string name;
  bool applicable = true;
  bool holds = false;
  std::string detail;
};

struct SufficientConditionsReport {
  int order = 0;
  int min_degree = 0;
  std::vector<ConditionResult> conditions;

  const ConditionResult* find(const std::string& name) const {
    for (const auto& c : conditions) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

// delta >= (n-1)/2 gives a Hamiltonian path.
inline bool dirac_path_condition(std::int64_t min_degree, std::int64_t n) { return 2 * min_degree >= n - 1; }

// delta >= 5n/7 gives the square of a Hamiltonian cycle.
inline bool fan_haggkvist_condition(std::int64_t min_degree, std::int64_t n) { return 7 * min_degree >= 5 * n; }

// delta >= (4l-1)n/(4l) gives the l-th power of a Hamiltonian cycle.
inline bool cycle_power_condition(std::int64_t min_degree, std::int64_t n, std::int64_t power) {
  return 4 * power * min_degree >= (4 * power - 1) * n;
}

// r-regular bipartite with parts of size m < 2r gives a Hamiltonian path.
inline bool regular_bipartite_path_condition(std::int64_t r, std::int64_t part_size) { return part_size < 2 * r; }

inline SufficientConditionsReport sufficient_conditions(const Graph& g, int max_power = 4) {
  SufficientConditionsReport report;
  const int n = g.order();
  const int delta = g.min_degree();
  report.order = n;
  report.min_degree = delta;
  const auto frac = [](std::int64_t a, std::int64_t b) { return std::to_string(a) + "/" + std::to_string(b); };

  report.conditions.push_back({"dirac", true, dirac_path_condition(delta, n),
                               "min degree " + std::to_string(delta) + " vs (n-1)/2 = " + frac(n - 1, 2)});

  ConditionResult moon{"moon-moser", false, false, "not a regular bipartite graph with equal parts"};
  const auto r = regularity(g);
  const auto parts = bipartition(g);
  if (r && parts && n > 0) {
    const auto points = std::count(parts->begin(), parts->end(), kPointPart);
    if (2 * points == n) {
      moon.applicable = true;
      moon.holds = regular_bipartite_path_condition(*r, points);
      moon.detail = "parts of size " + std::to_string(points) + " vs 2r = " + std::to_string(2 * *r);
    }
  }
  report.conditions.push_back(moon);

  report.conditions.push_back({"fan-haggkvist", true, fan_haggkvist_condition(delta, n),
                               "min degree " + std::to_string(delta) + " vs 5n/7 = " + frac(5LL * n, 7)});
  for (int l = 1; l <= max_power; ++l) {
    report.conditions.push_back(
        {"cycle-power-" + std::to_string(l), true, cycle_power_condition(delta, n, l),
         "min degree " + std::to_string(delta) + " vs " + frac((4LL * l - 1) * n, 4LL * l)});
  }
  return report;
}

}  // namespace radiolab
