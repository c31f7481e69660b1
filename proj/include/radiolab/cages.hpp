#pragma once

// Span-(2n+1) radio labelings of bipartite cages of even diameter D = 2l
// built from generalized polygons (D = 4 quadrangles, D = 6 hexagons).
//
// Points get 1..n along the l-th power of a Hamiltonian cycle p_1..p_n of
// the point component of the antipodal graph; lines get n+2..2n+1 along the
// same kind of cycle of the line component, rotated to start at a gluing
// index t. The index must keep every point/line pair whose labels differ by
// 2+k+j (line l_{t+k}, point p_{n-j}) at distance >= D - 1 - k - j.

#include <optional>
#include <string>
#include <vector>

#include "radiolab/budget.hpp"
#include "radiolab/errors.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/hamsearch.hpp"
#include "radiolab/radio.hpp"

namespace radiolab {

// Cycle orderings in vertex ids of the cage itself.
struct CageCycles {
  std::vector<Vertex> points;
  std::vector<Vertex> lines;
};

struct CageLabeling {
  RadioLabeling labeling;
  CageCycles cycles;
  int gluing_index = 0;  // 1-based t
  int half_order = 0;    // n = |P| = |L|
};

namespace detail {

struct CageShape {
  DistanceMatrix distances;
  std::vector<Vertex> points;
  std::vector<Vertex> lines;
};

inline CageShape check_cage_shape(const Graph& g, int diam) {
  const auto parts = parts_of(g);
  if (!parts) throw PreconditionFailed("graph is not bipartite");
  if (!is_connected(g)) throw PreconditionFailed("graph is disconnected");
  CageShape shape;
  for (Vertex v = 0; v < g.order(); ++v) {
    ((*parts)[static_cast<std::size_t>(v)] == kPointPart ? shape.points : shape.lines).push_back(v);
  }
  if (shape.points.size() != shape.lines.size() || shape.points.empty()) {
    throw PreconditionFailed("parts differ in size");
  }
  const auto r = regularity(g);
  if (!r) throw PreconditionFailed("graph is not regular");
  if (*r < 3) throw PreconditionFailed("degree " + std::to_string(*r) + " is below 3");
  shape.distances = all_pairs_distances(g);
  const int actual = diameter(shape.distances);
  if (actual != diam) {
    throw PreconditionFailed("expected diameter " + std::to_string(diam) + ", got " + std::to_string(actual));
  }
  const auto gi = girth(g);
  if (!gi || *gi != 2 * diam) {
    throw PreconditionFailed("expected girth " + std::to_string(2 * diam) + ", got " +
                             (gi ? std::to_string(*gi) : std::string("none")));
  }
  return shape;
}

// Antipodal adjacency restricted to one part.
inline Graph antipodal_part(const DistanceMatrix& d, int diam, const std::vector<Vertex>& part) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < part.size(); ++i) {
    for (std::size_t j = i + 1; j < part.size(); ++j) {
      if (d.at(part[i], part[j]) == diam) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph::from_edges(static_cast<int>(part.size()), edges);
}

inline std::vector<Vertex> cycle_for_part(const DistanceMatrix& d, int diam, const std::vector<Vertex>& part,
                                          const std::optional<std::vector<Vertex>>& supplied, int power,
                                          const Deadline& deadline, const char* name) {
  const Graph sub = antipodal_part(d, diam, part);
  std::vector<int> local(static_cast<std::size_t>(d.order()), -1);
  for (std::size_t i = 0; i < part.size(); ++i) local[static_cast<std::size_t>(part[i])] = static_cast<int>(i);

  if (supplied) {
    PathCertificate cert{{}, CertificateKind::CyclePower, power};
    for (Vertex v : *supplied) {
      if (v < 0 || v >= d.order() || local[static_cast<std::size_t>(v)] < 0) {
        throw BadCertificate(std::string("supplied ") + name + " cycle leaves its part");
      }
      cert.ordering.push_back(local[static_cast<std::size_t>(v)]);
    }
    bool valid = false;
    try {
      valid = verify_certificate(sub, cert);
    } catch (const BadPermutation& e) {
      throw BadCertificate(std::string("supplied ") + name + " cycle: " + e.what());
    }
    if (!valid) {
      throw BadCertificate(std::string("supplied ") + name + " cycle is not a power-" + std::to_string(power) +
                           " Hamiltonian cycle");
    }
    return *supplied;
  }

  const SearchResult found = find_cycle_power(sub, power, deadline);
  if (found.status == SearchStatus::Timeout) {
    throw TimeoutError(std::string("search for the ") + name + " cycle ran out of budget");
  }
  if (found.status == SearchStatus::None) {
    throw ConstructionFailed(std::string("the ") + name + " component has no power-" + std::to_string(power) +
                             " Hamiltonian cycle");
  }
  std::vector<Vertex> out;
  for (Vertex local_v : found.certificate->ordering) out.push_back(part[static_cast<std::size_t>(local_v)]);
  return out;
}

inline CageLabeling glue_cage(const Graph& g, int diam, const Deadline& deadline,
                              const std::optional<CageCycles>& supplied) {
  CageShape shape = check_cage_shape(g, diam);
  const DistanceMatrix& d = shape.distances;
  const int power = diam / 2;

  CageLabeling out;
  const auto sp = supplied ? std::optional<std::vector<Vertex>>(supplied->points) : std::nullopt;
  const auto sl = supplied ? std::optional<std::vector<Vertex>>(supplied->lines) : std::nullopt;
  out.cycles.points = cycle_for_part(d, diam, shape.points, sp, power, deadline, "point");
  out.cycles.lines = cycle_for_part(d, diam, shape.lines, sl, power, deadline, "line");

  const auto& p = out.cycles.points;
  const auto& l = out.cycles.lines;
  const int n = static_cast<int>(p.size());
  out.half_order = n;

  const auto line_at = [&](int t, int k) { return l[static_cast<std::size_t>((t - 1 + k) % n)]; };
  const auto glues = [&](int t) {
    for (int k = 0; k < diam; ++k) {
      for (int j = 0; j < diam && j < n; ++j) {
        const int need = diam - 1 - k - j;
        if (need < 2) continue;
        if (d.at(line_at(t, k), p[static_cast<std::size_t>(n - 1 - j)]) < need) return false;
      }
    }
    return true;
  };
  int t = 0;
  for (int cand = 1; cand <= n - 1; ++cand) {
    if (glues(cand)) {
      t = cand;
      break;
    }
  }
  if (t == 0) throw NoGluingIndex();
  out.gluing_index = t;

  std::vector<int> labels(static_cast<std::size_t>(g.order()), 0);
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i + 1;
  for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(line_at(t, k))] = n + 2 + k;
  out.labeling = RadioLabeling(std::move(labels));
  if (!verify(g, d, out.labeling).ok()) throw std::logic_error("glued cage labeling failed verification");
  return out;
}

}  // namespace detail

// Bipartite, diameter 4, girth 8, regular with equal parts. Span 2n+1.
inline CageLabeling label_quadrangle_cage(const Graph& g, const Deadline& deadline = {},
                                          const std::optional<CageCycles>& supplied = std::nullopt) {
  return detail::glue_cage(g, 4, deadline, supplied);
}

// Bipartite, diameter 6, girth 12, regular with equal parts. Span 2n+1.
// Throws TimeoutError when the 4th-power cycle search runs out of budget.
inline CageLabeling label_hexagon_cage(const Graph& g, const Deadline& deadline = {},
                                       const std::optional<CageCycles>& supplied = std::nullopt) {
  return detail::glue_cage(g, 6, deadline, supplied);
}

}  // namespace radiolab
