#pragma once

// Radio labelings: f(u) != f(v) and |f(u) - f(v)| + d(u, v) >= diam + 1 for
// every pair of distinct vertices. Labels start at 1; a labeling is graceful
// when its span (largest label) equals the vertex count.

#include <algorithm>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "radiolab/errors.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/hamsearch.hpp"

namespace radiolab {

class RadioLabeling {
 public:
  RadioLabeling() = default;

  // Labels indexed by vertex; must be positive and pairwise distinct.
  explicit RadioLabeling(std::vector<int> labels) : labels_(std::move(labels)) {
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() < 1) throw BadParams("radio labels must be positive");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw NotInjective("two vertices share a label");
    }
    span_ = sorted.empty() ? 0 : sorted.back();
  }

  // Vertex at position i of the ordering gets label i + 1.
  static RadioLabeling from_ordering(std::span<const Vertex> ordering) {
    std::vector<int> labels(ordering.size(), 0);
    for (std::size_t i = 0; i < ordering.size(); ++i) labels[static_cast<std::size_t>(ordering[i])] = static_cast<int>(i) + 1;
    return RadioLabeling(std::move(labels));
  }

  std::size_t size() const { return labels_.size(); }
  int operator[](Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& labels() const { return labels_; }
  int span() const { return span_; }

  // Vertices sorted by label.
  std::vector<Vertex> vertices_by_label() const {
    std::vector<Vertex> order(labels_.size());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<Vertex>(v);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return (*this)[a] < (*this)[b]; });
    return order;
  }

  friend bool operator==(const RadioLabeling&, const RadioLabeling&) = default;

 private:
  std::vector<int> labels_;
  int span_ = 0;
};

struct Violation {
  Vertex u = 0;
  Vertex v = 0;
  int slack = 0;  // |f(u)-f(v)| + d(u,v) - (diam+1), negative
};

struct VerifyReport {
  int diameter = 0;
  int span = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

inline VerifyReport verify(const Graph& g, const DistanceMatrix& d, const RadioLabeling& f) {
  if (static_cast<int>(f.size()) != g.order()) {
    throw BadParams("labeling has " + std::to_string(f.size()) + " labels for " + std::to_string(g.order()) +
                    " vertices");
  }
  VerifyReport report;
  report.diameter = diameter(d);
  report.span = f.span();
  const int need = report.diameter + 1;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const int slack = std::abs(f[u] - f[v]) + d.at(u, v) - need;
      if (slack < 0) report.violations.push_back({u, v, slack});
    }
  }
  return report;
}

inline VerifyReport verify(const Graph& g, const RadioLabeling& f) {
  if (!is_connected(g)) throw Disconnected();
  return verify(g, all_pairs_distances(g), f);
}

// Raw label vector; NotInjective for repeated labels.
inline VerifyReport verify(const Graph& g, const std::vector<int>& labels) { return verify(g, RadioLabeling(labels)); }

// Smallest labels, assigned in the given vertex order, that keep the radio
// condition. Only the last diam vertices can constrain the next label.
inline RadioLabeling label_in_order(const DistanceMatrix& d, std::span<const Vertex> order) {
  const int diam = diameter(d);
  std::vector<int> labels(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int label = i == 0 ? 1 : labels[static_cast<std::size_t>(order[i - 1])] + 1;
    const std::size_t lo = i > static_cast<std::size_t>(diam) ? i - static_cast<std::size_t>(diam) : 0;
    for (std::size_t j = lo; j < i; ++j) {
      const Vertex w = order[j];
      label = std::max(label, labels[static_cast<std::size_t>(w)] + diam + 1 - d.at(order[i], w));
    }
    labels[static_cast<std::size_t>(order[i])] = label;
  }
  return RadioLabeling(std::move(labels));
}

// Labels the vertices 1..n along a Hamiltonian path of the antipodal graph.
// Sufficient for diameter <= 2 and for bipartite graphs of diameter 3.
inline RadioLabeling label_from_antipodal_path(const Graph& g, const PathCertificate& cert) {
  const DistanceMatrix d = all_pairs_distances(g);
  const int diam = diameter(d);
  if (diam > 3 || (diam == 3 && !bipartition(g))) {
    throw UnsupportedDiameter("antipodal-path labeling needs diameter <= 2 or a bipartite graph of diameter 3, got " +
                              std::to_string(diam));
  }
  if (cert.kind != CertificateKind::Path || cert.power != 1) throw BadCertificate("expected a Hamiltonian path");
  const Graph a = antipodal(g, d);
  bool valid = false;
  try {
    valid = verify_certificate(a, cert);
  } catch (const BadPermutation& e) {
    throw BadCertificate(e.what());
  }
  if (!valid) throw BadCertificate("ordering is not a Hamiltonian path of the antipodal graph");
  RadioLabeling f = RadioLabeling::from_ordering(cert.ordering);
  if (!verify(g, d, f).ok()) throw std::logic_error("antipodal-path labeling failed verification");
  return f;
}

}  // namespace radiolab
