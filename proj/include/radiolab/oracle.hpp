#pragma once

// Exact radio number by branch and bound over vertex orderings. For a fixed
// order the smallest feasible labels are forced greedily, so rn(G) is the
// minimum greedy span over all orders.

#include <vector>

#include "radiolab/errors.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/radio.hpp"

namespace radiolab {

struct ExactRadioNumber {
  int radio_number = 0;
  RadioLabeling witness;
  std::uint64_t nodes = 0;
};

namespace detail {

class RadioBranchAndBound {
 public:
  RadioBranchAndBound(const DistanceMatrix& d, int diam) : d_(d), diam_(diam), n_(d.order()) {
    labels_.assign(static_cast<std::size_t>(n_), 0);
    used_.assign(static_cast<std::size_t>(n_), 0);
  }

  void run(int incumbent, std::vector<Vertex> incumbent_order) {
    best_ = incumbent;
    best_order_ = std::move(incumbent_order);
    for (Vertex v = 0; v < n_ && best_ > n_; ++v) {
      order_.push_back(v);
      used_[static_cast<std::size_t>(v)] = 1;
      labels_[static_cast<std::size_t>(v)] = 1;
      extend(1);
      used_[static_cast<std::size_t>(v)] = 0;
      order_.pop_back();
    }
  }

  int best() const { return best_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const DistanceMatrix& d_;
  int diam_;
  int n_;
  std::vector<int> labels_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
  int best_ = 0;
  std::vector<Vertex> best_order_;
  std::uint64_t nodes_ = 0;

  int next_label(Vertex v) const {
    const std::size_t i = order_.size();
    int label = labels_[static_cast<std::size_t>(order_.back())] + 1;
    const std::size_t lo = i > static_cast<std::size_t>(diam_) ? i - static_cast<std::size_t>(diam_) : 0;
    for (std::size_t j = lo; j < i; ++j) {
      const Vertex w = order_[j];
      label = std::max(label, labels_[static_cast<std::size_t>(w)] + diam_ + 1 - d_.at(v, w));
    }
    return label;
  }

  void extend(int current) {
    ++nodes_;
    const int placed = static_cast<int>(order_.size());
    if (placed == n_) {
      if (current < best_) {
        best_ = current;
        best_order_ = order_;
      }
      return;
    }
    // Each remaining vertex raises the span by at least one.
    if (current + (n_ - placed) >= best_) return;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      const int label = next_label(v);
      if (label + (n_ - placed - 1) >= best_) continue;
      used_[static_cast<std::size_t>(v)] = 1;
      labels_[static_cast<std::size_t>(v)] = label;
      order_.push_back(v);
      extend(label);
      order_.pop_back();
      used_[static_cast<std::size_t>(v)] = 0;
      if (best_ == n_) return;
    }
  }
};

}  // namespace detail

inline ExactRadioNumber radio_number_exact(const Graph& g, int vertex_limit = 12) {
  if (g.order() > vertex_limit) throw TooLarge(g.order(), vertex_limit);
  if (!is_connected(g)) throw Disconnected();
  ExactRadioNumber out;
  if (g.order() == 0) return out;
  const DistanceMatrix d = all_pairs_distances(g);
  const int diam = diameter(d);

  std::vector<Vertex> identity(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) identity[static_cast<std::size_t>(v)] = v;
  const RadioLabeling start = label_in_order(d, identity);

  detail::RadioBranchAndBound search(d, diam);
  search.run(start.span() + 1, identity);
  out.nodes = search.nodes();
  if (search.best() > start.span()) {
    out.radio_number = start.span();
    out.witness = start;
  } else {
    out.radio_number = search.best();
    out.witness = label_in_order(d, search.best_order());
  }
  return out;
}

}  // namespace radiolab
