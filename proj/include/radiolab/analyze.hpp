#pragma once

// Decides radio gracefulness from structural theorems, backed by exact
// searches, and brackets the radio number. Rules are tried in order:
//
//   bipartite-even-diameter   bipartite with even diameter: A(G) splits along
//                             the parts, so no Hamiltonian path exists
//   regular-bipartite-(n-1)   (n-1)-regular bipartite on 2n vertices: A(G) = nK2
//   regular-bipartite-(n-2)   (n-2)-regular bipartite on 2n vertices: graceful
//                             iff the 2-regular A(G) is one cycle
//   antipodal-disconnected    A(G) disconnected
//   diameter-2-bounded-degree diameter 2 with max degree <= (n-1)/2, so the
//                             complement meets Dirac's bound
//   diameter-2-antipodal-path / bipartite-diameter-3-antipodal-path
//                             graceful iff A(G) is traceable
//   antipodal-not-traceable   exhaustive search proves A(G) has no
//                             Hamiltonian path (necessary for any diameter)
//   antipodal-path-labeling   a path of A(G) happens to label G gracefully
//   exact-oracle              small graphs fall back to branch and bound
//
// Every RadioGraceful verdict carries a verified span-n labeling; every
// NotRadioGraceful verdict carries an obstruction and lower bound n+1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radiolab/budget.hpp"
#include "radiolab/cages.hpp"
#include "radiolab/errors.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/hamsearch.hpp"
#include "radiolab/oracle.hpp"
#include "radiolab/radio.hpp"

namespace radiolab {

enum class Gracefulness { RadioGraceful, NotRadioGraceful, Unknown };

inline const char* to_string(Gracefulness g) {
  switch (g) {
    case Gracefulness::RadioGraceful:
      return "RadioGraceful";
    case Gracefulness::NotRadioGraceful:
      return "NotRadioGraceful";
    case Gracefulness::Unknown:
      return "Unknown";
  }
  return "?";
}

enum class ObstructionKind { AntipodalDisconnected, NoHamiltonianPath };

inline const char* to_string(ObstructionKind k) {
  return k == ObstructionKind::AntipodalDisconnected ? "antipodal-disconnected" : "no-hamiltonian-path";
}

struct Obstruction {
  ObstructionKind kind = ObstructionKind::AntipodalDisconnected;
  int antipodal_components = 0;
  std::uint64_t search_nodes = 0;  // for NoHamiltonianPath: size of the exhausted search
};

struct RadioNumberBounds {
  int lower = 0;
  std::optional<int> upper;

  bool closed() const { return upper && *upper == lower; }
};

struct AnalysisVerdict {
  Gracefulness status = Gracefulness::Unknown;
  std::string rule;
  int order = 0;
  int diameter = 0;
  std::optional<RadioLabeling> labeling;  // best verified labeling found
  std::optional<Obstruction> obstruction;
  RadioNumberBounds bounds;
  std::string upper_bound_source;
};

struct AnalyzeOptions {
  Deadline deadline;
  int oracle_vertex_limit = 10;  // 0 disables the exact fallback
  bool cage_labelings = true;
};

namespace detail {

struct Context {
  const Graph& g;
  DistanceMatrix d;
  int diam = 0;
  Graph anti;
  std::optional<std::vector<int>> parts;
  std::optional<SearchResult> path_search;
};

inline void set_graceful(AnalysisVerdict& v, const Graph& g, RadioLabeling f, std::string rule) {
  v.status = Gracefulness::RadioGraceful;
  v.rule = std::move(rule);
  v.labeling = std::move(f);
  v.bounds = {g.order(), g.order()};
  v.upper_bound_source = "graceful labeling";
}

inline void set_not_graceful(AnalysisVerdict& v, const Graph& g, Obstruction o, std::string rule) {
  v.status = Gracefulness::NotRadioGraceful;
  v.rule = std::move(rule);
  v.obstruction = o;
  v.bounds.lower = g.order() + 1;
}

inline const SearchResult& antipodal_path(Context& c, const Deadline& deadline) {
  if (!c.path_search) c.path_search = find_hamiltonian_path(c.anti, deadline);
  return *c.path_search;
}

// Greedy walk through the antipodal graph; a cheap upper-bound ordering.
inline std::vector<Vertex> antipodal_walk(const Graph& anti) {
  const int n = anti.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  Vertex cur = 0;
  while (static_cast<int>(order.size()) < n) {
    seen[static_cast<std::size_t>(cur)] = 1;
    order.push_back(cur);
    Vertex next = -1;
    for (Vertex w : anti.neighbors(cur)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        next = w;
        break;
      }
    }
    if (next < 0) {
      for (Vertex w = 0; w < n; ++w) {
        if (!seen[static_cast<std::size_t>(w)]) {
          next = w;
          break;
        }
      }
    }
    if (next < 0) break;
    cur = next;
  }
  return order;
}

inline void consider_upper(AnalysisVerdict& v, RadioLabeling f, const std::string& source) {
  if (!v.bounds.upper || f.span() < *v.bounds.upper) {
    v.bounds.upper = f.span();
    v.labeling = std::move(f);
    v.upper_bound_source = source;
  }
}

inline void upper_bounds(AnalysisVerdict& v, Context& c, const AnalyzeOptions& opt) {
  if (opt.cage_labelings && c.parts && c.diam % 2 == 0 && (c.diam == 4 || c.diam == 6)) {
    try {
      CageLabeling cage = c.diam == 4 ? label_quadrangle_cage(c.g, opt.deadline) : label_hexagon_cage(c.g, opt.deadline);
      consider_upper(v, std::move(cage.labeling), c.diam == 4 ? "quadrangle gluing" : "hexagon gluing");
    } catch (const Error&) {
      // not a cage of this kind, or the cycle search gave up
    }
  }
  std::vector<Vertex> order;
  if (c.path_search && c.path_search->found()) {
    order = c.path_search->certificate->ordering;
  } else {
    order = antipodal_walk(c.anti);
  }
  consider_upper(v, label_in_order(c.d, order), "greedy along antipodal walk");
}

inline bool regular_bipartite_rules(AnalysisVerdict& v, Context& c) {
  if (!c.parts || c.diam != 3) return false;
  const auto r = regularity(c.g);
  if (!r) return false;
  const int n = c.g.order();
  const auto points = std::count(c.parts->begin(), c.parts->end(), kPointPart);
  if (2 * points != n) return false;
  const int half = static_cast<int>(points);
  if (*r == half - 1 && half >= 3) {
    set_not_graceful(v, c.g, {ObstructionKind::AntipodalDisconnected, static_cast<int>(components(c.anti).size()), 0},
                     "regular-bipartite-(n-1)");
    return true;
  }
  if (*r == half - 2 && half > 4) {
    if (components(c.anti).size() == 1) {
      // A(G) is a single cycle; dropping one edge leaves a Hamiltonian path.
      std::vector<Vertex> walk{0};
      Vertex prev = -1, cur = 0;
      while (static_cast<int>(walk.size()) < n) {
        const auto nb = c.anti.neighbors(cur);
        const Vertex next = nb[0] != prev ? nb[0] : nb[1];
        walk.push_back(next);
        prev = cur;
        cur = next;
      }
      set_graceful(v, c.g, RadioLabeling::from_ordering(walk), "regular-bipartite-(n-2)");
    } else {
      set_not_graceful(v, c.g,
                       {ObstructionKind::AntipodalDisconnected, static_cast<int>(components(c.anti).size()), 0},
                       "regular-bipartite-(n-2)");
    }
    return true;
  }
  return false;
}

}  // namespace detail

inline AnalysisVerdict analyze(const Graph& g, const AnalyzeOptions& opt = {}) {
  if (!is_connected(g)) throw Disconnected();
  AnalysisVerdict v;
  v.order = g.order();
  v.bounds.lower = g.order();
  if (g.order() <= 1) {
    detail::set_graceful(v, g, RadioLabeling(std::vector<int>(static_cast<std::size_t>(g.order()), 1)), "trivial");
    return v;
  }

  detail::Context c{g, all_pairs_distances(g), 0, {}, parts_of(g), std::nullopt};
  c.diam = diameter(c.d);
  c.anti = antipodal(g, c.d);
  v.diameter = c.diam;
  const int n = g.order();
  const auto anti_components = static_cast<int>(components(c.anti).size());

  bool decided = false;
  if (c.parts && c.diam % 2 == 0) {
    detail::set_not_graceful(v, g, {ObstructionKind::AntipodalDisconnected, anti_components, 0},
                             "bipartite-even-diameter");
    decided = true;
  } else if (detail::regular_bipartite_rules(v, c)) {
    decided = true;
  } else if (anti_components > 1) {
    detail::set_not_graceful(v, g, {ObstructionKind::AntipodalDisconnected, anti_components, 0},
                             "antipodal-disconnected");
    decided = true;
  }

  if (!decided) {
    const bool sufficient = c.diam <= 2 || (c.diam == 3 && c.parts);
    const SearchResult& path = detail::antipodal_path(c, opt.deadline);
    if (path.found()) {
      const RadioLabeling f = RadioLabeling::from_ordering(path.certificate->ordering);
      if (verify(g, c.d, f).ok()) {
        std::string rule = "antipodal-path-labeling";
        if (c.diam == 2 && 2 * g.max_degree() <= n - 1) {
          rule = "diameter-2-bounded-degree";
        } else if (c.diam <= 2) {
          rule = "diameter-2-antipodal-path";
        } else if (sufficient) {
          rule = "bipartite-diameter-3-antipodal-path";
        }
        detail::set_graceful(v, g, f, rule);
        decided = true;
      }
    } else if (path.status == SearchStatus::None) {
      detail::set_not_graceful(v, g, {ObstructionKind::NoHamiltonianPath, anti_components, path.nodes},
                               "antipodal-not-traceable");
      decided = true;
    }
  }

  if (v.status != Gracefulness::RadioGraceful) {
    detail::upper_bounds(v, c, opt);
    if (v.bounds.upper && *v.bounds.upper == n) {
      // A greedy labeling reached span n without a theorem firing.
      detail::set_graceful(v, g, *v.labeling, "antipodal-path-labeling");
    }
  }

  if (!v.bounds.closed() && n <= opt.oracle_vertex_limit) {
    const ExactRadioNumber exact = radio_number_exact(g, opt.oracle_vertex_limit);
    v.bounds = {exact.radio_number, exact.radio_number};
    v.labeling = exact.witness;
    v.upper_bound_source = "exact oracle";
    if (v.status == Gracefulness::Unknown) {
      v.status = exact.radio_number == n ? Gracefulness::RadioGraceful : Gracefulness::NotRadioGraceful;
      v.rule = "exact-oracle";
    }
  }
  if (v.status == Gracefulness::Unknown && v.rule.empty()) v.rule = "undecided";
  return v;
}

}  // namespace radiolab
