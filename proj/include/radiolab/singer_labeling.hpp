#pragma once

// Graceful radio labelings of the Singer graph S_q (isomorphic to ER_q) and
// of its complement from two-step recurrences v_i = s - v_{i-1}, where s
// alternates between two residues. Consecutive sums equal those residues, so
// choosing them outside (resp. inside) the difference set makes the sequence
// a Hamiltonian path of the complement (resp. of S_q itself).

#include <numeric>
#include <optional>
#include <vector>

#include "radiolab/budget.hpp"
#include "radiolab/errors.hpp"
#include "radiolab/families.hpp"
#include "radiolab/field.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/hamsearch.hpp"
#include "radiolab/radio.hpp"

namespace radiolab {

struct SingerParameters {
  int d0 = 0;
  int d1 = 0;
  int j0 = 0;  // zero for the complement construction
  int j1 = 0;
};

struct SingerLabeling {
  RadioLabeling labeling;       // on singer_graph(q) (or its complement)
  std::vector<Vertex> path;     // v_1..v_n
  std::optional<SingerParameters> parameters;  // empty when the fallback search was used
  DifferenceSet difference_set;
};

namespace detail {

inline int mod(long long a, int n) {
  const long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// v_1 = seed, then v_i = s_even - v_{i-1} for even i and s_odd - v_{i-1} for odd i.
inline std::optional<std::vector<Vertex>> run_recurrence(int n, int seed, int s_even, int s_odd) {
  std::vector<Vertex> v{mod(seed, n)};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[static_cast<std::size_t>(v[0])] = 1;
  for (int i = 2; i <= n; ++i) {
    const int next = mod(static_cast<long long>(i % 2 == 0 ? s_even : s_odd) - v.back(), n);
    if (seen[static_cast<std::size_t>(next)]) return std::nullopt;
    seen[static_cast<std::size_t>(next)] = 1;
    v.push_back(next);
  }
  return v;
}

inline SingerLabeling fallback_labeling(const Graph& target, const DifferenceSet& ds, const Deadline& deadline) {
  const SearchResult found = find_hamiltonian_path(antipodal(target), deadline);
  if (!found.found()) throw ConstructionFailed("no recurrence parameters worked and the path search failed");
  SingerLabeling out;
  out.path = found.certificate->ordering;
  out.labeling = RadioLabeling::from_ordering(out.path);
  out.difference_set = ds;
  return out;
}

}  // namespace detail

// Graceful labeling of S_q: v_1 = (n+1)/2 * d1 - 1, sums alternating between
// d0 - j0 and d1 - j1, both outside D, with their difference a unit mod n.
inline SingerLabeling singer_label_erq(long long q, const Deadline& deadline = {}) {
  const DifferenceSet ds = singer_difference_set(q);
  const int n = ds.modulus;
  const Graph s = singer_graph(ds);
  const int half = (n + 1) / 2;
  const auto& d = ds.elements;
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      const int d0 = d[a], d1 = d[b];
      for (int j0 = 1; j0 < n; ++j0) {
        const int s0 = detail::mod(d0 - j0, n);
        if (ds.contains(s0)) continue;
        for (int j1 = 1; j1 < n; ++j1) {
          const int s1 = detail::mod(d1 - j1, n);
          if (ds.contains(s1) || std::gcd(detail::mod(s0 - s1, n), n) != 1) continue;
          const auto path = detail::run_recurrence(n, static_cast<long long>(half) * d1 - 1, s0, s1);
          if (!path) continue;
          SingerLabeling out;
          out.path = *path;
          out.labeling = RadioLabeling::from_ordering(out.path);
          if (!verify(s, out.labeling).ok()) continue;
          out.parameters = SingerParameters{d0, d1, j0, j1};
          out.difference_set = ds;
          return out;
        }
      }
    }
  }
  return detail::fallback_labeling(s, ds, deadline);
}

// Graceful labeling of the complement of S_q: v_1 = (n+1)/2 * d1, sums
// alternating between d0 and d1 with d0 - d1 a unit mod n.
inline SingerLabeling singer_label_erq_complement(long long q, const Deadline& deadline = {}) {
  const DifferenceSet ds = singer_difference_set(q);
  const int n = ds.modulus;
  const Graph target = complement(singer_graph(ds));
  if (!is_connected(target) || diameter(target) != 2) {
    throw PreconditionFailed("complement of the Singer graph does not have diameter 2");
  }
  const int half = (n + 1) / 2;
  const auto& d = ds.elements;
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      const int d0 = d[a], d1 = d[b];
      if (std::gcd(detail::mod(d0 - d1, n), n) != 1) continue;
      const auto path = detail::run_recurrence(n, static_cast<long long>(half) * d1, d0, d1);
      if (!path) continue;
      SingerLabeling out;
      out.path = *path;
      out.labeling = RadioLabeling::from_ordering(out.path);
      if (!verify(target, out.labeling).ok()) continue;
      out.parameters = SingerParameters{d0, d1, 0, 0};
      out.difference_set = ds;
      return out;
    }
  }
  return detail::fallback_labeling(target, ds, deadline);
}

// Moves a labeling of g onto h through an isomorphism mapping[v of g] = v of h.
inline RadioLabeling transport_labeling(const RadioLabeling& f, const std::vector<Vertex>& mapping) {
  std::vector<int> labels(f.size(), 0);
  for (std::size_t v = 0; v < f.size(); ++v) labels[static_cast<std::size_t>(mapping[v])] = f[static_cast<Vertex>(v)];
  return RadioLabeling(std::move(labels));
}

}  // namespace radiolab
