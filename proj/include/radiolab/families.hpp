#pragma once

// Constructors for the graph families, each with a fixed vertex numbering.
//
//   complete(n), cycle(n), path(n)   vertices 0..n-1 in the obvious order
//   complete_bipartite(a, b)         parts 0..a-1 and a..a+b-1
//   tadpole(m, n)                    cycle 0..m-1, path m..m+n-1, bridge 0-m
//   petersen()                       2-subsets of {0..4} in lexicographic order
//   hoffman_singleton()              pentagon P_h vertex j is 5h+j,
//                                    pentagram Q_i vertex j is 25+5i+j
//   projective_plane_incidence(q)    canonical PG(2,q) points, then lines
//   generalized_quadrangle_incidence points of PG(3,q), then W(q) lines
//   erdos_renyi_polarity(q)          canonical PG(2,q) points
//   singer_graph(q)                  residues 0..q^2+q
//   mms_graph(q)                     (s, a, b) is s*q^2 + a*q + b
//
// A canonical projective point has leftmost nonzero coordinate 1; points are
// listed in lexicographic order of their coordinate encodings.

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "radiolab/errors.hpp"
#include "radiolab/field.hpp"
#include "radiolab/graph.hpp"

namespace radiolab {

// ---------------------------------------------------------------------------
// Classic graphs

inline Graph complete_graph(int n) {
  if (n < 1) throw BadParams("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw BadParams("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
  if (n < 1) throw BadParams("path needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw BadParams("complete bipartite graph needs both parts non-empty");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  std::vector<int> parts(static_cast<std::size_t>(a + b), kLinePart);
  std::fill(parts.begin(), parts.begin() + a, kPointPart);
  return Graph::from_edges(a + b, edges).with_parts(std::move(parts));
}

// Cycle C_m joined by one edge to an endpoint of the path P_n.
inline Graph tadpole(int m, int n) {
  if (m < 3 || n < 1) throw BadParams("tadpole needs m >= 3 and n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < m; ++u) edges.emplace_back(u, (u + 1) % m);
  for (int u = m; u + 1 < m + n; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(0, m);
  return Graph::from_edges(m + n, edges);
}

enum class ClassicKind { Complete, Cycle, Path, CompleteBipartite, Tadpole };

inline Graph classic(ClassicKind kind, const std::vector<int>& params) {
  const auto need = [&](std::size_t count) {
    if (params.size() != count) throw BadParams("wrong number of parameters");
  };
  switch (kind) {
    case ClassicKind::Complete:
      need(1);
      return complete_graph(params[0]);
    case ClassicKind::Cycle:
      need(1);
      return cycle_graph(params[0]);
    case ClassicKind::Path:
      need(1);
      return path_graph(params[0]);
    case ClassicKind::CompleteBipartite:
      need(2);
      return complete_bipartite(params[0], params[1]);
    case ClassicKind::Tadpole:
      need(2);
      return tadpole(params[0], params[1]);
  }
  throw BadParams("unknown classic family");
}

// ---------------------------------------------------------------------------
// Moore graphs

// Kneser graph K(5,2).
inline Graph petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = subsets[static_cast<std::size_t>(i)];
      const auto [c, d] = subsets[static_cast<std::size_t>(j)];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(10, edges);
}

// Five pentagons P_h (j ~ j+1) and five pentagrams Q_i (j ~ j+2), with
// P_h,j ~ Q_i,(h*i + j mod 5).
inline Graph hoffman_singleton() {
  const auto pent = [](int h, int j) { return 5 * h + j; };
  const auto star = [](int i, int j) { return 25 + 5 * i + j; };
  std::vector<Edge> edges;
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      edges.emplace_back(pent(h, j), pent(h, (j + 1) % 5));
      edges.emplace_back(star(h, j), star(h, (j + 2) % 5));
    }
  }
  for (int h = 0; h < 5; ++h) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) edges.emplace_back(pent(h, j), star(i, (h * i + j) % 5));
    }
  }
  return Graph::from_edges(50, edges);
}

// ---------------------------------------------------------------------------
// Finite geometry

// Canonical points of PG(dim-1, q).
class ProjectiveSpace {
 public:
  ProjectiveSpace(long long q, int dim) : field_(make_field(q)), dim_(dim) {
    const auto fq = static_cast<std::size_t>(field_.order());
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= fq;
    index_.assign(total, -1);
    std::vector<Element> v(static_cast<std::size_t>(dim), 0);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (int i = dim - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<Element>(c % fq);
        c /= fq;
      }
      const auto lead = std::find_if(v.begin(), v.end(), [](Element x) { return x != 0; });
      if (lead != v.end() && *lead == 1) {
        index_[code] = static_cast<int>(points_.size());
        points_.push_back(v);
      }
    }
  }

  const FieldSpec& field() const { return field_; }
  int dimension() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Element>& point(int i) const { return points_[static_cast<std::size_t>(i)]; }

  // Index of the point spanned by a nonzero vector.
  int index_of(std::vector<Element> v) const {
    const auto lead = std::find_if(v.begin(), v.end(), [](Element x) { return x != 0; });
    if (lead == v.end()) throw BadParams("zero vector has no projective point");
    const Element scale = field_.inv(*lead);
    std::size_t code = 0;
    for (auto& x : v) {
      x = field_.mul(x, scale);
      code = code * field_.order() + x;
    }
    return index_[code];
  }

  Element dot(const std::vector<Element>& a, const std::vector<Element>& b) const {
    Element s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = field_.add(s, field_.mul(a[i], b[i]));
    return s;
  }

 private:
  FieldSpec field_;
  int dim_;
  std::vector<std::vector<Element>> points_;
  std::vector<int> index_;
};

// Points 0..P-1 and lines given as sorted point-index lists.
struct IncidenceStructure {
  int point_count = 0;
  std::vector<std::vector<int>> lines;

  int line_count() const { return static_cast<int>(lines.size()); }

  // Points first, then lines; parts attached.
  Graph incidence_graph() const {
    std::vector<Edge> edges;
    for (int l = 0; l < line_count(); ++l) {
      for (int p : lines[static_cast<std::size_t>(l)]) edges.emplace_back(p, point_count + l);
    }
    const int n = point_count + line_count();
    std::vector<int> parts(static_cast<std::size_t>(n), kLinePart);
    std::fill(parts.begin(), parts.begin() + point_count, kPointPart);
    return Graph::from_edges(n, edges).with_parts(std::move(parts));
  }

  std::vector<std::vector<int>> lines_through_points() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(point_count));
    for (int l = 0; l < line_count(); ++l) {
      for (int p : lines[static_cast<std::size_t>(l)]) out[static_cast<std::size_t>(p)].push_back(l);
    }
    return out;
  }

  // Projective plane of order q: lines of size q+1, q+1 lines per point, two
  // points on exactly one line, two lines through exactly one point.
  bool satisfies_projective_plane_axioms(int q) const {
    const auto through = lines_through_points();
    for (const auto& l : lines) {
      if (static_cast<int>(l.size()) != q + 1) return false;
    }
    for (const auto& t : through) {
      if (static_cast<int>(t.size()) != q + 1) return false;
    }
    std::vector<std::vector<int>> joins(static_cast<std::size_t>(point_count),
                                        std::vector<int>(static_cast<std::size_t>(point_count), 0));
    for (const auto& l : lines) {
      for (int a : l) {
        for (int b : l) {
          if (a != b) ++joins[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        }
      }
    }
    for (int a = 0; a < point_count; ++a) {
      for (int b = 0; b < point_count; ++b) {
        if (a != b && joins[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 1) return false;
      }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        std::vector<int> meet;
        std::set_intersection(lines[i].begin(), lines[i].end(), lines[j].begin(), lines[j].end(),
                              std::back_inserter(meet));
        if (meet.size() != 1) return false;
      }
    }
    return true;
  }

  // Generalized quadrangle of order q: (q+1)(q^2+1) points and lines, q+1
  // points per line and lines per point, two points on at most one line, and
  // for p not on l exactly one line through p meets l.
  bool satisfies_quadrangle_axioms(int q) const {
    const int expected = (q + 1) * (q * q + 1);
    if (point_count != expected || line_count() != expected) return false;
    const auto through = lines_through_points();
    for (const auto& l : lines) {
      if (static_cast<int>(l.size()) != q + 1) return false;
    }
    for (const auto& t : through) {
      if (static_cast<int>(t.size()) != q + 1) return false;
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        std::vector<int> meet;
        std::set_intersection(lines[i].begin(), lines[i].end(), lines[j].begin(), lines[j].end(),
                              std::back_inserter(meet));
        if (meet.size() > 1) return false;
      }
    }
    for (int p = 0; p < point_count; ++p) {
      for (const auto& l : lines) {
        if (std::binary_search(l.begin(), l.end(), p)) continue;
        int meeting = 0;
        for (int m : through[static_cast<std::size_t>(p)]) {
          const auto& lm = lines[static_cast<std::size_t>(m)];
          std::vector<int> meet;
          std::set_intersection(lm.begin(), lm.end(), l.begin(), l.end(), std::back_inserter(meet));
          if (!meet.empty()) ++meeting;
        }
        if (meeting != 1) return false;
      }
    }
    return true;
  }
};

// PG(2,q); line [a,b,c] (canonical, same order as points) holds the points
// with ax + by + cz = 0.
inline IncidenceStructure projective_plane(long long q) {
  const ProjectiveSpace plane(q, 3);
  IncidenceStructure s;
  s.point_count = plane.size();
  for (int l = 0; l < plane.size(); ++l) {
    std::vector<int> members;
    for (int p = 0; p < plane.size(); ++p) {
      if (plane.dot(plane.point(l), plane.point(p)) == 0) members.push_back(p);
    }
    s.lines.push_back(std::move(members));
  }
  return s;
}

// Symplectic quadrangle W(q): all points of PG(3,q), lines the totally
// isotropic lines of x0y1 - x1y0 + x2y3 - x3y2, ordered by their point lists.
inline IncidenceStructure symplectic_quadrangle(long long q) {
  const ProjectiveSpace space(q, 4);
  const FieldSpec& f = space.field();
  const auto form = [&](const std::vector<Element>& x, const std::vector<Element>& y) {
    const Element a = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    const Element b = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
    return f.add(a, b);
  };
  std::set<std::vector<int>> found;
  for (int i = 0; i < space.size(); ++i) {
    for (int j = i + 1; j < space.size(); ++j) {
      const auto& x = space.point(i);
      const auto& y = space.point(j);
      if (form(x, y) != 0) continue;
      std::vector<int> members{i, j};
      for (Element lambda = 1; lambda < f.order(); ++lambda) {
        std::vector<Element> z(4);
        for (std::size_t c = 0; c < 4; ++c) z[c] = f.add(x[c], f.mul(lambda, y[c]));
        members.push_back(space.index_of(z));
      }
      std::sort(members.begin(), members.end());
      found.insert(std::move(members));
    }
  }
  IncidenceStructure s;
  s.point_count = space.size();
  s.lines.assign(found.begin(), found.end());
  return s;
}

// Points 0..q^2+q, lines q^2+q+1..2q^2+2q+1.
inline Graph projective_plane_incidence(long long q) { return projective_plane(q).incidence_graph(); }

inline Graph generalized_quadrangle_incidence(long long q) {
  const IncidenceStructure s = symplectic_quadrangle(q);
  if (!s.satisfies_quadrangle_axioms(static_cast<int>(q))) {
    throw ConstructionFailed("W(q) failed the generalized quadrangle axioms");
  }
  return s.incidence_graph();
}

// ER_q: points of PG(2,q), adjacent when orthogonal; absolute points get no loop.
inline Graph erdos_renyi_polarity(long long q) {
  const ProjectiveSpace plane(q, 3);
  std::vector<Edge> edges;
  for (int i = 0; i < plane.size(); ++i) {
    for (int j = i + 1; j < plane.size(); ++j) {
      if (plane.dot(plane.point(i), plane.point(j)) == 0) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(plane.size(), edges);
}

// i ~ j (i != j) iff i + j mod n lies in the difference set.
inline Graph singer_graph(const DifferenceSet& d) {
  std::vector<Edge> edges;
  for (int i = 0; i < d.modulus; ++i) {
    for (int j = i + 1; j < d.modulus; ++j) {
      if (d.contains((i + j) % d.modulus)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(d.modulus, edges);
}

inline Graph singer_graph(long long q) { return singer_graph(singer_difference_set(q)); }

// McKay-Miller-Siran graph H_q for prime powers q = 1 mod 4.
inline Graph mms_graph(long long q) {
  if (!is_prime_power(q) || q % 4 != 1) {
    throw UnsupportedOrder("MMS graph needs a prime power q = 1 (mod 4), got " + std::to_string(q));
  }
  const FieldSpec f = make_field(q);
  const int fq = static_cast<int>(q);
  std::vector<char> in_x(static_cast<std::size_t>(fq), 0), in_x_prime(static_cast<std::size_t>(fq), 0);
  for (std::uint32_t e = 0; e + 1 < f.order(); ++e) {
    (e % 2 == 0 ? in_x : in_x_prime)[f.pow(f.primitive(), e)] = 1;
  }
  const auto id = [fq](int s, int a, int b) { return s * fq * fq + a * fq + b; };
  std::vector<Edge> edges;
  for (int a = 0; a < fq; ++a) {
    for (int b = 0; b < fq; ++b) {
      for (int b2 = b + 1; b2 < fq; ++b2) {
        const Element diff = f.sub(static_cast<Element>(b), static_cast<Element>(b2));
        if (in_x[diff]) edges.emplace_back(id(0, a, b), id(0, a, b2));
        if (in_x_prime[diff]) edges.emplace_back(id(1, a, b), id(1, a, b2));
      }
    }
  }
  for (int x = 0; x < fq; ++x) {
    for (int m = 0; m < fq; ++m) {
      for (int c = 0; c < fq; ++c) {
        const Element y = f.add(f.mul(static_cast<Element>(m), static_cast<Element>(x)), static_cast<Element>(c));
        edges.emplace_back(id(0, x, static_cast<int>(y)), id(1, m, c));
      }
    }
  }
  return Graph::from_edges(2 * fq * fq, edges);
}

// ---------------------------------------------------------------------------
// Edge-list text format
//
// ASCII; lines starting with '#' are comments; every other non-blank line
// holds whitespace-separated 0-indexed vertex pairs. A comment of the form
// "# order N" fixes the vertex count (otherwise max index + 1).

inline Graph load_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_vertex = -1;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream comment(line.substr(first + 1));
      std::string word;
      long long value = 0;
      if (comment >> word && word == "order" && comment >> value) {
        if (value < 0) throw ParseError(lineno, "negative order");
        declared = static_cast<int>(value);
      }
      continue;
    }
    std::istringstream tokens(line);
    std::vector<long long> values;
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError(lineno, "not an integer: '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError(lineno, "not an integer: '" + tok + "'");
      if (v < 0) throw ParseError(lineno, "negative vertex index");
      if (v > 10'000'000) throw ParseError(lineno, "vertex index too large");
      values.push_back(v);
    }
    if (values.size() % 2 != 0) throw ParseError(lineno, "odd number of vertex indices");
    for (std::size_t i = 0; i < values.size(); i += 2) {
      const int u = static_cast<int>(values[i]);
      const int v = static_cast<int>(values[i + 1]);
      if (u == v) throw LoopError(u, lineno);
      edges.emplace_back(u, v);
      max_vertex = std::max({max_vertex, u, v});
    }
  }
  if (declared >= 0 && max_vertex >= declared) {
    throw ParseError(lineno, "vertex " + std::to_string(max_vertex) + " exceeds declared order");
  }
  const int order = declared >= 0 ? declared : max_vertex + 1;
  return Graph::from_edges(order, edges);
}

inline Graph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& header = {}) {
  for (const auto& h : header) out << "# " << h << '\n';
  out << "# order " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace radiolab
