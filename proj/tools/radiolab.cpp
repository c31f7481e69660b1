#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radiolab/radiolab.hpp"

namespace rl = radiolab;

namespace {

enum Exit { kOk = 0, kNegative = 1, kTimeout = 2, kUsage = 3 };

struct Budget {
  std::optional<std::uint64_t> nodes;
  double time_limit = 0;  // seconds; 0 means none

  rl::Deadline deadline() const {
    rl::Deadline d;
    if (nodes) {
      d.max_nodes = *nodes;
    } else if (const char* env = std::getenv("RADIOLAB_NODE_BUDGET")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0) throw rl::BadParams("RADIOLAB_NODE_BUDGET must be a positive integer");
      d.max_nodes = v;
    }
    if (time_limit > 0) d.wall_clock = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
    return d;
  }
};

class TimedOut : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

rl::Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rl::BadParams("cannot open " + path);
  return rl::load_edge_list(in);
}

rl::VertexSequence read_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rl::BadParams("cannot open " + path);
  return rl::parse_sequence(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw rl::BadParams("cannot write " + path);
  out << text;
}

std::string dump(const rl::Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string family;
  std::vector<long long> params;
  bool complement = false;
  std::string out;
};

int param(const ConstructArgs& a, std::size_t i, const char* what) {
  if (a.params.size() <= i) throw rl::BadParams(a.family + " needs " + what);
  if (a.params[i] < 0 || a.params[i] > 1'000'000) throw rl::BadParams(std::string(what) + " out of range");
  return static_cast<int>(a.params[i]);
}

void expect_params(const ConstructArgs& a, std::size_t n) {
  if (a.params.size() != n) {
    throw rl::BadParams(a.family + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
  }
}

int cmd_construct(const ConstructArgs& a) {
  rl::Graph g;
  std::vector<std::string> header;
  const auto& f = a.family;
  if (f == "complete" || f == "cycle" || f == "path") {
    expect_params(a, 1);
    const int n = param(a, 0, "a size");
    g = f == "complete" ? rl::classic(rl::ClassicKind::Complete, {n})
        : f == "cycle"  ? rl::classic(rl::ClassicKind::Cycle, {n})
                        : rl::classic(rl::ClassicKind::Path, {n});
    header = {f + " " + std::to_string(n), "vertices 0..n-1 in order"};
  } else if (f == "complete-bipartite") {
    expect_params(a, 2);
    const int x = param(a, 0, "two part sizes"), y = param(a, 1, "two part sizes");
    g = rl::classic(rl::ClassicKind::CompleteBipartite, {x, y});
    header = {f + " " + std::to_string(x) + " " + std::to_string(y), "parts 0..a-1 and a..a+b-1"};
  } else if (f == "tadpole") {
    expect_params(a, 2);
    const int m = param(a, 0, "cycle and path sizes"), n = param(a, 1, "cycle and path sizes");
    g = rl::classic(rl::ClassicKind::Tadpole, {m, n});
    header = {f + " " + std::to_string(m) + " " + std::to_string(n),
              "cycle 0..m-1, path m..m+n-1, bridge 0-m"};
  } else if (f == "petersen") {
    expect_params(a, 0);
    g = rl::petersen();
    header = {"petersen", "Kneser(5,2), 2-subsets of {0..4} in lexicographic order"};
  } else if (f == "hoffman-singleton") {
    expect_params(a, 0);
    g = rl::hoffman_singleton();
    header = {"hoffman-singleton", "pentagon P_h vertex j is 5h+j, pentagram Q_i vertex j is 25+5i+j"};
  } else {
    expect_params(a, 1);
    const long long q = a.params[0];
    const std::string tag = f + " " + std::to_string(q);
    try {
      if (f == "pg-incidence") {
        g = rl::projective_plane_incidence(q);
        header = {tag, "points of PG(2,q) first, then lines, canonical order"};
      } else if (f == "gq-incidence") {
        g = rl::generalized_quadrangle_incidence(q);
        header = {tag, "points of W(q) first, then totally isotropic lines, canonical order"};
      } else if (f == "erq") {
        g = rl::erdos_renyi_polarity(q);
        header = {tag, "points of PG(2,q) in canonical order"};
      } else if (f == "singer") {
        g = rl::singer_graph(q);
        header = {tag, "residues 0..q^2+q mod q^2+q+1"};
      } else if (f == "mms") {
        g = rl::mms_graph(q);
        header = {tag, "vertex (s,a,b) is s*q^2 + a*q + b"};
      } else {
        throw rl::BadParams("unknown family '" + f + "'");
      }
    } catch (const rl::NotPrimePower& e) {
      throw rl::BadParams(e.what());
    } catch (const rl::UnsupportedOrder& e) {
      throw rl::BadParams(e.what());
    }
  }
  if (a.complement) {
    g = rl::complement(g);
    header.insert(header.begin() + 1, "complement");
  }
  std::ostringstream out;
  rl::write_edge_list(out, g, header);
  write_text(a.out, out.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// analyze

rl::Json verdict_json(const rl::AnalysisVerdict& v) {
  rl::Json j;
  j["status"] = rl::to_string(v.status);
  j["rule"] = v.rule;
  j["n"] = v.order;
  j["diameter"] = v.diameter;
  j["rn_bounds"] = {v.bounds.lower, v.bounds.upper ? rl::Json(*v.bounds.upper) : rl::Json(nullptr)};
  if (v.obstruction) {
    rl::Json o;
    o["kind"] = rl::to_string(v.obstruction->kind);
    o["antipodal_components"] = v.obstruction->antipodal_components;
    if (v.obstruction->kind == rl::ObstructionKind::NoHamiltonianPath) o["search_nodes"] = v.obstruction->search_nodes;
    j["obstruction"] = o;
  } else {
    j["obstruction"] = nullptr;
  }
  j["labeling"] = v.labeling ? rl::labeling_to_json(*v.labeling, v.diameter) : rl::Json(nullptr);
  j["upper_bound_source"] = v.upper_bound_source;
  return j;
}

std::string bounds_text(const rl::AnalysisVerdict& v) {
  if (v.bounds.closed()) {
    if (v.status == rl::Gracefulness::RadioGraceful) return "rn = " + std::to_string(v.bounds.lower);
    return "rn ∈ [" + std::to_string(v.bounds.lower) + ", " + std::to_string(*v.bounds.upper) + "]";
  }
  return "rn ∈ [" + std::to_string(v.bounds.lower) + ", " +
         (v.bounds.upper ? std::to_string(*v.bounds.upper) : std::string("?")) + "]";
}

int cmd_analyze(const std::string& file, const std::string& certificate, const std::string& format,
                int oracle_limit, const Budget& budget) {
  const rl::Graph g = read_graph(file);
  rl::AnalyzeOptions opt;
  opt.deadline = budget.deadline();
  opt.oracle_vertex_limit = oracle_limit;
  const rl::AnalysisVerdict v = rl::analyze(g, opt);
  const rl::Json j = verdict_json(v);
  const std::string cert_path = certificate.empty() ? file + ".cert.json" : certificate;
  if (cert_path != "none") write_text(cert_path, dump(j));
  if (format == "json") {
    std::cout << dump(j);
  } else {
    std::cout << rl::to_string(v.status) << "; " << bounds_text(v) << "\n";
    std::cout << "rule: " << v.rule << "\n";
    if (v.obstruction) {
      std::cout << "obstruction: " << rl::to_string(v.obstruction->kind) << " ("
                << v.obstruction->antipodal_components << " antipodal component"
                << (v.obstruction->antipodal_components == 1 ? "" : "s") << ")\n";
    }
    if (v.bounds.upper) std::cout << "upper bound: " << v.upper_bound_source << "\n";
  }
  return v.status == rl::Gracefulness::Unknown ? kTimeout : kOk;
}

// ---------------------------------------------------------------------------
// label

struct LabelArgs {
  std::string file;
  std::string method = "auto";
  std::string out;
  std::string points;
  std::string lines;
};

long long singer_order(int n) {
  for (long long q = 2; q * q + q + 1 <= n; ++q) {
    if (q * q + q + 1 == n && rl::is_prime_power(q)) return q;
  }
  throw rl::BadParams("vertex count " + std::to_string(n) + " is not q^2+q+1 for a prime power q");
}

rl::RadioLabeling singer_on(const rl::Graph& g, bool complement_form, const rl::Deadline& deadline) {
  const long long q = singer_order(g.order());
  const rl::SingerLabeling s =
      complement_form ? rl::singer_label_erq_complement(q, deadline) : rl::singer_label_erq(q, deadline);
  rl::Graph model = rl::singer_graph(q);
  if (complement_form) model = rl::complement(model);
  const rl::IsomorphismResult iso = rl::are_isomorphic(model, g, deadline);
  if (iso.status == rl::SearchStatus::Timeout) throw TimedOut("isomorphism search ran out of budget");
  if (iso.status == rl::SearchStatus::None) {
    throw rl::PreconditionFailed(std::string("graph is not isomorphic to the ") +
                                 (complement_form ? "complement of the " : "") + "Singer graph");
  }
  return rl::transport_labeling(s.labeling, iso.mapping);
}

int cmd_label(const LabelArgs& a, const Budget& budget) {
  const rl::Graph g = read_graph(a.file);
  const rl::Deadline deadline = budget.deadline();
  std::optional<rl::RadioLabeling> f;
  const auto& m = a.method;
  if (m == "auto") {
    rl::AnalyzeOptions opt;
    opt.deadline = deadline;
    const auto v = rl::analyze(g, opt);
    if (!v.labeling) {
      std::cerr << "no labeling found\n";
      return kTimeout;
    }
    f = v.labeling;
  } else if (m == "antipodal-path") {
    const auto found = rl::find_hamiltonian_path(rl::antipodal(g), deadline);
    if (found.status == rl::SearchStatus::Timeout) throw TimedOut("path search ran out of budget");
    if (found.status == rl::SearchStatus::None) {
      std::cerr << "antipodal graph has no Hamiltonian path\n";
      return kNegative;
    }
    f = rl::label_from_antipodal_path(g, *found.certificate);
  } else if (m == "quad-glue" || m == "hex-glue") {
    std::optional<rl::CageCycles> supplied;
    if (!a.points.empty() || !a.lines.empty()) {
      if (a.points.empty() || a.lines.empty()) throw rl::BadParams("--points and --lines go together");
      supplied = rl::CageCycles{read_sequence(a.points).vertices, read_sequence(a.lines).vertices};
    }
    try {
      f = (m == "quad-glue" ? rl::label_quadrangle_cage(g, deadline, supplied)
                            : rl::label_hexagon_cage(g, deadline, supplied))
              .labeling;
    } catch (const rl::TimeoutError& e) {
      throw TimedOut(e.what());
    }
  } else if (m == "singer" || m == "singer-complement") {
    f = singer_on(g, m == "singer-complement", deadline);
  } else {
    throw rl::BadParams("unknown method '" + m + "'");
  }
  const rl::DistanceMatrix d = rl::all_pairs_distances(g);
  if (!rl::verify(g, d, *f).ok()) throw std::logic_error("constructed labeling failed verification");
  write_text(a.out, dump(rl::labeling_to_json(*f, rl::diameter(d))));
  if (!a.out.empty() && a.out != "-") std::cout << "span " << f->span() << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// verify, radio-number, check-sequence

int cmd_verify(const std::string& file, const std::string& labels) {
  const rl::Graph g = read_graph(file);
  std::ifstream in(labels);
  if (!in) throw rl::BadParams("cannot open " + labels);
  const rl::RadioLabeling f = rl::read_labeling(in);
  const rl::VerifyReport r = rl::verify(g, f);
  if (r.ok()) {
    std::cout << "OK; span " << r.span << (r.span == g.order() ? " (graceful)" : "") << "\n";
    return kOk;
  }
  std::cout << r.violations.size() << " violation" << (r.violations.size() == 1 ? "" : "s") << "\n";
  for (const auto& v : r.violations) {
    std::cout << v.u << " " << v.v << " slack " << v.slack << "\n";
  }
  return kNegative;
}

int cmd_radio_number(const std::string& file, int limit) {
  const rl::Graph g = read_graph(file);
  const rl::ExactRadioNumber r = rl::radio_number_exact(g, limit);
  std::cout << r.radio_number << "\n";
  return kOk;
}

int cmd_check_sequence(const std::string& file, const std::string& seq_file, int power, bool direct) {
  const rl::Graph g = read_graph(file);
  const rl::Graph target = direct ? g : rl::antipodal(g);
  const rl::VertexSequence seq = read_sequence(seq_file);
  for (rl::Vertex v : seq.vertices) {
    if (v >= target.order()) throw rl::BadParams("vertex " + std::to_string(v) + " is not in the graph");
  }
  std::vector<int> comp_of(static_cast<std::size_t>(target.order()), -1);
  const auto comps = rl::components(target);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (rl::Vertex v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  // The sequence must cover the whole graph or one whole component of it.
  std::vector<rl::Vertex> scope(seq.vertices.begin(), seq.vertices.end());
  std::sort(scope.begin(), scope.end());
  scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
  if (scope.size() != seq.vertices.size()) {
    std::cout << "false: repeated vertex\n";
    return kNegative;
  }
  const bool whole = static_cast<int>(scope.size()) == target.order();
  if (!whole) {
    auto comp = comps[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(scope.front())])];
    std::sort(comp.begin(), comp.end());
    if (comp != scope) {
      std::cout << "false: the sequence does not span a component of the "
                << (direct ? "graph" : "antipodal graph") << "\n";
      return kNegative;
    }
  }
  const rl::Graph sub = whole ? target : rl::induced_subgraph(target, scope);
  std::vector<int> local(static_cast<std::size_t>(target.order()), -1);
  for (std::size_t i = 0; i < scope.size(); ++i) local[static_cast<std::size_t>(scope[i])] = static_cast<int>(i);
  rl::PathCertificate cert;
  cert.kind = seq.closed ? rl::CertificateKind::CyclePower : rl::CertificateKind::Path;
  cert.power = power;
  for (rl::Vertex v : seq.vertices) cert.ordering.push_back(local[static_cast<std::size_t>(v)]);
  const bool ok = rl::verify_certificate(sub, cert);
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radio labelings of Moore-type graphs from finite geometry"};
  app.require_subcommand(1);
  Budget budget;
  app.add_option("--node-budget", budget.nodes, "search-tree node limit (default $RADIOLAB_NODE_BUDGET or 10^7)")
      ->check(CLI::PositiveNumber);
  app.add_option("--time-limit", budget.time_limit, "wall-clock limit in seconds per search")
      ->check(CLI::NonNegativeNumber);

  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "write a graph family as an edge list");
  construct->add_option("family", cons.family,
                        "complete | cycle | path | complete-bipartite | tadpole | petersen | hoffman-singleton | "
                        "pg-incidence | gq-incidence | erq | singer | mms")
      ->required();
  construct->add_option("params", cons.params, "family parameters");
  construct->add_flag("--complement", cons.complement, "emit the complement graph");
  construct->add_option("-o,--out", cons.out, "output file (default stdout)");

  std::string an_file, an_cert, an_format = "text";
  int an_oracle = 10;
  auto* analyze = app.add_subcommand("analyze", "decide radio gracefulness and bound the radio number");
  analyze->add_option("graph", an_file, "edge-list file")->required();
  analyze->add_option("--certificate", an_cert, "certificate path (default <graph>.cert.json, 'none' to skip)");
  analyze->add_option("--format", an_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--oracle-limit", an_oracle, "largest order handed to the exact oracle")
      ->check(CLI::NonNegativeNumber);

  LabelArgs lab;
  auto* label = app.add_subcommand("label", "construct a radio labeling");
  label->add_option("graph", lab.file, "edge-list file")->required();
  label->add_option("-m,--method", lab.method, "auto | antipodal-path | quad-glue | hex-glue | singer | singer-complement")
      ->check(CLI::IsMember({"auto", "antipodal-path", "quad-glue", "hex-glue", "singer", "singer-complement"}));
  label->add_option("-o,--out", lab.out, "labeling JSON path (default stdout)");
  label->add_option("--points", lab.points, "point-part cycle sequence for the gluing methods");
  label->add_option("--lines", lab.lines, "line-part cycle sequence for the gluing methods");

  std::string ver_file, ver_labels;
  auto* verify = app.add_subcommand("verify", "check a labeling against the radio condition");
  verify->add_option("graph", ver_file, "edge-list file")->required();
  verify->add_option("labeling", ver_labels, "labeling JSON")->required();

  std::string rn_file;
  int rn_limit = 12;
  auto* rn = app.add_subcommand("radio-number", "exact radio number of a small graph");
  rn->add_option("graph", rn_file, "edge-list file")->required();
  rn->add_option("--limit", rn_limit, "largest order accepted")->check(CLI::PositiveNumber);

  std::string cs_file, cs_seq;
  int cs_power = 1;
  bool cs_direct = false;
  auto* check = app.add_subcommand("check-sequence", "check a vertex sequence as a (power of a) path or cycle");
  check->add_option("graph", cs_file, "edge-list file")->required();
  check->add_option("sequence", cs_seq, "sequence file; repeating the first vertex at the end closes a cycle")
      ->required();
  check->add_option("--power", cs_power, "power of the path or cycle")->check(CLI::PositiveNumber);
  check->add_flag("--direct", cs_direct, "check against the graph itself instead of its antipodal graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(cons);
    if (*analyze) return cmd_analyze(an_file, an_cert, an_format, an_oracle, budget);
    if (*label) return cmd_label(lab, budget);
    if (*verify) return cmd_verify(ver_file, ver_labels);
    if (*rn) return cmd_radio_number(rn_file, rn_limit);
    if (*check) return cmd_check_sequence(cs_file, cs_seq, cs_power, cs_direct);
  } catch (const TimedOut& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kTimeout;
  } catch (const rl::TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kTimeout;
  } catch (const rl::BadParams& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const rl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
