// conejac: spanning trees, rooted forests, Jacobians and forest groups of
// graphs and of cones over them.
//
// Exit codes: 0 success, 1 verification mismatch, 2 parse/usage error,
// 3 enumeration guard violation.

#include <conejac.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace conejac;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string spec;
  std::string edges_file;
  bool cone = false;
  bool verify = false;
  bool json = false;
  std::string family;
  std::size_t n = 0;
};

struct Source {
  std::string label;
  Multigraph graph;
  std::optional<GraphSpec> spec;
};

Source load_source(const Options& opt) {
  if (!opt.spec.empty() && !opt.edges_file.empty())
    throw UsageError("give either a graph spec or --edges, not both");
  if (!opt.edges_file.empty()) {
    std::ifstream in(opt.edges_file);
    if (!in) throw UsageError("cannot open edge-list file '" + opt.edges_file + "'");
    try {
      return {opt.edges_file, read_edge_list(in), std::nullopt};
    } catch (const ParseError& e) {
      throw ParseError(opt.edges_file + ": " + e.message(), e.line(), e.column());
    }
  }
  if (opt.spec.empty()) throw UsageError("missing graph: give a spec such as C6(1,3) or --edges <file>");
  GraphSpec spec = parse_graph_spec(opt.spec);
  return {to_string(spec), build_graph(spec), spec};
}

void warn_if_disconnected(const Source& src) {
  if (!src.spec) return;
  if (const auto* circ = std::get_if<CirculantSpec>(&*src.spec); circ && !circ->connected())
    std::cerr << "warning: " << circ->to_string() << " is disconnected\n";
}

template <class F>
auto timed(F&& f, double& millis) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

int cmd_invariants(const Options& opt) {
  const Source src = load_source(opt);
  warn_if_disconnected(src);
  const Multigraph& g = src.graph;
  Report r;
  r.input = src.label;
  r.tau = tree_count(g);
  r.forest_count = forest_count(g);
  r.jacobian = jacobian(g);
  r.forest_group = forest_group(g);
  r.path = "direct";
  bool consistent = true;
  Integer via_charpoly;
  if (opt.cone) {
    r.cone_tau = cone_tree_count(g);
    r.cone_jacobian = cone_jacobian(g);
    via_charpoly = cone_tree_count_via_charpoly(g);
    consistent = via_charpoly == *r.cone_tau;
  }
  if (opt.json) {
    std::cout << to_json(r) << '\n';
  } else {
    std::cout << "input: " << r.input << '\n'
              << "tau: " << *r.tau << '\n'
              << "forest_count: " << *r.forest_count << '\n'
              << "jacobian: " << *r.jacobian << '\n'
              << "forest_group: " << *r.forest_group << '\n';
    if (opt.cone) {
      std::cout << "cone_tau: " << *r.cone_tau << " (det(I+L)), " << via_charpoly << " (|chi(-1)|)\n"
                << "cone_jacobian: " << *r.cone_jacobian << '\n';
    }
  }
  if (!consistent) {
    std::cerr << "mismatch: det(I+L) = " << *r.cone_tau << " but |chi(-1)| = " << via_charpoly << '\n';
    return kExitMismatch;
  }
  return 0;
}

int cmd_fastpath(const Options& opt) {
  if (opt.spec.empty()) throw UsageError("fastpath needs a circulant or cobordism spec");
  const GraphSpec spec = parse_graph_spec(opt.spec);
  Report r;
  r.input = to_string(spec);
  double fast_ms = 0, direct_ms = 0;
  const FastPathResult fast = timed([&] { return fast_cone_jacobian(spec); }, fast_ms);
  r.cone_jacobian = fast.group;
  r.cone_tau = fast.group.order();
  r.path = path_name(fast.path);
  std::optional<AbelianGroup> direct;
  if (opt.verify) {
    direct = timed([&] { return forest_group(build_graph(spec)); }, direct_ms);
    r.verified = *direct == fast.group;
  }
  if (opt.json) {
    std::cout << to_json(r) << '\n';
  } else {
    std::cout << "input: " << r.input << '\n'
              << "path: " << *r.path << " (" << fast.presentation.rows() << "x" << fast.presentation.cols()
              << " presentation, " << fast_ms << " ms)\n"
              << "cone_jacobian: " << fast.group << '\n'
              << "cone_tau: " << *r.cone_tau << '\n';
    if (direct) {
      std::cout << "direct: " << *direct << " (coker(I+L), " << direct_ms << " ms)\n"
                << "verified: " << (*r.verified ? "yes" : "NO") << '\n';
    }
  }
  if (r.verified && !*r.verified) {
    std::cerr << "mismatch: fast path gives " << fast.group << ", direct computation gives " << *direct << '\n';
    return kExitMismatch;
  }
  return 0;
}

int cmd_closed_form(const Options& opt) {
  Report r;
  r.input = opt.family + " " + std::to_string(opt.n);
  r.path = "closed-form";
  Multigraph base;
  if (opt.family == "wheel") {
    r.cone_tau = wheel_tree_count(opt.n);
    r.cone_jacobian = wheel_jacobian(opt.n);
    if (opt.verify) base = circulant({opt.n, {1}});
  } else if (opt.family == "mobius-cone") {
    r.cone_tau = mobius_cone_tree_count(opt.n);
    if (opt.verify) base = circulant({2 * opt.n, {1, opt.n}});
  } else if (opt.family == "prism-cone") {
    r.cone_tau = prism_cone_tree_count(opt.n);
    if (opt.verify) base = cobordism({opt.n, {1}, {1}});
  } else {
    throw UsageError("unknown family '" + opt.family + "' (expected wheel, mobius-cone or prism-cone)");
  }
  Integer direct_count;
  std::optional<AbelianGroup> direct_group;
  if (opt.verify) {
    direct_count = forest_count(base);
    bool ok = direct_count == *r.cone_tau;
    if (r.cone_jacobian) {
      direct_group = forest_group(base);
      ok = ok && *direct_group == *r.cone_jacobian;
    }
    r.verified = ok;
  }
  if (opt.json) {
    std::cout << to_json(r) << '\n';
  } else {
    std::cout << "input: " << r.input << '\n' << "cone_tau: " << *r.cone_tau << '\n';
    if (r.cone_jacobian) std::cout << "cone_jacobian: " << *r.cone_jacobian << '\n';
    if (r.verified) {
      std::cout << "direct: " << direct_count;
      if (direct_group) std::cout << ", " << *direct_group;
      std::cout << " (det and coker of I+L)\n" << "verified: " << (*r.verified ? "yes" : "NO") << '\n';
    }
  }
  if (r.verified && !*r.verified) {
    std::cerr << "mismatch: closed form " << *r.cone_tau << " vs direct " << direct_count << '\n';
    return kExitMismatch;
  }
  return 0;
}

int cmd_oracle(const Options& opt) {
  const Source src = load_source(opt);
  const Multigraph& g = src.graph;
  const Integer trees = enumerate_spanning_trees(g);
  const Integer forests = enumerate_rooted_forests(g);
  const BijectionReport bij = bijection_check(g);
  const Integer alg_trees = tree_count(g);
  const Integer alg_forests = forest_count(g);
  const bool ok = trees == alg_trees && forests == alg_forests && bij.ok() && bij.cone_trees == alg_forests;

  Report r;
  r.input = src.label;
  r.tau = trees;
  r.forest_count = forests;
  r.cone_tau = bij.cone_trees;
  r.path = "enumeration";
  r.verified = ok;
  if (opt.json) {
    std::cout << to_json(r) << '\n';
  } else {
    auto row = [](const char* what, const Integer& enumerated, const Integer& algebraic) {
      std::cout << what << ": " << enumerated << " enumerated, " << algebraic << " algebraic"
                << (enumerated == algebraic ? "" : "  MISMATCH") << '\n';
    };
    std::cout << "input: " << r.input << '\n';
    row("trees", trees, alg_trees);
    row("rooted-forests", forests, alg_forests);
    row("cone-trees", bij.cone_trees, alg_forests);
    std::cout << "bijection: " << (bij.ok() ? "OK" : "FAILED") << " (" << bij.cone_trees << " cone trees, "
              << bij.rooted_forests << " rooted forests)\n";
    if (!bij.counterexample.empty()) std::cout << "counterexample: " << bij.counterexample << '\n';
  }
  return ok ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning trees, rooted forests and Jacobians of graphs and their cones"};
  app.require_subcommand(1);
  Options opt;
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for randomized corpora (accepted for scripting symmetry)");

  auto* inv = app.add_subcommand("invariants", "tau, f, Jac and F of a graph; --cone adds cone invariants");
  inv->add_option("spec", opt.spec, "Graph spec, e.g. C6(1,3) or COB3(1|1)");
  inv->add_option("--edges", opt.edges_file, "Edge-list file: 'n m' then m lines 'u v'");
  inv->add_flag("--cone", opt.cone, "Also report tree count and Jacobian of the cone");
  inv->add_flag("--json", opt.json, "Single-line JSON record");

  auto* fast = app.add_subcommand("fastpath", "Cone Jacobian via the companion-matrix presentation");
  fast->add_option("spec", opt.spec, "Circulant or cobordism spec")->required();
  fast->add_flag("--verify", opt.verify, "Cross-check against coker(I+L) computed directly");
  fast->add_flag("--json", opt.json, "Single-line JSON record");

  auto* closed = app.add_subcommand("closed-form", "Closed-form counts for wheel, mobius-cone, prism-cone");
  closed->add_option("family", opt.family, "wheel | mobius-cone | prism-cone")->required();
  closed->add_option("n", opt.n, "Family parameter")->required();
  closed->add_flag("--verify", opt.verify, "Cross-check against det(I+L)");
  closed->add_flag("--json", opt.json, "Single-line JSON record");

  auto* orc = app.add_subcommand("oracle", "Brute-force enumeration and cone-tree/rooted-forest bijection");
  orc->add_option("spec", opt.spec, "Graph spec");
  orc->add_option("--edges", opt.edges_file, "Edge-list file");
  orc->add_flag("--json", opt.json, "Single-line JSON record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*inv) return cmd_invariants(opt);
    if (*fast) return cmd_fastpath(opt);
    if (*closed) return cmd_closed_form(opt);
    return cmd_oracle(opt);
  } catch (const GuardViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
