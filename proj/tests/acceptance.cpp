// Acceptance gate: every check is an exact integer or group equality.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include "test_support.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace conejac;
namespace t = conejac::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first mismatch and a count of checked cases.
class Tally {
 public:
  template <class A, class B>
  bool equal(const A& a, const B& b, const std::string& what) {
    ++checked_;
    if (a == b) return true;
    fail(what);
    return false;
  }
  bool expect(bool cond, const std::string& what) {
    ++checked_;
    if (!cond) fail(what);
    return cond;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << checked_ << " checks, " << summary;
    if (!first_failure_.empty()) os << "; first failure: " << first_failure_ << " (" << failures_ << " total)";
    return {failures_ == 0, os.str()};
  }

 private:
  void fail(const std::string& what) {
    if (failures_++ == 0) first_failure_ = what;
  }
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

std::string describe(const Multigraph& g) { return write_edge_list(g); }

std::vector<Multigraph> random_guarded_multigraphs(std::mt19937_64& rng, std::size_t count) {
  // The cone must stay within the enumeration guard: n + 1 vertices, m + n edges.
  std::vector<Multigraph> out;
  std::uniform_int_distribution<std::size_t> vertices(2, kOracleMaxVertices - 1);
  while (out.size() < count) {
    const std::size_t n = vertices(rng);
    const std::size_t max_edges = std::min<std::size_t>(kOracleMaxEdges - n, 16);
    std::uniform_int_distribution<std::size_t> edges(n - 1, max_edges);
    Multigraph g = t::random_multigraph(rng, n, edges(rng));
    out.push_back(std::move(g));
  }
  return out;
}

Multigraph random_simple_graph(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::bernoulli_distribution keep(density(rng));
  Multigraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (keep(rng)) g.add_edge(u, v);
  return g;
}

IntMatrix identity_plus_laplacian(const Multigraph& g) {
  return IntMatrix::identity(g.vertex_count()) + laplacian(g);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240611;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--seed N]\n";
      return 2;
    }
  }
  std::cout << "seed " << seed << "\n";
  std::mt19937_64 rng(seed);

  const std::vector<Multigraph> corpus = t::connected_graph_corpus(6);
  const std::vector<Multigraph> extra = random_guarded_multigraphs(rng, 25);
  std::vector<const Multigraph*> all_graphs;
  for (const auto& g : corpus) all_graphs.push_back(&g);
  for (const auto& g : extra) all_graphs.push_back(&g);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("cone spanning trees = det(I+L) = rooted spanning forests", [&] {
    Tally tally;
    for (const Multigraph* g : all_graphs) {
      const Integer f = forest_count(*g);
      tally.equal(enumerate_spanning_trees(cone(*g)), f, "cone trees\n" + describe(*g));
      tally.equal(enumerate_rooted_forests(*g), f, "rooted forests\n" + describe(*g));
    }
    return tally.outcome(std::to_string(corpus.size()) + " corpus graphs + " + std::to_string(extra.size()) +
                         " random multigraphs");
  });

  criteria.emplace_back("Jac(cone G) = coker(I+L(G))", [&] {
    Tally tally;
    for (const Multigraph* g : all_graphs)
      tally.equal(jacobian(cone(*g)), forest_group(*g), "group\n" + describe(*g));
    return tally.outcome(std::to_string(all_graphs.size()) + " graphs");
  });

  criteria.emplace_back("|chi(-1)| = det(I+L)", [&] {
    Tally tally;
    std::uniform_int_distribution<std::size_t> size(1, 12);
    for (int i = 0; i < 200; ++i) {
      const Multigraph g = random_simple_graph(rng, size(rng));
      tally.equal(cone_tree_count_via_charpoly(g), determinant(identity_plus_laplacian(g)), describe(g));
    }
    return tally.outcome("200 random graphs on <= 12 vertices");
  });

  criteria.emplace_back("coker P(T_n) = coker(A^n - I) for bimonic P", [&] {
    Tally tally;
    for (int i = 0; i < 50; ++i) {
      const LaurentPoly p = t::random_bimonic(rng, 6, 6);
      for (std::size_t n = 1; n <= 12; ++n)
        tally.equal(cokernel(t::laurent_at_shift(p, n)), companion_power_cokernel(p, n),
                    p.to_string() + " n=" + std::to_string(n));
    }
    return tally.outcome("50 polynomials x n in [1,12]");
  });

  criteria.emplace_back("even circulant fast path = forest group", [&] {
    Tally tally;
    for (std::size_t n = 3; n <= 12; ++n)
      for (const auto& jumps : t::jump_sets((n - 1) / 2, 2)) {
        const CirculantSpec spec{n, jumps};
        tally.equal(even_cone_jacobian(spec).group, forest_group(circulant(spec)), spec.to_string());
      }
    return tally.outcome("n in [3,12], up to 2 jumps");
  });

  criteria.emplace_back("odd circulant fast path = forest group of C_2n(jumps, n)", [&] {
    Tally tally;
    for (std::size_t n = 2; n <= 8; ++n)
      for (const auto& jumps : t::jump_sets(n - 1, 2)) {
        std::vector<std::size_t> with_half = jumps;
        with_half.push_back(n);
        const CirculantSpec spec{2 * n, with_half};
        tally.equal(odd_cone_jacobian(jumps, n).group, forest_group(circulant(spec)), spec.to_string());
      }
    return tally.outcome("n in [2,8], up to 2 jumps");
  });

  criteria.emplace_back("cobordism fast path = forest group", [&] {
    Tally tally;
    for (std::size_t n = 3; n <= 8; ++n) {
      const auto sets = t::jump_sets((n - 1) / 2, 2);
      for (const auto& j1 : sets)
        for (const auto& j2 : sets) {
          const CobordismSpec spec{n, j1, j2};
          tally.equal(cobordism_cone_jacobian(spec).group, forest_group(cobordism(spec)), spec.to_string());
        }
    }
    return tally.outcome("n in [3,8], up to 2 jumps per layer");
  });

  criteria.emplace_back("wheel Jacobian and tree count", [&] {
    Tally tally;
    for (std::size_t n = 3; n <= 40; ++n) {
      const Multigraph w = cone(circulant({n, {1}}));
      const AbelianGroup direct = cokernel(laplacian(w)).torsion_subgroup();
      const AbelianGroup expected = n % 2 == 0
                                        ? AbelianGroup::from_cyclic({fibonacci(n), 5 * fibonacci(n)})
                                        : AbelianGroup::from_cyclic({lucas(n), lucas(n)});
      const std::string tag = "W(" + std::to_string(n) + ")";
      tally.equal(direct, expected, tag + " group");
      tally.equal(direct, wheel_jacobian(n), tag + " closed-form group");
      tally.equal(tree_count(w), cheb2(3, n) - 2, tag + " tree count");
      tally.equal(wheel_tree_count(n), tree_count(w), tag + " closed-form tree count");
    }
    const AbelianGroup w4 = jacobian(cone(circulant({4, {1}})));
    tally.equal(w4, AbelianGroup::from_cyclic({3, 15}), "W(4) = Z_3 + Z_15");
    tally.equal(w4.order(), Integer(45), "W(4) order 45");
    return tally.outcome("n in [3,40], W(4) = " + w4.to_string());
  });

  criteria.emplace_back("Moebius and prism cone tree counts", [&] {
    Tally tally;
    for (std::size_t n = 2; n <= 40; ++n)
      tally.equal(mobius_cone_tree_count(n), determinant(identity_plus_laplacian(circulant({2 * n, {1, n}}))),
                  "Moebius n=" + std::to_string(n));
    for (std::size_t n = 3; n <= 40; ++n)
      tally.equal(prism_cone_tree_count(n), determinant(identity_plus_laplacian(cobordism({n, {1}, {1}}))),
                  "prism n=" + std::to_string(n));
    tally.equal(mobius_cone_tree_count(2), Integer(125), "Moebius n=2 is 125");
    tally.equal(prism_cone_tree_count(3), Integer(1728), "prism n=3 is 1728");
    return tally.outcome("Moebius n in [2,40], prism n in [3,40]");
  });

  criteria.emplace_back("Smith form chain, order = |det|, minor-gcd factors", [&] {
    Tally tally;
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int i = 0; i < 500; ++i) {
      const IntMatrix m = t::random_matrix(rng, dim(rng), dim(rng), -4, 4);
      std::ostringstream os;
      os << m;
      const SmithForm snf = smith_normal_form(m);
      bool chain = true;
      for (std::size_t k = 0; k + 1 < snf.diagonal.size(); ++k) {
        const Integer& a = snf.diagonal[k];
        const Integer& b = snf.diagonal[k + 1];
        if (a == 0 ? b != 0 : b % a != 0) chain = false;
      }
      tally.expect(chain, "chain " + os.str());
      tally.equal(snf.diagonal, t::minor_gcd_factors(m), "factors " + os.str());
      if (m.square()) {
        const Integer d = t::cofactor_det(m);
        if (d != 0) tally.equal(snf.group.order(), abs_value(d), "order " + os.str());
      }
    }
    return tally.outcome("500 matrices up to 5x5, entries in [-4,4]");
  });

  criteria.emplace_back("cone tree to rooted forest bijection", [&] {
    Tally tally;
    for (const Multigraph* g : all_graphs) {
      const BijectionReport r = bijection_check(*g);
      tally.expect(r.ok(), describe(*g) + r.counterexample);
    }
    return tally.outcome(std::to_string(all_graphs.size()) + " graphs");
  });

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_ok = all_ok && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  [" << o.detail
              << ", " << std::fixed << std::setprecision(2) << secs << "s]" << std::endl;
  }
  std::cout << (all_ok ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all_ok ? 0 : 1;
}
