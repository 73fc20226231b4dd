#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the elimination, Smith-form or companion-matrix code it is used to check.

#include <conejac.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace conejac::testing {

/// Laplace expansion along the first row. Exponential; meant for n <= 7.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) sub(i - 1, c++) = m(i, k);
    Integer term = m(0, j) * cofactor_det(sub);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

inline void choose(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                   std::vector<std::size_t>& cur, std::size_t from = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

/// d_i = delta_i / delta_(i-1), delta_i the gcd of all i x i minors.
inline std::vector<Integer> minor_gcd_factors(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<Integer> d(r, 0);
  Integer prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    choose(m.rows(), k, rows, cur);
    choose(m.cols(), k, cols, cur);
    Integer delta = 0;
    for (const auto& rs : rows) {
      for (const auto& cs : cols) {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rs[a], cs[b]);
        delta = gcd(delta, cofactor_det(sub));
      }
    }
    if (delta == 0) break;
    d[k - 1] = delta / prev;
    prev = delta;
  }
  return d;
}

/// T_n = circ(0, 1, 0, ..., 0)
inline IntMatrix shift_matrix(std::size_t n) {
  IntMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) t(i, (i + 1) % n) = 1;
  return t;
}

/// P(T_n) assembled term by term from explicit shift-matrix products.
inline IntMatrix laurent_at_shift(const LaurentPoly& p, std::size_t n) {
  const IntMatrix t = shift_matrix(n);
  IntMatrix out(n, n);
  for (const auto& [e, c] : p.terms()) {
    const long r = ((e % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
    IntMatrix power = IntMatrix::identity(n);
    for (long i = 0; i < r; ++i) power = power * t;
    out += power * c;
  }
  return out;
}

inline Multigraph complete_graph(std::size_t n) {
  Multigraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Multigraph path_graph(std::size_t n) {
  Multigraph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Every simple graph on n labelled vertices, in edge-bitmask order.
inline std::vector<Multigraph> all_simple_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Multigraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Multigraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1U) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

/// Connected simple graphs on 1..max_n vertices, labelled (isomorphs included).
inline std::vector<Multigraph> connected_graph_corpus(std::size_t max_n) {
  std::vector<Multigraph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : all_simple_graphs(n))
      if (g.connected()) out.push_back(std::move(g));
  return out;
}

/// Random loopless multigraph with n vertices and m edges (parallel edges allowed).
inline Multigraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  Multigraph g(n);
  if (n < 2) return g;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (g.edge_count() < m) {
    const std::size_t u = pick(rng), v = pick(rng);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

/// Product of random elementary integer operations (row additions, swaps, negations).
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, std::size_t steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t a = idx(rng), b = idx(rng);
    switch (kind(rng)) {
      case 0:
        if (a != b) {
          const Integer q = coef(rng);
          for (std::size_t j = 0; j < n; ++j) u(a, j) += q * u(b, j);
        }
        break;
      case 1:
        u.swap_rows(a, b);
        break;
      default:
        for (std::size_t j = 0; j < n; ++j) u(a, j) = -u(a, j);
    }
  }
  return u;
}

/// Random bimonic Laurent polynomial with span in [1, max_span] and inner
/// coefficients in [-bound, bound].
inline LaurentPoly random_bimonic(std::mt19937_64& rng, std::size_t max_span, long bound) {
  std::uniform_int_distribution<std::size_t> span_dist(1, max_span);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::uniform_int_distribution<long> low(-3, 3);
  const std::size_t s = span_dist(rng);
  std::vector<Integer> c(s + 1);
  c.front() = 1;
  c.back() = 1;
  for (std::size_t i = 1; i < s; ++i) c[i] = coef(rng);
  return LaurentPoly::from_coefficients(low(rng), c);
}

/// All strictly increasing jump lists of size 1..max_size drawn from [1, limit].
inline std::vector<std::vector<std::size_t>> jump_sets(std::size_t limit, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 1; a <= limit; ++a) {
    out.push_back({a});
    if (max_size >= 2)
      for (std::size_t b = a + 1; b <= limit; ++b) out.push_back({a, b});
  }
  return out;
}

} // namespace conejac::testing
