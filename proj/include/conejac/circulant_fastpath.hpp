#pragma once

#include <conejac/abelian_group.hpp>
#include <conejac/exact_linalg.hpp>
#include <conejac/graph_io.hpp>
#include <conejac/laurent_poly.hpp>
#include <conejac/multigraph.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace conejac {

/// Which companion-matrix presentation produced a cone Jacobian.
enum class FastPath { EvenCirculant, OddCirculant, Cobordism };

inline const char* path_name(FastPath p) {
  switch (p) {
    case FastPath::EvenCirculant: return "even-circulant-companion";
    case FastPath::OddCirculant: return "odd-circulant-companion";
    case FastPath::Cobordism: return "cobordism-companion";
  }
  return "unknown";
}

struct FastPathResult {
  AbelianGroup group;
  FastPath path;
  /// The small integer matrix whose cokernel is `group`.
  IntMatrix presentation;
};

/// (2k + 1) - sum_l (z^s_l + z^-s_l), negated so that both extreme
/// coefficients are +1. Negation does not change any cokernel built from it.
inline LaurentPoly laurent_from_jumps_even(const std::vector<std::size_t>& jumps) {
  if (jumps.empty()) throw std::invalid_argument("laurent_from_jumps_even: empty jump list");
  const Integer k = static_cast<unsigned long>(jumps.size());
  const LaurentPoly raw = LaurentPoly::constant(2 * k + 1) - LaurentPoly::symmetric_jumps(jumps);
  return -raw;
}

/// (2k + 2 - sum_l (z^s_l + z^-s_l))^2 - 1
inline LaurentPoly laurent_from_jumps_odd(const std::vector<std::size_t>& jumps) {
  if (jumps.empty()) throw std::invalid_argument("laurent_from_jumps_odd: need at least one jump besides n");
  const Integer k = static_cast<unsigned long>(jumps.size());
  const LaurentPoly base = LaurentPoly::constant(2 * k + 2) - LaurentPoly::symmetric_jumps(jumps);
  return base * base - LaurentPoly::constant(1);
}

/// (2k + 2 - sum_r (z^s1_r + z^-s1_r)) (2l + 2 - sum_r (z^s2_r + z^-s2_r)) - 1
inline LaurentPoly laurent_from_cobordism(const std::vector<std::size_t>& jumps1,
                                          const std::vector<std::size_t>& jumps2) {
  if (jumps1.empty() || jumps2.empty())
    throw std::invalid_argument("laurent_from_cobordism: empty jump list");
  const Integer k = static_cast<unsigned long>(jumps1.size());
  const Integer l = static_cast<unsigned long>(jumps2.size());
  const LaurentPoly first = LaurentPoly::constant(2 * k + 2) - LaurentPoly::symmetric_jumps(jumps1);
  const LaurentPoly second = LaurentPoly::constant(2 * l + 2) - LaurentPoly::symmetric_jumps(jumps2);
  return first * second - LaurentPoly::constant(1);
}

/// coker(A^n - I) for the companion matrix A of p; isomorphic to the cokernel
/// of the n x n circulant operator P(T_n).
inline AbelianGroup companion_power_cokernel(const LaurentPoly& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("companion_power_cokernel: n must be positive");
  const IntMatrix a = companion(p);
  return cokernel(mat_pow(a, static_cast<long>(n)) - IntMatrix::identity(a.rows()));
}

/// Jacobian of the cone over C_n(s_1..s_k) with every s_l < n/2.
inline FastPathResult even_cone_jacobian(const CirculantSpec& spec) {
  spec.validate();
  if (spec.has_half_jump())
    throw std::invalid_argument("even_cone_jacobian: jump n/2 present; use odd_cone_jacobian for " +
                                spec.to_string());
  const IntMatrix a = companion(laurent_from_jumps_even(spec.jumps));
  IntMatrix m = mat_pow(a, static_cast<long>(spec.n)) - IntMatrix::identity(a.rows());
  AbelianGroup g = cokernel(m);
  return {std::move(g), FastPath::EvenCirculant, std::move(m)};
}

/// Jacobian of the cone over C_2n(s_1..s_k, n) with 1 <= s_1 < ... < s_k < n:
///   coker(A^n - (2k+2) I + sum_j (A^s_j + A^-s_j)),
/// A the companion of (2k + 2 - sum_j (z^s_j + z^-s_j))^2 - 1.
inline FastPathResult odd_cone_jacobian(const std::vector<std::size_t>& jumps, std::size_t n) {
  if (n == 0) throw std::invalid_argument("odd_cone_jacobian: n must be positive");
  std::vector<std::size_t> all = jumps;
  all.push_back(n);
  CirculantSpec{2 * n, all}.validate();
  const IntMatrix a = companion(laurent_from_jumps_odd(jumps));
  const IntMatrix a_inv = unimodular_inverse(a);
  const std::size_t size = a.rows();
  const Integer k = static_cast<unsigned long>(jumps.size());
  IntMatrix m = mat_pow(a, static_cast<long>(n)) - IntMatrix::identity(size) * (2 * k + 2);
  for (auto s : jumps) {
    m += mat_pow(a, static_cast<long>(s));
    m += mat_pow(a_inv, static_cast<long>(s));
  }
  AbelianGroup g = cokernel(m);
  return {std::move(g), FastPath::OddCirculant, std::move(m)};
}

inline FastPathResult odd_cone_jacobian(const CirculantSpec& spec) {
  spec.validate();
  if (!spec.has_half_jump())
    throw std::invalid_argument("odd_cone_jacobian: " + spec.to_string() + " has no jump n/2");
  std::vector<std::size_t> jumps(spec.jumps.begin(), spec.jumps.end() - 1);
  return odd_cone_jacobian(jumps, spec.n / 2);
}

/// Jacobian of the cone over the cobordism of C_n(jumps1) and C_n(jumps2):
/// coker(A^n - I) for A the companion of the product polynomial minus one.
inline FastPathResult cobordism_cone_jacobian(const CobordismSpec& spec) {
  spec.validate();
  const IntMatrix a = companion(laurent_from_cobordism(spec.jumps1, spec.jumps2));
  IntMatrix m = mat_pow(a, static_cast<long>(spec.n)) - IntMatrix::identity(a.rows());
  AbelianGroup g = cokernel(m);
  return {std::move(g), FastPath::Cobordism, std::move(m)};
}

/// Dispatches on the spec shape: even or odd circulant, or cobordism.
inline FastPathResult fast_cone_jacobian(const GraphSpec& spec) {
  if (const auto* circ = std::get_if<CirculantSpec>(&spec))
    return circ->has_half_jump() ? odd_cone_jacobian(*circ) : even_cone_jacobian(*circ);
  return cobordism_cone_jacobian(std::get<CobordismSpec>(spec));
}

} // namespace conejac
