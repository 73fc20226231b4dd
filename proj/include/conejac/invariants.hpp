#pragma once

#include <conejac/abelian_group.hpp>
#include <conejac/exact_linalg.hpp>
#include <conejac/int_poly.hpp>
#include <conejac/multigraph.hpp>

#include <cstddef>
#include <stdexcept>

namespace conejac {

namespace detail {

inline IntMatrix shifted_laplacian(const Multigraph& g) {
  return IntMatrix::identity(g.vertex_count()) + laplacian(g);
}

} // namespace detail

/// Number of spanning trees: Kirchhoff minor with row and column 0 deleted.
inline Integer tree_count(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("tree_count: graph has no vertices");
  const IntMatrix l = laplacian(g);
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) minor(i - 1, j - 1) = l(i, j);
  return determinant(minor);
}

/// Spanning trees from the Laplacian characteristic polynomial:
/// tau = (-1)^(n-1) chi'(0) / n.
inline Integer tree_count_via_charpoly(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("tree_count_via_charpoly: graph has no vertices");
  const Integer linear = char_poly(laplacian(g)).coefficient(1);
  Integer tau = detail::exact_div(linear, Integer(static_cast<unsigned long>(n)));
  if (n % 2 == 0) tau = -tau;
  return tau;
}

/// Number of rooted spanning forests, det(I + L).
inline Integer forest_count(const Multigraph& g) { return determinant(detail::shifted_laplacian(g)); }

/// Torsion part of coker L. The free rank reports components beyond the first,
/// so it is zero exactly for connected graphs.
inline AbelianGroup jacobian(const Multigraph& g) {
  const AbelianGroup coker = cokernel(laplacian(g));
  const std::size_t extra = coker.free_rank() == 0 ? 0 : coker.free_rank() - 1;
  return AbelianGroup::from_cyclic(coker.torsion(), extra);
}

/// coker(I + L); always finite of order forest_count(g).
inline AbelianGroup forest_group(const Multigraph& g) { return cokernel(detail::shifted_laplacian(g)); }

/// Spanning trees of the cone over g, which equals the rooted forest count of g.
inline Integer cone_tree_count(const Multigraph& g) { return forest_count(g); }

/// |chi_G(-1)|, the same count read off the Laplacian characteristic polynomial.
inline Integer cone_tree_count_via_charpoly(const Multigraph& g) {
  return abs_value(char_poly(laplacian(g))(Integer(-1)));
}

/// Jacobian of the cone over g, presented as the forest group of g.
inline AbelianGroup cone_jacobian(const Multigraph& g) { return forest_group(g); }

/// Laplacian characteristic polynomial of the join G1 * G2 from those of its
/// parts (orders m and n):
///   chi(x) = x (x - n - m) chi1(x - n) chi2(x - m) / ((x - n)(x - m)).
/// A nonzero remainder means the inputs were not Laplacian polynomials.
inline IntPoly joint_char_poly(const IntPoly& chi1, std::size_t m, const IntPoly& chi2, std::size_t n) {
  const Integer mm = static_cast<unsigned long>(m);
  const Integer nn = static_cast<unsigned long>(n);
  const IntPoly numerator = IntPoly::linear_root(0) * IntPoly::linear_root(nn + mm) * chi1.shifted(-nn) *
                            chi2.shifted(-mm);
  const IntPoly denominator = IntPoly::linear_root(nn) * IntPoly::linear_root(mm);
  auto [quotient, remainder] = divmod(numerator, denominator);
  if (!remainder.is_zero())
    throw std::domain_error("joint_char_poly: inputs are not Laplacian characteristic polynomials");
  return quotient;
}

} // namespace conejac
