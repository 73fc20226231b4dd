#pragma once

#include <conejac/abelian_group.hpp>
#include <conejac/int_matrix.hpp>
#include <conejac/int_poly.hpp>
#include <conejac/integer.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace conejac {

namespace detail {

inline void require_square(const IntMatrix& m, const char* who) {
  if (!m.square()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
}

inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace detail

/// Exact determinant by Bareiss fraction-free elimination.
inline Integer determinant(const IntMatrix& m) {
  detail::require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = detail::exact_div(t, prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Integer d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

/// det(x I - m) as a monic polynomial in x. Evaluates the determinant at the
/// nodes x = 0..n and recovers the coefficients by Newton interpolation.
inline IntPoly char_poly(const IntMatrix& m) {
  detail::require_square(m, "char_poly");
  const std::size_t n = m.rows();
  std::vector<Rational> dd(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix shifted = IntMatrix::identity(n) * Integer(static_cast<unsigned long>(x)) - m;
    dd[x] = Rational(determinant(shifted));
  }
  // Divided differences on unit-spaced nodes: level k divides by k.
  for (std::size_t level = 1; level <= n; ++level) {
    for (std::size_t i = n; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<unsigned long>(level));
      if (i == level) break;
    }
  }
  // Horner on the Newton form: c0 + (x-0)(c1 + (x-1)(c2 + ...)).
  std::vector<Rational> acc{dd[n]};
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Rational> next(acc.size() + 1);
    const Rational node(static_cast<unsigned long>(k));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= node * acc[i];
    }
    next[0] += dd[k];
    acc = std::move(next);
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(acc.size());
  for (auto& c : acc) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("char_poly: non-integral coefficient");
    coeffs.push_back(c.get_num());
  }
  IntPoly p(std::move(coeffs));
  if (p.degree() != static_cast<long>(n) || p.leading() != 1)
    throw std::logic_error("char_poly: result is not monic of full degree");
  return p;
}

/// Inverse of a matrix with determinant +-1; the result is again an integer
/// matrix. Throws std::domain_error for any other determinant.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  detail::require_square(m, "unimodular_inverse");
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = Rational(m(i, j));
    at(i, n + i) = 1;
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && at(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("unimodular_inverse: matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(c, j));
      det = -det;
    }
    const Rational pivot = at(c, c);
    det *= pivot;
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || at(i, c) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  if (abs(det) != 1) throw std::domain_error("unimodular_inverse: |det| != 1");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = at(i, n + j);
      v.canonicalize();
      inv(i, j) = v.get_num();
    }
  return inv;
}

/// m^e by binary powering. Negative exponents require |det m| = 1.
inline IntMatrix mat_pow(const IntMatrix& m, long e) {
  detail::require_square(m, "mat_pow");
  IntMatrix base = e < 0 ? unimodular_inverse(m) : m;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  IntMatrix result = IntMatrix::identity(m.rows());
  while (k != 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

struct SmithForm {
  /// d_1 | d_2 | ... on the main diagonal, length min(rows, cols), all >= 0.
  std::vector<Integer> diagonal;
  /// Cokernel of the matrix viewed as Z^cols -> Z^rows.
  AbelianGroup group;
};

namespace detail {

inline std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || mpz_cmpabs(a(i, j).get_mpz_t(), a(best->first, best->second).get_mpz_t()) < 0) {
        best = std::make_pair(i, j);
        if (abs(a(i, j)) == 1) return best;
      }
    }
  }
  return best;
}

inline void row_axpy(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
  for (std::size_t j = from; j < a.cols(); ++j)
    if (a(src, j) != 0) a(dst, j) -= q * a(src, j);
}

inline void col_axpy(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
  for (std::size_t i = from; i < a.rows(); ++i)
    if (a(i, src) != 0) a(i, dst) -= q * a(i, src);
}

} // namespace detail

/// Smith normal form by unimodular row and column operations. The pivot is
/// always a nonzero entry of least absolute value in the active block; its row
/// and column are cleared by Euclidean steps, and a pivot that fails to divide
/// the rest of the block absorbs the offending row and is reduced again.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  const std::size_t steps = std::min(r, c);
  std::vector<Integer> diag(steps);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    for (;;) {
      auto pivot = detail::min_abs_entry(a, t);
      if (!pivot) break;
      a.swap_rows(t, pivot->first);
      a.swap_cols(t, pivot->second);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        detail::row_axpy(a, i, t, q, t);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        detail::col_axpy(a, j, t, q, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Row and column are clear; enforce d_t | rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            detail::row_axpy(a, t, i, Integer(-1), t);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a(t, t) == 0) break;  // remaining block is zero
    diag[t] = abs_value(a(t, t));
  }

  SmithForm out;
  out.diagonal = std::move(diag);
  std::size_t nonzero = 0;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < out.diagonal.size(); ++i) {
    if (out.diagonal[i] == 0) continue;
    ++nonzero;
    orders.push_back(out.diagonal[i]);
    if (i + 1 < out.diagonal.size() && out.diagonal[i + 1] != 0 &&
        !mpz_divisible_p(out.diagonal[i + 1].get_mpz_t(), out.diagonal[i].get_mpz_t()))
      throw std::logic_error("smith_normal_form: divisibility chain broken");
  }
  out.group = AbelianGroup::from_cyclic(std::move(orders), r - nonzero);
  return out;
}

/// Z^rows / im(m).
inline AbelianGroup cokernel(const IntMatrix& m) { return smith_normal_form(m).group; }

} // namespace conejac
