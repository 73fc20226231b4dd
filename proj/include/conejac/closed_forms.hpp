#pragma once

#include <conejac/abelian_group.hpp>
#include <conejac/integer.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace conejac {

/// a_n = 2 T_n(x/2): a_0 = 2, a_1 = x, a_n = x a_(n-1) - a_(n-2).
inline Integer cheb2(const Integer& x, std::size_t n) {
  Integer prev = 2, cur = x;
  if (n == 0) return prev;
  for (std::size_t i = 1; i < n; ++i) {
    Integer next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace detail {

inline Integer fibonacci_like(Integer a, Integer b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    Integer next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

inline void require_min(std::size_t n, std::size_t min, const char* family) {
  if (n < min)
    throw std::domain_error(std::string(family) + ": n must be at least " + std::to_string(min) + ", got " +
                            std::to_string(n));
}

} // namespace detail

inline Integer fibonacci(std::size_t n) { return detail::fibonacci_like(0, 1, n); }
inline Integer lucas(std::size_t n) { return detail::fibonacci_like(2, 1, n); }

/// Spanning trees of the wheel W(n) = cone over C_n: 2 T_n(3/2) - 2.
inline Integer wheel_tree_count(std::size_t n) {
  detail::require_min(n, 3, "wheel");
  return cheb2(3, n) - 2;
}

/// Z_{F_n} + Z_{5 F_n} for even n, Z_{L_n} + Z_{L_n} for odd n.
inline AbelianGroup wheel_jacobian(std::size_t n) {
  detail::require_min(n, 3, "wheel");
  if (n % 2 == 0) {
    const Integer f = fibonacci(n);
    return AbelianGroup::from_cyclic(std::vector<Integer>{f, 5 * f});
  }
  const Integer l = lucas(n);
  return AbelianGroup::from_cyclic(std::vector<Integer>{l, l});
}

/// Spanning trees of the cone over the Moebius ladder C_2n(1, n):
/// 4 (T_n(3/2) - 1)(T_n(5/2) + 1) = (a_n(3) - 2)(a_n(5) + 2).
inline Integer mobius_cone_tree_count(std::size_t n) {
  detail::require_min(n, 2, "mobius-cone");
  return (cheb2(3, n) - 2) * (cheb2(5, n) + 2);
}

/// Spanning trees of the cone over the prism C_n x K_2:
/// 4 (T_n(3/2) - 1)(T_n(5/2) - 1) = (a_n(3) - 2)(a_n(5) - 2).
inline Integer prism_cone_tree_count(std::size_t n) {
  detail::require_min(n, 3, "prism-cone");
  return (cheb2(3, n) - 2) * (cheb2(5, n) - 2);
}

} // namespace conejac
