#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace conejac;

namespace {

std::vector<Integer> cheb_prefix(long x, std::size_t count) {
  std::vector<Integer> out;
  for (std::size_t n = 0; n < count; ++n) out.push_back(cheb2(x, n));
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST(Cheb2, Sequences) {
  EXPECT_EQ(cheb_prefix(3, 6), ints({2, 3, 7, 18, 47, 123}));
  EXPECT_EQ(cheb_prefix(2, 8), ints({2, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(cheb_prefix(5, 5), ints({2, 5, 23, 110, 527}));
  EXPECT_EQ(cheb2(5, 5), 2525);
}

TEST(FibonacciLucas, Values) {
  EXPECT_EQ(fibonacci(4), 3);
  EXPECT_EQ(lucas(4), 7);
  EXPECT_EQ(fibonacci(0), 0);
  EXPECT_EQ(lucas(0), 2);
  EXPECT_EQ(lucas(5), 11);
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(lucas(2 * n), cheb2(3, n)) << n;
}

TEST(Wheel, TreeCounts) {
  EXPECT_EQ(wheel_tree_count(3), 16);
  EXPECT_EQ(wheel_tree_count(4), 45);
  EXPECT_EQ(wheel_tree_count(5), 121);
  EXPECT_THROW(wheel_tree_count(2), std::domain_error);
  for (std::size_t n = 3; n <= 12; ++n) {
    const Multigraph cycle = circulant({n, {1}});
    ASSERT_EQ(wheel_tree_count(n), forest_count(cycle));
    ASSERT_EQ(wheel_tree_count(n), tree_count(cone(cycle)));
  }
}

TEST(Wheel, Jacobians) {
  EXPECT_EQ(wheel_jacobian(4), AbelianGroup::from_cyclic({3, 15}));
  EXPECT_EQ(wheel_jacobian(5), AbelianGroup::from_cyclic({11, 11}));
  EXPECT_EQ(wheel_jacobian(3), AbelianGroup::from_cyclic({4, 4}));
  EXPECT_EQ(wheel_jacobian(3), jacobian(conejac::testing::complete_graph(4)));
  EXPECT_THROW(wheel_jacobian(1), std::domain_error);
  for (std::size_t n = 3; n <= 30; ++n) {
    ASSERT_EQ(wheel_jacobian(n).order(), wheel_tree_count(n));
    ASSERT_EQ(wheel_jacobian(n), forest_group(circulant({n, {1}}))) << n;
    // F_n * 5 F_n = L_2n - 2 (n even), L_n^2 = L_2n - 2 (n odd)
    const Integer lhs = n % 2 == 0 ? Integer(5 * fibonacci(n) * fibonacci(n)) : Integer(lucas(n) * lucas(n));
    ASSERT_EQ(lhs, lucas(2 * n) - 2);
  }
}

TEST(MobiusCone, TreeCounts) {
  EXPECT_EQ(mobius_cone_tree_count(2), 125);
  EXPECT_EQ(mobius_cone_tree_count(3), 1792);
  EXPECT_EQ(mobius_cone_tree_count(4), 23805);
  EXPECT_THROW(mobius_cone_tree_count(1), std::domain_error);
  for (std::size_t n = 2; n <= 10; ++n)
    ASSERT_EQ(mobius_cone_tree_count(n), forest_count(circulant({2 * n, {1, n}}))) << n;
}

TEST(PrismCone, TreeCounts) {
  EXPECT_EQ(prism_cone_tree_count(3), 1728);
  EXPECT_EQ(prism_cone_tree_count(4), 23625);
  EXPECT_EQ(prism_cone_tree_count(5), 305283);
  EXPECT_THROW(prism_cone_tree_count(2), std::domain_error);
  for (std::size_t n = 3; n <= 10; ++n)
    ASSERT_EQ(prism_cone_tree_count(n), forest_count(cobordism({n, {1}, {1}}))) << n;
}
