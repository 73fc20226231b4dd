#pragma once

#include <conejac/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace conejac {

/// Finitely generated abelian group Z_{d1} + ... + Z_{dk} + Z^r in invariant-factor
/// form: every d_i >= 2, d_i | d_{i+1}, factors ascending. Equality of groups is
/// equality of these lists.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Builds the canonical form of Z_{c1} + Z_{c2} + ... + Z^free_rank from arbitrary
  /// cyclic orders. Orders 0 count as free summands; units are dropped.
  static AbelianGroup from_cyclic(std::vector<Integer> orders, std::size_t free_rank = 0) {
    std::vector<Integer> finite;
    for (auto& c : orders) {
      Integer a = abs_value(c);
      if (a == 0)
        ++free_rank;
      else if (a != 1)
        finite.push_back(std::move(a));
    }
    // Pairwise (gcd, lcm) replacement converges to the invariant factors.
    for (std::size_t i = 0; i < finite.size(); ++i) {
      for (std::size_t j = i + 1; j < finite.size(); ++j) {
        Integer g = gcd(finite[i], finite[j]);
        Integer l = lcm(finite[i], finite[j]);
        finite[i] = g;
        finite[j] = l;
      }
    }
    AbelianGroup group;
    group.free_rank_ = free_rank;
    for (auto& f : finite)
      if (f != 1) group.torsion_.push_back(std::move(f));
    group.check();
    return group;
  }

  static AbelianGroup from_cyclic(std::initializer_list<long> orders, std::size_t free_rank = 0) {
    std::vector<Integer> v;
    for (long o : orders) v.emplace_back(o);
    return from_cyclic(std::move(v), free_rank);
  }

  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  bool trivial() const noexcept { return torsion_.empty() && free_rank_ == 0; }

  /// Product of the torsion factors. Only finite groups have an order.
  Integer order() const {
    if (free_rank_ != 0) throw std::domain_error("AbelianGroup: infinite group has no order");
    return torsion_order();
  }

  Integer torsion_order() const {
    Integer p = 1;
    for (const auto& d : torsion_) p *= d;
    return p;
  }

  AbelianGroup torsion_subgroup() const {
    AbelianGroup t = *this;
    t.free_rank_ = 0;
    return t;
  }

  /// "Z_3 + Z_15", "Z_3 + Z^1", or "0" for the trivial group.
  std::string to_string() const {
    if (trivial()) return "0";
    std::string out;
    for (const auto& d : torsion_) {
      if (!out.empty()) out += " + ";
      out += "Z_" + d.get_str();
    }
    if (free_rank_ != 0) {
      if (!out.empty()) out += " + ";
      out += "Z^" + std::to_string(free_rank_);
    }
    return out;
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }

  friend std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) { return os << g.to_string(); }

 private:
  void check() const {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      if (torsion_[i] < 2) throw std::logic_error("AbelianGroup: invariant factor below 2");
      if (i + 1 < torsion_.size() &&
          !mpz_divisible_p(torsion_[i + 1].get_mpz_t(), torsion_[i].get_mpz_t()))
        throw std::logic_error("AbelianGroup: divisibility chain broken");
    }
  }

  std::vector<Integer> torsion_;
  std::size_t free_rank_ = 0;
};

} // namespace conejac
