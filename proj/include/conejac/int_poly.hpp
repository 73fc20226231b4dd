#pragma once

#include <conejac/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conejac {

/// Univariate polynomial with integer coefficients; coefficient i multiplies x^i.
/// The coefficient vector never ends in a zero, so the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  IntPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPoly monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
  }

  /// x - a
  static IntPoly linear_root(const Integer& a) { return IntPoly(std::vector<Integer>{-a, 1}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of the zero polynomial is reported as -1.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }

  Integer operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntPoly derivative() const {
    std::vector<Integer> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Integer(static_cast<unsigned long>(i)));
    return IntPoly(std::move(d));
  }

  /// p(x + shift)
  IntPoly shifted(const Integer& shift) const {
    IntPoly result;
    IntPoly base(std::vector<Integer>{shift, 1});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      result = result * base + IntPoly(std::vector<Integer>{*it});
    return result;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(c));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      Integer mag = abs_value(c);
      if (first) {
        if (sgn(c) < 0) os << '-';
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      if (mag != 1 || k == 0) os << mag;
      if (k >= 1) os << var;
      if (k >= 2) os << '^' << k;
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of integer polynomial division. Throws
/// std::domain_error when a quotient coefficient is not an integer.
inline std::pair<IntPoly, IntPoly> divmod(const IntPoly& numerator, const IntPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("IntPoly: division by zero polynomial");
  std::vector<Integer> rem = numerator.coefficients();
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  if (rem.size() <= dd) return {IntPoly{}, numerator};
  std::vector<Integer> quot(rem.size() - dd);
  const Integer lead = divisor.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("IntPoly: quotient is not an integer polynomial");
    Integer q;
    mpz_divexact(q.get_mpz_t(), rem[k].get_mpz_t(), lead.get_mpz_t());
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coefficients()[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

} // namespace conejac
