#pragma once

#include <conejac/int_matrix.hpp>
#include <conejac/int_poly.hpp>
#include <conejac/integer.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conejac {

/// Integer Laurent polynomial sum_e c_e z^e with only nonzero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const Integer& c) { return term(c, 0); }

  static LaurentPoly term(const Integer& c, long exponent) {
    LaurentPoly p;
    p.add(exponent, c);
    return p;
  }

  /// Builds z^low_exponent * (c_0 + c_1 z + ... ).
  static LaurentPoly from_coefficients(long low_exponent, const std::vector<Integer>& coeffs) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add(low_exponent + static_cast<long>(i), coeffs[i]);
    return p;
  }

  /// sum over jumps of (z^s + z^-s)
  static LaurentPoly symmetric_jumps(const std::vector<std::size_t>& jumps) {
    LaurentPoly p;
    for (auto s : jumps) {
      p.add(static_cast<long>(s), 1);
      p.add(-static_cast<long>(s), 1);
    }
    return p;
  }

  void add(long exponent, const Integer& c) {
    if (c == 0) return;
    Integer& slot = coeffs_[exponent];
    slot += c;
    if (slot == 0) coeffs_.erase(exponent);
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::map<long, Integer>& terms() const noexcept { return coeffs_; }

  Integer coefficient(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  long low() const { return require_nonzero().begin()->first; }
  long high() const { return require_nonzero().rbegin()->first; }
  std::size_t span() const { return static_cast<std::size_t>(high() - low()); }

  /// Lowest and highest coefficients both equal 1.
  bool bimonic() const {
    return !is_zero() && coeffs_.begin()->second == 1 && coeffs_.rbegin()->second == 1;
  }

  /// Coefficients a_0 .. a_span from the lowest exponent upward.
  std::vector<Integer> dense() const {
    std::vector<Integer> v(span() + 1);
    for (const auto& [e, c] : coeffs_) v[static_cast<std::size_t>(e - low())] = c;
    return v;
  }

  /// z^-low * P(z) as an ordinary polynomial.
  IntPoly normalized_poly() const { return IntPoly(dense()); }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [e, c] : b.coeffs_) a.add(e, c);
    return a;
  }

  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [e, c] : b.coeffs_) a.add(e, -c);
    return a;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly{} - a; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) p.add(ea + eb, ca * cb);
    return p;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : coeffs_) {
      const bool neg = sgn(c) < 0;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      const Integer mag = abs_value(c);
      if (mag != 1 || e == 0) out += mag.get_str();
      if (e != 0) out += e == 1 ? "z" : "z^" + std::to_string(e);
    }
    return out;
  }

 private:
  const std::map<long, Integer>& require_nonzero() const {
    if (coeffs_.empty()) throw std::domain_error("LaurentPoly: zero polynomial has no exponent window");
    return coeffs_;
  }

  std::map<long, Integer> coeffs_;
};

/// Companion matrix of a bimonic P(z) = z^p + a_1 z^(p+1) + ... + a_(s-1) z^(p+s-1) + z^(p+s):
/// an s x s matrix with the identity in the upper-right block and last row
/// (-1, -a_1, ..., -a_(s-1)). Its determinant is +-1.
inline IntMatrix companion(const LaurentPoly& p) {
  if (!p.bimonic()) throw std::invalid_argument("companion: polynomial is not bimonic: " + p.to_string());
  const std::size_t s = p.span();
  if (s == 0) throw std::invalid_argument("companion: polynomial span must be at least 1");
  const std::vector<Integer> a = p.dense();
  IntMatrix m(s, s);
  for (std::size_t i = 0; i + 1 < s; ++i) m(i, i + 1) = 1;
  for (std::size_t j = 0; j < s; ++j) m(s - 1, j) = -a[j];
  return m;
}

} // namespace conejac
