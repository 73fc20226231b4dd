#pragma once

#include <gmpxx.h>

#include <string>

namespace conejac {

// Every count, matrix entry and invariant factor is an exact GMP integer.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline Integer abs_value(const Integer& v) {
  Integer r = v;
  if (sgn(r) < 0) r = -r;
  return r;
}

} // namespace conejac
