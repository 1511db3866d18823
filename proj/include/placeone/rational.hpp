#pragma once

#include <gmpxx.h>

#include <string>

#include "placeone/error.hpp"

namespace placeone {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline Rational inv(const Rational& a) {
  if (is_zero(a)) throw Error("division by zero");
  return Rational(1) / a;
}

inline std::string to_string(const Rational& a) { return a.get_str(); }

/// Parses "p" or "p/q"; the result is canonicalized.
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw InputError("malformed rational literal '" + s + "'");
  if (sgn(r.get_den()) == 0) throw InputError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline Rational pow(const Rational& a, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), e);
  return r;
}

}  // namespace placeone
