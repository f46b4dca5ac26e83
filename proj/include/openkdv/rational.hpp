// Exact rational scalars (GMP-backed) and the factorial helpers used
// throughout the hierarchy formulas.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace openkdv {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (the mpq_class canonical form). All arithmetic in this
// library is exact; nothing is ever rounded.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Decimal string "p/q" ("p" when q == 1); survives any JSON reader intact.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("unparsable rational: " + s);
  r.canonicalize();
  return r;
}

inline mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// n!! with the convention (-1)!! = 0!! = 1. Even arguments follow
// (2m)!! = 2^m m!.
inline mpz_class double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double factorial below -1");
  if (n <= 0) return 1;
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline mpz_class pow2(long n) {
  if (n < 0) throw std::invalid_argument("pow2 of negative exponent");
  return mpz_class(1) << n;
}

}  // namespace openkdv
