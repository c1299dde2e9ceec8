#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace witt {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Integer& z) { return sgn(z); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Integer& z) {
  return sgn(z) >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

// Exact square test for rationals; q is canonicalized by mpq_class.
inline bool is_perfect_square(const Rational& q) {
  return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

inline Integer isqrt(const Integer& z) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

std::string to_string(const Rational& q);

// Prime factors (without multiplicity) of a nonzero integer, ascending.
// Trial division plus Pollard rho; intended for desk-scale inputs.
std::vector<Integer> prime_factors(Integer n);

}  // namespace witt
