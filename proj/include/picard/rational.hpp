#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace picard {

// Exact arithmetic carriers. All invariant computations stay in BigInt /
// Rational; doubles appear only at the display layer.
using BigInt = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize; GMP rational arithmetic
// requires canonical operands, so route fractions through here.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt pow_int(long base, unsigned long e) { return pow_int(BigInt(base), e); }

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Numerator of an integer-valued rational; throws otherwise.
inline BigInt to_integer(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational is not an integer: " + q.get_str());
  return q.get_num();
}

// Lowest terms, positive denominator: "n" when integral, "num/den" otherwise.
inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace picard
