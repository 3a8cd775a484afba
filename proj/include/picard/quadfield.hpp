#pragma once

#include <cstdlib>

#include "picard/errors.hpp"
#include "picard/rational.hpp"

namespace picard {

// Shape of the integral basis [1, omega] of O_K, K = Q(sqrt(-d)).
enum class OmegaShape {
  SqrtD,           // omega = sqrt(-d),      d = 1, 2 mod 4
  HalfOnePlusSqrtD // omega = (1+sqrt(-d))/2, d = 3 mod 4
};

enum class SplittingType { Split, Inert, Ramified };

inline const char* to_string(SplittingType s) {
  switch (s) {
    case SplittingType::Split: return "Split";
    case SplittingType::Inert: return "Inert";
    case SplittingType::Ramified: return "Ramified";
  }
  return "?";
}

// Field-level constants of K = Q(sqrt(-d)). Immutable after construction;
// the class number is not stored here (see bernoulli.hpp).
struct QuadraticField {
  long d = 0;               // squarefree, >= 1
  long D = 0;               // fundamental discriminant (negative)
  OmegaShape omega_shape = OmegaShape::SqrtD;
  long mu = 0;              // number of roots of unity in K
  Rational eta;             // self-intersection constant
  Rational delta;           // volume constant (1/3 for d=3, else 1)

  // Minimal polynomial of omega is x^2 - t x + n.
  long omega_trace() const { return omega_shape == OmegaShape::SqrtD ? 0 : 1; }
  long omega_norm() const { return omega_shape == OmegaShape::SqrtD ? d : (1 + d) / 4; }

  // Coordinates of sqrt(-d) in the basis [1, omega].
  void sqrt_minus_d_coords(long& u, long& v) const {
    if (omega_shape == OmegaShape::SqrtD) {
      u = 0; v = 1;
    } else {
      u = -1; v = 2;
    }
  }

  bool operator==(const QuadraticField& o) const { return d == o.d; }
};

inline bool is_squarefree(long d) {
  if (d <= 0) return false;
  for (long f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

inline QuadraticField make_field(long d) {
  if (d < 1) throw ParseError("d must be a positive integer, got " + std::to_string(d));
  if (!is_squarefree(d)) throw NotSquarefree("d = " + std::to_string(d) + " is not squarefree");
  QuadraticField k;
  k.d = d;
  if (d % 4 == 3) {
    k.D = -d;
    k.omega_shape = OmegaShape::HalfOnePlusSqrtD;
  } else {
    k.D = -4 * d;
    k.omega_shape = OmegaShape::SqrtD;
  }
  k.mu = (k.D == -3) ? 6 : (k.D == -4) ? 4 : 2;
  if (k.D == -4) k.eta = 1;
  else if (k.D == -3) k.eta = Rational(1, 6);
  else if (k.D % 4 == 0) k.eta = 2;
  else k.eta = Rational(1, 2);
  k.delta = (d == 3) ? Rational(1, 3) : Rational(1);
  return k;
}

// Kronecker symbol (a/n), defined for all integers. Conventions:
//   (a/0) = 1 iff a = +-1, else 0;  (a/-1) = -1 iff a < 0;
//   (a/2) = 0 if a even, +1 if a = +-1 mod 8, -1 if a = +-3 mod 8.
inline int kronecker_symbol(long a, long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos % 2 == 1) {
    long a8 = ((a % 8) + 8) % 8;
    if (a8 == 3 || a8 == 5) result = -result;
  }
  // n is now odd and positive: plain Jacobi symbol via reciprocity.
  a = ((a % n) + n) % n;
  while (a != 0) {
    int v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) {
      long n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    long t = a;
    a = n % t;
    n = t;
  }
  return n == 1 ? result : 0;
}

// The quadratic character chi_D(m) = (D/m), completely multiplicative,
// period |D| for m > 0.
inline int chi_D(const QuadraticField& k, long m) { return kronecker_symbol(k.D, m); }

inline SplittingType splitting_type(const QuadraticField& k, long p) {
  int chi = chi_D(k, p);
  if (chi == 1) return SplittingType::Split;
  if (chi == -1) return SplittingType::Inert;
  return SplittingType::Ramified;
}

}  // namespace picard
