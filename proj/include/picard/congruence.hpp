#pragma once

#include <string>

#include "picard/errors.hpp"
#include "picard/ideal.hpp"
#include "picard/quadfield.hpp"
#include "picard/rational.hpp"

namespace picard {

// Index of the local principal congruence subgroup of level p^e:
//   split      p^(8e) (1 - p^-3)(1 - p^-2)
//   inert      p^(8e) (1 + p^-3)(1 - p^-2)
//   ramified   p^eps  (1 - p^-2),  eps = 4e (e even), 4e - 1 (e odd)
// No formula exists for a non-decomposed prime over 2.
struct LocalIndex {
  long p = 0;
  SplittingType splitting = SplittingType::Inert;
  unsigned e = 0;
  unsigned epsilon = 0;
  BigInt value;
};

inline LocalIndex local_index(const QuadraticField& field, const PrimeIdeal& P, unsigned e) {
  if (e == 0) throw InternalError("local index needs exponent >= 1");
  if (P.p == 2 && P.splitting != SplittingType::Split)
    throw Prime2NonDecomposed("no index formula for the non-decomposed prime 2 (D = " +
                              std::to_string(field.D) + ")");
  LocalIndex L;
  L.p = P.p;
  L.splitting = P.splitting;
  L.e = e;
  BigInt p = P.p;
  BigInt p2 = p * p, p3 = p2 * p;
  switch (P.splitting) {
    case SplittingType::Split:
      L.epsilon = 8 * e;
      L.value = pow_int(p, 8 * e - 5) * (p3 - 1) * (p2 - 1);
      break;
    case SplittingType::Inert:
      L.epsilon = 8 * e;
      L.value = pow_int(p, 8 * e - 5) * (p3 + 1) * (p2 - 1);
      break;
    case SplittingType::Ramified:
      L.epsilon = (e % 2 == 0) ? 4 * e : 4 * e - 1;
      L.value = pow_int(p, L.epsilon - 2) * (p2 - 1);
      break;
  }
  return L;
}

// Global index as the product of local indices (strong approximation).
// The empty factorization (unit ideal) has index 1.
inline BigInt global_index(const QuadraticField& field, const FactoredIdeal& A) {
  BigInt idx = 1;
  for (const auto& [P, e] : A.factors) idx *= local_index(field, P, e).value;
  return idx;
}

}  // namespace picard
