#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "picard/errors.hpp"
#include "picard/ideal.hpp"
#include "picard/rational.hpp"

// Brute-force verifiers for the closed-form index, class-number and ideal
// machinery. Slow by design; they share no code with the formulas they check.
namespace picard::oracle {

struct EnumerationBudget {
  std::uint64_t max_elements = 10'000'000;
};

// |SL_3(Z/p^n)| by exhaustive enumeration of all (p^n)^9 matrices.
inline BigInt sl3_order(long p, unsigned n, const EnumerationBudget& budget = {}) {
  BigInt space = pow_int(p, 9 * n);
  if (space > budget.max_elements)
    throw BudgetExceeded("SL3 enumeration needs " + space.get_str() + " matrices, budget " +
                         std::to_string(budget.max_elements));
  long m = 1;
  for (unsigned i = 0; i < n; ++i) m *= p;
  BigInt count = 0;
  long a[6];  // first two rows
  for (a[0] = 0; a[0] < m; ++a[0])
    for (a[1] = 0; a[1] < m; ++a[1])
      for (a[2] = 0; a[2] < m; ++a[2])
        for (a[3] = 0; a[3] < m; ++a[3])
          for (a[4] = 0; a[4] < m; ++a[4])
            for (a[5] = 0; a[5] < m; ++a[5]) {
              // Cofactors along the bottom row (g h i):
              // det = g(bf-ce) - h(af-cd) + i(ae-bd).
              long cg = (a[1] * a[5] - a[2] * a[4]) % m;
              long ch = -(a[0] * a[5] - a[2] * a[3]) % m;
              long ci = (a[0] * a[4] - a[1] * a[3]) % m;
              for (long g = 0; g < m; ++g)
                for (long h = 0; h < m; ++h)
                  for (long i = 0; i < m; ++i) {
                    long det = ((g * cg + h * ch + i * ci) % m + m) % m;
                    if (det == 1) ++count;
                  }
            }
  return count;
}

namespace detail {

// F4 = F2[w]/(w^2+w+1); elements 0,1,2=w,3=w+1; addition is xor.
inline constexpr std::array<std::array<int, 4>, 4> kF4Mul{
    {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
inline constexpr std::array<int, 4> kF4Frob{0, 1, 3, 2};  // x -> x^2

}  // namespace detail

struct Su3Order {
  BigInt value;
  bool enumerated = false;  // true only for the p = 2 exhaustive count
};

// Order of SU_3 over the quadratic residue extension. p = 2: exhaustive
// enumeration over F4 with the identity hermitian form (all nondegenerate
// forms are equivalent over a finite field). p <= 13: the classical order
// p^3 (p^3 + 1)(p^2 - 1), reported as a formula reference, not a count.
inline Su3Order su3_order_inert(long p, const EnumerationBudget& budget = {}) {
  if (p == 2) {
    if (budget.max_elements < (1u << 18))
      throw BudgetExceeded("SU3(F4) enumeration needs 262144 matrices");
    using detail::kF4Frob;
    using detail::kF4Mul;
    long count = 0;
    int g[9];
    for (long code = 0; code < (1 << 18); ++code) {
      long c = code;
      for (int i = 0; i < 9; ++i) {
        g[i] = c & 3;
        c >>= 2;
      }
      bool unitary = true;
      for (int r = 0; r < 3 && unitary; ++r)
        for (int s = 0; s < 3 && unitary; ++s) {
          int acc = 0;
          for (int t = 0; t < 3; ++t) acc ^= kF4Mul[g[3 * r + t]][kF4Frob[g[3 * s + t]]];
          if (acc != (r == s ? 1 : 0)) unitary = false;
        }
      if (!unitary) continue;
      // char 2: determinant = sum of the cofactor products
      int det = kF4Mul[g[0]][kF4Mul[g[4]][g[8]] ^ kF4Mul[g[5]][g[7]]] ^
                kF4Mul[g[1]][kF4Mul[g[3]][g[8]] ^ kF4Mul[g[5]][g[6]]] ^
                kF4Mul[g[2]][kF4Mul[g[3]][g[7]] ^ kF4Mul[g[4]][g[6]]];
      if (det == 1) ++count;
    }
    return Su3Order{BigInt(count), true};
  }
  if (p > 13) throw BudgetExceeded("SU3 order supported only for p <= 13");
  BigInt q = p;
  BigInt q2 = q * q, q3 = q2 * q;
  return Su3Order{q3 * (q3 + 1) * (q2 - 1), false};
}

// Number of symmetric 3x3 trace-zero matrices over Z/p, by enumerating all
// p^6 symmetric matrices.
inline BigInt symmetric_tracezero_count(long p) {
  long count = 0;
  for (long d0 = 0; d0 < p; ++d0)
    for (long d1 = 0; d1 < p; ++d1)
      for (long d2 = 0; d2 < p; ++d2) {
        if ((d0 + d1 + d2) % p != 0) continue;
        ++count;  // the three off-diagonal entries are free
      }
  BigInt off = pow_int(p, 3);
  return BigInt(count) * off;
}

// Class number by counting reduced primitive binary quadratic forms (a,b,c)
// of discriminant D: b^2 - 4ac = D, -a < b <= a <= c, b >= 0 when a = c.
inline long class_number_forms(long D) {
  if (D >= 0 || -D > 10'000)
    throw InternalError("form enumeration expects a negative discriminant, |D| <= 10^4");
  long count = 0;
  for (long a = 1; 3 * a * a <= -D; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

// Does u + v*omega lie in the module Z a + Z (b + c omega)? Bounded search
// over the y coefficient; independent of Ideal::contains.
inline bool membership_oracle(const Ideal& A, const BigInt& u, const BigInt& v) {
  BigInt ybound = abs(v) + 1;
  for (BigInt y = -ybound; y <= ybound; ++y) {
    if (y * A.c() != v) continue;
    BigInt rem = u - y * A.b();
    return rem % A.a() == 0;
  }
  return false;
}

}  // namespace picard::oracle
