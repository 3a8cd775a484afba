#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "picard/errors.hpp"
#include "picard/ideal.hpp"
#include "picard/invariants.hpp"
#include "picard/output.hpp"
#include "picard/parse.hpp"
#include "picard/quadfield.hpp"

namespace picard {

// All prime-power ideals of norm <= normmax, both split conjugates included.
inline std::vector<FactoredIdeal> enumerate_prime_powers(const QuadraticField& field,
                                                         long normmax) {
  std::vector<FactoredIdeal> out;
  for (long p = 2; p <= normmax; ++p) {
    if (!is_prime_long(p)) continue;
    for (const PrimeIdeal& P : prime_ideals_above(field, p)) {
      BigInt norm = P.norm();
      BigInt power = norm;
      for (unsigned e = 1; power <= normmax; ++e, power *= norm)
        out.push_back(FactoredIdeal{field, {{P, e}}});
    }
  }
  return out;
}

// Every integral ideal of norm <= normmax (in factored form), unit ideal
// excluded.
inline std::vector<FactoredIdeal> enumerate_all_ideals(const QuadraticField& field, long normmax) {
  std::vector<PrimeIdeal> primes;
  for (long p = 2; p <= normmax; ++p) {
    if (!is_prime_long(p)) continue;
    for (const PrimeIdeal& P : prime_ideals_above(field, p))
      if (P.norm() <= normmax) primes.push_back(P);
  }
  std::vector<FactoredIdeal> out;
  std::vector<std::pair<PrimeIdeal, unsigned>> current;
  auto recurse = [&](auto&& self, std::size_t i, BigInt norm) -> void {
    if (i == primes.size()) {
      if (!current.empty()) out.push_back(FactoredIdeal{field, current});
      return;
    }
    self(self, i + 1, norm);
    BigInt pnorm = primes[i].norm();
    BigInt acc = norm * pnorm;
    for (unsigned e = 1; acc <= normmax; ++e, acc *= pnorm) {
      current.emplace_back(primes[i], e);
      self(self, i + 1, acc);
      current.pop_back();
    }
  };
  recurse(recurse, 0, 1);
  return out;
}

struct SweepSkip {
  long d = 0;
  std::string ideal;
  std::string reason;
};

struct SweepResult {
  std::vector<OutputRecord> rows;
  std::vector<SweepSkip> skips;
};

// One row per (squarefree d <= dmax, ideal of norm <= normmax). Ideals whose
// invariants are undefined (non-decomposed prime over 2) are logged, not
// emitted. Rows are sorted by (d, norm, ideal string).
inline SweepResult run_sweep(long dmax, long normmax, bool composites = false) {
  SweepResult result;
  for (long d = 1; d <= dmax; ++d) {
    if (!is_squarefree(d)) continue;
    QuadraticField field = make_field(d);
    auto ideals =
        composites ? enumerate_all_ideals(field, normmax) : enumerate_prime_powers(field, normmax);
    for (const FactoredIdeal& A : ideals) {
      try {
        result.rows.push_back(make_record(compute_invariants(field, A)));
      } catch (const Prime2NonDecomposed& e) {
        result.skips.push_back(SweepSkip{d, canonical_string(A), e.what()});
      }
    }
  }
  std::sort(result.rows.begin(), result.rows.end(), [](const OutputRecord& x, const OutputRecord& y) {
    if (x.d != y.d) return x.d < y.d;
    if (x.norm != y.norm) return x.norm < y.norm;
    return x.ideal < y.ideal;
  });
  return result;
}

}  // namespace picard
