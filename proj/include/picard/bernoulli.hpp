#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <vector>

#include "picard/errors.hpp"
#include "picard/quadfield.hpp"
#include "picard/rational.hpp"

namespace picard {

// k-th Bernoulli number, convention B_1 = -1/2 (so that B_n(X) below
// satisfies B_1(X) = X - 1/2). Memoized; the fill is idempotent.
inline Rational bernoulli_number(unsigned k) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
  std::scoped_lock lock(mu);
  while (cache.size() <= k) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    unsigned m = static_cast<unsigned>(cache.size());
    Rational s(0);
    for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(-s / Rational(m + 1));
  }
  return cache[k];
}

// B_n(X) = sum_{k=0}^{n} C(n,k) B_k X^{n-k}, stored by ascending power.
struct BernoulliPolynomial {
  unsigned n = 0;
  std::vector<Rational> coeffs;  // coeffs[j] multiplies X^j

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

inline BernoulliPolynomial bernoulli_poly(unsigned n) {
  BernoulliPolynomial P;
  P.n = n;
  P.coeffs.assign(n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k)
    P.coeffs[n - k] = Rational(binomial(n, k)) * bernoulli_number(k);
  return P;
}

struct GeneralizedBernoulli {
  unsigned n = 0;
  long D = 0;
  Rational value;
};

// B_{n,chi_D} = |D|^{n-1} sum_{k=1}^{|D|} chi_D(k) B_n(k/|D|), all exact.
inline GeneralizedBernoulli generalized_bernoulli(const QuadraticField& field, unsigned n) {
  long f = std::labs(field.D);
  BernoulliPolynomial P = bernoulli_poly(n);
  Rational s(0);
  for (long k = 1; k <= f; ++k) {
    int chi = chi_D(field, k);
    if (chi == 0) continue;
    Rational term = P.eval(frac(k, f));
    s += chi > 0 ? term : -term;
  }
  return GeneralizedBernoulli{n, field.D, Rational(pow_int(f, n - 1)) * s};
}

// Ideal class number via the analytic class number formula,
// h_K = -(mu_K / 2) B_{1,chi_D}. Cached per discriminant.
inline BigInt class_number(const QuadraticField& field) {
  static std::mutex mu;
  static std::map<long, BigInt> cache;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(field.D);
    if (it != cache.end()) return it->second;
  }
  Rational h = frac(-field.mu, 2) * generalized_bernoulli(field, 1).value;
  if (!is_integer(h) || h <= 0)
    throw NonIntegralClassNumber("analytic class number formula gave " + to_string(h) +
                                 " for D = " + std::to_string(field.D));
  BigInt value = h.get_num();
  std::scoped_lock lock(mu);
  cache.emplace(field.D, value);
  return value;
}

// L(3, chi_D) = exact_part * pi^3 / |D|^(5/2) with exact_part = (2/3) B_{3,chi_D}.
struct LValue {
  long D = 0;
  Rational exact_part;
  double float_value = 0.0;
};

inline LValue l_value_3(const QuadraticField& field) {
  LValue L;
  L.D = field.D;
  L.exact_part = Rational(2, 3) * generalized_bernoulli(field, 3).value;
  double f = static_cast<double>(std::labs(field.D));
  L.float_value = to_double(L.exact_part) * std::pow(M_PI, 3) / std::pow(f, 2.5);
  return L;
}

}  // namespace picard
