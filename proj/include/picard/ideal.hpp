#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "picard/errors.hpp"
#include "picard/quadfield.hpp"
#include "picard/rational.hpp"

namespace picard {

enum class NeatStatus { NeatCertified, NotGuaranteed };

inline const char* to_string(NeatStatus s) {
  return s == NeatStatus::NeatCertified ? "NeatCertified" : "NotGuaranteed";
}

// Largest prime factor handled when factoring ideal norms by trial division.
inline constexpr long kTrialDivisionBound = 1'000'000;

// Integral ideal of O_K in two-element Hermite normal form over the basis
// [1, omega]: the Z-module Z*a + Z*(b + c*omega) with c | a, c | b,
// 0 <= b < a and ac | N(b + c*omega). Then N(ideal) = a*c and
// ideal `intersect` Z = aZ.
class Ideal {
 public:
  Ideal(QuadraticField field, BigInt a, BigInt b, BigInt c)
      : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    validate();
  }

  const QuadraticField& field() const { return field_; }
  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }

  BigInt norm() const { return a_ * c_; }
  bool is_unit() const { return a_ == 1 && c_ == 1; }

  // Membership of u + v*omega: solve x*a + y*(b + c*omega) = u + v*omega
  // over Z, which is triangular: y = v/c, x = (u - y*b)/a.
  bool contains(const BigInt& u, const BigInt& v) const {
    if (v % c_ != 0) return false;
    BigInt y = v / c_;
    return (u - y * b_) % a_ == 0;
  }

  bool operator==(const Ideal& o) const {
    return field_ == o.field_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
  }

 private:
  void validate() const {
    if (a_ <= 0 || c_ <= 0) throw InternalError("HNF entries a, c must be positive");
    if (b_ < 0 || b_ >= a_) throw InternalError("HNF entry b out of range");
    if (a_ % c_ != 0 || b_ % c_ != 0) throw InternalError("HNF entries not divisible by c");
    // Closure under multiplication by omega: ac | N(b + c*omega).
    BigInt t = field_.omega_trace();
    BigInt n = field_.omega_norm();
    BigInt nrm = b_ * b_ + b_ * c_ * t + c_ * c_ * n;
    if (nrm % (a_ * c_) != 0) throw InternalError("module is not an ideal");
  }

  QuadraticField field_;
  BigInt a_, b_, c_;
};

namespace detail {

// HNF of the rank-2 Z-module spanned by rows (u_i, v_i) in basis [1, omega].
inline Ideal hnf_from_rows(const QuadraticField& k,
                           const std::vector<std::pair<BigInt, BigInt>>& rows) {
  // Combine rows to a single generator (B, c) with c = gcd of all v_i.
  BigInt B = 0, c = 0;
  for (const auto& [u, v] : rows) {
    if (v == 0) continue;
    if (c == 0) {
      B = u;
      c = v;
      continue;
    }
    BigInt g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
    B = x * B + y * u;
    c = g;
  }
  if (c == 0) throw InternalError("module has rank < 2, not an ideal of O_K");
  if (c < 0) {
    c = -c;
    B = -B;
  }
  // Clear second coordinates; a = gcd of the remaining first coordinates.
  BigInt a = 0;
  for (const auto& [u, v] : rows) {
    BigInt w = u - (v / c) * B;
    a = gcd(a, w);
  }
  if (a == 0) throw InternalError("module has rank < 2, not an ideal of O_K");
  BigInt b = B % a;
  if (b < 0) b += a;
  return Ideal(k, a, b, c);
}

}  // namespace detail

// Principal ideal (u + v*omega).
inline Ideal principal(const QuadraticField& k, const BigInt& u, const BigInt& v) {
  if (u == 0 && v == 0) throw ZeroIdeal("the zero ideal is not supported");
  BigInt t = k.omega_trace();
  BigInt n = k.omega_norm();
  // Z-generators: x and omega*x, with omega*(u+v*omega) = -v*n + (u+v*t)*omega.
  std::vector<std::pair<BigInt, BigInt>> rows{{u, v}, {-v * n, u + v * t}};
  return detail::hnf_from_rows(k, rows);
}

// Principal ideal (sqrt(-d)).
inline Ideal principal_sqrt_minus_d(const QuadraticField& k) {
  long u, v;
  k.sqrt_minus_d_coords(u, v);
  return principal(k, BigInt(u), BigInt(v));
}

inline Ideal multiply(const Ideal& A, const Ideal& B) {
  if (!(A.field() == B.field())) throw FieldMismatch("ideal product across different fields");
  const QuadraticField& k = A.field();
  BigInt t = k.omega_trace();
  BigInt n = k.omega_norm();
  // Pairwise products of the Z-generators of the two modules.
  std::vector<std::pair<BigInt, BigInt>> rows{
      {A.a() * B.a(), 0},
      {A.a() * B.b(), A.a() * B.c()},
      {A.b() * B.a(), A.c() * B.a()},
      {A.b() * B.b() - A.c() * B.c() * n, A.b() * B.c() + A.c() * B.b() + A.c() * B.c() * t}};
  return detail::hnf_from_rows(k, rows);
}

inline Ideal operator*(const Ideal& A, const Ideal& B) { return multiply(A, B); }

inline Ideal pow(const Ideal& A, unsigned e) {
  if (e == 0) return Ideal(A.field(), 1, 0, 1);
  Ideal r = A;
  for (unsigned i = 1; i < e; ++i) r = multiply(r, A);
  return r;
}

// A | B  <=>  B is contained in A.
inline bool divides(const Ideal& A, const Ideal& B) {
  if (!(A.field() == B.field())) throw FieldMismatch("divisibility across different fields");
  return A.contains(B.a(), 0) && A.contains(B.b(), B.c());
}

// Generator of ideal `intersect` Z.
inline BigInt rational_part(const Ideal& A) { return A.a(); }

// theta = min { n >= 1 : n*sqrt(-d) in ideal }. Linear scan; n = N(ideal)
// always works since N(ideal) lies in the ideal.
inline BigInt theta(const Ideal& A) {
  long su, sv;
  A.field().sqrt_minus_d_coords(su, sv);
  BigInt bound = A.norm();
  for (BigInt n = 1; n <= bound; ++n) {
    if (A.contains(n * su, n * sv)) return n;
  }
  throw InternalError("theta scan failed (norm not in ideal?)");
}

// Sufficient criterion: the congruence subgroup of level `A` is neat when
// N(A) > 3 and A `intersect` Z is odd.
inline NeatStatus neat_status(const Ideal& A) {
  if (A.norm() > 3 && A.a() % 2 != 0) return NeatStatus::NeatCertified;
  return NeatStatus::NotGuaranteed;
}

// Prime ideal over a rational prime p. For split p the root r of
// x^2 - t x + n mod p selects the conjugate: ideal (p, omega - r).
struct PrimeIdeal {
  long p = 0;
  SplittingType splitting = SplittingType::Inert;
  std::optional<long> root;  // present iff split

  long residue_degree() const { return splitting == SplittingType::Inert ? 2 : 1; }
  BigInt norm() const { return pow_int(p, static_cast<unsigned long>(residue_degree())); }

  bool operator==(const PrimeIdeal& o) const {
    return p == o.p && splitting == o.splitting && root == o.root;
  }
  bool operator<(const PrimeIdeal& o) const {
    if (p != o.p) return p < o.p;
    return root.value_or(-1) < o.root.value_or(-1);
  }
};

namespace detail {

inline std::vector<long> minpoly_roots_mod_p(const QuadraticField& k, long p) {
  long t = k.omega_trace() % p;
  long n = k.omega_norm() % p;
  std::vector<long> roots;
  for (long r = 0; r < p; ++r) {
    if (((r * r - t * r + n) % p + p) % p == 0) roots.push_back(r);
  }
  return roots;
}

}  // namespace detail

inline Ideal prime_to_ideal(const QuadraticField& k, const PrimeIdeal& P) {
  if (P.splitting == SplittingType::Inert) return Ideal(k, P.p, 0, P.p);
  long r = *P.root;
  BigInt b = BigInt((P.p - r) % P.p);  // b = -r mod p
  return Ideal(k, P.p, b, 1);
}

// The prime ideals above p: two conjugates (smaller root first) when split,
// one otherwise. For ramified p the double root of the minimal polynomial
// is stored so prime_to_ideal works uniformly.
inline std::vector<PrimeIdeal> prime_ideals_above(const QuadraticField& k, long p) {
  SplittingType s = splitting_type(k, p);
  if (s == SplittingType::Inert) return {PrimeIdeal{p, s, std::nullopt}};
  auto roots = detail::minpoly_roots_mod_p(k, p);
  if (s == SplittingType::Split) {
    if (roots.size() != 2) throw InternalError("split prime without two roots");
    return {PrimeIdeal{p, s, roots[0]}, PrimeIdeal{p, s, roots[1]}};
  }
  if (roots.size() != 1) throw InternalError("ramified prime without a double root");
  return {PrimeIdeal{p, s, roots[0]}};
}

inline PrimeIdeal conjugate(const QuadraticField& k, const PrimeIdeal& P) {
  if (P.splitting != SplittingType::Split) return P;
  long t = k.omega_trace();
  long rbar = ((t - *P.root) % P.p + P.p) % P.p;
  return PrimeIdeal{P.p, P.splitting, rbar};
}

// Prime ideal decomposition, factors sorted by (p, root).
struct FactoredIdeal {
  QuadraticField field;
  std::vector<std::pair<PrimeIdeal, unsigned>> factors;

  BigInt norm() const {
    BigInt n = 1;
    for (const auto& [P, e] : factors) n *= pow_int(P.p, P.residue_degree() * e);
    return n;
  }

  Ideal reconstruct() const {
    Ideal r(field, 1, 0, 1);
    for (const auto& [P, e] : factors) r = multiply(r, pow(prime_to_ideal(field, P), e));
    return r;
  }

  bool operator==(const FactoredIdeal& o) const {
    return field == o.field && factors == o.factors;
  }
};

namespace detail {

// Trial division of m; every prime factor must stay within the bound.
inline std::vector<std::pair<long, unsigned>> factor_integer(BigInt m) {
  std::vector<std::pair<long, unsigned>> out;
  auto strip = [&](long q) {
    unsigned e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e > 0) out.emplace_back(q, e);
  };
  strip(2);
  for (long q = 3; q <= kTrialDivisionBound && m > 1; q += 2) {
    if (BigInt(q) * q > m) break;
    strip(q);
  }
  if (m > 1) {
    if (m > kTrialDivisionBound)
      throw NormFactorizationFailure("norm has a prime factor beyond the trial-division bound " +
                                     std::to_string(kTrialDivisionBound) + ": residual " +
                                     m.get_str());
    out.emplace_back(m.get_si(), 1);  // residual below the bound is prime
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline unsigned valuation(const Ideal& A, const Ideal& P) {
  unsigned v = 0;
  Ideal power = P;
  while (divides(power, A)) {
    ++v;
    power = multiply(power, P);
  }
  return v;
}

}  // namespace detail

inline FactoredIdeal factorize(const Ideal& A) {
  const QuadraticField& k = A.field();
  FactoredIdeal out{k, {}};
  for (const auto& [q, ne] : detail::factor_integer(A.norm())) {
    (void)ne;
    for (const PrimeIdeal& P : prime_ideals_above(k, q)) {
      unsigned v = detail::valuation(A, prime_to_ideal(k, P));
      if (v > 0) out.factors.emplace_back(P, v);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  if (!(out.reconstruct() == A))
    throw InternalError("factorization does not reconstruct the ideal");
  return out;
}

}  // namespace picard
