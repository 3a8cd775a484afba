#include <catch2/catch_amalgamated.hpp>

#include "picard/quadfield.hpp"

using namespace picard;

namespace {

// Fundamental discriminants with |D| <= 40, by squarefree d.
const long kSmallD[] = {1, 2, 3, 5, 6, 7, 10, 11, 15, 19, 23, 31, 35, 39};

long powmod(long base, long exp, long mod) {
  long r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

// Legendre symbol by exhaustively listing the squares mod p.
int legendre_by_squares(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  for (long x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("field constructor fills the constants", "[quadfield]") {
  auto k3 = make_field(3);
  CHECK(k3.D == -3);
  CHECK(k3.omega_shape == OmegaShape::HalfOnePlusSqrtD);
  CHECK(k3.mu == 6);
  CHECK(k3.eta == Rational(1, 6));
  CHECK(k3.delta == Rational(1, 3));

  auto k1 = make_field(1);
  CHECK(k1.D == -4);
  CHECK(k1.omega_shape == OmegaShape::SqrtD);
  CHECK(k1.mu == 4);
  CHECK(k1.eta == 1);
  CHECK(k1.delta == 1);

  auto k2 = make_field(2);
  CHECK(k2.D == -8);
  CHECK(k2.mu == 2);
  CHECK(k2.eta == 2);
  CHECK(k2.delta == 1);

  CHECK_THROWS_AS(make_field(12), NotSquarefree);
  CHECK_THROWS_AS(make_field(0), Error);
}

TEST_CASE("constants match the four-case tables", "[quadfield]") {
  struct Row {
    long d, absD, mu;
    Rational eta, delta;
  };
  const Row rows[] = {
      {3, 3, 6, Rational(1, 6), Rational(1, 3)},
      {1, 4, 4, Rational(1), Rational(1)},
      {7, 7, 2, Rational(1, 2), Rational(1)},
      {2, 8, 2, Rational(2), Rational(1)},
      {11, 11, 2, Rational(1, 2), Rational(1)},
      {15, 15, 2, Rational(1, 2), Rational(1)},
      {19, 19, 2, Rational(1, 2), Rational(1)},
      {5, 20, 2, Rational(2), Rational(1)},
      {23, 23, 2, Rational(1, 2), Rational(1)},
      {6, 24, 2, Rational(2), Rational(1)},
      {31, 31, 2, Rational(1, 2), Rational(1)},
      {35, 35, 2, Rational(1, 2), Rational(1)},
  };
  for (const auto& r : rows) {
    auto k = make_field(r.d);
    INFO("d = " << r.d);
    CHECK(k.D == -r.absD);
    CHECK(k.mu == r.mu);
    CHECK(k.eta == r.eta);
    CHECK(k.delta == r.delta);
  }
}

TEST_CASE("Kronecker symbol values", "[quadfield]") {
  CHECK(chi_D(make_field(1), 2) == 0);
  // -7 = 1 mod 8, and x^2 - x + 2 factors mod 2
  CHECK(chi_D(make_field(7), 2) == 1);
  CHECK(legendre_by_squares(-3, 5) == -1);
  CHECK(chi_D(make_field(3), 5) == -1);
  CHECK(chi_D(make_field(3), 0) == 0);
}

TEST_CASE("chi_D matches the Euler criterion at odd primes", "[quadfield]") {
  for (long d : kSmallD) {
    auto k = make_field(d);
    for (long p = 3; p <= 100; p += 2) {
      if (!is_prime(p) || k.D % p == 0) continue;
      long euler = powmod(k.D, (p - 1) / 2, p);
      int expected = euler == 1 ? 1 : -1;
      REQUIRE((euler == 1 || euler == p - 1));
      INFO("D = " << k.D << ", p = " << p);
      CHECK(chi_D(k, p) == expected);
      CHECK(chi_D(k, p) == legendre_by_squares(k.D, p));
    }
  }
}

TEST_CASE("chi_D is completely multiplicative", "[quadfield]") {
  for (long d : kSmallD) {
    auto k = make_field(d);
    for (long m1 = -50; m1 <= 50; ++m1)
      for (long m2 = -50; m2 <= 50; ++m2) {
        INFO("D = " << k.D << ", m1 = " << m1 << ", m2 = " << m2);
        REQUIRE(chi_D(k, m1 * m2) == chi_D(k, m1) * chi_D(k, m2));
      }
  }
}

TEST_CASE("chi_D has period |D| on positive integers", "[quadfield]") {
  for (long d : kSmallD) {
    auto k = make_field(d);
    long f = -k.D;
    for (long m = 1; m <= 3 * f; ++m) REQUIRE(chi_D(k, m) == chi_D(k, m + f));
  }
}

TEST_CASE("splitting types", "[quadfield]") {
  CHECK(splitting_type(make_field(7), 2) == SplittingType::Split);
  CHECK(splitting_type(make_field(3), 3) == SplittingType::Ramified);
  CHECK(splitting_type(make_field(3), 5) == SplittingType::Inert);
}

TEST_CASE("ramified exactly at the primes dividing D", "[quadfield]") {
  for (long d : kSmallD) {
    auto k = make_field(d);
    for (long p = 2; p <= 100; ++p) {
      if (!is_prime(p)) continue;
      INFO("D = " << k.D << ", p = " << p);
      CHECK((splitting_type(k, p) == SplittingType::Ramified) == (k.D % p == 0));
    }
  }
}
