#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "picard/invariants.hpp"
#include "picard/parse.hpp"
#include "picard/sweep.hpp"

using namespace picard;

namespace {

SurfaceInvariants invariants_of(const QuadraticField& k, const std::string& expr) {
  return compute_invariants(k, factorize(parse_ideal(k, expr)));
}

// c1^2 recomputed from scratch as I * (3 B3 / 48 - h eta / theta^2),
// independently of the 3*c2 + tt assembly in compute_invariants.
Rational c1sq_direct(const SurfaceInvariants& inv) {
  const QuadraticField& k = inv.field;
  BigInt th_sq = inv.theta * inv.theta;
  Rational bracket = Rational(3) * generalized_bernoulli(k, 3).value / 48 -
                     Rational(class_number(k)) * k.eta / Rational(th_sq);
  return Rational(inv.index) * bracket;
}

}  // namespace

TEST_CASE("Euler number of the full-group quotient", "[invariants]") {
  CHECK(euler_number_full_group(make_field(7)) == Rational(1, 7));
  CHECK(euler_number_full_group(make_field(3)) == Rational(1, 216));
  CHECK(euler_number_full_group(make_field(1)) == Rational(1, 32));
  // per-index scale for the level series: delta-free
  CHECK(euler_number_per_index(make_field(7)) == Rational(1, 7));
  CHECK(euler_number_per_index(make_field(3)) == Rational(1, 72));
  CHECK(euler_number_per_index(make_field(1)) == Rational(1, 32));
}

TEST_CASE("reference surface d=7, level sqrt(-7)", "[invariants]") {
  auto inv = invariants_of(make_field(7), "sqrtd");
  CHECK(inv.index == 336);
  CHECK(inv.c2 == 48);
  CHECK(inv.tt == -168);
  CHECK(inv.c1sq == -24);
  CHECK(inv.chi_holo == 2);
  CHECK(inv.theta == 1);
  CHECK(inv.neat == NeatStatus::NeatCertified);
  CHECK(inv.verdict == ClassificationVerdict::PossibleException);
  CHECK(inv.ratio == -0.5);
  CHECK(chern_ratio(inv) == -0.5);
}

TEST_CASE("level (2) over d=7", "[invariants]") {
  auto inv = invariants_of(make_field(7), "(2)");
  CHECK(inv.index == 28224);
  CHECK(inv.theta == 2);
  CHECK(inv.c2 == 4032);
  CHECK(inv.tt == -3528);
  CHECK(inv.c1sq == 8568);
  CHECK(inv.verdict == ClassificationVerdict::NotCertifiedNeat);
  CHECK(chern_ratio(inv) == Catch::Approx(2.125));
}

TEST_CASE("unit ideal degenerate case", "[invariants]") {
  for (long d : {1L, 3L, 7L}) {
    auto k = make_field(d);
    auto inv = compute_invariants(k, FactoredIdeal{k, {}});
    CHECK(inv.index == 1);
    CHECK(inv.c2 == euler_number_per_index(k));
    CHECK(inv.theta == 1);
    CHECK(inv.verdict == ClassificationVerdict::NotCertifiedNeat);
    CHECK(inv.c1sq == 3 * inv.c2 + inv.tt);
  }
}

TEST_CASE("classification verdicts", "[invariants]") {
  // d=35: B3 = 324, h = 2, eta = 1/2, theta(P(5)) = 1:
  // c1sq = 120 * (3*324/48 - 1) = 120 * 77/4 = 2310
  auto inv35 = invariants_of(make_field(35), "P(5)");
  CHECK(inv35.index == 120);
  CHECK(inv35.theta == 1);
  CHECK(inv35.c1sq == 2310);
  CHECK(inv35.verdict == ClassificationVerdict::GeneralType);

  CHECK(invariants_of(make_field(3), "sqrtd").verdict ==
        ClassificationVerdict::NotCertifiedNeat);
}

TEST_CASE("proportionality c1^2 = 3 c2 + (T.T) on a mixed corpus", "[invariants]") {
  int checked = 0;
  for (long d : {1L, 2L, 3L, 5L, 7L, 11L, 15L, 23L}) {
    auto k = make_field(d);
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
      for (const PrimeIdeal& P : prime_ideals_above(k, p)) {
        if (P.p == 2 && P.splitting != SplittingType::Split) continue;
        for (unsigned e = 1; e <= 4; ++e) {
          auto inv = compute_invariants(k, FactoredIdeal{k, {{P, e}}});
          INFO("D = " << k.D << ", p = " << p << ", e = " << e);
          REQUIRE(inv.c1sq - 3 * inv.c2 == inv.tt);
          REQUIRE(inv.c1sq == c1sq_direct(inv));
          REQUIRE(inv.tt <= 0);
          REQUIRE(inv.c2 > 0);
          if (inv.verdict == ClassificationVerdict::GeneralType) REQUIRE(inv.c1sq > 9);
          ++checked;
        }
      }
    }
  }
  REQUIRE(checked >= 50);
}

TEST_CASE("index scaling under exponent doubling at split primes", "[invariants]") {
  auto k = make_field(1);
  PrimeIdeal P = prime_ideals_above(k, 5)[0];
  for (unsigned e = 1; e <= 2; ++e) {
    auto a = compute_invariants(k, FactoredIdeal{k, {{P, e}}});
    auto b = compute_invariants(k, FactoredIdeal{k, {{P, 2 * e}}});
    BigInt scale = pow_int(5, 8 * e);
    CHECK(b.index == a.index * scale);
    CHECK(b.c2 == a.c2 * Rational(scale));
  }
}

TEST_CASE("general type inequality", "[invariants]") {
  auto k35 = make_field(35);
  CHECK(general_type_inequality(k35, factorize(parse_ideal(k35, "P(5)"))));
  auto k7 = make_field(7);
  CHECK_FALSE(general_type_inequality(k7, factorize(parse_ideal(k7, "P(7)"))));
  auto k2 = make_field(2);  // 3 splits in Q(sqrt-2), theta = 3
  auto F3 = factorize(parse_ideal(k2, "P(3)"));
  REQUIRE(theta(F3.reconstruct()) == 3);
  CHECK_FALSE(general_type_inequality(k2, F3));
}

TEST_CASE("discriminant bound check", "[invariants]") {
  CHECK_FALSE(discriminant_bound_check(-35));
  CHECK(discriminant_bound_check(-39));
  CHECK(discriminant_bound_check(-100));
}

TEST_CASE("ratio climbs toward 3 along (n sqrt(-7))", "[invariants]") {
  auto k = make_field(7);
  Rational prev(-1000);
  for (long n : {1L, 3L, 5L, 9L, 11L, 121L}) {
    auto inv = invariants_of(k, "(" + std::to_string(-n) + "+" + std::to_string(2 * n) + "*w)");
    Rational exact = inv.c1sq / inv.c2;
    INFO("n = " << n);
    REQUIRE(inv.theta == n);
    REQUIRE(exact == 3 - Rational(7, 2 * n * n));
    REQUIRE(exact > prev);
    REQUIRE(exact < 3);
    prev = exact;
    if (inv.ideal.norm() > 100'000) REQUIRE(3 - exact < Rational(1, 100));
  }
}

TEST_CASE("cusp form dimensions", "[invariants]") {
  auto k = make_field(7);
  auto F = factorize(parse_ideal(k, "sqrtd"));
  CHECK(cusp_form_dimension(k, F, 2) == 146);
  CHECK(cusp_form_dimension(k, F, 3) == 434);

  auto inv = compute_invariants(k, F);
  CHECK(cusp_form_dimension_via_chern(inv, 2) == 146);
  CHECK(cusp_form_dimension_via_chern(inv, 3) == 434);

  CHECK_THROWS_AS(cusp_form_dimension(k, factorize(parse_ideal(k, "(2)")), 2), NotNeat);
  CHECK_THROWS_AS(cusp_form_dimension(k, F, 1), WeightTooSmall);
}

// On a neat level the compactification is a smooth projective surface, so
// c2, (T.T), c1^2 and chi(O) = (c1^2+c2)/12 are forced to be integers. This
// pins the whole formula set at once, composite levels included.
TEST_CASE("Chern data is integral on every neat level", "[invariants]") {
  int checked = 0;
  for (long d : {3L, 1L, 7L, 2L, 11L, 15L, 5L, 23L, 6L, 35L}) {
    auto k = make_field(d);
    for (const FactoredIdeal& F : enumerate_all_ideals(k, 120)) {
      if (neat_status(F.reconstruct()) != NeatStatus::NeatCertified) continue;
      SurfaceInvariants inv;
      try {
        inv = compute_invariants(k, F);
      } catch (const Prime2NonDecomposed&) {
        continue;
      }
      ++checked;
      INFO("D = " << k.D << ", ideal " << canonical_string(F));
      REQUIRE(is_integer(inv.c2));
      REQUIRE(is_integer(inv.tt));
      REQUIRE(is_integer(inv.c1sq));
      REQUIRE(is_integer(inv.chi_holo));
    }
  }
  REQUIRE(checked >= 100);
}

TEST_CASE("dimensions are nonnegative integers across the corpus", "[invariants]") {
  int neat_levels = 0;
  for (long d : {3L, 1L, 7L, 2L, 11L, 15L, 5L, 23L, 6L, 35L}) {
    auto k = make_field(d);
    for (const FactoredIdeal& F : enumerate_prime_powers(k, 200)) {
      Ideal A = F.reconstruct();
      if (neat_status(A) != NeatStatus::NeatCertified) continue;
      SurfaceInvariants inv;
      try {
        inv = compute_invariants(k, F);
      } catch (const Prime2NonDecomposed&) {
        continue;
      }
      ++neat_levels;
      for (long kk = 2; kk <= 5; ++kk) {
        BigInt d1 = cusp_form_dimension(k, F, kk);
        BigInt d2 = cusp_form_dimension_via_chern(inv, kk);
        INFO("D = " << k.D << ", ideal norm = " << A.norm().get_str() << ", k = " << kk);
        REQUIRE(d1 == d2);
        REQUIRE(d1 >= 0);
      }
    }
  }
  REQUIRE(neat_levels >= 20);
}
