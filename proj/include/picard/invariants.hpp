#pragma once

#include <cmath>
#include <cstdlib>
#include <string>

#include "picard/bernoulli.hpp"
#include "picard/congruence.hpp"
#include "picard/errors.hpp"
#include "picard/ideal.hpp"
#include "picard/quadfield.hpp"
#include "picard/rational.hpp"

namespace picard {

enum class ClassificationVerdict { GeneralType, PossibleException, NotCertifiedNeat, Undetermined };

inline const char* to_string(ClassificationVerdict v) {
  switch (v) {
    case ClassificationVerdict::GeneralType: return "GeneralType";
    case ClassificationVerdict::PossibleException: return "PossibleException";
    case ClassificationVerdict::NotCertifiedNeat: return "NotCertifiedNeat";
    case ClassificationVerdict::Undetermined: return "Undetermined";
  }
  return "?";
}

// Invariants of the smooth compactification of the ball quotient of level
// `ideal`: c2 = I * B3 / 48, tt = -(h * eta / theta^2) * I, and
// c1sq = 3 c2 + tt. Everything except `ratio` is exact.
struct SurfaceInvariants {
  QuadraticField field;
  FactoredIdeal ideal;
  BigInt index;
  Rational c2;
  Rational tt;        // self-intersection of the compactification divisor, <= 0
  Rational c1sq;
  Rational chi_holo;  // (c1sq + c2) / 12
  double ratio = 0.0; // c1sq / c2 as a double
  BigInt theta;
  NeatStatus neat = NeatStatus::NotGuaranteed;
  ClassificationVerdict verdict = ClassificationVerdict::Undetermined;
};

// Euler number of the quotient by the full group: delta_K * B_{3,chi_D} / 48.
inline Rational euler_number_full_group(const QuadraticField& field) {
  return field.delta * generalized_bernoulli(field, 3).value / 48;
}

// Euler number per unit of index for the congruence-level series:
// B_{3,chi_D} / 48. For d = 3 the 1/3 in the full-group volume comes from
// the cube roots of unity acting trivially; that factor cancels against the
// effective covering degree for the congruence levels, and keeping it would
// give non-integral chi(O) and cusp-form dimensions on neat d = 3 levels.
// For every other field this equals euler_number_full_group.
inline Rational euler_number_per_index(const QuadraticField& field) {
  return generalized_bernoulli(field, 3).value / 48;
}

inline bool has_ramified_factor(const FactoredIdeal& A) {
  for (const auto& [P, e] : A.factors) {
    (void)e;
    if (P.splitting == SplittingType::Ramified) return true;
  }
  return false;
}

inline ClassificationVerdict classify(const SurfaceInvariants& inv) {
  if (inv.neat != NeatStatus::NeatCertified) return ClassificationVerdict::NotCertifiedNeat;
  if (inv.c1sq > 9) return ClassificationVerdict::GeneralType;
  if (inv.field.D == -7 && has_ramified_factor(inv.ideal))
    return ClassificationVerdict::PossibleException;
  return ClassificationVerdict::Undetermined;
}

inline SurfaceInvariants compute_invariants(const QuadraticField& field, const FactoredIdeal& A) {
  SurfaceInvariants inv;
  inv.field = field;
  inv.ideal = A;
  inv.index = global_index(field, A);
  Ideal full = A.reconstruct();
  inv.theta = theta(full);
  inv.neat = neat_status(full);
  inv.c2 = Rational(inv.index) * euler_number_per_index(field);
  BigInt theta_sq = inv.theta * inv.theta;
  inv.tt = -Rational(class_number(field)) * field.eta / Rational(theta_sq) * Rational(inv.index);
  inv.c1sq = 3 * inv.c2 + inv.tt;
  inv.chi_holo = (inv.c1sq + inv.c2) / 12;
  if (inv.c2 == 0) throw InternalError("c2 vanished for a nonzero ideal");
  inv.ratio = to_double(inv.c1sq / inv.c2);
  inv.verdict = classify(inv);
  return inv;
}

inline double chern_ratio(const SurfaceInvariants& inv) {
  if (inv.c2 == 0) throw InternalError("chern ratio undefined: c2 = 0");
  return to_double(inv.c1sq / inv.c2);
}

// Exact test of  3 * B3 / 48 - h * eta / theta^2 >= 1  for a single prime
// power; c1sq > 9 follows whenever this holds and the index exceeds 9.
inline bool general_type_inequality(const QuadraticField& field, const FactoredIdeal& A) {
  if (A.factors.size() != 1)
    throw InternalError("general_type_inequality expects a prime-power ideal");
  BigInt th = theta(A.reconstruct());
  BigInt th_sq = th * th;
  Rational lhs = 3 * euler_number_per_index(field) -
                 Rational(class_number(field)) * field.eta / Rational(th_sq);
  return lhs >= 1;
}

// |D|^(5/2) > (16 pi^4 / (3 sqrt 6)) (2 + |D|), evaluated in doubles. The
// comparands are O(10^4) here, far above the 1e-12 relative tolerance.
inline bool discriminant_bound_check(long D) {
  double f = static_cast<double>(std::labs(D));
  double lhs = std::pow(f, 2.5);
  double rhs = 16.0 * std::pow(M_PI, 4) / (3.0 * std::sqrt(6.0)) * (2.0 + f);
  return lhs > rhs * (1.0 + 1e-12);
}

// dim S_k for the congruence subgroup of level A (neat, k >= 2):
//   (I/6) { (9k(k-1)+2) * B3 / 48  -  h * eta / (2 theta^2) }
inline BigInt cusp_form_dimension(const QuadraticField& field, const FactoredIdeal& A, long k) {
  if (k < 2) throw WeightTooSmall("cusp form dimension needs weight k >= 2, got " + std::to_string(k));
  Ideal full = A.reconstruct();
  if (neat_status(full) != NeatStatus::NeatCertified)
    throw NotNeat("dimension formula requires a neat-certified level (need N > 3 and odd rational part)");
  BigInt I = global_index(field, A);
  BigInt th = theta(full);
  BigInt th_sq = th * th;
  Rational weight_term = Rational(9 * k * (k - 1) + 2) * euler_number_per_index(field);
  Rational cusp_term = Rational(class_number(field)) * field.eta / (2 * Rational(th_sq));
  Rational dim = Rational(I) / 6 * (weight_term - cusp_term);
  if (!is_integer(dim) || dim < 0)
    throw NonIntegralDimension("dimension formula gave non-integral value " + to_string(dim));
  return dim.get_num();
}

// Same dimension through the Chern numbers of the compactified surface:
//   (9k(k-1)+2)/6 * c2 + tt / 12.
inline BigInt cusp_form_dimension_via_chern(const SurfaceInvariants& inv, long k) {
  if (k < 2) throw WeightTooSmall("cusp form dimension needs weight k >= 2, got " + std::to_string(k));
  if (inv.neat != NeatStatus::NeatCertified)
    throw NotNeat("dimension formula requires a neat-certified level");
  Rational dim = frac(9 * k * (k - 1) + 2, 6) * inv.c2 + inv.tt / 12;
  if (!is_integer(dim) || dim < 0)
    throw NonIntegralDimension("dimension formula gave non-integral value " + to_string(dim));
  return dim.get_num();
}

}  // namespace picard
