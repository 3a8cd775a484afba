#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "picard/bernoulli.hpp"
#include "picard/congruence.hpp"
#include "picard/invariants.hpp"
#include "picard/oracle.hpp"
#include "picard/parse.hpp"

namespace picard {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct VerifyOptions {
  oracle::EnumerationBudget budget;
  // Regression table of B_{3,chi_D} by |D|; overridable so the test suite can
  // prove the checker actually compares.
  std::vector<std::pair<long, Rational>> b3_table = default_b3_table();

  static std::vector<std::pair<long, Rational>> default_b3_table() {
    return {{3, Rational(2, 3)}, {4, Rational(3, 2)}, {7, Rational(48, 7)}, {8, Rational(9)},
            {11, Rational(18)},  {15, Rational(48)},  {19, Rational(66)},   {20, Rational(90)},
            {23, Rational(144)}, {24, Rational(138)}, {31, Rational(288)},  {35, Rational(324)}};
  }
};

namespace detail {

inline long fundamental_d_for(long absD) {
  // |D| = d for d = 3 mod 4, else 4d.
  return absD % 4 == 3 ? absD : absD / 4;
}

inline bool is_fundamental(long absD) {
  if (absD % 4 == 3) return is_squarefree(absD);
  if (absD % 4 == 0) {
    long d = absD / 4;
    return (d % 4 == 1 || d % 4 == 2) && is_squarefree(d);
  }
  return false;
}

}  // namespace detail

inline std::vector<CheckResult> run_verify(const VerifyOptions& opt = {}) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, CheckStatus st, std::string detail) {
    out.push_back(CheckResult{std::move(name), st, std::move(detail)});
  };

  // Generalized Bernoulli regression against the frozen table.
  {
    int good = 0;
    std::string bad;
    for (const auto& [absD, expected] : opt.b3_table) {
      auto field = make_field(detail::fundamental_d_for(absD));
      Rational got = generalized_bernoulli(field, 3).value;
      if (got == expected)
        ++good;
      else
        bad += " |D|=" + std::to_string(absD) + " got " + to_string(got) + " expected " +
               to_string(expected);
    }
    std::string msg = "B3 table: " + std::to_string(good) + "/" +
                      std::to_string(opt.b3_table.size()) + bad;
    add("b3-table", good == static_cast<int>(opt.b3_table.size()) ? CheckStatus::Pass
                                                                  : CheckStatus::Fail,
        msg);
  }

  // Analytic class number vs reduced-form enumeration.
  {
    int checked = 0;
    std::string bad;
    for (long absD = 3; absD <= 500; ++absD) {
      if (!detail::is_fundamental(absD)) continue;
      auto field = make_field(detail::fundamental_d_for(absD));
      BigInt analytic = class_number(field);
      long forms = oracle::class_number_forms(-absD);
      ++checked;
      if (analytic != forms)
        bad += " |D|=" + std::to_string(absD) + " analytic " + analytic.get_str() + " forms " +
               std::to_string(forms);
    }
    add("class-numbers", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail,
        "analytic formula vs reduced forms on " + std::to_string(checked) +
            " fundamental discriminants, |D| <= 500" + bad);
  }

  // Split local index vs |SL3(Z/p^n)| by enumeration.
  {
    const std::pair<long, unsigned> cases[] = {{2, 1}, {3, 1}, {5, 1}, {2, 2}};
    std::string detail_msg;
    bool all = true, any = false;
    for (auto [p, n] : cases) {
      if (pow_int(p, 9 * n) > opt.budget.max_elements) {
        detail_msg += " (" + std::to_string(p) + "," + std::to_string(n) + ") skipped;";
        continue;
      }
      any = true;
      BigInt enumerated = oracle::sl3_order(p, n, opt.budget);
      BigInt p2 = BigInt(p) * p, p3 = p2 * p;
      BigInt formula = pow_int(p, 8 * n - 5) * (p3 - 1) * (p2 - 1);
      bool ok = enumerated == formula;
      all = all && ok;
      detail_msg += " (" + std::to_string(p) + "," + std::to_string(n) + ") " +
                    enumerated.get_str() + (ok ? " ok;" : " != " + formula.get_str() + ";");
    }
    add("sl3-orders", !any ? CheckStatus::Skip : all ? CheckStatus::Pass : CheckStatus::Fail,
        "split index vs exhaustive SL3 count:" + detail_msg);
  }

  // Inert index formula at p = 2 vs the enumerated unitary group over F4.
  {
    if (opt.budget.max_elements < (1u << 18)) {
      add("su3-f4", CheckStatus::Skip, "SU3(F4) enumeration over budget");
    } else {
      auto su3 = oracle::su3_order_inert(2, opt.budget);
      BigInt formula = BigInt(8) * 9 * 3;  // 2^3 (2^3+1)(2^2-1)
      add("su3-f4", su3.value == formula && su3.value == 216 ? CheckStatus::Pass
                                                             : CheckStatus::Fail,
          "enumerated " + su3.value.get_str() + ", formula " + formula.get_str());
    }
  }

  // Inert local index at n = 1 vs the classical order for small odd p
  // (formula reference, not an independent count).
  {
    std::string msg;
    bool all = true;
    for (long p : {3, 5, 7, 11, 13}) {
      long d = 1;
      while (!is_squarefree(d) || splitting_type(make_field(d), p) != SplittingType::Inert) ++d;
      auto field = make_field(d);
      BigInt idx = local_index(field, PrimeIdeal{p, SplittingType::Inert, {}}, 1).value;
      BigInt q = p;
      BigInt order = q * q * q * (q * q * q + 1) * (q * q - 1);
      bool ok = idx == order;
      all = all && ok;
      msg += " p=" + std::to_string(p) + (ok ? " ok;" : " mismatch;");
    }
    add("su3-order-formula", all ? CheckStatus::Pass : CheckStatus::Fail,
        "inert index vs classical unitary order (reference):" + msg);
  }

  // Symmetric trace-zero counts and the odd-exponent ramified chain ratio.
  {
    bool all = true;
    std::string msg;
    for (long p : {3L, 5L, 7L}) {
      BigInt count = oracle::symmetric_tracezero_count(p);
      bool ok = count == pow_int(p, 5);
      // chain: ramified local index ratio at odd n equals the count
      long d = p == 3 ? 3 : (p == 5 ? 5 : 7);
      auto field = make_field(d);
      PrimeIdeal P{p, SplittingType::Ramified, {}};
      for (unsigned n : {1u, 3u}) {
        BigInt lo = local_index(field, P, n).value;
        BigInt hi = local_index(field, P, n + 1).value;
        ok = ok && hi == lo * count;
      }
      all = all && ok;
      msg += " p=" + std::to_string(p) + " count " + count.get_str() + (ok ? " ok;" : " bad;");
    }
    add("symmetric-tracezero", all ? CheckStatus::Pass : CheckStatus::Fail,
        "count = p^5 and matches the ramified chain ratio:" + msg);
  }

  // Reference surface: d = 7, level sqrt(-7).
  {
    auto field = make_field(7);
    auto inv = compute_invariants(field, factorize(principal_sqrt_minus_d(field)));
    bool ok = inv.index == 336 && inv.c2 == 48 && inv.c1sq == -24 &&
              inv.verdict == ClassificationVerdict::PossibleException;
    add("reference-surface", ok ? CheckStatus::Pass : CheckStatus::Fail,
        "d=7 sqrtd: index " + inv.index.get_str() + ", c2 " + to_string(inv.c2) + ", c1sq " +
            to_string(inv.c1sq) + ", verdict " + to_string(inv.verdict));
  }

  // HNF membership vs brute force on a few lattices.
  {
    bool all = true;
    int n = 0;
    for (long d : {1L, 2L, 7L, 15L}) {
      auto field = make_field(d);
      auto A = multiply(principal(field, 3, 1), principal(field, 1, 2));
      for (long u = -6; u <= 6; ++u)
        for (long v = -6; v <= 6; ++v) {
          ++n;
          if (A.contains(u, v) != oracle::membership_oracle(A, u, v)) all = false;
        }
    }
    add("membership", all ? CheckStatus::Pass : CheckStatus::Fail,
        "HNF membership vs bounded solve on " + std::to_string(n) + " elements");
  }

  return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

}  // namespace picard
