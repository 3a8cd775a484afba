#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "picard/errors.hpp"
#include "picard/ideal.hpp"
#include "picard/quadfield.hpp"

namespace picard {

// Ideal input grammar:
//   expr      := term ('*' term)*
//   term      := atom ('^' uint)?
//   atom      := 'sqrtd' | 'P(' p (',' root)? ')' | '(' element ')'
//   element   := signed sum of integers and integer multiples of 'w'
// 'w' is the integral basis element omega; 'sqrtd' is the principal ideal
// (sqrt(-d)); P(p) is the prime over p (split primes default to the smaller
// root, P(p,r) selects a conjugate).

inline bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

namespace detail {

class IdealParser {
 public:
  IdealParser(const QuadraticField& field, std::string text)
      : field_(field), text_(std::move(text)) {}

  Ideal parse() {
    Ideal result = parse_term();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      result = multiply(result, parse_term());
      skip_ws();
    }
    if (pos_ != text_.size()) fail("trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("bad ideal expression \"" + text_ + "\" at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long parse_long() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000'000L) fail("integer literal too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  Ideal parse_term() {
    Ideal base = parse_atom();
    if (peek() == '^') {
      ++pos_;
      long e = parse_long();
      if (e < 1 || e > 64) fail("exponent out of range 1..64");
      return pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Ideal parse_atom() {
    skip_ws();
    if (text_.compare(pos_, 5, "sqrtd") == 0) {
      pos_ += 5;
      return principal_sqrt_minus_d(field_);
    }
    if (peek() == 'P') {
      ++pos_;
      expect('(');
      long p = parse_long();
      if (!is_prime_long(p)) fail("P(...) needs a prime, got " + std::to_string(p));
      if (p > kTrialDivisionBound) fail("prime exceeds the supported bound");
      bool have_root = false;
      long root = 0;
      if (peek() == ',') {
        ++pos_;
        root = parse_long();
        have_root = true;
      }
      expect(')');
      auto primes = prime_ideals_above(field_, p);
      if (primes[0].splitting == SplittingType::Split) {
        if (!have_root) return prime_to_ideal(field_, primes[0]);  // canonical: smaller root
        for (const auto& P : primes)
          if (*P.root == root) return prime_to_ideal(field_, P);
        fail(std::to_string(root) + " is not a root of the minimal polynomial mod " +
             std::to_string(p));
      }
      if (have_root) fail("root given for a non-split prime");
      return prime_to_ideal(field_, primes[0]);
    }
    if (peek() == '(') {
      ++pos_;
      auto [u, v] = parse_element();
      expect(')');
      if (u == 0 && v == 0) fail("the zero ideal is not an ideal expression");
      return principal(field_, BigInt(u), BigInt(v));
    }
    fail("expected 'sqrtd', 'P(...)' or '(...)'");
  }

  // signed sum of monomials: int, int '*'? 'w', or 'w'
  std::pair<long, long> parse_element() {
    long u = 0, v = 0;
    bool first = true;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == ')' && !first) break;
      long sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
        c = peek();
      } else if (!first) {
        fail("expected '+', '-' or ')'");
      }
      if (c == 'w') {
        ++pos_;
        v += sign;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        long value = parse_long();
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
          if (peek() != 'w') fail("expected 'w' after '*'");
          ++pos_;
          v += sign * value;
        } else if (peek() == 'w') {
          ++pos_;
          v += sign * value;
        } else {
          u += sign * value;
        }
      } else {
        fail("expected an integer or 'w'");
      }
      first = false;
    }
    return {u, v};
  }

  const QuadraticField& field_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Ideal parse_ideal(const QuadraticField& field, const std::string& text) {
  return detail::IdealParser(field, text).parse();
}

// Canonical factored form; re-parsing it yields an equal FactoredIdeal.
inline std::string canonical_string(const FactoredIdeal& A) {
  if (A.factors.empty()) return "(1)";
  std::string out;
  for (const auto& [P, e] : A.factors) {
    if (!out.empty()) out += "*";
    out += "P(" + std::to_string(P.p);
    if (P.splitting == SplittingType::Split) out += "," + std::to_string(*P.root);
    out += ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Human-readable HNF: [a, b + c*w].
inline std::string hnf_string(const Ideal& A) {
  return "[" + A.a().get_str() + ", " + A.b().get_str() + " + " + A.c().get_str() + "*w]";
}

}  // namespace picard
