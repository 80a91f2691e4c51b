#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "jring/numeric.hpp"

namespace jring {

// Laurent polynomial in v = q^{1/2} with Int coefficients, stored densely as
// (offset, coefficient run).  Always canonical: empty run for zero, nonzero
// first and last coefficients otherwise, so operator== is structural.
class LaurentPoly {
 public:
  static constexpr int kNegInf = std::numeric_limits<int>::min();

  LaurentPoly() = default;  // zero
  LaurentPoly(int off, std::vector<Int> coeffs) : off_(off), c_(std::move(coeffs)) {
    normalize();
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly monomial(Int coeff, int exp);
  // v (ascending coefficients of a plain polynomial in q = v^2, then shifted
  // by v^shift); the KL layer stores P in q and converts here.
  static LaurentPoly from_q_poly(const std::vector<Int>& q_coeffs, int shift);

  bool is_zero() const { return c_.empty(); }
  // degree of zero is the kNegInf sentinel
  int degree() const { return c_.empty() ? kNegInf : off_ + int(c_.size()) - 1; }
  int valuation() const { return c_.empty() ? kNegInf : off_; }
  Int coeff(int exp) const;
  // (exponent, coefficient) of the top term; error on zero
  std::pair<int, Int> leading_term() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Int& c, const LaurentPoly& p);
  LaurentPoly operator-() const;

  LaurentPoly bar() const;          // v^k -> v^{-k}
  LaurentPoly shifted(int k) const; // * v^k

  bool operator==(const LaurentPoly&) const = default;

  std::string str() const;  // e.g. "v^2 - 2 + v^-2"

 private:
  void normalize();

  int off_ = 0;
  std::vector<Int> c_;
};

}  // namespace jring
