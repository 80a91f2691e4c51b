#pragma once

#include <string>
#include <vector>

#include "jring/laurent.hpp"
#include "jring/numeric.hpp"

namespace jring {

// Univariate polynomial in u over Int, ascending coefficients, no trailing
// zeros (zero polynomial = empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, int exp);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  Int coeff(int k) const {
    return (k >= 0 && k < int(c_.size())) ? c_[k] : Int(0);
  }
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval(const Int& x) const;
  Int content() const;  // gcd of coefficients, 0 for zero

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  IntPolynomial pow(unsigned e) const;

  bool operator==(const IntPolynomial&) const = default;

  // substitute u = v^2 and multiply by v^shift
  LaurentPoly to_laurent_q(int shift = 0) const {
    return LaurentPoly::from_q_poly(c_, shift);
  }

  std::string str(const char* var = "u") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

}  // namespace jring
