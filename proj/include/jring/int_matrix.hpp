#pragma once

#include <string>
#include <vector>

#include "jring/int_poly.hpp"
#include "jring/numeric.hpp"

namespace jring {

// Square matrix over Int.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(std::size_t(n) * n, Int(0)) {}
  static IntMatrix identity(int n);

  int dim() const { return n_; }
  Int& at(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
  const Int& at(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& c, const IntMatrix& m);
  IntMatrix operator-() const;
  IntMatrix pow(unsigned e) const;
  IntMatrix transposed() const;
  Int trace() const;

  bool operator==(const IntMatrix&) const = default;

  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Int> a_;
};

// det(uI - M), monic of degree n, by the division-free Samuelson-Berkowitz
// scheme.
IntPolynomial char_poly(const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det_bareiss(IntMatrix m);

}  // namespace jring
