#pragma once

#include <string>

#include "jring/numeric.hpp"

namespace jring {

// Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).  The (a, b)
// pair is a unique representation, so == and container ordering are exact.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0) {}
  QuadExt(long v) : a_(v), b_(0) {}  // NOLINT: implicit by design
  QuadExt(Rat a, Rat b = Rat(0)) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }
  static QuadExt sqrt5() { return QuadExt(Rat(0), Rat(1)); }

  const Rat& rational_part() const { return a_; }
  const Rat& surd_part() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QuadExt conj() const { return QuadExt(a_, -b_); }
  Rat norm() const { return a_ * a_ - 5 * b_ * b_; }
  // exact sign as a real number
  int sign() const;
  QuadExt inverse() const;

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_);
  }
  QuadExt operator-() const { return QuadExt(-a_, -b_); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    return x * y.inverse();
  }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  // container order only, not the real-number order
  friend bool operator<(const QuadExt& x, const QuadExt& y) {
    int c = cmp(x.a_, y.a_);
    if (c != 0) return c < 0;
    return cmp(x.b_, y.b_) < 0;
  }

  std::string str() const;

 private:
  Rat a_, b_;
};

}  // namespace jring
