#include "jring/quadext.hpp"

#include <sstream>

#include "jring/util.hpp"

namespace jring {

int QuadExt::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against 5 b^2 (equality impossible: sqrt 5
  // is irrational)
  int c = cmp(a_ * a_, 5 * b_ * b_);
  return c > 0 ? sa : sb;
}

QuadExt QuadExt::inverse() const {
  Rat n = norm();
  if (n == 0) throw InvariantError("division by zero in Q(sqrt 5)");
  return QuadExt(a_ / n, -b_ / n);
}

std::string QuadExt::str() const {
  std::ostringstream os;
  if (b_ == 0) return a_.get_str();
  if (a_ != 0) os << a_.get_str() << (sgn(b_) < 0 ? " - " : " + ");
  else if (sgn(b_) < 0) os << "-";
  Rat ab = abs(b_);
  if (ab != 1) os << ab.get_str() << "*";
  os << "sqrt5";
  return os.str();
}

}  // namespace jring
