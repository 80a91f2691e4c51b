#include "jring/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "jring/util.hpp"

namespace jring {

void LaurentPoly::normalize() {
  std::size_t lo = 0, hi = c_.size();
  while (lo < hi && c_[lo] == 0) ++lo;
  while (hi > lo && c_[hi - 1] == 0) --hi;
  if (lo == hi) {
    c_.clear();
    off_ = 0;
    return;
  }
  if (lo > 0) c_.erase(c_.begin(), c_.begin() + lo);
  c_.resize(hi - lo);
  off_ += int(lo);
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) {
    p.off_ = exp;
    p.c_.push_back(std::move(coeff));
  }
  return p;
}

LaurentPoly LaurentPoly::from_q_poly(const std::vector<Int>& q_coeffs, int shift) {
  LaurentPoly p;
  if (q_coeffs.empty()) return p;
  p.off_ = shift;
  p.c_.assign(2 * q_coeffs.size() - 1, Int(0));
  for (std::size_t k = 0; k < q_coeffs.size(); ++k) p.c_[2 * k] = q_coeffs[k];
  p.normalize();
  return p;
}

Int LaurentPoly::coeff(int exp) const {
  if (c_.empty() || exp < off_ || exp >= off_ + int(c_.size())) return Int(0);
  return c_[exp - off_];
}

std::pair<int, Int> LaurentPoly::leading_term() const {
  if (c_.empty()) throw InvariantError("no leading term: zero polynomial");
  return {degree(), c_.back()};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    *this = o;
    return *this;
  }
  int lo = std::min(off_, o.off_);
  int hi = std::max(degree(), o.degree());
  std::vector<Int> out(hi - lo + 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[off_ - lo + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[o.off_ - lo + i] += o.c_[i];
  off_ = lo;
  c_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.c_.empty() || b.c_.empty()) return p;
  p.off_ = a.off_ + b.off_;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
  p.normalize();
  return p;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
  LaurentPoly r(p);
  for (auto& x : r.c_) x *= c;
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (c_.empty()) return p;
  p.c_.assign(c_.rbegin(), c_.rend());
  p.off_ = -degree();
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p(*this);
  if (!p.c_.empty()) p.off_ += k;
  return p;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = int(c_.size()) - 1; i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    int e = off_ + i;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace jring
