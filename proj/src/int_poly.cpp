#include "jring/int_poly.hpp"

#include <sstream>

namespace jring {

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(Int c, int exp) {
  IntPolynomial p;
  if (c != 0) {
    p.c_.assign(exp + 1, Int(0));
    p.c_[exp] = std::move(c);
  }
  return p;
}

Int IntPolynomial::eval(const Int& x) const {
  Int r(0);
  for (int i = int(c_.size()) - 1; i >= 0; --i) r = r * x + c_[i];
  return r;
}

Int IntPolynomial::content() const {
  Int g(0);
  for (const Int& c : c_) g = gcd(g, c);
  return g;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial p;
  if (a.c_.empty() || b.c_.empty()) return p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial r = constant(1);
  IntPolynomial base(*this);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

std::string IntPolynomial::str(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = int(c_.size()) - 1; i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i != 0) {
      os << var;
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace jring
