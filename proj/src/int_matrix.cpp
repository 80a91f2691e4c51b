#include "jring/int_matrix.hpp"

#include <sstream>

#include "jring/util.hpp"

namespace jring {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

static void check_same_dim(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim())
    throw InvariantError("matrix dimension mismatch: " +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  check_same_dim(a, b);
  IntMatrix r(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  check_same_dim(a, b);
  IntMatrix r(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  check_same_dim(a, b);
  int n = a.n_;
  IntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntMatrix operator*(const Int& c, const IntMatrix& m) {
  IntMatrix r(m);
  for (auto& x : r.a_) x *= c;
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(*this);
  for (auto& x : r.a_) x = -x;
  return r;
}

IntMatrix IntMatrix::pow(unsigned e) const {
  IntMatrix r = identity(n_);
  IntMatrix base(*this);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Int IntMatrix::trace() const {
  Int t(0);
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) os << ' ';
      os << at(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

IntPolynomial char_poly(const IntMatrix& m) {
  int n = m.dim();
  // V holds coefficients of det(uI - A_r) from u^r down to u^0 for the
  // leading principal r x r submatrix A_r.
  std::vector<Int> V{Int(1)};
  std::vector<Int> t, w, w2, V2;
  for (int r = 1; r <= n; ++r) {
    // Toeplitz column: 1, -a, -R C, -R M C, ... with a = m[r-1][r-1],
    // R = last row, C = last column, M = previous principal block.
    t.assign(1, Int(1));
    t.push_back(-m.at(r - 1, r - 1));
    w.resize(r - 1);
    for (int i = 0; i < r - 1; ++i) w[i] = m.at(i, r - 1);
    for (int k = 2; k <= r; ++k) {
      Int dot(0);
      for (int i = 0; i < r - 1; ++i) dot += m.at(r - 1, i) * w[i];
      t.push_back(-dot);
      if (k < r) {
        w2.assign(r - 1, Int(0));
        for (int i = 0; i < r - 1; ++i)
          for (int j = 0; j < r - 1; ++j) w2[i] += m.at(i, j) * w[j];
        w.swap(w2);
      }
    }
    V2.assign(r + 1, Int(0));
    for (int i = 0; i <= r; ++i)
      for (int j = std::max(0, i - r); j <= std::min(i, r - 1); ++j)
        V2[i] += t[i - j] * V[j];
    V.swap(V2);
  }
  std::vector<Int> ascending(V.rbegin(), V.rend());
  return IntPolynomial(std::move(ascending));
}

Int det_bareiss(IntMatrix m) {
  int n = m.dim();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      for (int j = 0; j < n; ++j) swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int v = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = std::move(v);
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

}  // namespace jring
