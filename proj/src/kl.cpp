#include "jring/kl.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "jring/util.hpp"

namespace jring {

namespace {

const IntPolynomial& poly_zero() {
  static const IntPolynomial z;
  return z;
}
const IntPolynomial& poly_one() {
  static const IntPolynomial o = IntPolynomial::constant(1);
  return o;
}

std::string pool_key(const IntPolynomial& p) {
  std::string k;
  for (const Int& c : p.coeffs()) {
    k += c.get_str();
    k += ',';
  }
  return k;
}

IntPolynomial shift_q(const IntPolynomial& p, int k) {
  return IntPolynomial::monomial(1, k) * p;
}

}  // namespace

const IntPolynomial* KLTable::stored(ElementIndex x, ElementIndex w) const {
  const Row& row = rows_[w];
  auto it = std::lower_bound(row.xs.begin(), row.xs.end(), x);
  if (it == row.xs.end() || *it != x) return nullptr;
  return &pool_[row.ids[it - row.xs.begin()]];
}

const IntPolynomial& KLTable::P(ElementIndex x, ElementIndex w) const {
  const CoxeterGroup& g = *g_;
  if (x == w) return poly_one();
  if (g.length(x) >= g.length(w)) return poly_zero();
  if (!g.bruhat_leq(x, w)) return poly_zero();
  // climb x to the extremal representative of its class in row w
  for (;;) {
    GenSet need = g.left_descents(w) & ~g.left_descents(x);
    if (need) {
      x = g.left(std::countr_zero(need), x);
      if (x == w) return poly_one();
      continue;
    }
    need = g.right_descents(w) & ~g.right_descents(x);
    if (need) {
      x = g.right(x, std::countr_zero(need));
      if (x == w) return poly_one();
      continue;
    }
    break;
  }
  const IntPolynomial* p = stored(x, w);
  if (!p) throw InvariantError("missing extremal KL pair");
  return *p;
}

int KLTable::mu(ElementIndex x, ElementIndex w) const {
  const CoxeterGroup& g = *g_;
  if (g.length(x) >= g.length(w)) return 0;
  int gap = g.length(w) - g.length(x);
  if (!g.bruhat_leq(x, w)) return 0;
  if (gap == 1) return 1;  // P = 1 with constant term 1
  if (gap % 2 == 0) return 0;
  const IntPolynomial& p = P(x, w);
  Int c = p.coeff((gap - 1) / 2);
  if (!c.fits_sint_p()) throw InvariantError("mu out of int range");
  return int(c.get_si());
}

LaurentPoly KLTable::p_small(ElementIndex x, ElementIndex w) const {
  const CoxeterGroup& g = *g_;
  if (!g.bruhat_leq(x, w)) return LaurentPoly::zero();
  return P(x, w).to_laurent_q(g.length(x) - g.length(w));
}

LaurentPoly KLTable::p_prime(ElementIndex z, ElementIndex w) const {
  const CoxeterGroup& g = *g_;
  if (!g.bruhat_leq(z, w)) return LaurentPoly::zero();
  ElementIndex w0 = g.longest();
  LaurentPoly p = p_small(g.multiply(w0, w), g.multiply(w0, z));
  int sign = g.epsilon(z) * g.epsilon(w);
  return sign < 0 ? -p : p;
}

HeckeVector KLTable::c_basis(ElementIndex w) const {
  HeckeVector out;
  for (ElementIndex y : g_->bruhat_downset(w)) hecke_add(out, y, p_small(y, w));
  return out;
}

std::size_t KLTable::stored_pairs() const {
  std::size_t n = 0;
  for (const Row& r : rows_) n += r.xs.size();
  return n;
}

// mu(z,w) != 0 only on Bruhat covers (mu = 1) or, for length gap >= 3, on
// stored extremal pairs whose top permitted coefficient is nonzero.
void KLTable::append_mu_row(ElementIndex w) {
  const CoxeterGroup& g = *g_;
  int lw = g.length(w);
  auto& list = mu_[w];
  for (ElementIndex z : g.bruhat_downset(w))
    if (g.length(z) == lw - 1) list.emplace_back(z, 1);
  const Row& row = rows_[w];
  for (std::size_t i = 0; i < row.xs.size(); ++i) {
    ElementIndex z = row.xs[i];
    int gap = lw - g.length(z);
    if (gap < 3 || gap % 2 == 0) continue;
    Int c = pool_[row.ids[i]].coeff((gap - 1) / 2);
    if (c == 0) continue;
    if (!c.fits_sint_p()) throw InvariantError("mu out of int range");
    list.emplace_back(z, int(c.get_si()));
  }
  std::sort(list.begin(), list.end());
}

void KLTable::build_mu_lists() {
  mu_.assign(g_->size(), {});
  for (ElementIndex w = 0; w < rows_.size(); ++w) append_mu_row(w);
}

KLTable KLTable::compute(const CoxeterGroup& g, int threads,
                         const Progress& progress) {
  KLTable t(g);
  std::size_t n = g.size();
  t.rows_.resize(n);
  std::unordered_map<std::string, std::uint32_t> interned;
  auto intern = [&](IntPolynomial p) -> std::uint32_t {
    std::string key = pool_key(p);
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    std::uint32_t id = std::uint32_t(t.pool_.size());
    t.pool_.push_back(std::move(p));
    interned.emplace(std::move(key), id);
    return id;
  };
  std::uint32_t one_id = intern(poly_one());

  t.rows_[0].xs = {0};
  t.rows_[0].ids = {one_id};
  t.mu_.assign(n, {});

  // per-length levels; indices at a fixed length are contiguous
  std::size_t done = 0;
  for (ElementIndex lo = 1; lo < n;) {
    int L = g.length(lo);
    ElementIndex hi = lo;
    while (hi < n && g.length(hi) == L) ++hi;

    struct RowResult {
      std::vector<ElementIndex> xs;
      std::vector<IntPolynomial> polys;
    };
    std::vector<RowResult> results(hi - lo);

    parallel_for(hi - lo, threads, [&](std::size_t k) {
      ElementIndex w = lo + ElementIndex(k);
      RowResult& res = results[k];
      int s = std::countr_zero(g.left_descents(w));
      ElementIndex v = g.left(s, w);
      GenSet lw = g.left_descents(w), rw = g.right_descents(w);
      std::vector<std::pair<ElementIndex, int>> muv;
      for (auto [z, m] : t.mu_[v])
        if ((g.left_descents(z) >> s) & 1) muv.emplace_back(z, m);
      for (ElementIndex x : g.bruhat_downset(w)) {
        if ((g.left_descents(x) & lw) != lw) continue;
        if ((g.right_descents(x) & rw) != rw) continue;
        IntPolynomial p;
        if (x == w) {
          p = poly_one();
        } else {
          // s in DL(w) <= DL(x), so sx < x:
          //   P_{x,w} = P_{sx,v} + q P_{x,v}
          //             - sum_{z: sz<z, x<=z<v} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
          p = t.P(g.left(s, x), v) + shift_q(t.P(x, v), 1);
          for (auto [z, m] : muv) {
            if (!g.bruhat_leq(x, z)) continue;
            IntPolynomial corr = shift_q(t.P(x, z), (g.length(w) - g.length(z)) / 2);
            if (m != 1) corr = IntPolynomial::constant(m) * corr;
            p -= corr;
          }
          if (p.coeff(0) != 1)
            throw InvariantError("KL polynomial without constant term 1");
          if (2 * p.degree() > g.length(w) - g.length(x) - 1)
            throw InvariantError("KL degree bound violated");
          for (const Int& c : p.coeffs())
            if (c < 0) throw InvariantError("negative KL coefficient");
        }
        res.xs.push_back(x);
        res.polys.push_back(std::move(p));
      }
    });

    for (std::size_t k = 0; k < results.size(); ++k) {
      ElementIndex w = lo + ElementIndex(k);
      Row& row = t.rows_[w];
      row.xs = std::move(results[k].xs);
      row.ids.reserve(row.xs.size());
      for (auto& p : results[k].polys) row.ids.push_back(intern(std::move(p)));
    }
    // mu entries of this level feed the next one
    for (ElementIndex w = lo; w < hi; ++w) t.append_mu_row(w);
    done += hi - lo;
    if (progress) progress(L, done, n);
    lo = hi;
  }
  return t;
}

/* ------------------------------- cache -------------------------------- */

void KLTable::save(std::ostream& os) const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                (unsigned long long)g_->descriptor().stable_hash());
  os << "klcache v1 " << buf << "\n";
  for (ElementIndex w = 0; w < rows_.size(); ++w) {
    const Row& row = rows_[w];
    for (std::size_t i = 0; i < row.xs.size(); ++i) {
      os << "P " << row.xs[i] << ' ' << w;
      for (const Int& c : pool_[row.ids[i]].coeffs()) os << ' ' << c.get_str();
      os << '\n';
    }
  }
}

KLTable KLTable::load(const CoxeterGroup& g, std::istream& is) {
  KLTable t(g);
  std::string magic, version, hash;
  if (!(is >> magic >> version >> hash) || magic != "klcache" || version != "v1")
    throw ParseError("not a klcache v1 file");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                (unsigned long long)g.descriptor().stable_hash());
  if (hash != buf)
    throw ParseError("cache descriptor hash mismatch (got " + hash +
                     ", want " + buf + ")");
  std::size_t n = g.size();
  t.rows_.resize(n);
  std::unordered_map<std::string, std::uint32_t> interned;
  std::string line;
  std::getline(is, line);  // rest of header line
  long prev_w = -1;
  long prev_x = -1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag != "P") throw ParseError("bad cache record '" + line + "'");
    unsigned long x, w;
    if (!(ls >> x >> w) || x >= n || w >= n)
      throw ParseError("bad cache indices in '" + line + "'");
    if (long(w) < prev_w || (long(w) == prev_w && long(x) <= prev_x))
      throw ParseError("cache records out of order");
    prev_w = long(w);
    prev_x = long(x);
    std::vector<Int> coeffs;
    std::string c;
    while (ls >> c) coeffs.emplace_back(c);
    IntPolynomial p(std::move(coeffs));
    if (p.coeff(0) != 1) throw ParseError("cache polynomial lacks constant term 1");
    std::string key = pool_key(p);
    auto it = interned.find(key);
    std::uint32_t id;
    if (it != interned.end()) {
      id = it->second;
    } else {
      id = std::uint32_t(t.pool_.size());
      t.pool_.push_back(std::move(p));
      interned.emplace(std::move(key), id);
    }
    t.rows_[w].xs.push_back(ElementIndex(x));
    t.rows_[w].ids.push_back(id);
  }
  t.build_mu_lists();
  return t;
}

/* ------------------------------- f' ----------------------------------- */

LaurentPoly f_prime(const CoxeterGroup& g, const KLTable& kl, ElementIndex x,
                    ElementIndex y, ElementIndex z) {
  LaurentPoly acc;
  for (const auto& [w, f] : t_multiply(g, x, y)) {
    if (!g.bruhat_leq(z, w)) continue;
    acc += kl.p_prime(z, w) * f;
  }
  return acc;
}

}  // namespace jring
