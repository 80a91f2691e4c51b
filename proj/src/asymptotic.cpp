#include "jring/asymptotic.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "jring/util.hpp"

namespace jring {

/* ------------------------------ GammaTensor --------------------------- */

std::vector<int> GammaTensor::inverse_pairing() const {
  std::vector<int> pair(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t c = at(i, j, identity);
      if (c == 0) continue;
      if (c != 1)
        throw InvariantError("inverse pairing: entry (" + std::to_string(i) +
                             "," + std::to_string(j) + ",e) = " +
                             std::to_string(c) + " != 1");
      if (pair[i] != -1)
        throw InvariantError("inverse pairing: row " + std::to_string(i) +
                             " has two partners");
      pair[i] = j;
    }
    if (pair[i] == -1)
      throw InvariantError("inverse pairing: row " + std::to_string(i) +
                           " has no partner");
  }
  for (int i = 0; i < n; ++i)
    if (pair[pair[i]] != i)
      throw InvariantError("inverse pairing is not an involution at " +
                           std::to_string(i));
  return pair;
}

int GammaTensor::find_identity() const {
  int found = -1;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k) {
        std::int64_t want = (j == k) ? 1 : 0;
        if (at(c, j, k) != want || at(j, c, k) != want) ok = false;
      }
    if (ok) {
      if (found != -1) throw InvariantError("identity not unique");
      found = c;
    }
  }
  if (found == -1) throw InvariantError("no identity found");
  return found;
}

void GammaTensor::validate() const {
  if (n <= 0 || entries.size() != std::size_t(n) * n * n)
    throw InvariantError("tensor shape mismatch");
  if (identity < 0 || identity >= n)
    throw InvariantError("identity index out of range");

  for (const std::int64_t& v : entries)
    if (v < 0)
      throw InvariantError("negative structure constant " + std::to_string(v));

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::int64_t want = (j == k) ? 1 : 0;
      if (at(identity, j, k) != want)
        throw InvariantError("identity axiom fails at t_e t_" + std::to_string(j));
      if (at(j, identity, k) != want)
        throw InvariantError("identity axiom fails at t_" + std::to_string(j) + " t_e");
    }
  if (find_identity() != identity)
    throw InvariantError("declared identity is not the unique identity");

  // associativity: sum_m G(i,j,m) G(m,k,l) = sum_m G(j,k,m) G(i,m,l)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          std::int64_t lhs = 0, rhs = 0;
          for (int m = 0; m < n; ++m) {
            lhs += at(i, j, m) * at(m, k, l);
            rhs += at(j, k, m) * at(i, m, l);
          }
          if (lhs != rhs)
            throw InvariantError(
                "associativity fails at quadruple (" + std::to_string(i) + "," +
                std::to_string(j) + "," + std::to_string(k) + "," +
                std::to_string(l) + "): " + std::to_string(lhs) +
                " != " + std::to_string(rhs));
        }

  // anti-automorphism: G(x,y,z) = G(y^{-1},x^{-1},z^{-1})
  std::vector<int> pair = inverse_pairing();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(i, j, k) != at(pair[j], pair[i], pair[k]))
          throw InvariantError("anti-automorphism symmetry fails at (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(k) + ")");
}

void GammaTensor::write(std::ostream& os) const {
  os << "gamma v1\n";
  os << "n " << n << "\n";
  if (a_value == kUnknownA)
    os << "a unknown\n";
  else
    os << "a " << a_value << "\n";
  os << "identity " << identity << "\n";
  if (!words.empty()) {
    os << "words";
    for (const auto& w : words) os << ' ' << w;
    os << "\n";
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(i, j, k) != 0)
          os << "g " << i << ' ' << j << ' ' << k << ' ' << at(i, j, k) << "\n";
}

GammaTensor GammaTensor::read(std::istream& is) {
  GammaTensor t;
  std::string line;
  if (!std::getline(is, line) || line != "gamma v1")
    throw ParseError("not a gamma v1 file");
  bool have_n = false;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "n") {
      if (!(ls >> t.n) || t.n <= 0) throw ParseError::at_line("bad n line", lineno);
      t.entries.assign(std::size_t(t.n) * t.n * t.n, 0);
      have_n = true;
    } else if (key == "a") {
      std::string v;
      ls >> v;
      if (v == "unknown")
        t.a_value = kUnknownA;
      else
        t.a_value = std::stoi(v);
    } else if (key == "identity") {
      if (!(ls >> t.identity)) throw ParseError::at_line("bad identity line", lineno);
    } else if (key == "words") {
      std::string w;
      while (ls >> w) t.words.push_back(w);
    } else if (key == "g") {
      if (!have_n) throw ParseError::at_line("entry before n line", lineno);
      int i, j, k;
      std::int64_t v;
      if (!(ls >> i >> j >> k >> v)) throw ParseError::at_line("bad entry line", lineno);
      if (i < 0 || i >= t.n || j < 0 || j >= t.n || k < 0 || k >= t.n)
        throw ParseError::at_line("entry index out of range", lineno);
      t.at(i, j, k) = v;
    } else {
      throw ParseError::at_line("unknown gamma-file keyword '" + key + "'", lineno);
    }
  }
  if (!have_n) throw ParseError("gamma file missing n line");
  if (!t.words.empty()) {
    if (int(t.words.size()) != t.n)
      throw ParseError("words line length disagrees with n");
    for (const auto& w : t.words) t.lengths.push_back(int(w.size()));
  }
  return t;
}

/* ------------------------------ pipeline ------------------------------ */

LaurentPoly lhs_polynomial(const CoxeterGroup& g, const KLTable& kl,
                           ElementIndex x, ElementIndex y, ElementIndex z) {
  LaurentPoly acc;
  ElementIndex w0 = g.longest();
  ElementIndex w0z = g.multiply(w0, z);
  int lx = g.length(x), ly = g.length(y);
  for (const auto& [w, f] : t_multiply(g, x, y)) {
    if (!g.bruhat_leq(z, w)) continue;
    const IntPolynomial& P = kl.P(g.multiply(w0, w), w0z);
    LaurentPoly term = P.to_laurent_q(0) * f.shifted(lx + ly - g.length(w));
    if (g.epsilon(z) * g.epsilon(w) < 0)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

namespace {

// all lhs polynomials over the basis, indexed [i][j][k]
std::vector<LaurentPoly> lhs_block(const CoxeterGroup& g, const KLTable& kl,
                                   const std::vector<ElementIndex>& basis,
                                   int threads) {
  std::size_t n = basis.size();
  std::vector<LaurentPoly> polys(n * n * n);
  std::vector<ElementIndex> w0_times = g.translate_all(g.longest());
  parallel_for(n, threads, [&](std::size_t i) {
    ElementIndex x = basis[i];
    for (std::size_t j = 0; j < n; ++j) {
      ElementIndex y = basis[j];
      HeckeVector prod = t_multiply(g, x, y);
      int shift_base = g.length(x) + g.length(y);
      for (std::size_t k = 0; k < n; ++k) {
        ElementIndex z = basis[k];
        LaurentPoly acc;
        for (const auto& [w, f] : prod) {
          if (!g.bruhat_leq(z, w)) continue;
          const IntPolynomial& P = kl.P(w0_times[w], w0_times[z]);
          LaurentPoly term = P.to_laurent_q(0) * f.shifted(shift_base - g.length(w));
          if (g.epsilon(z) * g.epsilon(w) < 0)
            acc -= term;
          else
            acc += term;
        }
        polys[(i * n + j) * n + k] = std::move(acc);
      }
    }
  });
  return polys;
}

}  // namespace

DeltaMu delta_and_mu(const CoxeterGroup& g, const KLTable& kl,
                     const std::vector<ElementIndex>& basis) {
  if (basis.empty()) throw InvariantError("empty cell basis");
  std::size_t n = basis.size();
  auto polys = lhs_block(g, kl, basis, 1);
  DeltaMu dm;
  dm.n = int(n);
  dm.degree.assign(n * n * n, DeltaMu::kNoDegree);
  bool any = false;
  int mu = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const LaurentPoly& p = polys[(i * n + j) * n + k];
        if (p.is_zero()) continue;
        any = true;
        int d = p.degree();
        dm.degree[(i * n + j) * n + k] = d;
        mu = std::max(mu, d - g.length(basis[i]) - g.length(basis[j]) +
                              g.length(basis[k]));
      }
  if (!any)
    throw InvariantError("all lhs polynomials vanish; malformed cell input");
  dm.mu = mu;
  return dm;
}

GammaTensor gamma_tensor(const CoxeterGroup& g, const KLTable& kl,
                         const std::vector<ElementIndex>& basis, int threads) {
  if (basis.empty()) throw InvariantError("empty cell basis");
  std::size_t n = basis.size();
  auto polys = lhs_block(g, kl, basis, threads);

  int a = std::numeric_limits<int>::min();
  bool any = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const LaurentPoly& p = polys[(i * n + j) * n + k];
        if (p.is_zero()) continue;
        any = true;
        a = std::max(a, p.degree() - g.length(basis[i]) - g.length(basis[j]) +
                            g.length(basis[k]));
      }
  if (!any)
    throw InvariantError("all lhs polynomials vanish; malformed cell input");

  GammaTensor t;
  t.n = int(n);
  t.basis = basis;
  t.a_value = a;
  t.entries.assign(n * n * n, 0);
  for (ElementIndex x : basis) {
    t.words.push_back(g.word_string(x));
    t.lengths.push_back(g.length(x));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const LaurentPoly& p = polys[(i * n + j) * n + k];
        if (p.is_zero()) continue;
        int lead = a + g.length(basis[i]) + g.length(basis[j]) -
                   g.length(basis[k]);
        if (p.degree() > lead)
          throw InvariantError(
              "degree overflow at triple (" + std::to_string(i) + "," +
              std::to_string(j) + "," + std::to_string(k) + "): degree " +
              std::to_string(p.degree()) + " > " + std::to_string(lead));
        Int c = p.coeff(lead);
        if (!c.fits_slong_p())
          throw InvariantError("structure constant out of int64 range");
        t.entries[(i * n + j) * n + k] = c.get_si();
      }
  t.identity = t.find_identity();
  t.validate();

  // the pairing must agree with inversion in the group
  std::vector<int> pair = t.inverse_pairing();
  for (std::size_t i = 0; i < n; ++i) {
    ElementIndex xi = g.inverse(basis[i]);
    auto it = std::lower_bound(basis.begin(), basis.end(), xi);
    if (it == basis.end() || *it != xi)
      throw InvariantError("cell basis not closed under inversion");
    if (pair[i] != int(it - basis.begin()))
      throw InvariantError("inverse pairing disagrees with group inversion");
  }
  return t;
}

IntMatrix left_mult_matrix(const GammaTensor& t, int j) {
  if (j < 0 || j >= t.n) throw InvariantError("basis index out of range");
  IntMatrix m(t.n);
  for (int y = 0; y < t.n; ++y)
    for (int z = 0; z < t.n; ++z) m.at(y, z) = t.at(j, y, z);
  return m;
}

ElementIndex distinguished_involution(const CoxeterGroup& g, const KLTable& kl,
                                      const std::vector<ElementIndex>& cell) {
  std::vector<ElementIndex> basis = gamma_basis(g, cell);
  GammaTensor t = gamma_tensor(g, kl, basis);
  ElementIndex x = basis[t.identity];
  if (g.inverse(x) != x)
    throw InvariantError("distinguished element is not an involution");
  int deg = kl.P(g.identity(), x).degree();
  if (t.a_value != g.length(x) - 2 * deg)
    throw InvariantError("a-value disagrees with l(x) - 2 deg P_{e,x} at " +
                         g.word_string(x));
  return x;
}

SmallCellSummary small_cell_summary(const CoxeterGroup& g, const KLTable& kl,
                                    const std::vector<ElementIndex>& cell) {
  std::vector<ElementIndex> basis = gamma_basis(g, cell);
  if (basis.size() > 2)
    throw InvariantError("small cell summary needs |basis| <= 2");
  GammaTensor t = gamma_tensor(g, kl, basis);
  SmallCellSummary s;
  s.size = t.n;
  if (t.n == 1) {
    s.law = SmallCellSummary::Law::Singleton;
    s.text = "t_e^2 = t_e";
    return s;
  }
  int other = 1 - t.identity;
  std::int64_t ce = t.at(other, other, t.identity);
  std::int64_t cs = t.at(other, other, other);
  std::ostringstream os;
  if (ce == 1 && cs == 0) {
    s.law = SmallCellSummary::Law::TsSquaredTe;
    os << "t_s^2 = t_e";
  } else if (ce == 1 && cs == 1) {
    s.law = SmallCellSummary::Law::TsSquaredTePlusTs;
    os << "t_s^2 = t_e + t_s";
  } else {
    s.law = SmallCellSummary::Law::Other;
    os << "t_s^2 = " << ce << " t_e + " << cs << " t_s";
  }
  s.text = os.str();
  return s;
}

}  // namespace jring
