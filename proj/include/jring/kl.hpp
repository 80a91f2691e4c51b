#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "jring/coxeter.hpp"
#include "jring/hecke.hpp"
#include "jring/int_poly.hpp"
#include "jring/laurent.hpp"

namespace jring {

// The full Kazhdan-Lusztig table of a finite Coxeter group.  P_{x,w} is
// stored in q (integer powers); the half-power objects p_{x,w} and
// p'_{z,w} are derived accessors in v.
//
// Storage is triangular and compressed to the pairs with
// DL(w) <= DL(x), DR(w) <= DR(x); other pairs resolve through the standard
// identities P_{x,w} = P_{sx,w} (s in DL(w), sx > x) and its right-hand
// mirror.  mu-lists per w record the pairs with mu != 0.
class KLTable {
 public:
  using Progress = std::function<void(int length, std::size_t done, std::size_t total)>;

  static KLTable compute(const CoxeterGroup& g, int threads = 1,
                         const Progress& progress = {});

  const CoxeterGroup& group() const { return *g_; }

  // P_{x,w}; the zero polynomial when x is not <= w
  const IntPolynomial& P(ElementIndex x, ElementIndex w) const;
  int mu(ElementIndex x, ElementIndex w) const;
  // p_{x,w} = v^{l(x)-l(w)} P_{x,w}(v^2)
  LaurentPoly p_small(ElementIndex x, ElementIndex w) const;
  // p'_{z,w} = eps_z eps_w p_{w0 w, w0 z}; [p'][p] is the identity matrix
  LaurentPoly p_prime(ElementIndex z, ElementIndex w) const;
  // pairs (z, mu(z,w)) with mu != 0 and z < w, ascending in z
  const std::vector<std::pair<ElementIndex, int>>& mu_list(ElementIndex w) const {
    return mu_[w];
  }

  // c_w = sum_y p_{y,w} T_y
  HeckeVector c_basis(ElementIndex w) const;

  std::size_t stored_pairs() const;
  std::size_t distinct_polynomials() const { return pool_.size(); }

  // cache: `klcache v1 <descriptor-hash>` then one `P <x> <w> <c0> <c1> ...`
  // record per stored pair, sorted by (w, x); bit-exact across runs
  void save(std::ostream& os) const;
  static KLTable load(const CoxeterGroup& g, std::istream& is);

 private:
  explicit KLTable(const CoxeterGroup& g) : g_(&g) {}

  struct Row {
    std::vector<ElementIndex> xs;      // ascending
    std::vector<std::uint32_t> ids;    // parallel pool ids
  };

  const IntPolynomial* stored(ElementIndex x, ElementIndex w) const;
  void append_mu_row(ElementIndex w);
  void build_mu_lists();

  const CoxeterGroup* g_;
  std::vector<IntPolynomial> pool_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::pair<ElementIndex, int>>> mu_;
};

// f'_{x,y,z} = sum_w p'_{z,w} f_{x,y,w}; the c-basis coefficient of T_x T_y
LaurentPoly f_prime(const CoxeterGroup& g, const KLTable& kl, ElementIndex x,
                    ElementIndex y, ElementIndex z);

}  // namespace jring
