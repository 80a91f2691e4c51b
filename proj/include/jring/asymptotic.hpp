#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "jring/cells.hpp"
#include "jring/int_matrix.hpp"
#include "jring/kl.hpp"

namespace jring {

// Structure constants gamma_{x,y,z^{-1}} on an ordered basis of
// Gamma intersect Gamma^{-1}: at(i,j,k) is the coefficient of t_{x_k} in
// t_{x_i} t_{x_j}.  Immutable once built; validate() asserts the based-ring
// axioms.
struct GammaTensor {
  static constexpr int kUnknownA = -1;

  int n = 0;
  std::vector<ElementIndex> basis;   // empty when loaded from a file
  std::vector<std::string> words;    // optional, printable basis words
  std::vector<int> lengths;          // derived from words when present
  int a_value = kUnknownA;
  int identity = -1;                 // 0-based basis position of t_e
  std::vector<std::int64_t> entries; // n^3

  std::int64_t at(int i, int j, int k) const {
    return entries[(std::size_t(i) * n + j) * n + k];
  }
  std::int64_t& at(int i, int j, int k) {
    return entries[(std::size_t(i) * n + j) * n + k];
  }

  // position of x_i^{-1}, read off the coefficient of t_e in t_i t_j
  std::vector<int> inverse_pairing() const;
  // the unique two-sided identity position; throws "no identity found" /
  // "identity not unique"
  int find_identity() const;
  // associativity over all n^4 quadruples, identity axiom, nonnegativity,
  // inverse pairing, anti-automorphism symmetry
  void validate() const;

  // `gamma v1` file; indices 0-based, entries sorted lexicographically
  void write(std::ostream& os) const;
  static GammaTensor read(std::istream& is);
};

// left side of the leading-term identity:
//   sum_{w} eps_z eps_w P_{w0 w, w0 z} F_{x,y,w}
// with support pruned to {w : z <= w} inside supp(T_x T_y)
LaurentPoly lhs_polynomial(const CoxeterGroup& g, const KLTable& kl,
                           ElementIndex x, ElementIndex y, ElementIndex z);

struct DeltaMu {
  int n = 0;
  // v-degrees of the lhs polynomials, kNoDegree where the lhs vanishes
  static constexpr int kNoDegree = std::numeric_limits<int>::min();
  std::vector<int> degree;  // n^3
  int mu = 0;               // max of degree - (l(x)+l(y)-l(z)); the a-value

  int at(int i, int j, int k) const {
    return degree[(std::size_t(i) * n + j) * n + k];
  }
};

DeltaMu delta_and_mu(const CoxeterGroup& g, const KLTable& kl,
                     const std::vector<ElementIndex>& basis);

// gamma_{x_i, x_j, x_k^{-1}} = coefficient of v^{a + l(x_i)+l(x_j)-l(x_k)};
// a nonzero coefficient above that exponent is a hard "degree overflow"
GammaTensor gamma_tensor(const CoxeterGroup& g, const KLTable& kl,
                         const std::vector<ElementIndex>& basis,
                         int threads = 1);

// M_j with rows y, columns z; the transpose of left multiplication by t_j
IntMatrix left_mult_matrix(const GammaTensor& t, int j);

// the unique x in the cell with t_x the identity of J(Gamma), cross-checked
// against a(x) = l(x) - 2 deg P_{e,x}
ElementIndex distinguished_involution(const CoxeterGroup& g, const KLTable& kl,
                                      const std::vector<ElementIndex>& left_cell);

struct SmallCellSummary {
  enum class Law { Singleton, TsSquaredTe, TsSquaredTePlusTs, Other };
  int size = 0;
  Law law = Law::Singleton;
  std::string text;  // e.g. "t_s^2 = t_e + t_s"
};

// J(Gamma) for |Gamma ∩ Gamma^{-1}| <= 2
SmallCellSummary small_cell_summary(const CoxeterGroup& g, const KLTable& kl,
                                    const std::vector<ElementIndex>& left_cell);

}  // namespace jring
