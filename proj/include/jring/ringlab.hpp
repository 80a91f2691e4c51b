#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jring/asymptotic.hpp"
#include "jring/int_matrix.hpp"

namespace jring {

// Expression tree over atoms {integer literal, I, M<k>} with +, -, unary -,
// ordered (non-commutative) juxtaposition product, and nonnegative integer
// powers.  ^ binds tightest, then product, then +/-.
struct MatrixExpr {
  enum class Kind { Literal, Atom, Neg, Add, Sub, Mul, Pow };

  Kind kind = Kind::Literal;
  Int literal;                  // Literal
  std::string atom;             // Atom: "I" or "M<k>"
  std::vector<MatrixExpr> kids; // Neg: 1; Add/Sub/Mul: 2; Pow: 1
  unsigned exponent = 0;        // Pow

  // full relation `M3 = -I + M2^2`; returns (target name, rhs tree)
  static std::pair<std::string, MatrixExpr> parse_relation(const std::string& text);
  // bare expression
  static MatrixExpr parse(const std::string& text);

  std::string str() const;
};

// exact evaluation; `dim` fixes the size of I and of scalar literals
IntMatrix eval_expr(const MatrixExpr& e,
                    const std::map<std::string, IntMatrix>& bindings, int dim);

struct SubringReport {
  // basis subsets (ascending 0-based positions) that contain the identity
  // and are closed under multiplication, in mask order
  std::vector<std::vector<int>> unital;
  // product-closed subsets without the distinguished identity whose span
  // nevertheless has its own two-sided unit (reported, not used for
  // acceptance)
  std::vector<std::vector<int>> other_unital;
};

SubringReport enumerate_unital_subrings(const GammaTensor& t);

// all basis bijections pi with G1(i,j,k) = G2(pi i, pi j, pi k);
// lexicographically sorted
std::vector<std::vector<int>> find_permutation_isomorphisms(const GammaTensor& t1,
                                                            const GammaTensor& t2);

// conjugate of t by perm: result(perm[i],perm[j],perm[k]) = t(i,j,k)
GammaTensor relabel(const GammaTensor& t, const std::vector<int>& perm);

// rank of the commutator span [t_i, t_j]
int derived_algebra_dimension(const GammaTensor& t);
// nullity of sum_i c_i (G(i,j,k) - G(j,i,k)) = 0 over all (j,k)
int center_dimension(const GammaTensor& t);

struct TraceForm {
  IntMatrix gram;  // gram[i][j] = tr of left multiplication by t_i t_j
  Int det;
  bool nondegenerate = false;
};

TraceForm trace_form_gram(const GammaTensor& t);

}  // namespace jring
