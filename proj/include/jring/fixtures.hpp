#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "jring/asymptotic.hpp"
#include "jring/coxeter.hpp"
#include "jring/int_matrix.hpp"

namespace jring {

// Published data bundle for one cell ring: basis words, explicit generator
// matrices, relations for the rest, the characteristic-polynomial table,
// the closed-subset lists, and the derived/center dimensions.  Indices in
// fixture files are 1-based; they are converted at this boundary only.
struct CellFixture {
  std::string name;
  CoxeterDescriptor descriptor;
  int n = 0;
  int identity = 0;  // 1-based
  std::vector<std::string> words;                     // [n]
  std::map<int, IntMatrix> explicit_matrices;         // 1-based keys
  std::vector<std::pair<int, std::string>> relations; // (1-based target, text)
  std::vector<std::string> charpolys;                 // [n], factored text
  std::vector<std::vector<int>> subring_sets;         // 1-based, ALL expanded
  int derived_dim = -1;
  int center_dim = -1;
};

CellFixture parse_fixture(std::istream& is);
CellFixture parse_fixture_file(const std::string& path);

// all n matrices: I at the identity index, explicit ones verbatim, the rest
// by evaluating relations against {I, explicit generators} only
std::vector<IntMatrix> reconstruct_matrices(const CellFixture& f);

// G[j][y][z] = M_{j+1}[y][z]; a_value stays unknown here; every tensor
// invariant is asserted (this is the transcription-integrity check)
GammaTensor tensor_from_matrices(const CellFixture& f,
                                 const std::vector<IntMatrix>& matrices);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string fixture;
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

// Runs, in order: word checks, reconstruction, tensor invariants, char-poly
// table comparison, subring enumeration vs the declared sets, automorphism
// search (expects exactly the identity), derived/center dimensions, trace
// form nondegeneracy.  `group` may share a prebuilt group matching the
// fixture descriptor; pass nullptr to build one.
VerifyReport verify_fixture(const CellFixture& f, const CoxeterGroup* group);

}  // namespace jring
