#pragma once

#include <string>
#include <vector>

#include "jring/kl.hpp"

namespace jring {

enum class CellKind { Left, Right, TwoSided };

std::string to_string(CellKind k);

struct CellPartition {
  CellKind kind;
  // each block ascending; blocks ordered by their minimal element
  std::vector<std::vector<ElementIndex>> blocks;
  std::vector<std::uint32_t> block_of;
  // cosmetic per-block labels; empty unless a caller assigns them
  std::vector<std::string> labels;
};

// Out-edges of the left W-graph: for every s with sy > y, y -> sy, and
// y -> z for every z < y with sz < z and mu(z,y) != 0.  Reachability is the
// left preorder.
std::vector<std::vector<ElementIndex>> left_cell_graph(const CoxeterGroup& g,
                                                       const KLTable& kl);

// strongly connected components of the left / right / union graph
CellPartition cells(const CoxeterGroup& g, const KLTable& kl, CellKind kind);

// Gamma intersect Gamma^{-1} of a left cell, ascending (element indices are
// already in (length, ShortLex) order)
std::vector<ElementIndex> gamma_basis(const CoxeterGroup& g,
                                      const std::vector<ElementIndex>& left_cell);

}  // namespace jring
