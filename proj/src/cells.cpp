#include "jring/cells.hpp"

#include <algorithm>

#include "jring/util.hpp"

namespace jring {

std::string to_string(CellKind k) {
  switch (k) {
    case CellKind::Left: return "left";
    case CellKind::Right: return "right";
    case CellKind::TwoSided: return "twosided";
  }
  return "?";
}

std::vector<std::vector<ElementIndex>> left_cell_graph(const CoxeterGroup& g,
                                                       const KLTable& kl) {
  std::size_t n = g.size();
  std::vector<std::vector<ElementIndex>> adj(n);
  GenSet all = (GenSet(1) << g.rank()) - 1;
  for (ElementIndex y = 0; y < n; ++y) {
    GenSet asc = all & ~g.left_descents(y);
    auto& out = adj[y];
    for (int s = 0; s < g.rank(); ++s)
      if ((asc >> s) & 1) out.push_back(g.left(s, y));
    for (auto [z, m] : kl.mu_list(y)) {
      (void)m;
      if (g.left_descents(z) & asc) out.push_back(z);
    }
  }
  return adj;
}

namespace {

// iterative Tarjan; components sorted internally and ordered by minimal
// element before returning
std::vector<std::vector<ElementIndex>> scc_blocks(
    const std::vector<std::vector<ElementIndex>>& adj) {
  std::size_t n = adj.size();
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> num(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<ElementIndex> stack;
  std::vector<std::vector<ElementIndex>> blocks;
  std::uint32_t counter = 0;

  struct Frame {
    ElementIndex v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (ElementIndex root = 0; root < n; ++root) {
    if (num[root] != kUnset) continue;
    call.push_back({root, 0});
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < adj[f.v].size()) {
        ElementIndex u = adj[f.v][f.edge++];
        if (num[u] == kUnset) {
          num[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = 1;
          call.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], num[u]);
        }
      } else {
        ElementIndex v = f.v;
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == num[v]) {
          std::vector<ElementIndex> block;
          for (;;) {
            ElementIndex u = stack.back();
            stack.pop_back();
            on_stack[u] = 0;
            block.push_back(u);
            if (u == v) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

CellPartition cells(const CoxeterGroup& g, const KLTable& kl, CellKind kind) {
  auto ladj = left_cell_graph(g, kl);
  std::size_t n = g.size();
  std::vector<std::vector<ElementIndex>> adj;
  if (kind == CellKind::Left) {
    adj = std::move(ladj);
  } else {
    // right edges by the inversion symmetry: x ->_R y iff x^{-1} ->_L y^{-1}
    std::vector<std::vector<ElementIndex>> radj(n);
    for (ElementIndex y = 0; y < n; ++y) {
      auto& out = radj[g.inverse(y)];
      for (ElementIndex z : ladj[y]) out.push_back(g.inverse(z));
    }
    if (kind == CellKind::Right) {
      adj = std::move(radj);
    } else {
      adj = std::move(ladj);
      for (ElementIndex y = 0; y < n; ++y)
        adj[y].insert(adj[y].end(), radj[y].begin(), radj[y].end());
    }
  }
  CellPartition part;
  part.kind = kind;
  part.blocks = scc_blocks(adj);
  part.block_of.assign(n, 0);
  for (std::uint32_t b = 0; b < part.blocks.size(); ++b)
    for (ElementIndex x : part.blocks[b]) part.block_of[x] = b;
  return part;
}

std::vector<ElementIndex> gamma_basis(const CoxeterGroup& g,
                                      const std::vector<ElementIndex>& cell) {
  std::vector<ElementIndex> basis;
  std::vector<char> in_cell;
  in_cell.assign(g.size(), 0);
  for (ElementIndex x : cell) in_cell[x] = 1;
  for (ElementIndex x : cell)
    if (in_cell[g.inverse(x)]) basis.push_back(x);
  return basis;
}

}  // namespace jring
