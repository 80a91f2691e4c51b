#include "jring/ringlab.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "jring/linalg.hpp"
#include "jring/util.hpp"

namespace jring {

/* ------------------------------ parsing ------------------------------- */

namespace {

struct Token {
  enum class Kind { Int, Ident, Plus, Minus, Caret, LParen, RParen, Equals, End };
  Kind kind;
  std::size_t pos;
  Int value;
  std::string name;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (c == '+') out.push_back({Token::Kind::Plus, pos, {}, {}}), ++i;
    else if (c == '-') out.push_back({Token::Kind::Minus, pos, {}, {}}), ++i;
    else if (c == '^') out.push_back({Token::Kind::Caret, pos, {}, {}}), ++i;
    else if (c == '(') out.push_back({Token::Kind::LParen, pos, {}, {}}), ++i;
    else if (c == ')') out.push_back({Token::Kind::RParen, pos, {}, {}}), ++i;
    else if (c == '=') out.push_back({Token::Kind::Equals, pos, {}, {}}), ++i;
    else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Int, pos, Int(s.substr(i, j - i)), {}});
      i = j;
    } else if (c == 'I') {
      out.push_back({Token::Kind::Ident, pos, {}, "I"});
      ++i;
    } else if (c == 'M') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) throw ParseError("'M' without an index", pos);
      out.push_back({Token::Kind::Ident, pos, {}, s.substr(i, j - i)});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  out.push_back({Token::Kind::End, s.size(), {}, {}});
  return out;
}

struct Parser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  const Token& next() { return toks[pos++]; }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what, peek().pos);
  }

  bool starts_factor() const {
    auto k = peek().kind;
    return k == Token::Kind::Int || k == Token::Kind::Ident ||
           k == Token::Kind::LParen;
  }

  MatrixExpr primary() {
    const Token& t = next();
    MatrixExpr e;
    switch (t.kind) {
      case Token::Kind::Int:
        e.kind = MatrixExpr::Kind::Literal;
        e.literal = t.value;
        return e;
      case Token::Kind::Ident:
        e.kind = MatrixExpr::Kind::Atom;
        e.atom = t.name;
        return e;
      case Token::Kind::LParen: {
        e = expr();
        if (peek().kind != Token::Kind::RParen) fail("expected ')'");
        next();
        return e;
      }
      default:
        --pos;
        fail("expected factor");
    }
  }

  MatrixExpr factor() {
    MatrixExpr e = primary();
    while (peek().kind == Token::Kind::Caret) {
      next();
      if (peek().kind != Token::Kind::Int) fail("expected exponent");
      const Token& t = next();
      if (!t.value.fits_uint_p()) fail("exponent out of range");
      MatrixExpr p;
      p.kind = MatrixExpr::Kind::Pow;
      p.exponent = unsigned(t.value.get_ui());
      p.kids.push_back(std::move(e));
      e = std::move(p);
    }
    return e;
  }

  MatrixExpr term() {
    MatrixExpr e = factor();
    while (starts_factor()) {
      MatrixExpr m;
      m.kind = MatrixExpr::Kind::Mul;
      m.kids.push_back(std::move(e));
      m.kids.push_back(factor());
      e = std::move(m);
    }
    return e;
  }

  MatrixExpr expr() {
    bool neg = false;
    if (peek().kind == Token::Kind::Minus) {
      next();
      neg = true;
    }
    MatrixExpr e = term();
    if (neg) {
      MatrixExpr n;
      n.kind = MatrixExpr::Kind::Neg;
      n.kids.push_back(std::move(e));
      e = std::move(n);
    }
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      bool minus = next().kind == Token::Kind::Minus;
      MatrixExpr b;
      b.kind = minus ? MatrixExpr::Kind::Sub : MatrixExpr::Kind::Add;
      b.kids.push_back(std::move(e));
      b.kids.push_back(term());
      e = std::move(b);
    }
    return e;
  }
};

}  // namespace

std::pair<std::string, MatrixExpr> MatrixExpr::parse_relation(const std::string& text) {
  auto toks = lex(text);
  Parser p{toks};
  if (p.peek().kind != Token::Kind::Ident || p.peek().name == "I")
    p.fail("expected relation target M<k>");
  std::string target = p.next().name;
  if (p.peek().kind != Token::Kind::Equals) p.fail("expected '='");
  p.next();
  MatrixExpr e = p.expr();
  if (p.peek().kind != Token::Kind::End) p.fail("trailing input");
  return {target, std::move(e)};
}

MatrixExpr MatrixExpr::parse(const std::string& text) {
  auto toks = lex(text);
  Parser p{toks};
  MatrixExpr e = p.expr();
  if (p.peek().kind != Token::Kind::End) p.fail("trailing input");
  return e;
}

std::string MatrixExpr::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Literal: os << literal.get_str(); break;
    case Kind::Atom: os << atom; break;
    case Kind::Neg: os << "-(" << kids[0].str() << ")"; break;
    case Kind::Add: os << "(" << kids[0].str() << " + " << kids[1].str() << ")"; break;
    case Kind::Sub: os << "(" << kids[0].str() << " - " << kids[1].str() << ")"; break;
    case Kind::Mul: os << "(" << kids[0].str() << " " << kids[1].str() << ")"; break;
    case Kind::Pow: os << kids[0].str() << "^" << exponent; break;
  }
  return os.str();
}

IntMatrix eval_expr(const MatrixExpr& e,
                    const std::map<std::string, IntMatrix>& bindings, int dim) {
  switch (e.kind) {
    case MatrixExpr::Kind::Literal:
      return e.literal * IntMatrix::identity(dim);
    case MatrixExpr::Kind::Atom: {
      if (e.atom == "I") return IntMatrix::identity(dim);
      auto it = bindings.find(e.atom);
      if (it == bindings.end())
        throw InvariantError("unbound atom '" + e.atom + "'");
      if (it->second.dim() != dim)
        throw InvariantError("atom '" + e.atom + "' has dimension " +
                             std::to_string(it->second.dim()) + ", expected " +
                             std::to_string(dim));
      return it->second;
    }
    case MatrixExpr::Kind::Neg:
      return -eval_expr(e.kids[0], bindings, dim);
    case MatrixExpr::Kind::Add:
      return eval_expr(e.kids[0], bindings, dim) + eval_expr(e.kids[1], bindings, dim);
    case MatrixExpr::Kind::Sub:
      return eval_expr(e.kids[0], bindings, dim) - eval_expr(e.kids[1], bindings, dim);
    case MatrixExpr::Kind::Mul:
      return eval_expr(e.kids[0], bindings, dim) * eval_expr(e.kids[1], bindings, dim);
    case MatrixExpr::Kind::Pow:
      return eval_expr(e.kids[0], bindings, dim).pow(e.exponent);
  }
  throw InvariantError("corrupt expression");
}

/* ------------------------------ subrings ------------------------------ */

namespace {

std::vector<int> mask_to_set(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// does the span of X (product-closed, identity not in X) contain its own
// two-sided unit?
bool has_internal_unit(const GammaTensor& t, const std::vector<int>& X) {
  int k = int(X.size());
  // unknowns c_0..c_{k-1}; equations per (j in X, l in X), both sides
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (int side = 0; side < 2; ++side)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        std::vector<Rat> row(k);
        for (int i = 0; i < k; ++i)
          row[i] = side == 0 ? Rat(t.at(X[i], X[j], X[l]))
                             : Rat(t.at(X[j], X[i], X[l]));
        rows.push_back(std::move(row));
        rhs.emplace_back(j == l ? 1 : 0);
      }
  // consistency: rank(A) == rank(A|b)
  std::vector<std::vector<Rat>> aug = rows;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
  return rational_rank(rows) == rational_rank(aug);
}

}  // namespace

SubringReport enumerate_unital_subrings(const GammaTensor& t) {
  int n = t.n;
  if (n > 30)
    throw InvariantError("subset enumeration limited to 30 basis elements");
  std::vector<std::uint32_t> supp(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint32_t m = 0;
      for (int k = 0; k < n; ++k)
        if (t.at(i, j, k) != 0) m |= std::uint32_t(1) << k;
      supp[std::size_t(i) * n + j] = m;
    }
  SubringReport report;
  std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t(1) << n) - 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    bool closed = true;
    for (std::uint32_t mi = mask; mi && closed; mi &= mi - 1) {
      int i = std::countr_zero(mi);
      const std::uint32_t* row = &supp[std::size_t(i) * n];
      for (std::uint32_t mj = mask; mj; mj &= mj - 1) {
        if (row[std::countr_zero(mj)] & ~mask) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    if ((mask >> t.identity) & 1)
      report.unital.push_back(mask_to_set(mask));
    else if (has_internal_unit(t, mask_to_set(mask)))
      report.other_unital.push_back(mask_to_set(mask));
  }
  return report;
}

/* -------------------------- isomorphism search ------------------------ */

namespace {

struct Signature {
  std::vector<std::int64_t> data;
  bool operator==(const Signature&) const = default;
};

Signature index_signature(const GammaTensor& t, const std::vector<int>& pair,
                          int i) {
  Signature s;
  s.data.push_back(i == t.identity ? 1 : 0);
  s.data.push_back(t.at(i, i, i));
  s.data.push_back(pair[i] == i ? 1 : 0);
  std::int64_t s1 = 0, s2 = 0, s3 = 0;
  for (int j = 0; j < t.n; ++j)
    for (int k = 0; k < t.n; ++k) {
      s1 += t.at(i, j, k);
      s2 += t.at(j, i, k);
      s3 += t.at(j, k, i);
    }
  s.data.push_back(s1);
  s.data.push_back(s2);
  s.data.push_back(s3);
  std::vector<std::int64_t> diag1, diag2;
  for (int j = 0; j < t.n; ++j) {
    diag1.push_back(t.at(i, j, j));
    diag2.push_back(t.at(j, i, j));
  }
  std::sort(diag1.begin(), diag1.end());
  std::sort(diag2.begin(), diag2.end());
  s.data.insert(s.data.end(), diag1.begin(), diag1.end());
  s.data.insert(s.data.end(), diag2.begin(), diag2.end());
  return s;
}

struct IsoSearch {
  const GammaTensor& a;
  const GammaTensor& b;
  int n;
  std::vector<std::vector<int>> cand;   // per index of a
  std::vector<int> order;               // assignment order
  std::vector<int> image;               // -1 = unassigned
  std::vector<char> used;
  std::vector<std::vector<int>> found;

  bool consistent(int i, int j) const {
    // check every triple whose last unassigned index is i (mapped to j)
    for (int u = 0; u < n; ++u) {
      int pu = image[u];
      if (pu < 0 && u != i) continue;
      int qu = (u == i) ? j : pu;
      for (int v = 0; v < n; ++v) {
        int pv = image[v];
        if (pv < 0 && v != i) continue;
        int qv = (v == i) ? j : pv;
        for (int w = 0; w < n; ++w) {
          int pw = image[w];
          if (pw < 0 && w != i) continue;
          int qw = (w == i) ? j : pw;
          if (u != i && v != i && w != i) continue;
          if (a.at(u, v, w) != b.at(qu, qv, qw)) return false;
        }
      }
    }
    return true;
  }

  void run(std::size_t depth) {
    if (depth == order.size()) {
      found.push_back(image);
      return;
    }
    int i = order[depth];
    for (int j : cand[i]) {
      if (used[j]) continue;
      if (!consistent(i, j)) continue;
      image[i] = j;
      used[j] = 1;
      run(depth + 1);
      image[i] = -1;
      used[j] = 0;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> find_permutation_isomorphisms(const GammaTensor& t1,
                                                            const GammaTensor& t2) {
  if (t1.n != t2.n) return {};
  int n = t1.n;
  std::vector<int> pair1 = t1.inverse_pairing();
  std::vector<int> pair2 = t2.inverse_pairing();
  std::vector<Signature> sig1(n), sig2(n);
  for (int i = 0; i < n; ++i) sig1[i] = index_signature(t1, pair1, i);
  for (int i = 0; i < n; ++i) sig2[i] = index_signature(t2, pair2, i);
  IsoSearch search{t1, t2, n, {}, {}, {}, {}, {}};
  search.cand.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (sig1[i] == sig2[j]) search.cand[i].push_back(j);
    if (search.cand[i].empty()) return {};
  }
  search.order.resize(n);
  for (int i = 0; i < n; ++i) search.order[i] = i;
  std::stable_sort(search.order.begin(), search.order.end(), [&](int x, int y) {
    return search.cand[x].size() < search.cand[y].size();
  });
  search.image.assign(n, -1);
  search.used.assign(n, 0);
  search.run(0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

GammaTensor relabel(const GammaTensor& t, const std::vector<int>& perm) {
  if (int(perm.size()) != t.n) throw InvariantError("relabel size mismatch");
  GammaTensor r;
  r.n = t.n;
  r.a_value = t.a_value;
  r.identity = perm[t.identity];
  r.entries.assign(t.entries.size(), 0);
  if (!t.basis.empty()) r.basis.resize(t.n);
  if (!t.words.empty()) r.words.resize(t.n);
  if (!t.lengths.empty()) r.lengths.resize(t.n);
  for (int i = 0; i < t.n; ++i) {
    if (!t.basis.empty()) r.basis[perm[i]] = t.basis[i];
    if (!t.words.empty()) r.words[perm[i]] = t.words[i];
    if (!t.lengths.empty()) r.lengths[perm[i]] = t.lengths[i];
    for (int j = 0; j < t.n; ++j)
      for (int k = 0; k < t.n; ++k)
        r.at(perm[i], perm[j], perm[k]) = t.at(i, j, k);
  }
  return r;
}

/* ------------------------- dimensions, trace form --------------------- */

int derived_algebra_dimension(const GammaTensor& t) {
  int n = t.n;
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rat> row(n);
      bool nonzero = false;
      for (int k = 0; k < n; ++k) {
        std::int64_t c = t.at(i, j, k) - t.at(j, i, k);
        row[k] = Rat(c);
        nonzero |= (c != 0);
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  if (rows.empty()) return 0;
  return rational_rank(rows);
}

int center_dimension(const GammaTensor& t) {
  int n = t.n;
  std::vector<std::vector<Rat>> rows;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::vector<Rat> row(n);
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        std::int64_t c = t.at(i, j, k) - t.at(j, i, k);
        row[i] = Rat(c);
        nonzero |= (c != 0);
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  return rational_nullspace_dim(rows, n);
}

TraceForm trace_form_gram(const GammaTensor& t) {
  int n = t.n;
  TraceForm f;
  f.gram = IntMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (int u = 0; u < n; ++u)
        for (int z = 0; z < n; ++z) acc += t.at(i, u, z) * t.at(j, z, u);
      f.gram.at(i, j) = acc;
    }
  f.det = det_bareiss(f.gram);
  f.nondegenerate = (f.det != 0);
  return f;
}

}  // namespace jring
