#include "jring/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "jring/quadext.hpp"

namespace jring {

/* ------------------------------------------------------------------ */
/*  CoxeterDescriptor                                                  */
/* ------------------------------------------------------------------ */

void CoxeterDescriptor::validate() const {
  int r = rank();
  if (r < 1) throw ParseError("descriptor has no generators");
  if (r > 30) throw ParseError("descriptor rank too large");
  for (char c : names)
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError("generator names must be letters");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (names[i] == names[j] && i != j)
        throw ParseError(std::string("duplicate generator name '") + names[i] + "'");
  if (int(mat.size()) != r) throw ParseError("coxeter matrix size mismatch");
  for (int i = 0; i < r; ++i) {
    if (int(mat[i].size()) != r) throw ParseError("coxeter matrix not square");
    if (mat[i][i] != 1) throw ParseError("coxeter matrix diagonal must be 1");
    for (int j = 0; j < r; ++j) {
      if (mat[i][j] != mat[j][i]) throw ParseError("coxeter matrix not symmetric");
      if (i != j && mat[i][j] < 2) throw ParseError("off-diagonal bond must be >= 2");
    }
  }
}

static CoxeterDescriptor chain_descriptor(const std::vector<char>& names,
                                          const std::vector<int>& bonds) {
  CoxeterDescriptor d;
  d.names = names;
  int r = int(names.size());
  d.mat.assign(r, std::vector<int>(r, 2));
  for (int i = 0; i < r; ++i) d.mat[i][i] = 1;
  for (int i = 0; i + 1 < r; ++i) d.mat[i][i + 1] = d.mat[i + 1][i] = bonds[i];
  return d;
}

bool CoxeterDescriptor::is_builtin(const std::string& type) {
  if (type == "A1" || type == "A2" || type == "A3" || type == "A4" ||
      type == "B3" || type == "H3" || type == "H4")
    return true;
  return type.rfind("I2_", 0) == 0;
}

CoxeterDescriptor CoxeterDescriptor::builtin(const std::string& type) {
  if (type == "A1") return chain_descriptor({'a'}, {});
  if (type == "A2") return chain_descriptor({'a', 'b'}, {3});
  if (type == "A3") return chain_descriptor({'a', 'b', 'c'}, {3, 3});
  if (type == "A4") return chain_descriptor({'a', 'b', 'c', 'd'}, {3, 3, 3});
  if (type == "B3") return chain_descriptor({'a', 'b', 'c'}, {4, 3});
  if (type == "H3") return chain_descriptor({'a', 'b', 'c'}, {3, 5});
  if (type == "H4") return chain_descriptor({'a', 'b', 'c', 'd'}, {3, 3, 5});
  if (type.rfind("I2_", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(type.substr(3));
    } catch (...) {
      throw ParseError("bad dihedral type '" + type + "'");
    }
    if (m < 2 || m > 1000) throw ParseError("dihedral bond out of range");
    return chain_descriptor({'s', 't'}, {m});
  }
  throw ParseError("unknown built-in type '" + type + "'");
}

std::size_t builtin_order(const std::string& type) {
  if (type == "A1") return 2;
  if (type == "A2") return 6;
  if (type == "A3") return 24;
  if (type == "A4") return 120;
  if (type == "B3") return 48;
  if (type == "H3") return 120;
  if (type == "H4") return 14400;
  if (type.rfind("I2_", 0) == 0) return 2 * std::stoul(type.substr(3));
  return 0;
}

CoxeterDescriptor CoxeterDescriptor::from_text(const std::string& text) {
  CoxeterDescriptor d;
  int declared_rank = -1;
  std::istringstream in(text);
  std::string line;
  std::vector<std::tuple<char, char, int>> bonds;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "rank") {
      if (!(ls >> declared_rank)) throw ParseError::at_line("bad rank line", lineno);
    } else if (key == "order") {
      std::string name;
      while (ls >> name) {
        if (name.size() != 1)
          throw ParseError::at_line("generator names must be single characters", lineno);
        d.names.push_back(name[0]);
      }
    } else if (key == "coxeter") {
      std::string a, b;
      int m;
      if (!(ls >> a >> b >> m) || a.size() != 1 || b.size() != 1)
        throw ParseError::at_line("bad coxeter line", lineno);
      bonds.emplace_back(a[0], b[0], m);
    } else {
      throw ParseError::at_line("unknown descriptor keyword '" + key + "'", lineno);
    }
  }
  if (d.names.empty()) throw ParseError("descriptor missing order line");
  int r = d.rank();
  if (declared_rank >= 0 && declared_rank != r)
    throw ParseError("rank line disagrees with order line");
  d.mat.assign(r, std::vector<int>(r, 2));
  for (int i = 0; i < r; ++i) d.mat[i][i] = 1;
  auto index_of = [&](char c) {
    for (int i = 0; i < r; ++i)
      if (d.names[i] == c) return i;
    throw ParseError(std::string("undeclared generator '") + c + "'");
  };
  for (auto [a, b, m] : bonds) {
    int i = index_of(a), j = index_of(b);
    if (i == j) throw ParseError("coxeter line with equal generators");
    d.mat[i][j] = d.mat[j][i] = m;
  }
  d.validate();
  return d;
}

std::string CoxeterDescriptor::canonical_text() const {
  std::ostringstream os;
  os << "rank " << rank() << "\norder";
  for (char c : names) os << ' ' << c;
  os << '\n';
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (mat[i][j] != 2)
        os << "coxeter " << names[i] << ' ' << names[j] << ' ' << mat[i][j] << '\n';
  return os.str();
}

std::uint64_t CoxeterDescriptor::stable_hash() const {
  return fnv1a(canonical_text());
}

/* ------------------------------------------------------------------ */
/*  Builders                                                           */
/* ------------------------------------------------------------------ */

namespace {

// dihedral normal forms: index 0 = e, indices 2l-1 / 2l = the length-l words
// starting with generator 0 / 1, index 2m-1 = the longest element
struct Dihedral {
  int m;
  ElementIndex idx(int first, int l) const {
    if (l == 0) return 0;
    if (l == m) return ElementIndex(2 * m - 1);
    return ElementIndex(2 * l - 1 + first);
  }
  int len_of(ElementIndex w) const { return w == 0 ? 0 : int((w + 1) / 2); }
  int first_of(ElementIndex w) const {  // undefined for e, canonical 0 for w0
    if (w == ElementIndex(2 * m - 1)) return 0;
    return (w % 2) ? 0 : 1;
  }
  int last_of(int first, int l) const { return (l % 2) ? first : 1 - first; }
};

struct RawTables {
  std::vector<std::uint16_t> length;
  std::vector<ElementIndex> left, right, parent;
  std::vector<std::uint8_t> letter;
};

RawTables build_dihedral(const CoxeterDescriptor& d, std::size_t ceiling) {
  RawTables t;
  int r = d.rank();
  if (r == 1) {
    t.length = {0, 1};
    t.left = {1, 0};
    t.right = {1, 0};
    t.parent = {0, 0};
    t.letter = {0, 0};
    return t;
  }
  Dihedral dh{d.bond(0, 1)};
  std::size_t total = std::size_t(2) * dh.m;
  if (total > ceiling)
    throw InvariantError("group exceeds element ceiling (" +
                         std::to_string(ceiling) + ")");
  int m = dh.m;
  t.length.resize(total);
  t.left.resize(total * 2);
  t.right.resize(total * 2);
  t.parent.resize(total);
  t.letter.resize(total);
  auto right_action = [&](ElementIndex w, int g) -> ElementIndex {
    if (w == 0) return dh.idx(g, 1);
    int l = dh.len_of(w);
    if (l == m) {  // both letters are descents of w0
      int want_last = 1 - g;
      int first = ((m - 1) % 2) ? want_last : 1 - want_last;
      return dh.idx(first, m - 1);
    }
    int first = dh.first_of(w);
    if (g == dh.last_of(first, l))
      return l == 1 ? 0 : dh.idx(first, l - 1);
    return dh.idx(first, l + 1);
  };
  auto left_action = [&](int g, ElementIndex w) -> ElementIndex {
    if (w == 0) return dh.idx(g, 1);
    int l = dh.len_of(w);
    if (l == m) return dh.idx(1 - g, m - 1);
    int first = dh.first_of(w);
    if (g == first) return l == 1 ? 0 : dh.idx(1 - first, l - 1);
    return dh.idx(g, l + 1);
  };
  for (ElementIndex w = 0; w < total; ++w) {
    int l = dh.len_of(w);
    t.length[w] = std::uint16_t(l);
    for (int g = 0; g < 2; ++g) {
      t.right[w * 2 + g] = right_action(w, g);
      t.left[w * 2 + g] = left_action(g, w);
    }
    if (w == 0) {
      t.parent[0] = 0;
      t.letter[0] = 0;
    } else {
      int first = dh.first_of(w);
      int last = dh.last_of(first, l);
      t.parent[w] = l == 1 ? 0 : dh.idx(first, l - 1);
      t.letter[w] = std::uint8_t(last);
    }
  }
  return t;
}

// Bonds whose 2cos(pi/m) lies in Q(sqrt 5) keep the symmetric geometric
// form; the rest push the whole product 4cos^2(pi/m) onto one side of the
// edge.  Simple roots joined by an odd bond are conjugate and must keep a
// common scale, so only even bonds may be rescaled asymmetrically.
bool symmetric_bond(int m) { return m == 3 || m == 5; }

QuadExt two_cos(int m) {  // 2 cos(pi/m), for the symmetric bonds
  switch (m) {
    case 3: return QuadExt(Rat(1));
    case 5: return QuadExt(Rat(1, 2), Rat(1, 2));  // golden ratio
    default:
      throw ParseError("no exact 2cos(pi/" + std::to_string(m) + ")");
  }
}

QuadExt kappa(int m) {  // 4 cos^2(pi/m)
  switch (m) {
    case 4: return QuadExt(Rat(2));
    case 6: return QuadExt(Rat(3));
    case 10: return QuadExt(Rat(5, 2), Rat(1, 2));
    default:
      throw ParseError("bond " + std::to_string(m) +
                       " not supported by the reflection realization "
                       "(supported: 2,3,4,5,6,10)");
  }
}

struct VecHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    return fnv1a(v.data(), v.size() * sizeof(std::int32_t));
  }
};

RawTables build_reflection(const CoxeterDescriptor& d, std::size_t ceiling) {
  int r = d.rank();

  // reflection coefficients: edge (i,j) of the diagram contributes
  // C[i][j] * C[j][i] = 4 cos^2(pi/m); the diagram must be a forest for the
  // integer/quadratic rescaling to be consistent
  std::vector<std::vector<QuadExt>> C(r, std::vector<QuadExt>(r, QuadExt()));
  {
    std::vector<int> state(r, 0);  // 0 unseen, 1 on stack, 2 done
    for (int root = 0; root < r; ++root) {
      if (state[root]) continue;
      std::vector<std::pair<int, int>> stack{{root, -1}};
      while (!stack.empty()) {
        auto [v, from] = stack.back();
        stack.pop_back();
        if (state[v]) throw ParseError("coxeter diagram has a cycle");
        state[v] = 1;
        for (int u = 0; u < r; ++u) {
          if (u == v || u == from || d.bond(v, u) == 2) continue;
          if (symmetric_bond(d.bond(v, u))) {
            C[v][u] = C[u][v] = two_cos(d.bond(v, u));
          } else {
            C[v][u] = kappa(d.bond(v, u));
            C[u][v] = QuadExt(Rat(1));
          }
          stack.push_back({u, v});
        }
      }
    }
  }

  auto reflect = [&](int s, std::vector<QuadExt> v) {
    QuadExt acc = -v[s];
    for (int j = 0; j < r; ++j)
      if (j != s && !C[s][j].is_zero()) acc += C[s][j] * v[j];
    v[s] = acc;
    return v;
  };

  // positive roots, simple ones first
  std::vector<std::vector<QuadExt>> roots;
  std::map<std::vector<QuadExt>, std::int32_t> root_index;
  auto root_sign = [&](const std::vector<QuadExt>& v) {
    int pos = 0, neg = 0;
    for (const auto& c : v) {
      int s = c.sign();
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos && neg) throw InvariantError("mixed-sign root; invalid realization");
    return pos ? 1 : -1;
  };
  for (int i = 0; i < r; ++i) {
    std::vector<QuadExt> e(r, QuadExt());
    e[i] = QuadExt(Rat(1));
    root_index.emplace(e, i);
    roots.push_back(std::move(e));
  }
  for (std::size_t head = 0; head < roots.size(); ++head) {
    for (int s = 0; s < r; ++s) {
      auto img = reflect(s, roots[head]);
      if (root_sign(img) < 0)
        for (auto& c : img) c = -c;
      if (root_index.emplace(img, std::int32_t(roots.size())).second) {
        roots.push_back(img);
        if (roots.size() > ceiling)
          throw InvariantError("group exceeds element ceiling (" +
                               std::to_string(ceiling) + ")");
      }
    }
  }
  int nroots = int(roots.size());

  // signed permutation of each generator; encoding (index << 1) | negated
  std::vector<std::vector<std::int32_t>> sigma(r);
  for (int s = 0; s < r; ++s) {
    sigma[s].resize(nroots);
    int flips = 0;
    for (int k = 0; k < nroots; ++k) {
      auto img = reflect(s, roots[k]);
      int sgn = root_sign(img);
      if (sgn < 0) {
        for (auto& c : img) c = -c;
        ++flips;
      }
      auto it = root_index.find(img);
      if (it == root_index.end())
        throw InvariantError("root set not closed under reflection");
      sigma[s][k] = (it->second << 1) | (sgn < 0 ? 1 : 0);
    }
    if (flips != 1)
      throw InvariantError("simple reflection flips more than its own root");
  }

  // ShortLex breadth-first enumeration of elements as signed permutations
  RawTables t;
  std::vector<std::vector<std::int32_t>> perms;
  std::unordered_map<std::vector<std::int32_t>, ElementIndex, VecHash> seen;
  {
    std::vector<std::int32_t> id(nroots);
    for (int k = 0; k < nroots; ++k) id[k] = k << 1;
    seen.emplace(id, 0);
    perms.push_back(std::move(id));
  }
  t.length.push_back(0);
  t.parent.push_back(0);
  t.letter.push_back(0);
  t.right.assign(r, 0);
  for (std::size_t w = 0; w < perms.size(); ++w) {
    for (int s = 0; s < r; ++s) {
      const auto& pw = perms[w];
      const auto& ps = sigma[s];
      std::vector<std::int32_t> pn(nroots);
      for (int k = 0; k < nroots; ++k) pn[k] = pw[ps[k] >> 1] ^ (ps[k] & 1);
      auto [it, inserted] = seen.emplace(std::move(pn), ElementIndex(perms.size()));
      if (inserted) {
        if (perms.size() >= ceiling)
          throw InvariantError("group exceeds element ceiling (" +
                               std::to_string(ceiling) + ")");
        perms.push_back(it->first);
        int len = 0;
        for (int k = 0; k < nroots; ++k) len += int(it->first[k] & 1);
        if (len != t.length[w] + 1)
          throw InvariantError("length bookkeeping failed during enumeration");
        t.length.push_back(std::uint16_t(len));
        t.parent.push_back(ElementIndex(w));
        t.letter.push_back(std::uint8_t(s));
        t.right.resize(perms.size() * r);
      }
      t.right[w * r + s] = it->second;
    }
  }

  std::size_t total = perms.size();
  t.left.resize(total * r);
  std::vector<std::int32_t> tmp(nroots);
  for (std::size_t w = 0; w < total; ++w) {
    const auto& pw = perms[w];
    for (int s = 0; s < r; ++s) {
      const auto& ps = sigma[s];
      for (int k = 0; k < nroots; ++k) tmp[k] = ps[pw[k] >> 1] ^ (pw[k] & 1);
      auto it = seen.find(tmp);
      if (it == seen.end()) throw InvariantError("left action left the group");
      t.left[w * r + s] = it->second;
    }
  }
  return t;
}

}  // namespace

/* ------------------------------------------------------------------ */
/*  CoxeterGroup                                                       */
/* ------------------------------------------------------------------ */

struct CoxeterGroup::BruhatTable {
  std::size_t words;
  std::vector<std::uint64_t> bits;
  std::once_flag once;
  bool built = false;

  bool get(ElementIndex x, ElementIndex w) const {
    return (bits[w * words + (x >> 6)] >> (x & 63)) & 1;
  }
};

CoxeterGroup::CoxeterGroup(CoxeterGroup&&) noexcept = default;
CoxeterGroup& CoxeterGroup::operator=(CoxeterGroup&&) noexcept = default;
CoxeterGroup::~CoxeterGroup() = default;

CoxeterGroup CoxeterGroup::build(const CoxeterDescriptor& d, BuildOptions opt) {
  d.validate();
  CoxeterGroup g;
  g.desc_ = d;
  g.rank_ = d.rank();

  RawTables t = (d.rank() <= 2 && !opt.force_reflection)
                    ? build_dihedral(d, opt.max_elements)
                    : build_reflection(d, opt.max_elements);
  g.length_ = std::move(t.length);
  g.left_ = std::move(t.left);
  g.right_ = std::move(t.right);
  g.parent_ = std::move(t.parent);
  g.letter_ = std::move(t.letter);

  std::size_t n = g.length_.size();
  if (opt.expected_order && opt.expected_order != n)
    throw InvariantError("built group order " + std::to_string(n) +
                         " disagrees with the order formula " +
                         std::to_string(opt.expected_order));

  // descents, inverses, longest element
  g.ldesc_.resize(n);
  g.rdesc_.resize(n);
  for (ElementIndex w = 0; w < n; ++w) {
    GenSet ld = 0, rd = 0;
    for (int s = 0; s < g.rank_; ++s) {
      if (g.length_[g.left(s, w)] < g.length_[w]) ld |= GenSet(1) << s;
      if (g.length_[g.right(w, s)] < g.length_[w]) rd |= GenSet(1) << s;
    }
    g.ldesc_[w] = ld;
    g.rdesc_[w] = rd;
  }
  int maxlen = 0;
  for (ElementIndex w = 0; w < n; ++w) maxlen = std::max(maxlen, int(g.length_[w]));
  std::size_t count_max = 0;
  for (ElementIndex w = 0; w < n; ++w)
    if (g.length_[w] == maxlen) {
      g.w0_ = w;
      ++count_max;
    }
  if (count_max != 1)
    throw InvariantError("longest element not unique; group not finite?");

  g.inv_.assign(n, 0);
  for (ElementIndex w = 0; w < n; ++w) {
    // fold the normal form of w in reverse through the left action
    ElementIndex acc = 0;
    for (ElementIndex u = w; u != 0; u = g.parent_[u])
      acc = g.right(acc, g.letter_[u]);
    // acc = reversed word of w
    g.inv_[w] = acc;
  }
  for (ElementIndex w = 0; w < n; ++w)
    if (g.inv_[g.inv_[w]] != w) throw InvariantError("inversion is not an involution");

  // w0 invariants: w0^2 = e and l(w0 w) = l(w0) - l(w)
  if (g.inv_[g.w0_] != g.w0_) throw InvariantError("w0 is not an involution");
  {
    std::vector<ElementIndex> w0w = g.translate_all(g.w0_);
    for (ElementIndex w = 0; w < n; ++w)
      if (int(g.length_[w0w[w]]) != maxlen - int(g.length_[w]))
        throw InvariantError("length reversal by w0 failed");
    if (w0w[g.w0_] != 0) throw InvariantError("w0^2 != e");
  }

  g.bruhat_ = std::make_unique<BruhatTable>();
  return g;
}

ElementIndex CoxeterGroup::multiply(ElementIndex x, ElementIndex y) const {
  // x * y = ((x s1) s2) ... over the normal form s1..sk of y
  auto w = word(y);
  ElementIndex acc = x;
  for (int s : w) acc = right(acc, s);
  return acc;
}

std::vector<ElementIndex> CoxeterGroup::translate_all(ElementIndex u) const {
  std::vector<ElementIndex> t(size());
  t[0] = u;
  for (ElementIndex w = 1; w < size(); ++w)
    t[w] = right(t[parent_[w]], letter_[w]);
  return t;
}

std::vector<int> CoxeterGroup::word(ElementIndex w) const {
  std::vector<int> out;
  out.reserve(length_[w]);
  for (ElementIndex u = w; u != 0; u = parent_[u]) out.push_back(letter_[u]);
  std::reverse(out.begin(), out.end());
  return out;
}

std::string CoxeterGroup::word_string(ElementIndex w) const {
  std::string s;
  for (int g : word(w)) s += desc_.names[g];
  return s;
}

ElementIndex CoxeterGroup::element_from_word(const std::vector<int>& w) const {
  ElementIndex acc = 0;
  for (int s : w) {
    if (s < 0 || s >= rank_) throw ParseError("generator index out of range");
    acc = right(acc, s);
  }
  return acc;
}

ElementIndex CoxeterGroup::parse_word(const std::string& text) const {
  ElementIndex acc = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    int s = -1;
    for (int j = 0; j < rank_; ++j)
      if (desc_.names[j] == text[i]) {
        s = j;
        break;
      }
    if (s < 0)
      throw ParseError(std::string("unknown generator '") + text[i] + "'", i);
    acc = right(acc, s);
  }
  return acc;
}

const CoxeterGroup::BruhatTable& CoxeterGroup::bruhat() const {
  BruhatTable* bt = bruhat_.get();
  std::call_once(bt->once, [&] {
    std::size_t n = size();
    bt->words = (n + 63) / 64;
    bt->bits.assign(n * bt->words, 0);
    auto set = [&](ElementIndex w, ElementIndex x) {
      bt->bits[w * bt->words + (x >> 6)] |= std::uint64_t(1) << (x & 63);
    };
    set(0, 0);
    // downset(w) = downset(sw) + s * downset(sw) for any s with sw < w
    for (ElementIndex w = 1; w < n; ++w) {
      int s = std::countr_zero(ldesc_[w]);
      ElementIndex v = left(s, w);
      const std::uint64_t* src = &bt->bits[v * bt->words];
      std::uint64_t* dst = &bt->bits[w * bt->words];
      for (std::size_t i = 0; i < bt->words; ++i) dst[i] = src[i];
      for (std::size_t i = 0; i < bt->words; ++i) {
        std::uint64_t bitsw = src[i];
        while (bitsw) {
          int b = std::countr_zero(bitsw);
          bitsw &= bitsw - 1;
          set(w, left(s, ElementIndex(i * 64 + b)));
        }
      }
    }
    bt->built = true;
  });
  return *bt;
}

bool CoxeterGroup::bruhat_leq(ElementIndex x, ElementIndex w) const {
  if (x == w || x == 0) return true;
  if (length_[x] >= length_[w]) return false;
  return bruhat().get(x, w);
}

std::vector<ElementIndex> CoxeterGroup::bruhat_downset(ElementIndex w) const {
  const BruhatTable& bt = bruhat();
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < bt.words; ++i) {
    std::uint64_t bits = bt.bits[w * bt.words + i];
    while (bits) {
      int b = std::countr_zero(bits);
      bits &= bits - 1;
      out.push_back(ElementIndex(i * 64 + b));
    }
  }
  return out;
}

std::vector<std::size_t> CoxeterGroup::length_histogram() const {
  std::vector<std::size_t> h(max_length() + 1, 0);
  for (ElementIndex w = 0; w < size(); ++w) ++h[length_[w]];
  return h;
}

/* ------------------------------------------------------------------ */
/*  Element wrappers                                                   */
/* ------------------------------------------------------------------ */

static void check_same_group(const Element& x, const Element& y) {
  if (x.group == nullptr || y.group == nullptr)
    throw InvariantError("element without a group");
  if (x.group != y.group)
    throw InvariantError("elements belong to different groups");
}

Element multiply(const Element& x, const Element& y) {
  check_same_group(x, y);
  return {x.group, x.group->multiply(x.index, y.index)};
}

CoxeterGroup build_builtin_group(const std::string& type, BuildOptions opt) {
  CoxeterDescriptor d = CoxeterDescriptor::builtin(type);
  opt.expected_order = builtin_order(type);
  if (opt.max_elements < opt.expected_order)
    opt.max_elements = opt.expected_order;
  return CoxeterGroup::build(d, opt);
}

Element inverse(const Element& x) {
  if (x.group == nullptr) throw InvariantError("element without a group");
  return {x.group, x.group->inverse(x.index)};
}

bool bruhat_leq(const Element& x, const Element& w) {
  check_same_group(x, w);
  return x.group->bruhat_leq(x.index, w.index);
}

}  // namespace jring
