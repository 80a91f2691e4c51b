#include "jring/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "jring/factored_poly.hpp"
#include "jring/ringlab.hpp"
#include "jring/util.hpp"

namespace jring {

/* ------------------------------- parsing ------------------------------ */

namespace {

std::vector<int> parse_index_set(const std::string& text, std::size_t lineno) {
  // {1,4,10} with optional spaces
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError::at_line("bad subring set '" + text + "'", lineno);
  std::vector<int> out;
  std::istringstream is(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw ParseError::at_line("bad subring index '" + item + "'", lineno);
    }
  }
  if (out.empty()) throw ParseError::at_line("empty subring set", lineno);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CellFixture parse_fixture(std::istream& is) {
  CellFixture f;
  std::vector<char> order_names;
  std::vector<std::tuple<char, char, int>> bonds;
  std::map<int, std::string> words_by_index;
  std::set<int> defined;  // identity / matrix / relation targets
  bool has_group = false, has_all_subrings = false;

  std::string line;
  std::size_t lineno = 0;
  auto next_data_line = [&](std::string& out) -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) continue;
      out = line;
      return true;
    }
    return false;
  };

  auto define_index = [&](int j, const char* how) {
    if (j < 1 || j > f.n)
      throw ParseError::at_line(std::string(how) + " index " + std::to_string(j) +
                           " out of range 1.." + std::to_string(f.n), lineno);
    if (!defined.insert(j).second)
      throw ParseError::at_line("index " + std::to_string(j) + " defined twice", lineno);
  };

  std::string cur;
  while (next_data_line(cur)) {
    std::istringstream ls(cur);
    std::string key;
    ls >> key;
    if (key == "cell") {
      if (!(ls >> f.name)) throw ParseError::at_line("bad cell line", lineno);
    } else if (key == "group") {
      std::string gname;
      if (!(ls >> gname) || gname != "H4")
        throw ParseError::at_line("only `group H4` fixtures are supported", lineno);
      has_group = true;
    } else if (key == "order") {
      std::string name;
      while (ls >> name) {
        if (name.size() != 1) throw ParseError::at_line("bad generator name", lineno);
        order_names.push_back(name[0]);
      }
    } else if (key == "coxeter") {
      std::string a, b;
      int m;
      if (!(ls >> a >> b >> m) || a.size() != 1 || b.size() != 1)
        throw ParseError::at_line("bad coxeter line", lineno);
      bonds.emplace_back(a[0], b[0], m);
    } else if (key == "n") {
      if (!(ls >> f.n) || f.n < 1) throw ParseError::at_line("bad n line", lineno);
    } else if (key == "identity") {
      if (f.n == 0) throw ParseError::at_line("identity before n line", lineno);
      if (!(ls >> f.identity)) throw ParseError::at_line("bad identity line", lineno);
      define_index(f.identity, "identity");
    } else if (key == "element") {
      if (f.n == 0) throw ParseError::at_line("element before n line", lineno);
      int j;
      std::string w;
      if (!(ls >> j >> w)) throw ParseError::at_line("bad element line", lineno);
      if (j < 1 || j > f.n) throw ParseError::at_line("element index out of range", lineno);
      if (!words_by_index.emplace(j, w).second)
        throw ParseError::at_line("element " + std::to_string(j) + " listed twice", lineno);
      for (std::size_t p = 0; p < w.size(); ++p)
        if (std::find(order_names.begin(), order_names.end(), w[p]) ==
            order_names.end())
          throw ParseError::at_line(std::string("unknown generator '") + w[p] +
                               "' in element word", lineno);
    } else if (key == "matrix") {
      if (f.n == 0) throw ParseError::at_line("matrix before n line", lineno);
      int j;
      if (!(ls >> j)) throw ParseError::at_line("bad matrix line", lineno);
      define_index(j, "matrix");
      IntMatrix m(f.n);
      for (int r = 0; r < f.n; ++r) {
        std::string row;
        if (!next_data_line(row))
          throw ParseError::at_line("matrix " + std::to_string(j) + " truncated", lineno);
        std::istringstream rs(row);
        for (int c = 0; c < f.n; ++c) {
          std::string v;
          if (!(rs >> v))
            throw ParseError::at_line("matrix row has fewer than n entries", lineno);
          m.at(r, c) = Int(v);
        }
        std::string extra;
        if (rs >> extra)
          throw ParseError::at_line("matrix row has more than n entries", lineno);
      }
      f.explicit_matrices.emplace(j, std::move(m));
    } else if (key == "relation") {
      std::string rest;
      std::getline(ls, rest);
      std::string target;
      try {
        auto [t, expr] = MatrixExpr::parse_relation(rest);
        (void)expr;
        target = t;
      } catch (const ParseError& e) {
        throw ParseError::at_line(std::string("bad relation: ") + e.what(), lineno);
      }
      int j = std::stoi(target.substr(1));
      define_index(j, "relation");
      f.relations.emplace_back(j, rest);
    } else if (key == "charpoly") {
      if (f.n == 0) throw ParseError::at_line("charpoly before n line", lineno);
      int j;
      if (!(ls >> j) || j < 1 || j > f.n)
        throw ParseError::at_line("bad charpoly index", lineno);
      std::string rest;
      std::getline(ls, rest);
      if (f.charpolys.empty()) f.charpolys.assign(f.n, "");
      if (!f.charpolys[j - 1].empty())
        throw ParseError::at_line("charpoly " + std::to_string(j) + " listed twice", lineno);
      std::string trimmed;
      std::size_t b = rest.find_first_not_of(" \t");
      if (b != std::string::npos) trimmed = rest.substr(b);
      if (trimmed.empty()) throw ParseError::at_line("empty charpoly", lineno);
      f.charpolys[j - 1] = trimmed;
    } else if (key == "subrings") {
      std::string rest;
      std::getline(ls, rest);
      std::size_t b = rest.find_first_not_of(" \t");
      std::string body = b == std::string::npos ? "" : rest.substr(b);
      if (body == "ALL") {
        has_all_subrings = true;
      } else {
        f.subring_sets.push_back(parse_index_set(body, lineno));
      }
    } else if (key == "derived-dim") {
      if (!(ls >> f.derived_dim)) throw ParseError::at_line("bad derived-dim", lineno);
    } else if (key == "center-dim") {
      if (!(ls >> f.center_dim)) throw ParseError::at_line("bad center-dim", lineno);
    } else {
      throw ParseError::at_line("unknown fixture keyword '" + key + "'", lineno);
    }
  }

  if (f.name.empty()) throw ParseError("fixture missing cell line");
  if (!has_group) throw ParseError("fixture missing group line");
  if (order_names.empty()) throw ParseError("fixture missing order line");
  if (f.n == 0) throw ParseError("fixture missing n line");
  if (f.identity == 0) throw ParseError("fixture missing identity line");

  f.descriptor.names = order_names;
  int r = int(order_names.size());
  f.descriptor.mat.assign(r, std::vector<int>(r, 2));
  for (int i = 0; i < r; ++i) f.descriptor.mat[i][i] = 1;
  for (auto [a, b, m] : bonds) {
    int i = -1, j = -1;
    for (int k = 0; k < r; ++k) {
      if (order_names[k] == a) i = k;
      if (order_names[k] == b) j = k;
    }
    if (i < 0 || j < 0) throw ParseError("coxeter line names undeclared generator");
    f.descriptor.mat[i][j] = f.descriptor.mat[j][i] = m;
  }
  f.descriptor.validate();

  for (int j = 1; j <= f.n; ++j) {
    if (!words_by_index.count(j))
      throw ParseError("element " + std::to_string(j) + " has no word");
    f.words.push_back(words_by_index[j]);
  }
  {
    std::set<std::string> distinct(f.words.begin(), f.words.end());
    if (int(distinct.size()) != f.n)
      throw ParseError("element words are not pairwise distinct");
  }
  for (int j = 1; j <= f.n; ++j)
    if (!defined.count(j))
      throw ParseError("index " + std::to_string(j) + " has no definition");
  if (f.charpolys.empty()) throw ParseError("fixture missing charpoly lines");
  for (int j = 1; j <= f.n; ++j)
    if (f.charpolys[j - 1].empty())
      throw ParseError("charpoly " + std::to_string(j) + " missing");
  if (!has_all_subrings)
    throw ParseError("fixture missing `subrings ALL` line");
  std::vector<int> all(f.n);
  for (int j = 0; j < f.n; ++j) all[j] = j + 1;
  f.subring_sets.push_back(all);
  std::sort(f.subring_sets.begin(), f.subring_sets.end());
  if (f.derived_dim < 0) throw ParseError("fixture missing derived-dim");
  if (f.center_dim < 0) throw ParseError("fixture missing center-dim");
  return f;
}

CellFixture parse_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fixture file " + path);
  try {
    return parse_fixture(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/* ---------------------------- reconstruction -------------------------- */

std::vector<IntMatrix> reconstruct_matrices(const CellFixture& f) {
  std::map<std::string, IntMatrix> bindings;
  for (const auto& [j, m] : f.explicit_matrices)
    bindings.emplace("M" + std::to_string(j), m);
  bindings.emplace("M" + std::to_string(f.identity), IntMatrix::identity(f.n));

  std::vector<IntMatrix> out(f.n);
  out[f.identity - 1] = IntMatrix::identity(f.n);
  for (const auto& [j, m] : f.explicit_matrices) out[j - 1] = m;
  for (const auto& [target, text] : f.relations) {
    auto [name, expr] = MatrixExpr::parse_relation(text);
    if (name != "M" + std::to_string(target))
      throw InvariantError("relation target mismatch in '" + text + "'");
    // relations may only reference I and the explicitly given matrices, so
    // evaluation order cannot matter
    out[target - 1] = eval_expr(expr, bindings, f.n);
  }
  return out;
}

GammaTensor tensor_from_matrices(const CellFixture& f,
                                 const std::vector<IntMatrix>& matrices) {
  if (int(matrices.size()) != f.n)
    throw InvariantError("matrix sequence size mismatch");
  GammaTensor t;
  t.n = f.n;
  t.identity = f.identity - 1;
  t.a_value = GammaTensor::kUnknownA;
  t.words = f.words;
  for (const auto& w : f.words) t.lengths.push_back(int(w.size()));
  t.entries.assign(std::size_t(f.n) * f.n * f.n, 0);
  for (int j = 0; j < f.n; ++j) {
    if (matrices[j].dim() != f.n)
      throw InvariantError("matrix " + std::to_string(j + 1) +
                           " has wrong dimension");
    for (int y = 0; y < f.n; ++y)
      for (int z = 0; z < f.n; ++z) {
        const Int& v = matrices[j].at(y, z);
        if (!v.fits_slong_p())
          throw InvariantError("matrix entry out of int64 range");
        t.at(j, y, z) = v.get_si();
      }
  }
  t.validate();
  return t;
}

/* ------------------------------ verification -------------------------- */

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

template <typename Fn>
void run_check(VerifyReport& rep, const std::string& name, Fn&& fn) {
  VerifyCheck c;
  c.name = name;
  try {
    c.detail = fn();
    c.pass = true;
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  rep.checks.push_back(std::move(c));
}

}  // namespace

VerifyReport verify_fixture(const CellFixture& f, const CoxeterGroup* group) {
  VerifyReport rep;
  rep.fixture = f.name;

  std::optional<CoxeterGroup> local;
  const CoxeterGroup* g = nullptr;
  run_check(rep, "group", [&]() -> std::string {
    if (group && group->descriptor().canonical_text() ==
                     f.descriptor.canonical_text()) {
      g = group;
      return "shared group of order " + std::to_string(g->size());
    }
    BuildOptions opt;
    opt.expected_order = 14400;
    local.emplace(CoxeterGroup::build(f.descriptor, opt));
    g = &*local;
    return "built group of order " + std::to_string(g->size());
  });
  if (!g) return rep;

  std::vector<ElementIndex> elements;
  run_check(rep, "words", [&]() -> std::string {
    std::set<ElementIndex> distinct;
    for (int j = 0; j < f.n; ++j) {
      ElementIndex x = g->parse_word(f.words[j]);
      if (g->length(x) != int(f.words[j].size()))
        throw InvariantError("word " + std::to_string(j + 1) + " is not reduced");
      if (f.words[j].size() % 2 != 0)
        throw InvariantError("word " + std::to_string(j + 1) + " has odd length");
      if (!distinct.insert(x).second)
        throw InvariantError("words " + std::to_string(j + 1) +
                             " collide as group elements");
      elements.push_back(x);
    }
    return "parsed " + std::to_string(f.n) + " distinct reduced words";
  });

  std::vector<IntMatrix> matrices;
  run_check(rep, "reconstruct", [&]() -> std::string {
    matrices = reconstruct_matrices(f);
    return std::to_string(f.relations.size()) + " relations evaluated";
  });
  if (matrices.empty()) return rep;

  GammaTensor tensor;
  run_check(rep, "tensor-invariants", [&]() -> std::string {
    tensor = tensor_from_matrices(f, matrices);
    // pairing must match inversion computed in the group
    if (!elements.empty()) {
      std::vector<int> pair = tensor.inverse_pairing();
      for (int i = 0; i < f.n; ++i) {
        ElementIndex xi = g->inverse(elements[i]);
        auto it = std::find(elements.begin(), elements.end(), xi);
        if (it == elements.end())
          throw InvariantError("basis not closed under inversion");
        if (pair[i] != int(it - elements.begin()))
          throw InvariantError("pairing disagrees with group inversion at " +
                               std::to_string(i + 1));
      }
    }
    return "associativity, identity, nonnegativity, pairing all hold";
  });
  if (tensor.n == 0) return rep;

  run_check(rep, "charpoly-table", [&]() -> std::string {
    for (int j = 0; j < f.n; ++j) {
      IntPolynomial mine = char_poly(matrices[j]);
      IntPolynomial table = expand_factored_poly(f.charpolys[j]);
      if (mine != table)
        throw InvariantError("char poly mismatch at M" + std::to_string(j + 1) +
                             ": computed " + mine.str() + ", table " +
                             table.str());
    }
    return std::to_string(f.n) + " characteristic polynomials match";
  });

  run_check(rep, "subrings", [&]() -> std::string {
    SubringReport sr = enumerate_unital_subrings(tensor);
    std::vector<std::vector<int>> found;
    for (const auto& set0 : sr.unital) {
      std::vector<int> s;
      for (int i : set0) s.push_back(i + 1);
      found.push_back(std::move(s));
    }
    std::sort(found.begin(), found.end());
    if (found != f.subring_sets) {
      std::ostringstream os;
      os << "declared " << f.subring_sets.size() << " sets, found "
         << found.size() << ":";
      for (const auto& s : found) {
        os << " {";
        for (std::size_t i = 0; i < s.size(); ++i)
          os << (i ? "," : "") << s[i];
        os << "}";
      }
      throw InvariantError(os.str());
    }
    return std::to_string(found.size()) + " closed unital subsets, exactly as declared";
  });

  run_check(rep, "automorphisms", [&]() -> std::string {
    auto autos = find_permutation_isomorphisms(tensor, tensor);
    if (autos.size() != 1)
      throw InvariantError("expected exactly one automorphism, found " +
                           std::to_string(autos.size()));
    for (int i = 0; i < tensor.n; ++i)
      if (autos[0][i] != i)
        throw InvariantError("non-identity automorphism survived");
    return "identity is the unique automorphism";
  });

  run_check(rep, "derived-dim", [&]() -> std::string {
    int d = derived_algebra_dimension(tensor);
    if (d != f.derived_dim)
      throw InvariantError("derived dimension " + std::to_string(d) +
                           " != declared " + std::to_string(f.derived_dim));
    return "derived algebra dimension = " + std::to_string(d);
  });

  run_check(rep, "center-dim", [&]() -> std::string {
    int d = center_dimension(tensor);
    if (d != f.center_dim)
      throw InvariantError("center dimension " + std::to_string(d) +
                           " != declared " + std::to_string(f.center_dim));
    return "center dimension = " + std::to_string(d);
  });

  run_check(rep, "trace-form", [&]() -> std::string {
    TraceForm tf = trace_form_gram(tensor);
    if (!tf.nondegenerate)
      throw InvariantError("trace form Gram determinant is zero");
    return "Gram determinant nonzero";
  });

  return rep;
}

}  // namespace jring
