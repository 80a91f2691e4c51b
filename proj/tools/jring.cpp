// jring -- asymptotic Hecke algebra toolkit.
//
// Builds finite Coxeter groups, computes Kazhdan-Lusztig data, partitions
// groups into cells, extracts the J-ring structure constants per left cell,
// and analyzes / verifies the resulting based rings.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jring/asymptotic.hpp"
#include "jring/cells.hpp"
#include "jring/factored_poly.hpp"
#include "jring/fixtures.hpp"
#include "jring/kl.hpp"
#include "jring/ringlab.hpp"
#include "jring/util.hpp"

namespace fs = std::filesystem;
using namespace jring;

namespace {

struct RunConfig {
  std::string type;        // built-in name
  std::string descriptor;  // or descriptor file
  std::string cache_dir;
  int threads = 1;
  bool long_running = false;
  bool require_cache = false;
  std::size_t max_elements = 20000;
};

void add_group_options(CLI::App* cmd, RunConfig& cfg) {
  auto* t = cmd->add_option("--type", cfg.type, "built-in type (A1..A4, B3, H3, H4, I2_m)");
  auto* d = cmd->add_option("--descriptor", cfg.descriptor, "descriptor file");
  t->excludes(d);
  cmd->add_option("--max-elements", cfg.max_elements, "element ceiling")
      ->capture_default_str();
}

CoxeterGroup load_group(const RunConfig& cfg) {
  BuildOptions opt;
  opt.max_elements = cfg.max_elements;
  if (!cfg.type.empty()) {
    opt.expected_order = builtin_order(cfg.type);
    if (opt.max_elements < opt.expected_order) opt.max_elements = opt.expected_order;
    return CoxeterGroup::build(CoxeterDescriptor::builtin(cfg.type), opt);
  }
  if (cfg.descriptor.empty())
    throw ParseError("one of --type / --descriptor is required");
  std::ifstream in(cfg.descriptor);
  if (!in) throw ParseError("cannot open descriptor file " + cfg.descriptor);
  std::stringstream buf;
  buf << in.rdbuf();
  return CoxeterGroup::build(CoxeterDescriptor::from_text(buf.str()), opt);
}

void require_long_running(const RunConfig& cfg, const CoxeterGroup& g) {
  if (g.size() > 2000 && !cfg.long_running)
    throw InvariantError("group of order " + std::to_string(g.size()) +
                         " needs --long-running for the full pipeline");
}

std::string cache_path(const RunConfig& cfg, const CoxeterGroup& g) {
  if (cfg.cache_dir.empty()) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                (unsigned long long)g.descriptor().stable_hash());
  return (fs::path(cfg.cache_dir) / ("klcache-" + std::string(buf) + ".txt")).string();
}

KLTable kl_with_cache(const RunConfig& cfg, const CoxeterGroup& g) {
  std::string path = cache_path(cfg, g);
  if (!path.empty() && fs::exists(path)) {
    std::ifstream in(path);
    return KLTable::load(g, in);
  }
  if (cfg.require_cache)
    throw InvariantError("KL cache missing at " +
                         (path.empty() ? std::string("<no cache dir>") : path));
  KLTable::Progress progress;
  if (cfg.long_running)
    progress = [](int length, std::size_t done, std::size_t total) {
      std::cerr << "kl: length " << length << ", " << done << "/" << total
                << " rows\r" << std::flush;
      if (done == total) std::cerr << "\n";
    };
  KLTable kl = KLTable::compute(g, cfg.threads, progress);
  if (!path.empty()) {
    fs::create_directories(fs::path(path).parent_path());
    std::ofstream out(path);
    kl.save(out);
  }
  return kl;
}

GammaTensor load_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tensor file " + path);
  GammaTensor t = GammaTensor::read(in);
  t.validate();
  return t;
}

std::string set_str(const std::vector<int>& s, int base) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + base;
  os << '}';
  return os.str();
}

int cmd_group_info(const RunConfig& cfg) {
  CoxeterGroup g = load_group(cfg);
  std::cout << "order " << g.size() << "\n";
  std::cout << "longest-element-length " << g.max_length() << "\n";
  std::cout << "length-distribution";
  for (std::size_t c : g.length_histogram()) std::cout << ' ' << c;
  std::cout << "\n";
  return 0;
}

int cmd_cells(const RunConfig& cfg, const std::string& kind_name) {
  CoxeterGroup g = load_group(cfg);
  require_long_running(cfg, g);
  KLTable kl = kl_with_cache(cfg, g);
  CellKind kind = kind_name == "left"      ? CellKind::Left
                  : kind_name == "right"   ? CellKind::Right
                  : kind_name == "twosided" ? CellKind::TwoSided
                                            : throw ParseError("bad --kind");
  CellPartition part = cells(g, kl, kind);
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    std::cout << "cell " << to_string(kind) << ' ' << b;
    if (b < part.labels.size() && !part.labels[b].empty())
      std::cout << " label=" << part.labels[b];
    std::cout << " size=" << part.blocks[b].size() << " elements=";
    for (std::size_t i = 0; i < part.blocks[b].size(); ++i)
      std::cout << (i ? "," : "") << part.blocks[b][i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_gamma(const RunConfig& cfg, int cell_id, const std::string& out_path) {
  CoxeterGroup g = load_group(cfg);
  require_long_running(cfg, g);
  KLTable kl = kl_with_cache(cfg, g);
  CellPartition part = cells(g, kl, CellKind::Left);
  if (cell_id < 0 || cell_id >= int(part.blocks.size()))
    throw ParseError("cell id out of range (0.." +
                     std::to_string(part.blocks.size() - 1) + ")");
  std::vector<ElementIndex> basis = gamma_basis(g, part.blocks[cell_id]);
  GammaTensor t = gamma_tensor(g, kl, basis, cfg.threads);
  if (out_path.empty() || out_path == "-") {
    t.write(std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file " + out_path);
    t.write(out);
  }
  return 0;
}

struct AnalyzeFlags {
  bool charpoly = false, subrings = false, automorphisms = false;
  bool derived = false, center = false, trace_form = false;
  std::string relations_file;
};

int cmd_analyze(const std::string& tensor_path, const AnalyzeFlags& flags) {
  GammaTensor t = load_tensor(tensor_path);
  std::cout << "tensor n=" << t.n << " identity=" << t.identity << " a=";
  if (t.a_value == GammaTensor::kUnknownA)
    std::cout << "unknown";
  else
    std::cout << t.a_value;
  std::cout << "\n";
  if (flags.charpoly) {
    for (int j = 0; j < t.n; ++j)
      std::cout << "charpoly " << j << " " << char_poly(left_mult_matrix(t, j)).str()
                << "\n";
  }
  if (flags.subrings) {
    SubringReport r = enumerate_unital_subrings(t);
    for (const auto& s : r.unital) std::cout << "subring " << set_str(s, 0) << "\n";
    for (const auto& s : r.other_unital)
      std::cout << "subring-own-unit " << set_str(s, 0) << "\n";
  }
  if (flags.automorphisms) {
    auto autos = find_permutation_isomorphisms(t, t);
    std::cout << "automorphisms " << autos.size() << "\n";
    for (const auto& p : autos) {
      std::cout << "automorphism";
      for (int v : p) std::cout << ' ' << v;
      std::cout << "\n";
    }
  }
  if (flags.derived)
    std::cout << "derived-dim " << derived_algebra_dimension(t) << "\n";
  if (flags.center) std::cout << "center-dim " << center_dimension(t) << "\n";
  if (flags.trace_form) {
    TraceForm tf = trace_form_gram(t);
    std::cout << "trace-form " << (tf.nondegenerate ? "nondegenerate" : "degenerate")
              << " det=" << tf.det.get_str() << "\n";
  }
  if (!flags.relations_file.empty()) {
    std::ifstream in(flags.relations_file);
    if (!in) throw ParseError("cannot open relations file " + flags.relations_file);
    std::map<std::string, IntMatrix> bindings;
    for (int j = 0; j < t.n; ++j)
      bindings.emplace("M" + std::to_string(j + 1), left_mult_matrix(t, j));
    std::string line;
    int failures = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) continue;
      auto [target, expr] = MatrixExpr::parse_relation(line);
      IntMatrix lhs = bindings.at(target);
      IntMatrix rhs = eval_expr(expr, bindings, t.n);
      bool ok = lhs == rhs;
      if (!ok) ++failures;
      std::cout << "relation " << target << " " << (ok ? "holds" : "FAILS") << "\n";
    }
    if (failures) return 1;
  }
  return 0;
}

int cmd_fixtures_verify(const std::vector<std::string>& files) {
  std::optional<CoxeterGroup> h4;
  bool all = true;
  for (const auto& path : files) {
    CellFixture f = parse_fixture_file(path);
    if (!h4 && CoxeterDescriptor::builtin("H4").canonical_text() ==
                   f.descriptor.canonical_text()) {
      BuildOptions opt;
      opt.expected_order = builtin_order("H4");
      h4.emplace(CoxeterGroup::build(f.descriptor, opt));
    }
    VerifyReport rep = verify_fixture(f, h4 ? &*h4 : nullptr);
    for (const auto& c : rep.checks) {
      std::cout << rep.fixture << " " << c.name << " "
                << (c.pass ? "PASS" : "FAIL");
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
    all = all && rep.all_pass();
  }
  std::cout << (all ? "all fixtures verified" : "FIXTURE VERIFICATION FAILED")
            << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymptotic Hecke algebra toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("JRING_CACHE_DIR")) cfg.cache_dir = env;
  app.add_option("--threads", cfg.threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir,
                 "KL cache directory (default: $JRING_CACHE_DIR)");
  app.add_flag("--long-running", cfg.long_running,
               "allow full-pipeline runs on groups with more than 2000 elements");
  app.add_flag("--require-cache", cfg.require_cache,
               "fail instead of computing when the KL cache is missing");

  auto* group = app.add_subcommand("group", "group-level queries");
  auto* info = group->add_subcommand("info", "order, longest length, length distribution");
  add_group_options(info, cfg);

  auto* cells_cmd = app.add_subcommand("cells", "cell partition listing");
  add_group_options(cells_cmd, cfg);
  std::string kind = "left";
  cells_cmd->add_option("--kind", kind, "left | right | twosided")
      ->check(CLI::IsMember({"left", "right", "twosided"}))
      ->capture_default_str();

  auto* gamma_cmd = app.add_subcommand("gamma", "structure-constant tensor of a left cell");
  add_group_options(gamma_cmd, cfg);
  int cell_id = -1;
  std::string out_path;
  gamma_cmd->add_option("--cell", cell_id, "left-cell id")->required();
  gamma_cmd->add_option("--out", out_path, "output file ('-' for stdout)");

  auto* analyze = app.add_subcommand("analyze", "based-ring analyses of a tensor file");
  std::string tensor_path;
  AnalyzeFlags flags;
  analyze->add_option("--tensor", tensor_path, "gamma tensor file")->required();
  analyze->add_flag("--charpoly", flags.charpoly, "characteristic polynomials of all M_j");
  analyze->add_flag("--subrings", flags.subrings, "closed unital basis subsets");
  analyze->add_flag("--automorphisms", flags.automorphisms, "permutation automorphisms");
  analyze->add_flag("--derived", flags.derived, "derived algebra dimension");
  analyze->add_flag("--center", flags.center, "center dimension");
  analyze->add_flag("--trace-form", flags.trace_form, "trace form nondegeneracy");
  analyze->add_option("--relations", flags.relations_file, "relation file to check");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "published-data operations");
  auto* verify = fixtures_cmd->add_subcommand("verify", "verify fixture files");
  std::vector<std::string> files;
  verify->add_option("files", files, "fixture .cell files")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_group_info(cfg);
    if (cells_cmd->parsed()) return cmd_cells(cfg, kind);
    if (gamma_cmd->parsed()) return cmd_gamma(cfg, cell_id, out_path);
    if (analyze->parsed()) return cmd_analyze(tensor_path, flags);
    if (verify->parsed()) return cmd_fixtures_verify(files);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
