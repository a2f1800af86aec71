#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ncg/catalog.hpp"
#include "ncg/census.hpp"
#include "ncg/error.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/verify.hpp"

namespace {

enum Exit { kOk = 0, kTheoremFail = 1, kInputError = 2, kGuardExceeded = 3 };

struct FieldOptions {
  int q = 2;
  std::vector<int> modulus;

  ncg::FieldSpec spec() const {
    if (modulus.empty()) return ncg::default_field_spec(q);
    const int m = static_cast<int>(modulus.size()) - 1;
    for (int p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      int power = 1;
      for (int i = 0; i < m; ++i) power *= p;
      if (power != q) throw ncg::InputError("--modulus of degree " + std::to_string(m) + " does not match q = " + std::to_string(q));
      return ncg::FieldSpec{p, m, modulus};
    }
    throw ncg::InputError("q must be at least 2");
  }
};

struct Source {
  std::string builtin;
  std::string file;

  bool given() const { return !builtin.empty() || !file.empty(); }
};

ncg::LieAlgebra load(const std::string& builtin, const std::string& file, const FieldOptions& field) {
  if (!builtin.empty()) return ncg::builtin(builtin, field.spec());
  std::ifstream in(file);
  if (!in) throw ncg::InputError("cannot read " + file);
  std::stringstream text;
  text << in.rdbuf();
  return ncg::algebra_from_text(text.str());
}

// Output goes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ncg::InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ncg::InputError("cannot write " + path);
  out << content;
}

void add_guard_options(CLI::App* cmd, ncg::Guards& g) {
  cmd->add_option("--guard-clique", g.clique, "Vertex budget for exact clique search")->check(CLI::PositiveNumber);
  cmd->add_option("--guard-chromatic", g.chromatic, "Vertex budget for exact colouring")->check(CLI::PositiveNumber);
  cmd->add_option("--guard-independence", g.independence, "Vertex budget for exact independence number")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--guard-domination", g.domination, "Vertex budget for exact domination number")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--guard-hamiltonian", g.hamiltonian, "Vertex budget for Hamiltonian backtracking")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--guard-iso", g.isomorphism, "Vertex budget for graph isomorphism")->check(CLI::PositiveNumber);
  cmd->add_option("--guard-elements", g.elements, "Largest q^n scanned element by element")->check(CLI::PositiveNumber);
  cmd->add_option("--guard-cover", g.cover, "Largest q^n for the exact abelian cover")->check(CLI::PositiveNumber);
  cmd->add_option("--guard-nodes", g.search_nodes, "Search-tree nodes per exact search")->check(CLI::PositiveNumber);
}

void add_field_options(CLI::App* cmd, FieldOptions& f) {
  cmd->add_option("--q", f.q, "Field order for builtins (prime, or 4, 8, 9 without --modulus)")->capture_default_str();
  cmd->add_option("--modulus", f.modulus, "Monic irreducible modulus, coefficients from constant term up");
}

void add_source_options(CLI::App* cmd, Source& s) {
  auto* b = cmd->add_option("--builtin", s.builtin, "heisenberg, affine2, sl2, gl2, paper_L1 or paper_L2");
  auto* f = cmd->add_option("--file", s.file, "Algebra file (JSON)");
  b->excludes(f);
}

int analyze(const Source& src, const FieldOptions& field, const ncg::Guards& guards, bool json, const std::string& dot,
            const std::string& graphml, const std::string& out_path) {
  const ncg::LieAlgebra algebra = load(src.builtin, src.file, field);
  const ncg::NCGraph g = ncg::build_graph(algebra);
  const ncg::InvariantReport report = ncg::compute_invariants(g.graph, guards);
  const bool formula = ncg::degree_formula_check(g);
  Output out(out_path);
  if (json) {
    nlohmann::json j{{"algebra", algebra.name()}, {"fingerprint", ncg::fingerprint(algebra)},
                     {"q", g.q()},                {"n", g.n()},
                     {"s", g.s()},                {"d", g.d()},
                     {"degree_formula", formula}, {"invariants", ncg::to_json(report)}};
    out.stream() << j.dump() << "\n";
  } else {
    out.stream() << algebra.name() << " over F_" << g.q() << ": dim " << g.n() << ", center dim " << g.s()
                 << ", quotient dim " << g.d() << "\n"
                 << "degree formula: " << (formula ? "holds" : "violated") << "\n"
                 << ncg::to_text(report);
  }
  if (!dot.empty()) write_file(dot, ncg::export_dot(g));
  if (!graphml.empty()) write_file(graphml, ncg::export_graphml(g));
  return kOk;
}

struct CensusTarget {
  std::size_t dim = 0;
  FieldOptions field;
};

CensusTarget parse_census(const std::vector<std::string>& args, const FieldOptions& fallback) {
  CensusTarget t{0, fallback};
  for (const auto& a : args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw ncg::InputError("--census expects key=value pairs, got '" + a + "'");
    const std::string key = a.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(a.substr(eq + 1));
    } catch (const std::exception&) {
      throw ncg::InputError("--census: '" + a + "' has a non-integer value");
    }
    if (key == "dim") {
      if (value < 1) throw ncg::InputError("--census: dim must be positive");
      t.dim = static_cast<std::size_t>(value);
    } else if (key == "q") {
      t.field.q = value;
    } else {
      throw ncg::InputError("--census: unknown key '" + key + "'");
    }
  }
  if (t.dim == 0) throw ncg::InputError("--census needs dim=N");
  return t;
}

int verify(const Source& src, const std::vector<std::string>& census_args, const FieldOptions& field,
           const ncg::VerifyConfig& config, unsigned jobs, bool json, const std::string& out_path) {
  if (!census_args.empty()) {
    const CensusTarget t = parse_census(census_args, field);
    const auto v = ncg::verify_census(t.dim, t.field.spec(), config, jobs);
    Output out(out_path);
    if (json) {
      out.stream() << ncg::census_report_jsonl(v);
    } else {
      for (const auto& r : v.reports) {
        if (r.failed()) out.stream() << ncg::report_text(r);
      }
      for (const auto& c : v.pair_checks) {
        if (c.status == ncg::Status::Fail) out.stream() << "fail  iso_size: " << c.detail << "  witness " << c.witness.dump() << "\n";
      }
      out.stream() << v.reports.size() << " algebras, " << v.census.classes.size() << " graph classes: "
                   << v.count(ncg::Status::Pass) << " pass, " << v.count(ncg::Status::Fail) << " fail, "
                   << v.count(ncg::Status::NotApplicable) << " not-applicable, " << v.count(ncg::Status::NotComputed)
                   << " not-computed\n";
    }
    return v.failed() ? kTheoremFail : kOk;
  }
  if (!src.given()) throw ncg::InputError("verify needs --builtin, --file or --census");
  const ncg::LieAlgebra algebra = load(src.builtin, src.file, field);
  const ncg::TheoremReport report = ncg::verify_all(algebra, config);
  Output out(out_path);
  out.stream() << (json ? ncg::report_jsonl(report) : ncg::report_text(report));
  return report.failed() ? kTheoremFail : kOk;
}

ncg::LieAlgebra load_operand(const std::string& operand, const FieldOptions& field) {
  const auto& names = ncg::builtin_names();
  if (std::find(names.begin(), names.end(), operand) != names.end()) return ncg::builtin(operand, field.spec());
  if (!std::filesystem::exists(operand)) throw ncg::InputError("'" + operand + "' is neither a builtin nor a file");
  return load({}, operand, field);
}

int iso(const std::string& a, const std::string& b, const FieldOptions& field, const ncg::Guards& guards, bool json,
        const std::string& out_path) {
  const ncg::LieAlgebra la = load_operand(a, field);
  const ncg::LieAlgebra lb = load_operand(b, field);
  const ncg::AlgebraComparison cmp = ncg::compare_algebras(la, lb, guards);
  Output out(out_path);
  if (json) {
    out.stream() << cmp.to_json().dump() << "\n";
  } else {
    auto cls = [](const std::optional<std::size_t>& c) { return c ? "class " + std::to_string(*c) : std::string("not nilpotent"); };
    out.stream() << cmp.verdict() << "\n"
                 << "  " << la.name() << ": " << cmp.order_a << " vertices, " << cls(cmp.class_a) << ", "
                 << (cmp.solvable_a ? "solvable" : "not solvable") << ", center dim " << cmp.center_a << "\n"
                 << "  " << lb.name() << ": " << cmp.order_b << " vertices, " << cls(cmp.class_b) << ", "
                 << (cmp.solvable_b ? "solvable" : "not solvable") << ", center dim " << cmp.center_b << "\n";
  }
  return cmp.graphs_isomorphic ? kOk : kGuardExceeded;
}

int census(std::size_t dim, const FieldOptions& field, const ncg::Guards& guards, unsigned jobs, bool json,
           const std::string& out_path) {
  const ncg::Census c = ncg::run_census(dim, field.spec(), guards, jobs);
  if (!out_path.empty()) {
    write_file(out_path, ncg::census_jsonl(c));
    std::cout << ncg::census_summary(c);
  } else {
    std::cout << (json ? ncg::census_jsonl(c) : ncg::census_summary(c));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-commuting graphs of Lie algebras over finite fields"};
  app.require_subcommand(1);

  Source src;
  FieldOptions field;
  ncg::VerifyConfig config;
  bool json = false;
  std::string out_path, dot, graphml;
  unsigned jobs = 1;

  auto* an = app.add_subcommand("analyze", "Build the graph of one algebra and report its invariants");
  add_source_options(an, src);
  add_field_options(an, field);
  add_guard_options(an, config.guards);
  an->add_option("--dot", dot, "Write the graph as DOT");
  an->add_option("--graphml", graphml, "Write the graph as GraphML");
  an->add_flag("--json", json, "JSON output");
  an->add_option("--out", out_path, "Write the report to a file");

  std::vector<std::string> census_args;
  auto* ve = app.add_subcommand("verify", "Run the theorem checks on an algebra or a census");
  add_source_options(ve, src);
  add_field_options(ve, field);
  add_guard_options(ve, config.guards);
  ve->add_option("--census", census_args, "Census range, e.g. --census dim=3 q=2")->expected(1, 2);
  ve->add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();
  ve->add_option("--trials", config.trials, "Random subsets per algebra")->capture_default_str();
  ve->add_option("--jobs", jobs, "Worker threads for the census")->check(CLI::PositiveNumber);
  ve->add_flag("--timing", config.timing, "Record time per check");
  ve->add_flag("--json", json, "One JSON object per check");
  ve->add_option("--out", out_path, "Write the report to a file");

  std::string op_a, op_b;
  auto* is = app.add_subcommand("iso", "Compare the graphs of two algebras (builtin names or files)");
  is->add_option("a", op_a, "First algebra")->required();
  is->add_option("b", op_b, "Second algebra")->required();
  add_field_options(is, field);
  add_guard_options(is, config.guards);
  is->add_flag("--json", json, "JSON output");
  is->add_option("--out", out_path, "Write the verdict to a file");

  std::size_t dim = 0;
  auto* ce = app.add_subcommand("census", "Enumerate all Lie algebras of a dimension and class their graphs");
  ce->add_option("--dim", dim, "Dimension")->required()->check(CLI::PositiveNumber);
  add_field_options(ce, field);
  add_guard_options(ce, config.guards);
  ce->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  ce->add_flag("--json", json, "Print JSON lines instead of the summary");
  ce->add_option("--out", out_path, "Write JSON lines to a file and print the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (an->parsed()) {
      if (!src.given()) throw ncg::InputError("analyze needs --builtin or --file");
      return analyze(src, field, config.guards, json, dot, graphml, out_path);
    }
    if (ve->parsed()) return verify(src, census_args, field, config, jobs, json, out_path);
    if (is->parsed()) return iso(op_a, op_b, field, config.guards, json, out_path);
    return census(dim, field, config.guards, jobs, json, out_path);
  } catch (const ncg::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ncg::GuardExceeded& e) {
    std::cerr << "not computed: " << e.what() << "\n";
    return kGuardExceeded;
  }
}
