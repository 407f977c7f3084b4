#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cyclo_hecke/clifford.hpp"
#include "cyclo_hecke/group.hpp"
#include "cyclo_hecke/serialize.hpp"
#include "cyclo_hecke/specialize.hpp"
#include "cyclo_hecke/table_io.hpp"
#include "cyclo_hecke/verify.hpp"

using namespace cyclo_hecke;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraArgs {
  int r = 1;
  int p = 1;
  int n = 0;
  int jobs = 1;
  std::string cache;
};

void add_algebra_options(CLI::App* cmd, AlgebraArgs& a, bool required) {
  auto* r = cmd->add_option("--r", a.r, "number of parameters u_1..u_r");
  auto* n = cmd->add_option("--n", a.n, "rank");
  if (required) {
    r->required();
    n->required();
  }
  cmd->add_option("--p", a.p, "p dividing r (p = 1 gives H(r,n))");
  cmd->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--cache", a.cache, "table cache directory")->envname("CYCLO_HECKE_CACHE");
}

void check_algebra(const AlgebraArgs& a) {
  if (a.r < 1 || a.p < 1 || a.n < 1) throw UsageError("need r, p, n >= 1");
  if (a.r % a.p != 0) throw UsageError("p = " + std::to_string(a.p) + " does not divide r = " + std::to_string(a.r));
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

int cmd_table(const AlgebraArgs& a, const std::string& format, const std::string& out) {
  check_algebra(a);
  TableFormat f = parse_format(format);
  emit(write_table(cached_table(a.cache, a.r, a.p, a.n, a.jobs), f), out);
  return 0;
}

struct CharArgs {
  std::string shape;
  std::string element;
  int r = 0;
  int p = 1;
  std::optional<int> alpha;
  std::optional<int> j;
  bool oracle = false;
};

int cmd_char(const CharArgs& a) {
  MultiPartition lam = parse_shape(a.shape);
  if (a.r != 0 && a.r != lam.r())
    throw UsageError("shape has " + std::to_string(lam.r()) + " components but r = " + std::to_string(a.r));
  const int r = lam.r();
  if (a.p < 1 || r % a.p != 0) throw UsageError("p must divide r");
  GPElementSpec spec = parse_gp_element(a.element);
  if (spec.blocks.n() != lam.size())
    throw UsageError("element acts on " + std::to_string(spec.blocks.n()) + " strands but the shape has " +
                     std::to_string(lam.size()) + " boxes");
  validate(spec.blocks, lam.size());
  if (a.p == 1 && (a.j || a.alpha || spec.tilde)) throw UsageError("--j, --alpha and tilde need p > 1");

  RationalFn value, oracle;
  if (a.p == 1) {
    HeckeParams h = HeckeParams::hrn(r);
    value = mn_character(h, lam, spec.blocks);
    if (a.oracle) oracle = trace_of(SeminormalRep(lam, h), element_word(spec.blocks));
  } else {
    HeckeParams h = HeckeParams::hrpn(r, a.p);
    Stabilizer st = stabilizer(lam, a.p);
    AlgebraWord word = gp_element_word(spec);
    if (a.j) {
      if (*a.j < 0 || *a.j >= st.k_size) throw UsageError("j must lie in [0, " + std::to_string(st.k_size) + ")");
      value = chi_irreducible(h, lam, *a.j, spec);
      if (a.oracle) {
        // (1/K) sum_alpha eps^(-j alpha f) times the seminormal twisted bitrace
        SeminormalRep rep(lam, h);
        oracle = RationalFn(LaurentPoly(h.ring()));
        for (int alpha = 0; alpha < st.k_size; ++alpha)
          oracle += RationalFn(LaurentPoly::constant(h.ring(), h.epsilon().pow(-*a.j * alpha * st.f))) *
                    twisted_bitrace(rep, word, alpha);
        oracle = RationalFn(LaurentPoly::constant(h.ring(), CycloRational(h.epsilon().field(), Rational(1, st.k_size)))) * oracle;
      }
    } else {
      const int alpha = a.alpha.value_or(spec.alpha);
      if (alpha < 0 || alpha >= st.k_size) throw UsageError("alpha must lie in [0, " + std::to_string(st.k_size) + ")");
      ReducedWord red = reduce_to_R(spec, a.p);
      value = RationalFn(LaurentPoly::constant(h.ring(), h.epsilon().pow(alpha * st.f * red.prefactor))) *
              bitrace_closed(h, lam, red.r_word, alpha);
      if (a.oracle) oracle = twisted_bitrace(SeminormalRep(lam, h), word, alpha);
    }
  }
  std::cout << to_string(value) << "\n";
  if (!a.oracle) return 0;
  if (value == oracle) {
    std::cout << "AGREE\n";
    return 0;
  }
  std::cout << "DISAGREE: seminormal value " << to_string(oracle) << "\n";
  return kExitFailure;
}

struct SpecializeArgs {
  AlgebraArgs algebra;
  std::string table_path;
  std::optional<std::string> q;
  std::vector<std::string> binds;
  bool group = false;
  std::string format = "text";
  std::string out;
};

int cmd_specialize(const SpecializeArgs& a) {
  CharacterTable table;
  if (!a.table_path.empty()) {
    std::ifstream in(a.table_path);
    if (!in) throw UsageError("cannot read " + a.table_path);
    std::stringstream buf;
    buf << in.rdbuf();
    table = read_table_json(buf.str());
  } else {
    if (a.algebra.n == 0) throw UsageError("give --table or --r/--n");
    check_algebra(a.algebra);
    table = cached_table(a.algebra.cache, a.algebra.r, a.algebra.p, a.algebra.n, a.algebra.jobs);
  }
  const CycloField& field = table.ring->field();
  Bindings b;
  if (a.group) b = group_bindings(table);
  if (a.q) b["q"] = parse_cyclo(*a.q, field);
  for (const auto& text : a.binds) {
    auto [name, value] = parse_binding(text, field);
    b[name] = value;
  }
  if (b.empty()) throw UsageError("nothing to bind: give --q, --bind or --group");
  emit(write_table(specialize_table(table, b), parse_format(a.format)), a.out);
  return 0;
}

int cmd_group(const AlgebraArgs& a) {
  check_algebra(a);
  CharacterTable table = cached_table(a.cache, a.r, a.p, a.n, a.jobs);
  auto group = generate_group(a.r, a.p, a.n);
  auto classes = conjugacy_classes(group);
  std::cout << "G(" << a.r << "," << a.p << "," << a.n << ")  order " << group.size() << ", " << classes.size() << " classes\n";
  for (const auto& c : classes) {
    std::cout << "  size " << c.size << "  perm";
    for (int x : c.representative.perm) std::cout << " " << x + 1;
    std::cout << "  exps";
    for (int x : c.representative.exps) std::cout << " " << x;
    std::cout << "\n";
  }
  OrthogonalityReport rep = check_orthogonality(specialize_table(table, group_bindings(table)));
  if (rep.ok) {
    std::cout << "orthogonality: pass\n";
    return 0;
  }
  std::cout << "orthogonality: FAIL " << rep.failure << "\n";
  return kExitFailure;
}

int cmd_verify(const std::string& suite, bool quick, bool verbose, int jobs) {
  VerifyOptions opt;
  opt.scale = quick ? VerifyScale::quick : VerifyScale::full;
  opt.jobs = jobs;
  if (verbose) opt.log = [](const std::string& line) { std::cout << "  " << line << "\n" << std::flush; };
  bool ok = true;
  for (const auto& res : run_suite(suite, opt)) {
    if (res.ok) {
      std::cout << "PASS " << res.name << " (" << res.checked << " identities)\n";
    } else {
      std::cout << "FAIL " << res.name << ": " << res.detail << "\n";
      ok = false;
    }
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* bug = std::getenv("CYCLO_HECKE_INJECT_DELTA_SIGN_BUG"); bug && std::string(bug) == "1")
    testing::inject_delta_sign_bug(true);

  CLI::App app{"Characters of cyclotomic Hecke algebras H(r,n) and H(r,p,n)"};
  app.require_subcommand(1);

  AlgebraArgs table_args;
  std::string table_format = "text", table_out;
  auto* table = app.add_subcommand("table", "full character table (H(r,n) when p = 1)");
  add_algebra_options(table, table_args, true);
  table->add_option("--format", table_format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_option("--out", table_out, "output file (default stdout)");

  CharArgs char_args;
  auto* chr = app.add_subcommand("char", "one character value");
  chr->add_option("--shape", char_args.shape, "e.g. 2,1 or 1|1 or 3,2/1")->required();
  chr->add_option("--element", char_args.element, "e.g. \"ell=1,3 i=0,1\" or \"ell=2 i=1 tilde=1\"")->required();
  chr->add_option("--r", char_args.r, "number of components (default: from the shape)");
  chr->add_option("--p", char_args.p, "p > 1 selects H(r,p,n)");
  chr->add_option("--alpha", char_args.alpha, "twisted bitrace with sigma^(alpha f)");
  chr->add_option("--j", char_args.j, "irreducible V^(lambda,j) of H(r,p,n)");
  chr->add_flag("--oracle", char_args.oracle, "recompute from the seminormal representation");

  SpecializeArgs spec_args;
  auto* spec = app.add_subcommand("specialize", "substitute values for q and the u_i or y_k");
  add_algebra_options(spec, spec_args.algebra, false);
  spec->add_option("--table", spec_args.table_path, "JSON table written by `table --format json`");
  spec->add_option("--q", spec_args.q, "value for q, e.g. 1 or -1 or z^1");
  spec->add_option("--bind", spec_args.binds, "name=value, repeatable");
  spec->add_flag("--group", spec_args.group, "q = 1 and the parameters at roots of unity (group algebra)");
  spec->add_option("--format", spec_args.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  spec->add_option("--out", spec_args.out, "output file (default stdout)");

  AlgebraArgs group_args;
  auto* grp = app.add_subcommand("group", "brute-force G(r,p,n): classes and orthogonality of the q = 1 table");
  add_algebra_options(grp, group_args, true);

  std::string suite;
  bool quick = false, verbose = false;
  int verify_jobs = 1;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite, "relations, mn-oracle, poset, clifford-oracle, specialize-orthogonality or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver->add_flag("--quick", quick, "small ranges only");
  ver->add_flag("--verbose", verbose, "list every checked identity");
  ver->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_args, table_format, table_out);
    if (*chr) return cmd_char(char_args);
    if (*spec) return cmd_specialize(spec_args);
    if (*grp) return cmd_group(group_args);
    if (*ver) return cmd_verify(suite, quick, verbose, verify_jobs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecializationPole& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
