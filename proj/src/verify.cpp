#include "cyclo_hecke/verify.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "cyclo_hecke/clifford.hpp"
#include "cyclo_hecke/group.hpp"
#include "cyclo_hecke/parallel.hpp"
#include "cyclo_hecke/poset.hpp"
#include "cyclo_hecke/serialize.hpp"
#include "cyclo_hecke/specialize.hpp"
#include "cyclo_hecke/table_io.hpp"

namespace cyclo_hecke {

namespace {

struct Outcome {
  long checked = 0;
  std::string failure;
};

using Task = std::function<Outcome()>;

// Runs the tasks on opt.jobs threads. The reported counterexample is the one from the earliest
// failing task, so the result does not depend on scheduling.
CheckResult run_tasks(const std::string& name, const std::vector<Task>& tasks, const VerifyOptions& opt) {
  std::vector<Outcome> outcomes(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), opt.jobs, [&](int i) {
    try {
      outcomes[i] = tasks[i]();
    } catch (const std::exception& e) {
      outcomes[i].failure = std::string("exception: ") + e.what();
    }
  });
  CheckResult res{name, true, 0, ""};
  for (const auto& o : outcomes) {
    res.checked += o.checked;
    if (res.ok && !o.failure.empty()) {
      res.ok = false;
      res.detail = o.failure;
    }
  }
  return res;
}

class Logger {
 public:
  explicit Logger(const VerifyOptions& opt) : log_(opt.log) {}
  void operator()(const std::string& line) const {
    if (!log_) return;
    std::lock_guard<std::mutex> lock(mu_);
    log_(line);
  }

 private:
  std::function<void(const std::string&)> log_;
  mutable std::mutex mu_;
};

bool quick(const VerifyOptions& opt) { return opt.scale == VerifyScale::quick; }

// (r, n) pairs of the relation and MN ranges.
std::vector<std::pair<int, int>> hrn_algebras(const VerifyOptions& opt) {
  std::vector<std::pair<int, int>> out;
  const int max_r = quick(opt) ? 2 : 3, max_n = quick(opt) ? 3 : 4;
  for (int r = 1; r <= max_r; ++r)
    for (int n = 1; n <= max_n; ++n) out.emplace_back(r, n);
  if (!quick(opt)) out.emplace_back(4, 3);
  return out;
}

std::vector<std::tuple<int, int, int>> hrpn_algebras(const VerifyOptions& opt) {
  if (quick(opt)) return {{2, 2, 2}, {2, 2, 3}, {4, 4, 2}};
  return {{2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {4, 2, 3}, {3, 3, 3}, {4, 4, 2}};
}

std::string algebra_label(int r, int n) { return "H(" + std::to_string(r) + "," + std::to_string(n) + ")"; }
std::string algebra_label(int r, int p, int n) {
  return "H(" + std::to_string(r) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

RationalFn eps_power(const HeckeParams& h, int e) { return RationalFn(LaurentPoly::constant(h.ring(), h.epsilon().pow(e))); }

}  // namespace

CheckResult check_relations(const VerifyOptions& opt) {
  auto log = std::make_shared<Logger>(opt);
  std::vector<Task> tasks;
  for (auto [r, n] : hrn_algebras(opt)) {
    for (const auto& lam : multipartitions_of(r, n)) {
      tasks.push_back([=] {
        SeminormalRep rep(lam, HeckeParams::hrn(r));
        RelationReport rr = verify_relations(rep);
        std::string label = algebra_label(r, n) + " " + to_string(lam);
        (*log)("verify_relations " + label);
        return Outcome{1, rr.ok ? "" : "verify_relations " + label + ": " + rr.failed};
      });
    }
  }
  return run_tasks("relations", tasks, opt);
}

CheckResult check_mn_oracle(const VerifyOptions& opt) {
  auto log = std::make_shared<Logger>(opt);
  std::vector<Task> tasks;
  for (auto [r, n] : hrn_algebras(opt)) {
    auto classes = multipartitions_of(r, n);
    for (const auto& lam : classes) {
      tasks.push_back([=] {
        HeckeParams h = HeckeParams::hrn(r);
        SeminormalRep rep(lam, h);
        Outcome out;
        for (const auto& c : classes) {
          StandardElementSpec spec = class_to_standard_element(c);
          std::string label = algebra_label(r, n) + " " + to_string(lam) + " " + to_string(spec);
          (*log)("mn_character = trace_of " + label);
          ++out.checked;
          if (!(mn_character(h, lam, spec) == trace_of(rep, element_word(spec))))
            return Outcome{out.checked, "mn_character != trace_of at " + label};
        }
        return out;
      });
    }
  }
  return run_tasks("mn_character vs trace_of", tasks, opt);
}

CheckResult check_delta_closed(const VerifyOptions& opt) {
  auto log = std::make_shared<Logger>(opt);
  std::vector<Task> tasks;
  const int max_r = quick(opt) ? 2 : 3, max_boxes = quick(opt) ? 4 : 6;
  for (int r = 1; r <= max_r; ++r) {
    for (const auto& shape : skew_shapes(r, max_boxes)) {
      if (shape.size() == 0) continue;
      tasks.push_back([=] {
        HeckeParams h = HeckeParams::hrn(r);
        Outcome out;
        for (int k = 0; k < r; ++k) {
          std::string label = "r=" + std::to_string(r) + " " + to_string(shape) + " k=" + std::to_string(k);
          (*log)("delta_shape_closed = delta_shape_bruteforce " + label);
          ++out.checked;
          if (!(delta_shape_closed(h, shape, k) == delta_shape_bruteforce(h, shape, k)))
            return Outcome{out.checked, "delta_shape_closed != delta_shape_bruteforce at " + label};
        }
        return out;
      });
    }
  }
  return run_tasks("delta_shape_closed vs brute force", tasks, opt);
}

CheckResult check_clifford_oracle(const VerifyOptions& opt) {
  auto log = std::make_shared<Logger>(opt);
  std::vector<Task> tasks;
  for (auto [r, p, n] : hrpn_algebras(opt)) {
    auto cols = hrpn_columns(r, p, n);
    for (const auto& lam : multipartitions_of(r, n)) {
      tasks.push_back([=] {
        HeckeParams h = HeckeParams::hrpn(r, p);
        SeminormalRep rep(lam, h);
        Stabilizer st = stabilizer(lam, p);
        Outcome out;
        for (const auto& col : cols) {
          ReducedWord red = reduce_to_R(GPElementSpec{*col.tilde, col.spec, 0}, p);
          for (int alpha = 0; alpha < st.k_size; ++alpha) {
            std::string label = algebra_label(r, p, n) + " " + to_string(lam) + " " + to_string(red.r_word) +
                                " alpha=" + std::to_string(alpha);
            (*log)("bitrace_closed = twisted_bitrace " + label);
            ++out.checked;
            if (!(bitrace_closed(h, lam, red.r_word, alpha) == twisted_bitrace(rep, element_word(red.r_word), alpha)))
              return Outcome{out.checked, "bitrace_closed != twisted_bitrace at " + label};
          }
        }
        return out;
      });
    }
  }
  return run_tasks("bitrace_closed vs twisted_bitrace", tasks, opt);
}

CheckResult check_inversion(const VerifyOptions& opt) {
  auto log = std::make_shared<Logger>(opt);
  std::vector<Task> tasks;
  for (auto [r, p, n] : hrpn_algebras(opt)) {
    auto t = std::make_shared<const CharacterTable>(character_table_hrpn(r, p, n, opt.jobs));
    for (size_t row = 0; row < t->rows.size(); ++row) {
      if (*t->rows[row].j != 0) continue;
      tasks.push_back([=, r = r, p = p, n = n] {
        HeckeParams h = HeckeParams::hrpn(r, p);
        const MultiPartition& lam = t->rows[row].shape;
        SeminormalRep rep(lam, h);
        const int K = t->rows[row].k_size, f = t->rows[row].f;
        Outcome out;
        for (size_t c = 0; c < t->cols.size(); ++c) {
          AlgebraWord w = column_word(t->cols[c]);
          for (int alpha = 0; alpha < K; ++alpha) {
            RationalFn sum{LaurentPoly(h.ring())};
            for (int j = 0; j < K; ++j) sum += eps_power(h, j * alpha * f) * t->entries[row + j][c];
            std::string label = algebra_label(r, p, n) + " " + to_string(lam) + " " + column_name(t->cols[c]) +
                                " alpha=" + std::to_string(alpha);
            (*log)("sum_j chi_irreducible eps^(j alpha f) = twisted_bitrace " + label);
            ++out.checked;
            if (!(sum == twisted_bitrace(rep, w, alpha)))
              return Outcome{out.checked, "chi_irreducible does not invert to twisted_bitrace at " + label};
          }
        }
        return out;
      });
    }
  }
  return run_tasks("inversion round trip", tasks, opt);
}

CheckResult check_poset_theorem(const VerifyOptions& opt) {
  auto log = std::make_shared<Logger>(opt);
  std::vector<Task> tasks;
  constexpr int kMaxK = 3;
  for (const auto& shape : skew_shapes(1, quick(opt) ? 5 : 7)) {
    if (shape.size() == 0) continue;
    tasks.push_back([=] {
      BoxVariables vars = BoxVariables::generic(shape);
      (*log)("verify_poset_theorem " + to_string(shape) + " k=0.." + std::to_string(kMaxK));
      std::vector<int> bad = verify_poset_theorem_upto(shape, kMaxK, vars);
      if (bad.empty()) return Outcome{kMaxK + 1, ""};
      return Outcome{kMaxK + 1, "verify_poset_theorem fails at " + to_string(shape) + " k=" + std::to_string(bad.front())};
    });
  }
  return run_tasks("poset theorem", tasks, opt);
}

CheckResult check_group_orthogonality(const VerifyOptions& opt) {
  auto log = std::make_shared<Logger>(opt);
  std::vector<Task> tasks;
  for (auto [r, p, n, order] : {std::tuple{1, 1, 3, 6}, {2, 1, 2, 8}, {3, 1, 2, 18}, {2, 2, 2, 4}}) {
    tasks.push_back([=, r = r, p = p, n = n, order = order] {
      CharacterTable t = compute_table(r, p, n);
      OrthogonalityReport rep = check_orthogonality(specialize_table(t, group_bindings(t)));
      std::string label = "G(" + std::to_string(r) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
      (*log)("check_orthogonality " + label + " |G|=" + std::to_string(rep.group_order));
      if (!rep.ok) return Outcome{1, "check_orthogonality " + label + ": " + rep.failure};
      if (rep.group_order != order)
        return Outcome{1, "generate_group " + label + " has order " + std::to_string(rep.group_order)};
      return Outcome{1, ""};
    });
  }
  return run_tasks("group orthogonality", tasks, opt);
}

CheckResult check_c_constant(const VerifyOptions& opt) {
  Logger log(opt);
  CheckResult res{"C constant", true, 0, ""};
  for (int g = 2; g <= 6; ++g) {
    const Ring* ring = Ring::get(g, {"q"});
    LaurentPoly q = LaurentPoly::variable(ring, "q");
    LaurentPoly expected = LaurentPoly::constant(ring, CycloRational(CycloField::get(g), Rational(1, g))) * quantum_integer(q, g);
    for (int k = 1; k < g; ++k) {
      if (std::gcd(k, g) != 1) continue;
      std::string label = "gamma=" + std::to_string(g) + " omega=zeta^" + std::to_string(k);
      log("c_block = [gamma]/gamma " + label);
      ++res.checked;
      if (res.ok && !(c_block(ring, root_of_unity(g, k), g) == expected)) {
        res.ok = false;
        res.detail = "c_block != [gamma]/gamma at " + label;
      }
    }
  }
  return res;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "mn-oracle", "poset", "clifford-oracle", "specialize-orthogonality",
                                              "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "relations") return {check_relations(opt)};
  if (suite == "mn-oracle") return {check_delta_closed(opt), check_mn_oracle(opt)};
  if (suite == "poset") return {check_poset_theorem(opt)};
  if (suite == "clifford-oracle") return {check_clifford_oracle(opt), check_inversion(opt), check_c_constant(opt)};
  if (suite == "specialize-orthogonality") return {check_group_orthogonality(opt)};
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      auto part = run_suite(name, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite " + suite);
}

}  // namespace cyclo_hecke
