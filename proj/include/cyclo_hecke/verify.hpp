#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cyclo_hecke {

struct CheckResult {
  std::string name;
  bool ok = true;
  long checked = 0;    // identities compared
  std::string detail;  // first counterexample, naming the function under test
};

// `full` covers the acceptance ranges; `quick` is a small slice of each for smoke runs.
enum class VerifyScale { quick, full };

struct VerifyOptions {
  VerifyScale scale = VerifyScale::full;
  int jobs = 1;
  // Called once per checked identity (e.g. "delta_shape_closed 2,1/1 k=0"); may be empty.
  std::function<void(const std::string&)> log;
};

// verify_relations on every seminormal module of H(r,n), n <= 4, r <= 3, and H(4,n), n = 3.
CheckResult check_relations(const VerifyOptions& opt);
// mn_character against trace_of over the same algebras and every class standard element.
CheckResult check_mn_oracle(const VerifyOptions& opt);
// delta_shape_closed against delta_shape_bruteforce on skew shapes <= 6 boxes, r <= 3, 0 <= k < r.
CheckResult check_delta_closed(const VerifyOptions& opt);
// bitrace_closed against twisted_bitrace on the H(r,p,n) test algebras, all lambda and alpha.
CheckResult check_clifford_oracle(const VerifyOptions& opt);
// Summing the split characters against eps^(j alpha f) gives back the twisted bitrace.
CheckResult check_inversion(const VerifyOptions& opt);
// verify_poset_theorem for skew shapes <= 7 boxes, 0 <= k <= 3, generic box variables.
CheckResult check_poset_theorem(const VerifyOptions& opt);
// Orthogonality of the q = 1 tables of G(1,1,3), G(2,1,2), G(3,1,2) and G(2,2,2).
CheckResult check_group_orthogonality(const VerifyOptions& opt);
// The per-block constant equals [gamma]/gamma for 2 <= gamma <= 6 and every primitive root.
CheckResult check_c_constant(const VerifyOptions& opt);

// relations, mn-oracle, poset, clifford-oracle, specialize-orthogonality, all.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace cyclo_hecke
