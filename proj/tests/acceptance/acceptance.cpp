// One line per acceptance criterion; exit status 1 if any fails. All comparisons are exact.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <thread>

#include "cyclo_hecke/verify.hpp"

using namespace cyclo_hecke;

int main() {
  VerifyOptions opt;
  opt.scale = VerifyScale::full;
  opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  struct Criterion {
    const char* title;
    CheckResult (*run)(const VerifyOptions&);
  };
  const Criterion criteria[] = {
      {"relations, n <= 4, r <= 3 and r = 4, n = 3", check_relations},
      {"mn_character = trace_of, same range", check_mn_oracle},
      {"delta_shape_closed = delta_shape_bruteforce, skew shapes <= 6 boxes, r <= 3", check_delta_closed},
      {"bitrace_closed = twisted_bitrace on six H(r,p,n)", check_clifford_oracle},
      {"inversion round trip on the same tables", check_inversion},
      {"poset theorem, skew shapes <= 7 boxes, k <= 3", check_poset_theorem},
      {"group orthogonality, |G| = 6, 8, 18, 4", check_group_orthogonality},
      {"C constant = [gamma]/gamma, 2 <= gamma <= 6", check_c_constant},
  };
  bool all = true;
  int index = 1;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    CheckResult res = c.run(opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s: %s (%ld identities, %.1fs)%s%s\n", index++, res.ok ? "PASS" : "FAIL", c.title,
                res.checked, secs, res.ok ? "" : " ", res.detail.c_str());
    std::fflush(stdout);
    all = all && res.ok;
  }
  return all ? 0 : 1;
}
