#pragma once
// Verification sweeps shared by the CLI, the acceptance runner and the Python
// module.  Each suite reports the number of checks and the failures found.
#include <functional>
#include <string>
#include <vector>

namespace sp3gk {

struct SuiteResult {
  std::string name;
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && checked > 0; }
  void fail(const std::string& what);
};

// Lowest rows lambda3 covered by the spread sweeps.
constexpr int kSweepLow3 = -1, kSweepHigh3 = 0;

// [E_pq, E_rs] = delta_qr E_ps - delta_sp E_rq on V_lambda, all 81 pairs.
SuiteResult suite_gl3(int max_spread);
// Equivariance of every injector i^lambda_dir.
SuiteResult suite_equivariance(int max_spread);
// project_e1 o inject_vec = -6 id in the e1 direction and 0 in the e2 direction.
SuiteResult suite_clebsch_constants();
// Closed formulas of the positive injectors equal the three-map composition.
SuiteResult suite_closed_composed(int max_spread);
// P E(1) = E(1) R for all sigma and all twelve directions.
SuiteResult suite_theorem_main(int max_spread);
// The printed P and R matrices stored in a JSON fixture equal the builders.
SuiteResult suite_specializations(const std::string& json_path);
// chi_oracle = chi over the parity-matching l-sweep eps-4 .. eps+6.
SuiteResult suite_chi_oracle();
// [kappa(E_pq), C_2i] = 0.
SuiteResult suite_k_invariance();
// Normal-ordered X, minors, D, C2, C4 and m3 agree with the listed forms mod [n,n].
SuiteResult suite_normal_order();
// Mechanical holonomic systems equal the printed systems.
SuiteResult suite_holonomic();
// |enumerate(lambda)| equals the Weyl dimension for random dominant lambda.
SuiteResult suite_dimension(int samples, unsigned seed, int lo = -10, int hi = 10);

struct SuiteInfo {
  std::string name;
  std::string description;
};
std::vector<SuiteInfo> suite_names();
// Runs a suite by name; "all" is not accepted here.
SuiteResult run_suite(const std::string& name, int max_spread, const std::string& data_path);

}  // namespace sp3gk
