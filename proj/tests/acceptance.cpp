// One pass/fail line per acceptance criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sp3gk/verify.hpp"

using namespace sp3gk;

namespace {

struct Criterion {
  int id;
  std::string what;
  std::function<std::vector<SuiteResult>()> run;
};

}  // namespace

int main() {
  const std::string data = std::string(SP3GK_TEST_DATA_DIR) + "/specializations.json";
  std::vector<Criterion> criteria = {
      {1, "gl(3) relations, lambda1-lambda3 <= 5", [] { return std::vector{suite_gl3(5)}; }},
      {2, "equivariance of all injectors, lambda1-lambda3 <= 4",
       [] { return std::vector{suite_equivariance(4)}; }},
      {3, "projector constants -6 and 0", [] { return std::vector{suite_clebsch_constants()}; }},
      {4, "closed formulas equal compositions, lambda1-lambda3 <= 4",
       [] { return std::vector{suite_closed_composed(4)}; }},
      {5, "P E(1) = E(1) R, all sigma and directions, lambda1-lambda3 <= 4",
       [] { return std::vector{suite_theorem_main(4)}; }},
      {6, "printed P and R specializations, l in -3..7",
       [&] { return std::vector{suite_specializations(data)}; }},
      {7, "eigenvalues equal contiguous-relation compositions",
       [] { return std::vector{suite_chi_oracle()}; }},
      {8, "[kappa(E_pq), C_2i] = 0", [] { return std::vector{suite_k_invariance()}; }},
      {9, "normal order modulo [n,n]", [] { return std::vector{suite_normal_order()}; }},
      {10, "holonomic systems equal the printed systems", [] { return std::vector{suite_holonomic()}; }},
      {11, "pattern count equals Weyl dimension, 200 random lambda",
       [] { return std::vector{suite_dimension(200, 20261016u)}; }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    long checks = 0;
    std::vector<std::string> notes;
    try {
      for (const auto& r : c.run()) {
        ok = ok && r.ok();
        checks += r.checked;
        for (const auto& f : r.failures) notes.push_back(f);
      }
    } catch (const std::exception& e) {
      ok = false;
      notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %2d: %s (%ld checks, %.1f s)\n", ok ? "PASS" : "FAIL", c.id,
                c.what.c_str(), checks, secs);
    for (const auto& n : notes) std::printf("         %s\n", n.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
