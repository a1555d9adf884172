// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "sphspec/verify.hpp"

using namespace sphspec;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
  double limit_seconds;
};

const std::vector<Criterion> criteria = {
    {1, "S^3 eigenvalue table", {"table1"}, 1},
    {2, "closed-form dimension and Casimir identities", {"dims", "casimir"}, 5},
    {3, "branching oracle equivalence", {"branching"}, 120},
    {4, "fixed-vector facts", {"gelfand"}, 60},
    {5, "harmonic oracle", {"oracle"}, 60},
    {6, "infinitesimal-character admissibility", {"infchar"}, 10},
    {7, "hyperboloid family consistency", {"hyperboloid"}, 120},
    {8, "Spin(8,1) enumeration", {"spin81"}, 1},
    {9, "range classification", {"range"}, 1},
    {10, "reducibility metadata", {"reducibility"}, 1},
};

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t total = 0, failures = 0;
    std::string first_failure;
    for (const auto& s : c.suites) {
      const VerifyReport r = run_suite(s);
      total += r.assertions.size();
      failures += r.failures();
      for (const auto& a : r.assertions)
        if (!a.pass && first_failure.empty())
          first_failure = a.name + ": expected [" + a.expected + "] got [" + a.actual + "]";
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = elapsed < c.limit_seconds;
    const bool pass = total > 0 && failures == 0 && in_time;
    if (!pass) ++failed;
    std::printf("criterion %2d %-46s %s  %zu assertions, %zu failed, %.3f s (limit %.0f s)\n", c.id, c.title,
                pass ? "PASS" : "FAIL", total, failures, elapsed, c.limit_seconds);
    if (!first_failure.empty()) std::printf("    first failure: %s\n", first_failure.c_str());
    if (!in_time) std::printf("    over the time limit\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
