// Release gate: runs every verification suite at desk level and holds each
// one to its wall-clock budget. Prints one line per criterion and exits
// nonzero when any line fails.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "ce/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  double budget_seconds;
};

// Budgets are fixed up front; a suite that passes late is still a failure.
const std::vector<Criterion> kCriteria{
    {1, "involutivity", 60.0},
    {2, "flip-census", 60.0},
    {3, "laurent-positivity", 300.0},
    {4, "separation", 120.0},
    {5, "snake-oracle", 120.0},
    {6, "tropical-geometric", 60.0},
    {7, "dilog", 120.0},
    {8, "compatibility", 60.0},
    {9, "quantum-fpoly", 180.0},
    {10, "ia-map", 300.0},
    {11, "id-map", 300.0},
    {12, "hyperbolic", 30.0},
};

} // namespace

int main(int argc, char** argv) {
  uint64_t seed = 42;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  std::printf("acceptance run: level=desk seed=%llu\n",
              static_cast<unsigned long long>(seed));
  std::fflush(stdout);

  auto results = ce::run_all_checks(ce::VerifyLevel::Desk, seed);
  std::map<std::string, ce::CheckResult> by_name;
  for (const auto& r : results) by_name[r.name] = r;

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    auto it = by_name.find(c.suite);
    bool found = it != by_name.end();
    bool pass = found && it->second.pass && it->second.seconds <= c.budget_seconds;
    if (!pass) ++failures;

    std::string note = !found ? "suite missing" : it->second.detail;
    if (found && it->second.pass && it->second.seconds > c.budget_seconds)
      note = "over budget; " + note;
    std::printf("[%s] %02d %-20s %7.1fs (budget %.0fs)  %s\n", pass ? "PASS" : "FAIL",
                c.number, c.suite, found ? it->second.seconds : 0.0, c.budget_seconds,
                note.c_str());
    std::fflush(stdout);
  }

  std::printf("%d/%d criteria passed\n", static_cast<int>(kCriteria.size()) - failures,
              static_cast<int>(kCriteria.size()));
  return failures == 0 ? 0 : 1;
}
