#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ce/lamination.hpp"
#include "ce/polygon.hpp"

namespace ce {

// Self-check suites behind the `verify` CLI subcommand. Each suite draws its
// own RNG stream from (seed, suite name), so results do not depend on how
// the suites are scheduled across threads.

enum class VerifyLevel { Smoke, Desk };

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

CheckResult check_compatibility(VerifyLevel level, uint64_t seed);
CheckResult check_dilog(VerifyLevel level, uint64_t seed);
CheckResult check_flip_census(VerifyLevel level, uint64_t seed);
CheckResult check_hyperbolic(VerifyLevel level, uint64_t seed);
CheckResult check_ia_map(VerifyLevel level, uint64_t seed);
CheckResult check_id_map(VerifyLevel level, uint64_t seed);
CheckResult check_involutivity(VerifyLevel level, uint64_t seed);
CheckResult check_laurent_positivity(VerifyLevel level, uint64_t seed);
CheckResult check_quantum_fpoly(VerifyLevel level, uint64_t seed);
CheckResult check_separation(VerifyLevel level, uint64_t seed);
CheckResult check_snake_oracle(VerifyLevel level, uint64_t seed);
CheckResult check_tropical_geometric(VerifyLevel level, uint64_t seed);

// Runs every suite on a worker pool capped by the CE_THREADS environment
// variable (default: hardware concurrency). Results come back sorted by
// suite name. A suite that throws is reported as a failure, not a crash.
std::vector<CheckResult> run_all_checks(VerifyLevel level, uint64_t seed);

// Maximum relative residuals of the floating-point half-plane oracle over
// random decorated polygons: the exchange identity on vertex quadruples,
// horocycle independence of the cross-ratio coordinates, and the flip rule
// for length ratios of a doubled decoration.
struct HyperbolicResiduals {
  double ptolemy = 0.0;
  double cross_ratio = 0.0;
  double flip = 0.0;
  int trials = 0;
};

HyperbolicResiduals hyperbolic_residuals(int trials, uint64_t seed);

// Generators shared by the suites, the CLI, and the tests.
IntMat random_seed_matrix(std::mt19937_64& rng, int m, int bound);
Triangulation random_triangulation(std::mt19937_64& rng, int n);
DiskLamination random_lamination(std::mt19937_64& rng, int n, int max_curves);

} // namespace ce
