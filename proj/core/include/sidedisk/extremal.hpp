#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sidedisk/lemma_oracles.hpp"

namespace sidedisk {

struct ExtremalConfig {
  GreatPolygon poly;
  long expected_d = 0;
};

// All arcs equal; attains the upper bound n(n-3)/2. Requires n >= 3.
ExtremalConfig star(int n);

// One big arc plus n-1 equal small arcs of length s; the big disk meets
// every other disk while small disks meet only their neighbours, attaining
// the lower bound (n-2)(n-3)/2. When s is omitted it starts at pi/n^2 and
// halves until the pattern validates. Requires n >= 4.
ExtremalConfig triangle_config(int n, std::optional<double> s = std::nullopt,
                               const Tolerance& tol = Tolerance{});

// n angles i.i.d. uniform on [0, 2*pi), resampled until every cyclic gap is
// at least min_gap. Deterministic for fixed (n, seed, min_gap).
GreatPolygon random_polygon(int n, std::uint64_t seed,
                            double min_gap = kDefaultMinGap);

// Per-trial sub-seed, splitmix64-mixed from (master, n, trial) so serial and
// parallel runs agree.
std::uint64_t trial_seed(std::uint64_t master, int n, int trial);

struct HarnessCounterexample {
  int n = 0;
  std::vector<double> angles;
  std::string detail;
};

struct HarnessReport {
  int n_min = 0, n_max = 0;
  int trials_per_n = 0;
  std::uint64_t seed = 0;

  struct PerN {
    int n = 0;
    long trials = 0;
    long passes = 0;
    long skips = 0;       // |min margin| within the tangency window
    long violations = 0;  // trials violating any category
  };
  std::vector<PerN> per_n;

  long total_trials = 0;
  long total_passes = 0;
  long total_skips = 0;
  long bounds_violations = 0;
  long noncrossing_violations = 0;
  long lemma_failures = 0;
  std::optional<HarnessCounterexample> first_bounds;
  std::optional<HarnessCounterexample> first_noncrossing;
  std::optional<HarnessCounterexample> first_lemma;
};

// Randomized verification: per (n, trial) generate a polygon, run the full
// analysis, the separation check and the 4-vertex lemma oracles on a
// sampled quadruple. Near-tangent trials are skipped, not failed.
HarnessReport harness(int n_min, int n_max, int trials_per_n,
                      std::uint64_t seed, const Tolerance& tol);

}  // namespace sidedisk
