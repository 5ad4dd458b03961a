#include "sidedisk/extremal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sidedisk {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

GreatPolygon build_triangle_polygon(int n, double s) {
  std::vector<double> raw;
  raw.reserve(static_cast<std::size_t>(n));
  raw.push_back(0.0);
  const double big = kTwoPi - (n - 1) * s;
  for (int k = 0; k < n - 1; ++k) raw.push_back(big + k * s);
  return GreatPolygon::from_angles(raw, std::min(kDefaultMinGap, s / 2.0));
}

// Disk 0 (the big arc) must intersect all others; small disks intersect
// iff cyclically adjacent.
bool triangle_pattern_holds(const GreatPolygon& poly, const Tolerance& tol) {
  const int n = poly.size();
  const auto disks = side_disks(poly);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool adjacent = j - i == 1 || (i == 0 && j == n - 1);
      const Relation rel = disks_intersect(disks[static_cast<std::size_t>(i)],
                                           disks[static_cast<std::size_t>(j)],
                                           tol);
      const bool expect_intersect = i == 0 || adjacent;
      if ((rel.kind == RelationKind::Intersecting) != expect_intersect) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

ExtremalConfig star(int n) {
  if (n < 3) {
    throw std::invalid_argument("star configuration requires n >= 3");
  }
  return {GreatPolygon::regular(n), static_cast<long>(n) * (n - 3) / 2};
}

ExtremalConfig triangle_config(int n, std::optional<double> s,
                               const Tolerance& tol) {
  if (n < 4) {
    throw std::invalid_argument("triangle configuration requires n >= 4");
  }
  const long expected = static_cast<long>(n - 2) * (n - 3) / 2;
  if (s) {
    if (!(*s > 0.0 && (n - 1) * *s < kTwoPi)) {
      throw std::invalid_argument("triangle configuration needs 0 < (n-1)s < 2*pi");
    }
    GreatPolygon poly = build_triangle_polygon(n, *s);
    if (!triangle_pattern_holds(poly, tol) ||
        analyze(poly, tol).d != expected) {
      throw std::runtime_error("triangle pattern validation failed for given s");
    }
    return {std::move(poly), expected};
  }
  double cur = std::numbers::pi / (static_cast<double>(n) * n);
  for (int iter = 0; iter < 64; ++iter, cur /= 2.0) {
    GreatPolygon poly = build_triangle_polygon(n, cur);
    if (triangle_pattern_holds(poly, tol) && analyze(poly, tol).d == expected) {
      return {std::move(poly), expected};
    }
  }
  throw std::runtime_error("triangle pattern validation failed after 64 halvings");
}

GreatPolygon random_polygon(int n, std::uint64_t seed, double min_gap) {
  if (n < 2) {
    throw std::invalid_argument("random polygon requires n >= 2");
  }
  if (!(min_gap > 0.0 && min_gap * n < kTwoPi)) {
    throw std::invalid_argument("infeasible min_gap for this n");
  }
  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<double> raw(static_cast<std::size_t>(n));
    for (double& a : raw) a = uniform01(rng) * kTwoPi;
    try {
      return GreatPolygon::from_angles(raw, min_gap);
    } catch (const std::invalid_argument&) {
      // gap constraint violated, resample
    }
  }
  throw std::runtime_error("resample budget exceeded in random_polygon");
}

std::uint64_t trial_seed(std::uint64_t master, int n, int trial) {
  std::uint64_t s = splitmix64(master);
  s = splitmix64(s ^ (static_cast<std::uint64_t>(n) * 0xD1B54A32D192ED03ULL));
  s = splitmix64(s ^ (static_cast<std::uint64_t>(trial) * 0x8CB92BA72F3D8DD7ULL));
  return s;
}

namespace {

// Oracle bundle over one quadruple of polygon vertices, in ascending order.
long quad_oracle_failures(Angle a, Angle b, Angle c, Angle d,
                          const Tolerance& tol) {
  const CornerPoints corners = corner_points(a, b, c, d);
  const QuadDisks disks = quad_side_disks(a, b, c, d);
  long failures = 0;
  failures += step1_check(a, b, c, d, tol).failures;
  failures += lemma2a_check(corners, disks, tol).failures;
  failures += lemma2b_rectangle_check(corners, tol).failures;
  failures += incenter_coincidence_check(a, b, c, d, corners, tol).failures;
  failures += collinearity_check(a, b, c, d, corners, tol).failures;
  return failures;
}

}  // namespace

HarnessReport harness(int n_min, int n_max, int trials_per_n,
                      std::uint64_t seed, const Tolerance& tol) {
  if (!(3 <= n_min && n_min <= n_max)) {
    throw std::invalid_argument("harness requires 3 <= n_min <= n_max");
  }
  if (trials_per_n < 1) {
    throw std::invalid_argument("harness requires trials_per_n >= 1");
  }
  HarnessReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  report.trials_per_n = trials_per_n;
  report.seed = seed;

  for (int n = n_min; n <= n_max; ++n) {
    HarnessReport::PerN stats;
    stats.n = n;
    for (int trial = 0; trial < trials_per_n; ++trial) {
      ++stats.trials;
      const std::uint64_t sub = trial_seed(seed, n, trial);
      const GreatPolygon poly = random_polygon(n, sub);
      const AnalysisReport analysis = analyze(poly, tol);
      if (analysis.min_abs_margin <= tol.eps_geom) {
        ++stats.skips;
        continue;
      }
      bool ok = true;
      if (!analysis.bounds_ok) {
        ok = false;
        ++report.bounds_violations;
        if (!report.first_bounds) {
          report.first_bounds = HarnessCounterexample{
              n, poly.angles_radians(), "d outside the theorem bounds"};
        }
      }
      bool noncrossing = analysis.noncrossing_ok;
      if (n >= 4 && step2_check(poly, tol).failures > 0) {
        noncrossing = false;
      }
      if (!noncrossing) {
        ok = false;
        ++report.noncrossing_violations;
        if (!report.first_noncrossing) {
          report.first_noncrossing = HarnessCounterexample{
              n, poly.angles_radians(), "red crossing or separation failure"};
        }
      }
      if (n >= 4) {
        // sample one quadruple of vertices; the full vertex set when n == 4
        std::array<int, 4> pick{0, 1, 2, 3};
        if (n > 4) {
          std::mt19937_64 qrng(splitmix64(sub ^ 0xA0761D6478BD642FULL));
          std::vector<int> idx(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
          for (int i = 0; i < 4; ++i) {
            const int j = i + static_cast<int>(qrng() % static_cast<std::uint64_t>(n - i));
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
          }
          pick = {idx[0], idx[1], idx[2], idx[3]};
          std::sort(pick.begin(), pick.end());
        }
        const auto& v = poly.vertex_angles();
        const long failures = quad_oracle_failures(
            v[static_cast<std::size_t>(pick[0])], v[static_cast<std::size_t>(pick[1])],
            v[static_cast<std::size_t>(pick[2])], v[static_cast<std::size_t>(pick[3])],
            tol);
        if (failures > 0) {
          ok = false;
          report.lemma_failures += failures;
          if (!report.first_lemma) {
            report.first_lemma = HarnessCounterexample{
                n, poly.angles_radians(), "4-vertex lemma oracle failure"};
          }
        }
      }
      if (ok) {
        ++stats.passes;
      } else {
        ++stats.violations;
      }
    }
    report.total_trials += stats.trials;
    report.total_passes += stats.passes;
    report.total_skips += stats.skips;
    report.per_n.push_back(stats);
  }
  return report;
}

}  // namespace sidedisk
