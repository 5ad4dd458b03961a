#include "sidedisk/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sidedisk {

Relation disks_intersect(const SideDisk& a, const SideDisk& b,
                         const Tolerance& tol) {
  (void)tol;  // classification is by margin sign; tol belongs to callers
  const double delta = circular_distance(a.center_angle, b.center_angle);
  const double margin = std::sin(0.5 * delta) -
                        (std::sin(0.25 * a.arc_length) +
                         std::sin(0.25 * b.arc_length));
  Relation rel;
  rel.margin = margin;
  rel.kind = margin > 0.0 ? RelationKind::Disjoint : RelationKind::Intersecting;
  return rel;
}

namespace {

bool cyclically_adjacent(int i, int j, int n) {
  // expects i < j
  return j - i == 1 || (i == 0 && j == n - 1);
}

}  // namespace

IntersectionGraph intersection_graph(const GreatPolygon& poly,
                                     const Tolerance& tol) {
  const int n = poly.size();
  if (n < 3) {
    throw std::invalid_argument("intersection graph requires n >= 3");
  }
  const auto disks = side_disks(poly);
  IntersectionGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (cyclically_adjacent(i, j, n)) {
        g.neighbour_edges.push_back({i, j});
        continue;
      }
      const Relation rel = disks_intersect(disks[static_cast<std::size_t>(i)],
                                           disks[static_cast<std::size_t>(j)],
                                           tol);
      if (rel.kind == RelationKind::Intersecting) {
        g.red_diagonals.push_back({i, j});
      } else {
        g.blue_diagonals.push_back({i, j});
      }
    }
  }
  return g;
}

int disjoint_pair_count(const IntersectionGraph& graph) {
  return static_cast<int>(graph.blue_diagonals.size());
}

std::pair<long, long> theorem_bounds(int n) {
  if (n < 3) {
    throw std::invalid_argument("theorem bounds require n >= 3");
  }
  const long ln = n;
  return {(ln - 2) * (ln - 3) / 2, ln * (ln - 3) / 2};
}

bool chords_cross(int i, int j, int k, int l, int n) {
  const int idx[4] = {i, j, k, l};
  for (int a : idx) {
    if (a < 0 || a >= n) {
      throw std::invalid_argument("chord index out of range");
    }
  }
  if (i == j || k == l || i == k || i == l || j == k || j == l) {
    throw std::invalid_argument("chords must have four distinct endpoints");
  }
  const auto between = [&](int from, int to, int x) {
    const int span = ((to - from) % n + n) % n;
    const int off = ((x - from) % n + n) % n;
    return 0 < off && off < span;
  };
  return between(i, j, k) != between(i, j, l);
}

bool red_noncrossing(const IntersectionGraph& graph) {
  const auto& red = graph.red_diagonals;
  for (std::size_t a = 0; a < red.size(); ++a) {
    for (std::size_t b = a + 1; b < red.size(); ++b) {
      if (red[a].first == red[b].first || red[a].first == red[b].second ||
          red[a].second == red[b].first || red[a].second == red[b].second) {
        continue;  // shared endpoint, never a crossing
      }
      if (chords_cross(red[a].first, red[a].second, red[b].first,
                       red[b].second, graph.n)) {
        return false;
      }
    }
  }
  return true;
}

AnalysisReport analyze(const GreatPolygon& poly, const Tolerance& tol) {
  AnalysisReport report;
  report.n = poly.size();
  report.graph = intersection_graph(poly, tol);
  report.d = disjoint_pair_count(report.graph);
  const auto [lo, hi] = theorem_bounds(report.n);
  report.lower_bound = lo;
  report.upper_bound = hi;
  report.bounds_ok = lo <= report.d && report.d <= hi;
  report.noncrossing_ok = red_noncrossing(report.graph);

  const auto disks = side_disks(poly);
  double min_abs = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const Relation rel = disks_intersect(disks[i], disks[j], tol);
      min_abs = std::min(min_abs, std::fabs(rel.margin));
    }
  }
  report.min_abs_margin = min_abs;
  return report;
}

}  // namespace sidedisk
