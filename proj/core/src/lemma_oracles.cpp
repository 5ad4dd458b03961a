#include "sidedisk/lemma_oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace sidedisk {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Of the two boundary intersections of the given disks, the one farther
// from the shared polygon vertex.
Point second_intersection(const SideDisk& d1, const SideDisk& d2,
                          Point shared_vertex, const Tolerance& tol) {
  const auto pts = circle_circle_intersections(d1.center, d1.radius, d2.center,
                                               d2.radius, tol);
  if (pts.size() < 2) {
    throw std::runtime_error(
        "numeric breakdown: consecutive side disks yield fewer than two "
        "boundary intersections");
  }
  const Point far = distance(pts[0], shared_vertex) >=
                            distance(pts[1], shared_vertex)
                        ? pts[0]
                        : pts[1];
  if (distance(far, shared_vertex) <= tol.eps_geom) {
    throw std::runtime_error(
        "numeric breakdown: both boundary intersections coincide with the "
        "shared vertex");
  }
  return far;
}

std::vector<double> quad_angles(Angle a, Angle b, Angle c, Angle d) {
  return {a.value(), b.value(), c.value(), d.value()};
}

double point_to_line_distance(Point p, Point a, Point b) {
  return std::fabs(cross(b - a, p - a)) / norm(b - a);
}

}  // namespace

QuadDisks quad_side_disks(Angle a, Angle b, Angle c, Angle d, double min_gap) {
  const auto poly = GreatPolygon::from_angles(quad_angles(a, b, c, d), min_gap);
  const auto& v = poly.vertex_angles();
  const auto pos = [&](Angle x) {
    for (int i = 0; i < 4; ++i) {
      if (v[static_cast<std::size_t>(i)].value() == x.value()) return i;
    }
    throw std::logic_error("vertex lookup failed");
  };
  const int pa = pos(a), pb = pos(b), pc = pos(c), pd = pos(d);
  const bool ccw = pb == (pa + 1) % 4 && pc == (pa + 2) % 4 && pd == (pa + 3) % 4;
  const bool cw = pb == (pa + 3) % 4 && pc == (pa + 2) % 4 && pd == (pa + 1) % 4;
  if (!ccw && !cw) {
    throw std::invalid_argument("A, B, C, D must be in cyclic order");
  }
  const auto disks = side_disks(poly);
  // disk k spans sorted vertices (k, k+1); select by endpoint pair
  const auto disk_for = [&](int p, int q) -> const SideDisk& {
    const int k = (q == (p + 1) % 4) ? p : q;
    return disks[static_cast<std::size_t>(k)];
  };
  return QuadDisks{disk_for(pa, pb), disk_for(pb, pc), disk_for(pc, pd),
                   disk_for(pd, pa)};
}

CornerPoints corner_points(Angle a, Angle b, Angle c, Angle d, double min_gap) {
  const Tolerance tol;
  const QuadDisks q = quad_side_disks(a, b, c, d, min_gap);
  CornerPoints cp;
  cp.X = second_intersection(q.da, q.cd, point_on_circle(d), tol);
  cp.Y = second_intersection(q.cd, q.bc, point_on_circle(c), tol);
  cp.Z = second_intersection(q.bc, q.ab, point_on_circle(b), tol);
  cp.T = second_intersection(q.ab, q.da, point_on_circle(a), tol);
  // The diagonals of XYZT bisect each other, so their intersection is the
  // vertex centroid. Thin quadruples make the direct 2x2 line solve lose
  // precision; the centroid form does not.
  cp.E = 0.25 * (cp.X + cp.Y + cp.Z + cp.T);
  return cp;
}

OracleReport lemma1_check(Angle a, Angle b, Angle c, int samples,
                          std::uint64_t seed, const Tolerance& tol) {
  if (samples < 1) {
    throw std::invalid_argument("lemma1_check needs samples >= 1");
  }
  const double arc_ab = ccw_arc(a, b);
  const double arc_ac = ccw_arc(a, c);
  if (!(arc_ac > 0.0 && arc_ac < arc_ab)) {
    throw std::invalid_argument(
        "c must lie strictly inside the counterclockwise arc a -> b");
  }
  const Point o1 = point_on_circle(Angle(a.value() + 0.5 * arc_ab));
  const double r1 = side_disk_radius(arc_ab);
  const Point o2 = point_on_circle(Angle(a.value() + 0.5 * arc_ac));
  const double r2 = side_disk_radius(arc_ac);
  const Point vertex_a = point_on_circle(a);

  OracleReport report;
  report.claim = "lemma1_containment";
  report.trials = samples;
  report.worst_residual = -std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  const long max_draws = static_cast<long>(samples) * 1000;
  long accepted = 0;
  for (long draw = 0; draw < max_draws && accepted < samples; ++draw) {
    const Point p{o2.x + (2.0 * uniform01(rng) - 1.0) * r2,
                  o2.y + (2.0 * uniform01(rng) - 1.0) * r2};
    if (distance(p, o2) > r2 || norm(p) > 1.0) continue;  // outside the lens
    ++accepted;
    if (distance(p, vertex_a) <= 10.0 * tol.eps_geom) continue;
    const double residual = distance(p, o1) - r1;  // negative means interior
    report.worst_residual = std::max(report.worst_residual, residual);
    if (!(residual < -tol.eps_strict)) {
      ++report.failures;
      if (!report.counterexample) {
        report.counterexample = Counterexample{
            {a.value(), b.value(), c.value()},
            "sampled lens point not strictly inside the outer side disk"};
      }
    }
  }
  if (accepted < samples) {
    throw std::runtime_error("rejection sampling budget exhausted");
  }
  return report;
}

OracleReport lemma2a_check(const CornerPoints& corners, const QuadDisks& disks,
                           const Tolerance& tol) {
  OracleReport report;
  report.claim = "lemma2a_nonmembership";
  report.trials = 1;
  struct Claim {
    Point p;
    const SideDisk* disk;
    const char* name;
  };
  const Claim claims[8] = {
      {corners.X, &disks.ab, "X vs ab"}, {corners.Y, &disks.ab, "Y vs ab"},
      {corners.Y, &disks.da, "Y vs da"}, {corners.Z, &disks.da, "Z vs da"},
      {corners.Z, &disks.cd, "Z vs cd"}, {corners.T, &disks.cd, "T vs cd"},
      {corners.X, &disks.bc, "X vs bc"}, {corners.T, &disks.bc, "T vs bc"},
  };
  double worst_margin = std::numeric_limits<double>::infinity();
  for (const Claim& c : claims) {
    const double margin = distance(c.p, c.disk->center) - c.disk->radius;
    worst_margin = std::min(worst_margin, margin);
    if (margin < -tol.eps_geom) {
      ++report.failures;
      if (!report.counterexample) {
        report.counterexample =
            Counterexample{{}, std::string("corner inside disk: ") + c.name};
      }
    }
  }
  report.worst_residual = worst_margin;
  return report;
}

OracleReport lemma2b_rectangle_check(const CornerPoints& corners,
                                     const Tolerance& tol) {
  OracleReport report;
  report.claim = "lemma2b_rectangle";
  report.trials = 1;
  const Point mid_xz = 0.5 * (corners.X + corners.Z);
  const Point mid_yt = 0.5 * (corners.Y + corners.T);
  const double mid_dist = distance(mid_xz, mid_yt);
  const double diag_diff = std::fabs(distance(corners.X, corners.Z) -
                                     distance(corners.Y, corners.T));
  const double circ_res =
      concyclicity_residual(corners.X, corners.Y, corners.Z, corners.T);
  report.worst_residual = std::max({mid_dist, diag_diff, circ_res});
  if (mid_dist > tol.eps_geom || diag_diff > tol.eps_geom ||
      circ_res > tol.eps_geom) {
    ++report.failures;
    report.counterexample =
        Counterexample{{}, "XYZT fails the rectangle/concyclicity identities"};
  }
  return report;
}

OracleReport incenter_coincidence_check(Angle a, Angle b, Angle c, Angle d,
                                        const CornerPoints& corners,
                                        const Tolerance& tol) {
  OracleReport report;
  report.claim = "lemma2_incenters";
  report.trials = 1;
  const Point pa = point_on_circle(a);
  const Point pb = point_on_circle(b);
  const Point pc = point_on_circle(c);
  const Point pd = point_on_circle(d);
  const double dists[4] = {
      distance(corners.X, incenter(pa, pd, pc)),
      distance(corners.Y, incenter(pd, pc, pb)),
      distance(corners.Z, incenter(pc, pb, pa)),
      distance(corners.T, incenter(pb, pa, pd)),
  };
  report.worst_residual = *std::max_element(std::begin(dists), std::end(dists));
  if (report.worst_residual > tol.eps_geom) {
    ++report.failures;
    report.counterexample = Counterexample{
        quad_angles(a, b, c, d), "corner point does not match its incenter"};
  }
  return report;
}

OracleReport collinearity_check(Angle a, Angle b, Angle c, Angle d,
                                const CornerPoints& corners,
                                const Tolerance& tol) {
  OracleReport report;
  report.claim = "lemma2_collinearity";
  report.trials = 1;
  const QuadDisks q = quad_side_disks(a, b, c, d);
  const double res_fxa =
      collinearity_residual(q.cd.center, corners.X, point_on_circle(a));
  const double res_wxc =
      collinearity_residual(q.da.center, corners.X, point_on_circle(c));
  report.worst_residual = std::max(res_fxa, res_wxc);
  if (report.worst_residual > tol.eps_geom) {
    ++report.failures;
    report.counterexample = Counterexample{
        quad_angles(a, b, c, d), "F,X,A or W,X,C not collinear"};
  }
  return report;
}

OracleReport step1_check(Angle a, Angle b, Angle c, Angle d,
                         const Tolerance& tol) {
  OracleReport report;
  report.claim = "step1_disjoint_opposite_pair";
  report.trials = 1;
  const QuadDisks q = quad_side_disks(a, b, c, d);
  const Relation opp1 = disks_intersect(q.ab, q.cd, tol);
  const Relation opp2 = disks_intersect(q.bc, q.da, tol);
  if (opp1.kind != RelationKind::Disjoint &&
      opp2.kind != RelationKind::Disjoint) {
    ++report.failures;
    report.counterexample = Counterexample{
        quad_angles(a, b, c, d), "no disjoint opposite side-disk pair"};
  }
  const CornerPoints corners = corner_points(a, b, c, d);
  // centers per the 4-vertex labeling: H = ab, G = bc, F = cd, W = da
  const double res_fh =
      point_to_line_distance(corners.E, q.cd.center, q.ab.center);
  const double res_gw =
      point_to_line_distance(corners.E, q.bc.center, q.da.center);
  report.worst_residual = std::max(res_fh, res_gw);
  if (report.worst_residual > tol.eps_geom) {
    ++report.failures;
    if (!report.counterexample) {
      report.counterexample = Counterexample{
          quad_angles(a, b, c, d), "E not on the opposite-center lines"};
    }
  }
  return report;
}

OracleReport step2_check(const GreatPolygon& poly, const Tolerance& tol) {
  const int n = poly.size();
  if (n < 4) {
    throw std::invalid_argument("step2_check requires n >= 4");
  }
  const auto disks = side_disks(poly);
  std::vector<std::vector<Relation>> rel(
      static_cast<std::size_t>(n), std::vector<Relation>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
              disks_intersect(disks[static_cast<std::size_t>(i)],
                              disks[static_cast<std::size_t>(j)], tol);
    }
  }
  OracleReport report;
  report.claim = "step2_separation";
  report.worst_residual = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].kind !=
          RelationKind::Intersecting) {
        continue;
      }
      // disks strictly between i -> j and j -> i in cyclic order
      for (int k = (i + 1) % n; k != j; k = (k + 1) % n) {
        for (int l = (j + 1) % n; l != i; l = (l + 1) % n) {
          ++report.trials;
          const Relation& r =
              rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
          report.worst_residual = std::min(report.worst_residual, r.margin);
          if (r.kind != RelationKind::Disjoint) {
            ++report.failures;
            if (!report.counterexample) {
              report.counterexample = Counterexample{
                  poly.angles_radians(),
                  "separated families share an intersecting pair"};
            }
          }
        }
      }
    }
  }
  if (report.trials == 0) {
    report.worst_residual = 0.0;  // vacuous
  }
  return report;
}

}  // namespace sidedisk
