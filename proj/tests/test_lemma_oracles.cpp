#include <stdexcept>
#include <array>
#include <cmath>

#include "doctest.h"
#include "sidedisk/extremal.hpp"
#include "sidedisk/lemma_oracles.hpp"
#include "test_util.hpp"

using namespace sidedisk;

namespace {

constexpr double kPi = std::numbers::pi;
const Tolerance kTol;

// Reference 4-vertex square labeling: A, B, C, D marked around the circle.
const Angle kSqA{kPi / 2.0};
const Angle kSqB{0.0};
const Angle kSqC{1.5 * kPi};
const Angle kSqD{kPi};

std::array<Angle, 4> random_quadruple(std::uint64_t seed) {
  const GreatPolygon poly = random_polygon(4, seed);
  const auto& v = poly.vertex_angles();
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

TEST_CASE("quad_side_disks labels follow the vertices") {
  const QuadDisks q = quad_side_disks(kSqA, kSqB, kSqC, kSqD);
  // ab spans the first-quadrant arc, so its center sits at angle pi/4
  CHECK(q.ab.center_angle.value() == doctest::Approx(kPi / 4.0));
  CHECK(q.bc.center_angle.value() == doctest::Approx(1.75 * kPi));
  CHECK(q.cd.center_angle.value() == doctest::Approx(1.25 * kPi));
  CHECK(q.da.center_angle.value() == doctest::Approx(0.75 * kPi));
  // counterclockwise labeling of the same square
  const QuadDisks r = quad_side_disks(kSqD, kSqC, kSqB, kSqA);
  CHECK(r.ab.center_angle.value() == doctest::Approx(1.25 * kPi));
}

TEST_CASE("quad_side_disks rejects non-cyclic labelings") {
  CHECK_THROWS_AS(quad_side_disks(kSqA, kSqC, kSqB, kSqD),
                  std::invalid_argument);
  CHECK_THROWS_AS(quad_side_disks(Angle(0.0), Angle(1e-9), Angle(1.0),
                                  Angle(2.0)),
                  std::invalid_argument);
}

TEST_CASE("corner points of the square") {
  const CornerPoints cp = corner_points(kSqA, kSqB, kSqC, kSqD);
  const double a = std::sqrt(2.0) - 1.0;
  CHECK(cp.X.x == doctest::Approx(-a).epsilon(1e-12));
  CHECK(std::fabs(cp.X.y) < 1e-12);
  // Y, Z, T are images of X under successive 90 degree rotations
  CHECK(cp.Y.x == doctest::Approx(0.0));
  CHECK(cp.Y.y == doctest::Approx(-a).epsilon(1e-12));
  CHECK(cp.Z.x == doctest::Approx(a).epsilon(1e-12));
  CHECK(std::fabs(cp.Z.y) < 1e-12);
  CHECK(cp.T.x == doctest::Approx(0.0));
  CHECK(cp.T.y == doctest::Approx(a).epsilon(1e-12));
  CHECK(std::fabs(cp.E.x) < 1e-12);
  CHECK(std::fabs(cp.E.y) < 1e-12);
}

TEST_CASE("E is the midpoint of both diagonals") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    const auto [a, b, c, d] = random_quadruple(rng());
    const CornerPoints cp = corner_points(a, b, c, d);
    const Point mid_xz = 0.5 * (cp.X + cp.Z);
    const Point mid_yt = 0.5 * (cp.Y + cp.T);
    CHECK(distance(cp.E, mid_xz) < kTol.eps_geom);
    CHECK(distance(cp.E, mid_yt) < kTol.eps_geom);
  }
}

TEST_CASE("corner_points commutes with rotation") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    const auto [a, b, c, d] = random_quadruple(rng());
    const double phi = test::uniform_angle(rng);
    const CornerPoints base = corner_points(a, b, c, d);
    const CornerPoints moved =
        corner_points(Angle(a.value() + phi), Angle(b.value() + phi),
                      Angle(c.value() + phi), Angle(d.value() + phi));
    const auto rotate = [&](Point p) -> Point {
      return {p.x * std::cos(phi) - p.y * std::sin(phi),
              p.x * std::sin(phi) + p.y * std::cos(phi)};
    };
    CHECK(distance(moved.X, rotate(base.X)) < 1e-12);
    CHECK(distance(moved.Y, rotate(base.Y)) < 1e-12);
    CHECK(distance(moved.Z, rotate(base.Z)) < 1e-12);
    CHECK(distance(moved.T, rotate(base.T)) < 1e-12);
    CHECK(distance(moved.E, rotate(base.E)) < 1e-12);
  }
}

TEST_CASE("lemma2a holds on the square and random quadruples") {
  const CornerPoints cp = corner_points(kSqA, kSqB, kSqC, kSqD);
  const QuadDisks q = quad_side_disks(kSqA, kSqB, kSqC, kSqD);
  const OracleReport square = lemma2a_check(cp, q, kTol);
  CHECK(square.failures == 0);
  CHECK(square.worst_residual > 0.0);

  std::mt19937_64 rng(91);
  for (int iter = 0; iter < 100; ++iter) {
    const auto [a, b, c, d] = random_quadruple(rng());
    const OracleReport r =
        lemma2a_check(corner_points(a, b, c, d), quad_side_disks(a, b, c, d),
                      kTol);
    CHECK(r.failures == 0);
  }
}

TEST_CASE("lemma2a failure path") {
  const QuadDisks q = quad_side_disks(kSqA, kSqB, kSqC, kSqD);
  CornerPoints bad = corner_points(kSqA, kSqB, kSqC, kSqD);
  bad.X = q.ab.center;  // deep inside the ab disk
  const OracleReport r = lemma2a_check(bad, q, kTol);
  CHECK(r.failures > 0);
  CHECK(r.counterexample.has_value());
}

TEST_CASE("lemma2b: XYZT is a rectangle, corners concyclic") {
  const CornerPoints cp = corner_points(kSqA, kSqB, kSqC, kSqD);
  const OracleReport square = lemma2b_rectangle_check(cp, kTol);
  CHECK(square.failures == 0);
  // the square case is itself a square of half-diagonal sqrt(2) - 1
  CHECK(distance(cp.E, cp.X) ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));

  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    const auto [a, b, c, d] = random_quadruple(rng());
    const OracleReport r =
        lemma2b_rectangle_check(corner_points(a, b, c, d), kTol);
    CHECK(r.failures == 0);
    CHECK(r.worst_residual < 1e-9);
  }
}

TEST_CASE("lemma2b degenerate corners raise") {
  CornerPoints synthetic;
  synthetic.X = {0.0, 0.0};
  synthetic.Y = {1.0, 1.0};
  synthetic.Z = {2.0, 2.0};
  synthetic.T = {0.0, 1.0};
  synthetic.E = {1.0, 1.0};
  CHECK_THROWS_AS(lemma2b_rectangle_check(synthetic, kTol), std::domain_error);
}

TEST_CASE("corner points are the four incenters") {
  const CornerPoints cp = corner_points(kSqA, kSqB, kSqC, kSqD);
  const OracleReport square =
      incenter_coincidence_check(kSqA, kSqB, kSqC, kSqD, cp, kTol);
  CHECK(square.failures == 0);
  CHECK(square.worst_residual < 1e-12);

  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 100; ++iter) {
    const auto [a, b, c, d] = random_quadruple(rng());
    const OracleReport r = incenter_coincidence_check(
        a, b, c, d, corner_points(a, b, c, d), kTol);
    CHECK(r.failures == 0);
  }
  // corners from a different quadruple must not match
  const auto [a2, b2, c2, d2] = random_quadruple(1234);
  const OracleReport mismatch =
      incenter_coincidence_check(a2, b2, c2, d2, cp, kTol);
  CHECK(mismatch.failures > 0);
}

TEST_CASE("center-corner-vertex collinearity") {
  const CornerPoints cp = corner_points(kSqA, kSqB, kSqC, kSqD);
  CHECK(collinearity_check(kSqA, kSqB, kSqC, kSqD, cp, kTol).failures == 0);

  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 100; ++iter) {
    const auto [a, b, c, d] = random_quadruple(rng());
    const OracleReport r =
        collinearity_check(a, b, c, d, corner_points(a, b, c, d), kTol);
    CHECK(r.failures == 0);
  }
  // replacing X by a generic interior point breaks the alignment
  CornerPoints off = corner_points(Angle(0.1), Angle(1.9), Angle(3.8),
                                   Angle(5.0));
  off.X = off.E;
  CHECK(collinearity_check(Angle(0.1), Angle(1.9), Angle(3.8), Angle(5.0),
                           off, kTol)
            .failures > 0);
}

TEST_CASE("step1: a disjoint opposite pair always exists") {
  const OracleReport square = step1_check(kSqA, kSqB, kSqC, kSqD, kTol);
  CHECK(square.failures == 0);
  // both opposite pairs of the square are disjoint
  const QuadDisks q = quad_side_disks(kSqA, kSqB, kSqC, kSqD);
  CHECK(disks_intersect(q.ab, q.cd, kTol).kind == RelationKind::Disjoint);
  CHECK(disks_intersect(q.bc, q.da, kTol).kind == RelationKind::Disjoint);

  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 200; ++iter) {
    const auto [a, b, c, d] = random_quadruple(rng());
    CHECK(step1_check(a, b, c, d, kTol).failures == 0);
  }
  // stability spot check: near-square perturbed by 1e-3
  CHECK(step1_check(Angle(kPi / 2.0 + 1e-3), Angle(1e-3), Angle(1.5 * kPi),
                    Angle(kPi - 1e-3), kTol)
            .failures == 0);
}

TEST_CASE("step2 separation") {
  CHECK(step2_check(GreatPolygon::regular(6), kTol).failures == 0);

  const auto tri = triangle_config(7);
  const auto g = intersection_graph(tri.poly, kTol);
  CHECK_FALSE(g.red_diagonals.empty());  // nontrivial red pairs present
  CHECK(step2_check(tri.poly, kTol).failures == 0);

  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 100; ++iter) {
    CHECK(step2_check(random_polygon(8, rng()), kTol).failures == 0);
  }
  CHECK_THROWS_AS(step2_check(GreatPolygon::regular(3), kTol),
                  std::invalid_argument);
}

TEST_CASE("lemma1 containment sampling") {
  const OracleReport half =
      lemma1_check(Angle(0.0), Angle(kPi), Angle(kPi / 2.0), 10000, 5, kTol);
  CHECK(half.failures == 0);
  CHECK(half.worst_residual < 0.0);

  // tiny inner disk, clearly nested
  const OracleReport tiny =
      lemma1_check(Angle(0.0), Angle(kPi), Angle(0.01), 10000, 6, kTol);
  CHECK(tiny.failures == 0);

  CHECK_THROWS_AS(lemma1_check(Angle(0.0), Angle(kPi), Angle(kPi), 10, 1, kTol),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      lemma1_check(Angle(0.0), Angle(kPi), Angle(4.0), 10, 1, kTol),
      std::invalid_argument);
  CHECK_THROWS_AS(
      lemma1_check(Angle(0.0), Angle(kPi), Angle(1.0), 0, 1, kTol),
      std::invalid_argument);
}

TEST_CASE("lemma1 is deterministic for a fixed seed") {
  const OracleReport r1 =
      lemma1_check(Angle(0.3), Angle(4.0), Angle(2.0), 2000, 42, kTol);
  const OracleReport r2 =
      lemma1_check(Angle(0.3), Angle(4.0), Angle(2.0), 2000, 42, kTol);
  CHECK(r1.worst_residual == r2.worst_residual);
  CHECK(r1.failures == r2.failures);
}
