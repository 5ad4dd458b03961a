#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sidedisk/intersection.hpp"

namespace sidedisk {

/// Second boundary-intersection points of consecutive side-disk pairs of a
/// 4-vertex configuration, plus E, the intersection of diagonals XZ and YT.
struct CornerPoints {
  Point X, Y, Z, T, E;
};

struct Counterexample {
  std::vector<double> angles;  // the offending configuration, radians
  std::string detail;
};

struct OracleReport {
  std::string claim;
  long trials = 0;
  long failures = 0;
  double worst_residual = 0.0;
  std::optional<Counterexample> counterexample;
};

/// The four side disks of the quadruple A, B, C, D, keyed by vertex pair.
/// The labels must appear in cyclic order around the circle (either
/// orientation) with pairwise gaps at least min_gap.
struct QuadDisks {
  SideDisk ab, bc, cd, da;
};

QuadDisks quad_side_disks(Angle a, Angle b, Angle c, Angle d,
                          double min_gap = kDefaultMinGap);

// X = second intersection of the da/cd boundaries (the one != D), and
// analogously Y (cd, bc), Z (bc, ab), T (ab, da); E = XZ line meets YT line.
CornerPoints corner_points(Angle a, Angle b, Angle c, Angle d,
                           double min_gap = kDefaultMinGap);

// Nested containment: sample the lens (unit disk) ∩ ω2 and require every
// point outside a small exclusion zone around A to lie strictly inside ω1.
// Requires c strictly inside the counterclockwise arc a -> b.
OracleReport lemma1_check(Angle a, Angle b, Angle c, int samples,
                          std::uint64_t seed, const Tolerance& tol);

// Eight non-membership claims: X,Y outside ω_ab; Y,Z outside ω_da;
// Z,T outside ω_cd; X,T outside ω_bc.
OracleReport lemma2a_check(const CornerPoints& corners, const QuadDisks& disks,
                           const Tolerance& tol);

// XYZT is a rectangle: diagonals share a midpoint and have equal length;
// also checks that X, Y, Z, T are concyclic.
OracleReport lemma2b_rectangle_check(const CornerPoints& corners,
                                     const Tolerance& tol);

// X, Y, Z, T coincide with the incenters of triangles ADC, DCB, CBA, BAD.
OracleReport incenter_coincidence_check(Angle a, Angle b, Angle c, Angle d,
                                        const CornerPoints& corners,
                                        const Tolerance& tol);

// F (center of ω_cd), X, A are collinear; W (center of ω_da), X, C likewise.
OracleReport collinearity_check(Angle a, Angle b, Angle c, Angle d,
                                const CornerPoints& corners,
                                const Tolerance& tol);

// At least one opposite side-disk pair is disjoint, and E lies on both
// center lines FH and GW.
OracleReport step1_check(Angle a, Angle b, Angle c, Angle d,
                         const Tolerance& tol);

// For every intersecting pair (i, j), every disk strictly between i -> j
// is disjoint from every disk strictly between j -> i. Requires n >= 4.
OracleReport step2_check(const GreatPolygon& poly, const Tolerance& tol);

}  // namespace sidedisk
