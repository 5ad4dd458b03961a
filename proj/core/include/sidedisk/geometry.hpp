#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace sidedisk {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Direction on the unit circle, stored normalized to [0, 2*pi).
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians);
  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

/// Two-level tolerance: eps_geom classifies geometric predicates,
/// eps_strict guards internal self-consistency.
struct Tolerance {
  double eps_geom;
  double eps_strict;
  Tolerance(double geom = 1e-9, double strict = 1e-12);
};

Point point_on_circle(Angle theta);

// Counterclockwise arc length from `from` to `to`, in [0, 2*pi).
double ccw_arc(Angle from, Angle to);

// Shorter arc distance between two directions, in [0, pi].
double circular_distance(Angle a, Angle b);

// Chord subtended by the two directions: 2*sin(delta/2).
double chord_length(Angle a, Angle b);

// Common points of the two boundary circles: two when properly crossing,
// one within the tangency window, none otherwise.
// Throws std::invalid_argument on non-positive radii or coincident centers.
std::vector<Point> circle_circle_intersections(Point c1, double r1, Point c2,
                                               double r2,
                                               const Tolerance& tol);

// Weighted vertex average with weights equal to opposite side lengths.
// Throws std::domain_error on a degenerate (collinear) triangle.
Point incenter(Point a, Point b, Point c);

// Twice the signed triangle area, normalized so the value is meaningful at
// unit-circle scale regardless of segment lengths.
double collinearity_residual(Point p, Point q, Point r);

bool collinear(Point p, Point q, Point r, const Tolerance& tol);

// Throws std::domain_error on collinear input.
Point circumcenter(Point a, Point b, Point c);

// Worst leave-one-out circumcircle residual, relative to the circumradius.
// Symmetric in its four arguments.
double concyclicity_residual(Point p1, Point p2, Point p3, Point p4);

bool concyclic(Point p1, Point p2, Point p3, Point p4, const Tolerance& tol);

}  // namespace sidedisk
