#include "sidedisk/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace sidedisk {

Angle::Angle(double radians) {
  if (!std::isfinite(radians)) {
    throw std::invalid_argument("angle must be finite");
  }
  double v = std::fmod(radians, kTwoPi);
  if (v < 0.0) v += kTwoPi;
  if (v >= kTwoPi) v = 0.0;  // rounding after the wrap-around add
  value_ = v;
}

Tolerance::Tolerance(double geom, double strict)
    : eps_geom(geom), eps_strict(strict) {
  if (!(0.0 < strict && strict < geom && geom < 1e-3)) {
    throw std::invalid_argument(
        "tolerance requires 0 < eps_strict < eps_geom < 1e-3");
  }
}

Point point_on_circle(Angle theta) {
  return {std::cos(theta.value()), std::sin(theta.value())};
}

double ccw_arc(Angle from, Angle to) {
  double d = to.value() - from.value();
  if (d < 0.0) d += kTwoPi;
  return d;
}

double circular_distance(Angle a, Angle b) {
  const double d = std::fabs(a.value() - b.value());
  return std::min(d, kTwoPi - d);
}

double chord_length(Angle a, Angle b) {
  return 2.0 * std::sin(0.5 * circular_distance(a, b));
}

std::vector<Point> circle_circle_intersections(Point c1, double r1, Point c2,
                                               double r2,
                                               const Tolerance& tol) {
  if (r1 <= 0.0 || r2 <= 0.0) {
    throw std::invalid_argument("circle radii must be positive");
  }
  const double d = distance(c1, c2);
  if (d <= tol.eps_strict) {
    throw std::invalid_argument("coincident circle centers");
  }
  const double outer_margin = d - (r1 + r2);
  const double inner_margin = std::fabs(r1 - r2) - d;
  if (outer_margin > tol.eps_geom || inner_margin > tol.eps_geom) {
    return {};
  }
  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const Point u = (1.0 / d) * (c2 - c1);
  const Point base = c1 + a * u;
  if (std::fabs(outer_margin) <= tol.eps_geom ||
      std::fabs(inner_margin) <= tol.eps_geom) {
    return {base};  // tangency window
  }
  double h2 = r1 * r1 - a * a;
  if (h2 < 0.0) h2 = 0.0;
  const double h = std::sqrt(h2);
  const Point perp{-u.y, u.x};
  return {base + h * perp, base - h * perp};
}

Point incenter(Point a, Point b, Point c) {
  if (collinearity_residual(a, b, c) <= Tolerance{}.eps_strict) {
    throw std::domain_error("incenter of a degenerate triangle");
  }
  const double la = distance(b, c);
  const double lb = distance(c, a);
  const double lc = distance(a, b);
  return (1.0 / (la + lb + lc)) * (la * a + lb * b + lc * c);
}

double collinearity_residual(Point p, Point q, Point r) {
  const double area2 = std::fabs(cross(q - p, r - p));
  const double scale = std::max(1.0, norm(q - p) * norm(r - p));
  return area2 / scale;
}

bool collinear(Point p, Point q, Point r, const Tolerance& tol) {
  return collinearity_residual(p, q, r) <= tol.eps_geom;
}

Point circumcenter(Point a, Point b, Point c) {
  const Point u = b - a;
  const Point v = c - a;
  const double d = 2.0 * cross(u, v);
  if (collinearity_residual(a, b, c) <= Tolerance{}.eps_strict) {
    throw std::domain_error("circumcircle of collinear points is undefined");
  }
  const double uu = dot(u, u);
  const double vv = dot(v, v);
  const Point offset{(v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d};
  return a + offset;
}

double concyclicity_residual(Point p1, Point p2, Point p3, Point p4) {
  const Point pts[4] = {p1, p2, p3, p4};
  double worst = 0.0;
  for (int skip = 0; skip < 4; ++skip) {
    Point tri[3];
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != skip) tri[k++] = pts[i];
    }
    const Point center = circumcenter(tri[0], tri[1], tri[2]);
    const double radius = distance(center, tri[0]);
    const double res = std::fabs(distance(center, pts[skip]) - radius) / radius;
    worst = std::max(worst, res);
  }
  return worst;
}

bool concyclic(Point p1, Point p2, Point p3, Point p4, const Tolerance& tol) {
  return concyclicity_residual(p1, p2, p3, p4) <= tol.eps_geom;
}

}  // namespace sidedisk
