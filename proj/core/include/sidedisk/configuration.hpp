#pragma once

#include <vector>

#include "sidedisk/geometry.hpp"

namespace sidedisk {

inline constexpr double kDefaultMinGap = 1e-6;

/// A circle partitioned into n arcs by n marked vertices, stored as sorted
/// angles on the unit circle.
class GreatPolygon {
 public:
  // Normalizes, sorts and validates. Throws std::invalid_argument when fewer
  // than two angles are given or when some cyclic gap is below min_gap.
  static GreatPolygon from_angles(const std::vector<double>& raw_radians,
                                  double min_gap = kDefaultMinGap);

  // All arcs equal: vertices at 2*pi*k/n.
  static GreatPolygon regular(int n);

  int size() const { return static_cast<int>(vertex_angles_.size()); }
  const std::vector<Angle>& vertex_angles() const { return vertex_angles_; }
  std::vector<double> angles_radians() const;

 private:
  explicit GreatPolygon(std::vector<Angle> sorted)
      : vertex_angles_(std::move(sorted)) {}
  std::vector<Angle> vertex_angles_;
};

/// Disk centered at an arc's midpoint with the arc endpoints on its boundary.
struct SideDisk {
  int index = 0;
  Angle start_angle;
  Angle end_angle;
  double arc_length = 0.0;
  Angle center_angle;
  Point center;
  double radius = 0.0;
};

// Closed-form radius on the unit circle: 2*sin(arc/4).
double side_disk_radius(double arc_length);

// One disk per arc, in cyclic order; disk i spans vertex i to vertex i+1
// (mod n), the last arc wrapping through 2*pi.
std::vector<SideDisk> side_disks(const GreatPolygon& poly);

}  // namespace sidedisk
