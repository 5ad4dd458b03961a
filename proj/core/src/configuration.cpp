#include "sidedisk/configuration.hpp"

#include <algorithm>
#include <stdexcept>

namespace sidedisk {

GreatPolygon GreatPolygon::from_angles(const std::vector<double>& raw_radians,
                                       double min_gap) {
  if (raw_radians.size() < 2) {
    throw std::invalid_argument("polygon needs at least 2 vertices");
  }
  if (!(min_gap > 0.0)) {
    throw std::invalid_argument("min_gap must be positive");
  }
  std::vector<Angle> angles;
  angles.reserve(raw_radians.size());
  for (double raw : raw_radians) angles.emplace_back(raw);
  std::sort(angles.begin(), angles.end(),
            [](Angle a, Angle b) { return a.value() < b.value(); });
  const std::size_t n = angles.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double gap = (i + 1 < n)
                           ? angles[i + 1].value() - angles[i].value()
                           : angles[0].value() + kTwoPi - angles[n - 1].value();
    if (gap < min_gap) {
      throw std::invalid_argument("near-duplicate vertices: cyclic gap below min_gap");
    }
  }
  return GreatPolygon(std::move(angles));
}

GreatPolygon GreatPolygon::regular(int n) {
  if (n < 2) {
    throw std::invalid_argument("regular polygon needs n >= 2");
  }
  std::vector<double> raw(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) raw[static_cast<std::size_t>(k)] = kTwoPi * k / n;
  return from_angles(raw);
}

std::vector<double> GreatPolygon::angles_radians() const {
  std::vector<double> out;
  out.reserve(vertex_angles_.size());
  for (Angle a : vertex_angles_) out.push_back(a.value());
  return out;
}

double side_disk_radius(double arc_length) {
  return 2.0 * std::sin(arc_length / 4.0);
}

std::vector<SideDisk> side_disks(const GreatPolygon& poly) {
  const int n = poly.size();
  const auto& v = poly.vertex_angles();
  std::vector<SideDisk> disks;
  disks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    SideDisk d;
    d.index = i;
    d.start_angle = v[static_cast<std::size_t>(i)];
    d.end_angle = v[static_cast<std::size_t>((i + 1) % n)];
    d.arc_length = ccw_arc(d.start_angle, d.end_angle);
    d.center_angle = Angle(d.start_angle.value() + 0.5 * d.arc_length);
    d.center = point_on_circle(d.center_angle);
    d.radius = side_disk_radius(d.arc_length);
    disks.push_back(d);
  }
  return disks;
}

}  // namespace sidedisk
