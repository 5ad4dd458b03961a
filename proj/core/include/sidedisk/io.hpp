#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sidedisk/extremal.hpp"

namespace sidedisk {

/// Raised on malformed configuration input; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Config schema: exactly one of
//   {"angles_radians": [...]}, {"angles_degrees": [...]},
//   {"preset": {"star": n}}, {"preset": {"triangle": n, "s": real?}}
// plus an optional "min_gap".
GreatPolygon polygon_from_config(const nlohmann::json& config);

GreatPolygon load_config_file(const std::string& path);

nlohmann::json polygon_to_config(const GreatPolygon& poly);

nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json to_json(const OracleReport& report);
nlohmann::json to_json(const HarnessReport& report);

struct RenderSpec {
  int canvas = 800;  // pixels, at least 100
  bool show_disks = true;
  bool show_chords = true;
  bool show_corners = false;  // X, Y, Z, T markers, n = 4 only
  bool show_labels = true;
};

// Standalone SVG figure: unit circle, vertices, side disks and the red/blue
// chord colouring. Byte-deterministic for fixed input and spec.
std::string render_svg(const GreatPolygon& poly, const RenderSpec& spec,
                       const Tolerance& tol);

}  // namespace sidedisk
