#include "sidedisk/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sidedisk {

using nlohmann::json;

namespace {

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.is_array() || j.size() < 2) {
    throw ConfigError(std::string(key) + " must be an array of at least 2 numbers");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw ConfigError(std::string(key) + " must contain numbers only");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

int preset_size(const json& v, const char* name) {
  if (!v.is_number_integer()) {
    throw ConfigError(std::string("preset ") + name + " needs an integer n");
  }
  return v.get<int>();
}

}  // namespace

GreatPolygon polygon_from_config(const json& config) {
  if (!config.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  double min_gap = kDefaultMinGap;
  if (config.contains("min_gap")) {
    if (!config["min_gap"].is_number() || !(config["min_gap"].get<double>() > 0.0)) {
      throw ConfigError("min_gap must be a positive number");
    }
    min_gap = config["min_gap"].get<double>();
  }
  const int sources = static_cast<int>(config.contains("angles_radians")) +
                      static_cast<int>(config.contains("angles_degrees")) +
                      static_cast<int>(config.contains("preset"));
  if (sources != 1) {
    throw ConfigError(
        "config needs exactly one of angles_radians, angles_degrees, preset");
  }
  try {
    if (config.contains("angles_radians")) {
      return GreatPolygon::from_angles(
          number_array(config["angles_radians"], "angles_radians"), min_gap);
    }
    if (config.contains("angles_degrees")) {
      auto degs = number_array(config["angles_degrees"], "angles_degrees");
      for (double& d : degs) d *= std::numbers::pi / 180.0;
      return GreatPolygon::from_angles(degs, min_gap);
    }
    const json& preset = config["preset"];
    if (!preset.is_object()) {
      throw ConfigError("preset must be an object");
    }
    if (preset.contains("star")) {
      return star(preset_size(preset["star"], "star")).poly;
    }
    if (preset.contains("triangle")) {
      std::optional<double> s;
      if (preset.contains("s")) {
        if (!preset["s"].is_number()) {
          throw ConfigError("preset triangle s must be a number");
        }
        s = preset["s"].get<double>();
      }
      return triangle_config(preset_size(preset["triangle"], "triangle"), s).poly;
    }
    throw ConfigError("preset must be one of star, triangle");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

GreatPolygon load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return polygon_from_config(j);
}

json polygon_to_config(const GreatPolygon& poly) {
  return json{{"angles_radians", poly.angles_radians()}};
}

namespace {

json pairs_to_json(const std::vector<IndexPair>& pairs) {
  json arr = json::array();
  for (const auto& [i, j] : pairs) arr.push_back(json::array({i, j}));
  return arr;
}

json counterexample_to_json(const std::optional<Counterexample>& cx) {
  if (!cx) return nullptr;
  return json{{"angles", cx->angles}, {"detail", cx->detail}};
}

json counterexample_to_json(const std::optional<HarnessCounterexample>& cx) {
  if (!cx) return nullptr;
  return json{{"n", cx->n}, {"angles", cx->angles}, {"detail", cx->detail}};
}

}  // namespace

json to_json(const AnalysisReport& report) {
  return json{{"n", report.n},
              {"d", report.d},
              {"lower_bound", report.lower_bound},
              {"upper_bound", report.upper_bound},
              {"bounds_ok", report.bounds_ok},
              {"noncrossing_ok", report.noncrossing_ok},
              {"min_abs_margin", report.min_abs_margin},
              {"red_diagonals", pairs_to_json(report.graph.red_diagonals)},
              {"blue_diagonals", pairs_to_json(report.graph.blue_diagonals)}};
}

json to_json(const OracleReport& report) {
  return json{{"claim", report.claim},
              {"trials", report.trials},
              {"failures", report.failures},
              {"worst_residual", report.worst_residual},
              {"counterexample", counterexample_to_json(report.counterexample)}};
}

json to_json(const HarnessReport& report) {
  json per_n = json::array();
  for (const auto& s : report.per_n) {
    per_n.push_back(json{{"n", s.n},
                         {"trials", s.trials},
                         {"passes", s.passes},
                         {"skips", s.skips},
                         {"violations", s.violations}});
  }
  return json{{"n_min", report.n_min},
              {"n_max", report.n_max},
              {"trials_per_n", report.trials_per_n},
              {"seed", report.seed},
              {"per_n", per_n},
              {"total_trials", report.total_trials},
              {"total_passes", report.total_passes},
              {"total_skips", report.total_skips},
              {"bounds_violations", report.bounds_violations},
              {"noncrossing_violations", report.noncrossing_violations},
              {"lemma_failures", report.lemma_failures},
              {"first_bounds", counterexample_to_json(report.first_bounds)},
              {"first_noncrossing",
               counterexample_to_json(report.first_noncrossing)},
              {"first_lemma", counterexample_to_json(report.first_lemma)}};
}

namespace {

// World window [-3.1, 3.1]^2 covers the unit circle and every side disk.
class SvgCanvas {
 public:
  explicit SvgCanvas(int size) : size_(size) {}

  double px(double x) const { return (x + kExtent) * size_ / (2.0 * kExtent); }
  double py(double y) const { return (kExtent - y) * size_ / (2.0 * kExtent); }
  double scale(double r) const { return r * size_ / (2.0 * kExtent); }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
  }

  void circle(Point c, double r, const char* stroke, const char* fill,
              double width) {
    out_ << "<circle cx=\"" << num(px(c.x)) << "\" cy=\"" << num(py(c.y))
         << "\" r=\"" << num(scale(r)) << "\" stroke=\"" << stroke
         << "\" fill=\"" << fill << "\" stroke-width=\"" << num(width)
         << "\"/>\n";
  }

  void dot(Point c, double radius_px, const char* fill) {
    out_ << "<circle cx=\"" << num(px(c.x)) << "\" cy=\"" << num(py(c.y))
         << "\" r=\"" << num(radius_px) << "\" fill=\"" << fill << "\"/>\n";
  }

  void line(Point a, Point b, const char* stroke, double width) {
    out_ << "<line x1=\"" << num(px(a.x)) << "\" y1=\"" << num(py(a.y))
         << "\" x2=\"" << num(px(b.x)) << "\" y2=\"" << num(py(b.y))
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
         << "\"/>\n";
  }

  void text(Point at, const std::string& label, const char* fill) {
    out_ << "<text x=\"" << num(px(at.x) + 4.0) << "\" y=\""
         << num(py(at.y) - 4.0) << "\" font-family=\"monospace\" font-size=\""
         << num(size_ / 55.0) << "\" fill=\"" << fill << "\">" << label
         << "</text>\n";
  }

  std::string finish() const {
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_
        << "\" height=\"" << size_ << "\" viewBox=\"0 0 " << size_ << " "
        << size_ << "\">\n"
        << "<rect width=\"" << size_ << "\" height=\"" << size_
        << "\" fill=\"white\"/>\n"
        << out_.str() << "</svg>\n";
    return svg.str();
  }

 private:
  static constexpr double kExtent = 3.1;
  int size_;
  std::ostringstream out_;
};

}  // namespace

std::string render_svg(const GreatPolygon& poly, const RenderSpec& spec,
                       const Tolerance& tol) {
  if (spec.canvas < 100) {
    throw std::invalid_argument("render canvas must be at least 100px");
  }
  SvgCanvas canvas(spec.canvas);
  const auto disks = side_disks(poly);
  canvas.circle({0.0, 0.0}, 1.0, "black", "none", 1.5);
  if (spec.show_disks) {
    for (const auto& d : disks) {
      canvas.circle(d.center, d.radius, "#999999", "none", 1.0);
    }
  }
  if (spec.show_chords && poly.size() >= 3) {
    const IntersectionGraph graph = intersection_graph(poly, tol);
    for (const auto& [i, j] : graph.red_diagonals) {
      canvas.line(disks[static_cast<std::size_t>(i)].center,
                  disks[static_cast<std::size_t>(j)].center, "red", 1.5);
    }
    for (const auto& [i, j] : graph.blue_diagonals) {
      canvas.line(disks[static_cast<std::size_t>(i)].center,
                  disks[static_cast<std::size_t>(j)].center, "blue", 1.5);
    }
  }
  for (int i = 0; i < poly.size(); ++i) {
    const Point v = point_on_circle(poly.vertex_angles()[static_cast<std::size_t>(i)]);
    canvas.dot(v, 3.0, "black");
    if (spec.show_labels) {
      canvas.text(v, "V" + std::to_string(i), "black");
    }
  }
  if (spec.show_corners && poly.size() == 4) {
    const auto& v = poly.vertex_angles();
    const CornerPoints corners = corner_points(v[0], v[1], v[2], v[3]);
    const std::pair<Point, const char*> marks[4] = {
        {corners.X, "X"}, {corners.Y, "Y"}, {corners.Z, "Z"}, {corners.T, "T"}};
    for (const auto& [p, label] : marks) {
      canvas.dot(p, 3.0, "darkgreen");
      if (spec.show_labels) canvas.text(p, label, "darkgreen");
    }
  }
  return canvas.finish();
}

}  // namespace sidedisk
