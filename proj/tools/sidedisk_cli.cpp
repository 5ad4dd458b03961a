// Command-line front end: analyze configurations, run the randomized
// verification harness and the lemma oracles, emit preset configs and SVG
// figures. Exit codes: 0 verified, 1 theorem-check failure, 2 usage/input
// error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "sidedisk/io.hpp"

namespace {

using namespace sidedisk;
using nlohmann::json;

struct GlobalOptions {
  double tol_geom = 1e-9;
  double tol_strict = 1e-12;
  bool pretty = false;

  Tolerance tolerance() const { return Tolerance(tol_geom, tol_strict); }
  void print(const json& j) const {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
  }
};

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
  return std::sscanf(text.c_str(), "%d..%d", &lo, &hi) == 2;
}

int run_analyze(const GlobalOptions& g, const std::string& config_path) {
  const GreatPolygon poly = load_config_file(config_path);
  const AnalysisReport report = analyze(poly, g.tolerance());
  g.print(to_json(report));
  return (report.bounds_ok && report.noncrossing_ok) ? 0 : 1;
}

int run_harness(const GlobalOptions& g, const std::string& range, int trials,
                std::uint64_t seed) {
  int lo = 0, hi = 0;
  if (!parse_range(range, lo, hi)) {
    throw std::invalid_argument("range must look like 3..12");
  }
  const HarnessReport report = harness(lo, hi, trials, seed, g.tolerance());
  g.print(to_json(report));
  const long violations = report.bounds_violations +
                          report.noncrossing_violations + report.lemma_failures;
  return violations == 0 ? 0 : 1;
}

// Four sorted vertex angles of a seeded random quadruple.
std::array<Angle, 4> random_quadruple(std::uint64_t seed) {
  const GreatPolygon poly = random_polygon(4, seed);
  const auto& v = poly.vertex_angles();
  return {v[0], v[1], v[2], v[3]};
}

int run_lemma(const GlobalOptions& g, const std::string& which, int trials,
              std::uint64_t seed, int samples, int n) {
  const Tolerance tol = g.tolerance();
  OracleReport total;
  const bool lower_is_worse =
      which == "2a" || which == "step2";  // margin-style residuals
  bool first = true;
  const auto merge = [&](const OracleReport& r) {
    if (first) {
      total = r;
      first = false;
      return;
    }
    total.trials += r.trials;
    total.failures += r.failures;
    total.worst_residual = lower_is_worse
                               ? std::min(total.worst_residual, r.worst_residual)
                               : std::max(total.worst_residual, r.worst_residual);
    if (!total.counterexample && r.counterexample) {
      total.counterexample = r.counterexample;
    }
  };

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t sub = trial_seed(seed, 0, t);
    if (which == "1") {
      std::mt19937_64 rng(sub);
      const double a = uniform01(rng) * kTwoPi;
      const double arc_ab = 0.1 + uniform01(rng) * (kTwoPi - 0.2);
      const double arc_ac = arc_ab * (0.01 + 0.98 * uniform01(rng));
      merge(lemma1_check(Angle(a), Angle(a + arc_ab), Angle(a + arc_ac),
                         samples, sub, tol));
    } else if (which == "step2") {
      merge(step2_check(random_polygon(n, sub), tol));
    } else {
      const auto [a, b, c, d] = random_quadruple(sub);
      if (which == "step1") {
        merge(step1_check(a, b, c, d, tol));
      } else if (which == "2a") {
        merge(lemma2a_check(corner_points(a, b, c, d),
                            quad_side_disks(a, b, c, d), tol));
      } else if (which == "2b") {
        merge(lemma2b_rectangle_check(corner_points(a, b, c, d), tol));
      } else if (which == "incenter") {
        merge(incenter_coincidence_check(a, b, c, d, corner_points(a, b, c, d),
                                         tol));
      } else if (which == "collinear") {
        merge(collinearity_check(a, b, c, d, corner_points(a, b, c, d), tol));
      } else {
        std::cerr << "unknown lemma selector: " << which << "\n";
        return 2;
      }
    }
  }
  g.print(to_json(total));
  return total.failures == 0 ? 0 : 1;
}

int run_preset(const GlobalOptions& g, const ExtremalConfig& config) {
  json out{{"n", config.poly.size()},
           {"expected_d", config.expected_d},
           {"config", polygon_to_config(config.poly)}};
  g.print(out);
  return 0;
}

int run_render(const GlobalOptions& g, const std::string& config_path,
               const std::string& output, const RenderSpec& spec) {
  const GreatPolygon poly = load_config_file(config_path);
  const std::string svg = render_svg(poly, spec, g.tolerance());
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot write output file: " + output);
  }
  out << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Side-disk intersection analysis for a partitioned circle"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--tol-geom", g.tol_geom, "classification tolerance");
  app.add_option("--tol-strict", g.tol_strict, "consistency tolerance");
  app.add_flag("--pretty", g.pretty, "indent JSON output");
  app.add_flag("--json", "compact JSON output (default)");

  auto* cmd_analyze = app.add_subcommand("analyze", "classify all disk pairs");
  std::string analyze_config;
  cmd_analyze->add_option("config", analyze_config, "config JSON file")
      ->required();

  auto* cmd_harness =
      app.add_subcommand("harness", "randomized theorem verification");
  std::string range = "3..12";
  int trials = 100;
  std::uint64_t seed = 0;
  cmd_harness->add_option("--n", range, "n range, e.g. 3..12");
  cmd_harness->add_option("--trials", trials, "trials per n");
  cmd_harness->add_option("--seed", seed, "master seed");

  auto* cmd_lemma = app.add_subcommand("lemma", "run one lemma oracle");
  std::string which;
  int lemma_trials = 100;
  std::uint64_t lemma_seed = 0;
  int samples = 10000;
  int lemma_n = 8;
  cmd_lemma->add_option("which", which, "1|2a|2b|incenter|collinear|step1|step2")
      ->required();
  cmd_lemma->add_option("--trials", lemma_trials, "number of configurations");
  cmd_lemma->add_option("--seed", lemma_seed, "master seed");
  cmd_lemma->add_option("--samples", samples, "samples per trial (lemma 1)");
  cmd_lemma->add_option("--n", lemma_n, "polygon size (step2)");

  auto* cmd_star = app.add_subcommand("star", "equal-arc preset config");
  int star_n = 4;
  cmd_star->add_option("--n", star_n, "vertex count")->required();

  auto* cmd_triangle =
      app.add_subcommand("triangle", "one-big-arc preset config");
  int tri_n = 4;
  double tri_s = 0.0;
  cmd_triangle->add_option("--n", tri_n, "vertex count")->required();
  auto* s_opt = cmd_triangle->add_option("--s", tri_s, "small arc length");

  auto* cmd_render = app.add_subcommand("render", "emit an SVG figure");
  std::string render_config, render_out = "figure.svg";
  RenderSpec spec;
  cmd_render->add_option("config", render_config, "config JSON file")
      ->required();
  cmd_render->add_option("-o,--output", render_out, "output SVG path");
  cmd_render->add_option("--size", spec.canvas, "canvas size in pixels");
  cmd_render->add_flag("--show-corners", spec.show_corners,
                       "mark X, Y, Z, T (n = 4)");
  bool no_disks = false, no_chords = false, no_labels = false;
  cmd_render->add_flag("--no-disks", no_disks, "hide side disks");
  cmd_render->add_flag("--no-chords", no_chords, "hide coloured chords");
  cmd_render->add_flag("--no-labels", no_labels, "hide labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_analyze->parsed()) return run_analyze(g, analyze_config);
    if (cmd_harness->parsed()) return run_harness(g, range, trials, seed);
    if (cmd_lemma->parsed())
      return run_lemma(g, which, lemma_trials, lemma_seed, samples, lemma_n);
    if (cmd_star->parsed()) return run_preset(g, star(star_n));
    if (cmd_triangle->parsed()) {
      std::optional<double> s;
      if (s_opt->count() > 0) s = tri_s;
      return run_preset(g, triangle_config(tri_n, s));
    }
    if (cmd_render->parsed()) {
      spec.show_disks = !no_disks;
      spec.show_chords = !no_chords;
      spec.show_labels = !no_labels;
      return run_render(g, render_config, render_out, spec);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
