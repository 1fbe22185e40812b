// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "checks.hpp"
#include "config.hpp"
#include "gfsi/error.hpp"
#include "gfsi/frame.hpp"
#include "gfsi/lattice.hpp"
#include "gfsi/tfa.hpp"
#include "report.hpp"
#include "specs.hpp"

namespace gfsi::app {

namespace {

constexpr double kPi = std::numbers::pi;
namespace fs = std::filesystem;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

fs::path out_path(const RunConfig& cfg, const std::string& name) { return fs::path(cfg.output_dir) / name; }

template <class Writer>
void write_with(const fs::path& path, Writer&& writer) {
  std::ostringstream buf;
  writer(buf);
  write_file_atomic(path, buf.str());
}

// Surfaces are CSV unless the matrix layout is requested.
fs::path write_surface(const RunConfig& cfg, const std::string& stem, const TFSurface& s) {
  const bool matrix = cfg.format == OutputFormat::matrix;
  const fs::path path = out_path(cfg, stem + (matrix ? ".dat" : ".csv"));
  write_with(path, [&](std::ostream& o) { matrix ? write_surface_gnuplot(o, s) : write_surface_csv(o, s); });
  return path;
}

ojson estimate_json(const FrameBoundsEstimate& e) {
  return {{"a", e.a},
          {"b", e.b},
          {"ratio", e.ratio()},
          {"method", e.method},
          {"subspace_dim", e.subspace_dim},
          {"points", e.point_count},
          {"radius", e.radius},
          {"tail", e.tail},
          {"tail_tolerance", kTailTol},
          {"grid", {{"n", e.grid.n}, {"dt", e.grid.dt}}},
          {"volume", e.volume},
          {"not_a_frame", e.not_a_frame()}};
}

void print_estimate(std::ostream& out, const char* label, const FrameBoundsEstimate& e) {
  out << label << "A_est = " << num(e.a) << "  B_est = " << num(e.b) << "  B/A = " << num(e.ratio()) << "  ["
      << e.method << ", dim " << e.subspace_dim << ", " << e.point_count << " points, R = " << num(e.radius)
      << ", tail " << num(e.tail) << "]\n";
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out) {
  const auto selected = checks_for_suite(suite);
  VerdictReport report;
  report.suite = suite;
  report.config = cfg.to_json();
  for (const Check* c : selected) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CaseRecord> cases = c->run(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t passed = 0;
    for (const CaseRecord& r : cases) passed += r.pass() ? 1 : 0;
    out << (passed == cases.size() ? "PASS " : "FAIL ") << c->title << " (" << passed << "/" << cases.size()
        << " cases, " << num(secs) << " s)\n";
    for (CaseRecord& r : cases) {
      if (!r.pass()) {
        out << "     - " << r.name;
        if (!r.error.empty()) {
          out << ": " << r.error;
        } else if (const Metric* m = r.worst()) {
          out << ": " << m->name << " = " << num(m->value) << (m->relation == Metric::Relation::at_most ? " > " : " <= ")
              << num(m->tolerance);
        }
        out << "\n";
      }
      r.name = c->title + ": " + r.name;
      report.cases.push_back(std::move(r));
    }
  }
  const fs::path path = out_path(cfg, "verify-" + suite + ".json");
  write_file_atomic(path, dump(report.to_json()));
  out << (report.pass() ? "PASS" : "FAIL") << " suite " << suite << ": " << report.passed() << "/" << report.cases.size()
      << " cases; report " << path.string() << "\n";
  return report.pass() ? kExitPass : kExitFail;
}

// ---- bounds ----------------------------------------------------------------

int cmd_bounds(const RunConfig& cfg, const std::string& window_text, const std::string& lattice_text,
               const std::string& method, std::ostream& out) {
  const WindowSpec window = parse_window(window_text);
  const LatticeSpec lattice = parse_lattice(lattice_text);
  if (method != "battery" && method != "dense") throw Error(ErrorKind::config, "--method must be battery or dense");
  const GridSpec grid = cfg.grid();
  const GaborSystem sys(window.sample(grid), lattice.lattice, cfg.frame_radius);
  const FrameBoundsEstimate e =
      method == "dense" ? estimate_bounds_dense(sys) : estimate_bounds(sys, TestBattery::hermite(cfg.battery_k, grid));
  const double volume = lattice.lattice.volume();
  const bool sparse = volume > 1.0 + 1e-12;

  out << "window  " << window.text << "\nlattice " << lattice.text << " (volume " << num(volume) << ", density "
      << num(1.0 / volume) << ")\n";
  print_estimate(out, "", e);
  if (sparse) out << "no frame: lattice volume exceeds 1, so no Gabor frame exists at this density\n";
  if (e.not_a_frame()) out << "no frame evidence: A_est < 1e-3 B_est\n";

  ojson j;
  j["version"] = version();
  j["window"] = window.text;
  j["lattice"] = lattice.text;
  j["volume"] = volume;
  j["estimate"] = estimate_json(e);
  j["volume_exceeds_one"] = sparse;
  j["config"] = cfg.to_json();
  write_file_atomic(out_path(cfg, "bounds.json"), dump(j));
  return (sparse || e.not_a_frame()) ? kExitNotFrame : kExitPass;
}

// ---- deform ----------------------------------------------------------------

int cmd_deform(const RunConfig& cfg, const std::string& window_text, const std::string& lattice_text,
               const std::string& transform_text, std::ostream& out) {
  const WindowSpec window = parse_window(window_text);
  const LatticeSpec lattice = parse_lattice(lattice_text);
  const TransformSpec transform = parse_transform(transform_text);
  const GridSpec grid = cfg.grid();
  const SampledSignal g = window.sample(grid);
  const TestBattery battery = TestBattery::hermite(cfg.battery_k, grid);

  const InvarianceReport r = verify_covariance(g, lattice.lattice, transform.matrix, battery, cfg.tol_bounds, cfg.frame_radius);
  const Lattice deformed = deform(lattice.lattice, transform.matrix);
  const bool unchanged = lattices_equal(lattice.lattice, deformed, 1e-9);
  const SampledSignal moved = apply(metaplectic_of(transform.matrix), g);
  const auto aligned = phase_align(moved, g);

  write_with(out_path(cfg, "deform-lattice.csv"), [&](std::ostream& o) { write_points_csv(o, enumerate(deformed, cfg.frame_radius)); });
  write_with(out_path(cfg, "deform-window.csv"), [&](std::ostream& o) { write_signal_csv(o, moved); });

  const Mat2& s = transform.matrix.mat();
  out << "transform " << transform.text << " = [[" << num(s.a) << ", " << num(s.b) << "], [" << num(s.c) << ", " << num(s.d)
      << "]]\n";
  out << "lattice unchanged: " << (unchanged ? "yes" : "no") << "\n";
  out << "window residual after phase alignment: " << num(aligned.residual) << "\n";
  print_estimate(out, "before: ", r.original);
  print_estimate(out, "after:  ", r.deformed);
  out << "discrepancy " << num(r.discrepancy) << (r.pass ? " <= " : " > ") << num(r.tolerance) << "\n";

  ojson j;
  j["version"] = version();
  j["window"] = window.text;
  j["lattice"] = lattice.text;
  j["transform"] = {{"spec", transform.text}, {"matrix", {s.a, s.b, s.c, s.d}}};
  j["lattice_unchanged"] = unchanged;
  j["window_residual"] = {{"value", aligned.residual}, {"method", "phase-aligned relative L2 against the input window"}};
  j["before"] = estimate_json(r.original);
  j["after"] = estimate_json(r.deformed);
  j["discrepancy"] = {{"value", r.discrepancy}, {"tolerance", r.tolerance}, {"method", "max relative change of A and B"}};
  j["pass"] = r.pass;
  j["config"] = cfg.to_json();
  write_file_atomic(out_path(cfg, "deform.json"), dump(j));
  if (r.original.not_a_frame() || r.deformed.not_a_frame()) return kExitNotFrame;
  return r.pass ? kExitPass : kExitFail;
}

// ---- example ---------------------------------------------------------------

int example_hex(const RunConfig& cfg, double delta, std::ostream& out) {
  const double m = 1.0 / std::sqrt(3.0);
  const Lattice base = Lattice::square45(delta);
  const GridSpec grid = cfg.grid();
  const SampledSignal g = gaussian(m).sample(grid);
  const TestBattery battery = TestBattery::hermite(cfg.battery_k, grid);
  const std::vector<std::pair<std::string, double>> taus = {
      {"pi/12", kPi / 12}, {"0", 0.0}, {"-pi/12", -kPi / 12}, {"-pi/6", -kPi / 6}};
  // Level set |A g_m| = 1/2 around each lattice point.
  const double level = std::sqrt(2.0 * std::log(2.0) / kPi);
  const double plot_radius = 3.0;

  const FrameBoundsEstimate reference = estimate_bounds(GaborSystem(g, base, cfg.frame_radius), battery);
  ojson rows = ojson::array();
  std::ostringstream table;
  table << "tau,a,b,discrepancy\n";
  double spread = 0.0;
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const auto& [label, tau] = taus[k];
    const Lattice moved = deform(base, oscillator_flow(tau, m));
    const LatticePointSet pts = enumerate(moved, plot_radius);
    write_with(out_path(cfg, "example-hex-" + std::to_string(k) + "-lattice.csv"), [&](std::ostream& o) { write_points_csv(o, pts); });
    write_with(out_path(cfg, "example-hex-" + std::to_string(k) + "-ellipses.csv"), [&](std::ostream& o) {
      o << "center,x,omega\n";
      char buf[96];
      for (std::size_t c = 0; c < pts.points.size(); ++c) {
        for (int i = 0; i <= 64; ++i) {
          const double th = 2.0 * kPi * i / 64.0;
          std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", c, pts.points[c].x + level * std::cos(th) / std::sqrt(m),
                        pts.points[c].omega + level * std::sqrt(m) * std::sin(th));
          o << buf;
        }
      }
    });
    const FrameBoundsEstimate e = estimate_bounds(GaborSystem(g, moved, cfg.frame_radius), battery);
    const double d = std::max(std::abs(e.a - reference.a) / reference.a, std::abs(e.b - reference.b) / reference.b);
    spread = std::max(spread, d);
    char line[160];
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", tau, e.a, e.b, d);
    table << line;
    rows.push_back({{"tau", label}, {"tau_value", tau}, {"estimate", estimate_json(e)}, {"discrepancy", d}});
    out << "tau " << label << ": ";
    print_estimate(out, "", e);
  }
  write_file_atomic(out_path(cfg, "example-hex-bounds.csv"), table.str());
  const bool pass = spread <= cfg.tol_bounds;
  out << "bounds spread " << num(spread) << (pass ? " <= " : " > ") << num(cfg.tol_bounds) << "\n";

  ojson j;
  j["version"] = version();
  j["example"] = "hex";
  j["delta"] = delta;
  j["window"] = "gaussian:m=" + num(m);
  j["lattice"] = "square45:delta=" + num(delta);
  j["rows"] = rows;
  j["spread"] = {{"value", spread}, {"tolerance", cfg.tol_bounds}, {"method", "max relative change against tau = 0"}};
  j["pass"] = pass;
  j["config"] = cfg.to_json();
  write_file_atomic(out_path(cfg, "example-hex.json"), dump(j));
  return pass ? kExitPass : kExitFail;
}

int example_modular(const RunConfig& cfg, double delta, std::ostream& out) {
  const auto res = modular_example_surfaces(delta, TFGrid::symmetric(2.0, 0.05), cfg.grid());
  const fs::path plus = write_surface(cfg, "example-modular-plus", res.plus);
  const fs::path minus = write_surface(cfg, "example-modular-minus", res.minus);
  const double tol = 1e-6 * cfg.transform_scale();
  const bool pass = res.plus_deviation <= tol && res.minus_deviation <= tol;
  out << "surfaces " << plus.string() << ", " << minus.string() << "\n";
  out << "max residual (x^2 + x w + w^2): " << num(res.plus_deviation) << "\n";
  out << "max residual (x^2 - x w + w^2): " << num(res.minus_deviation) << "\n";
  ojson j;
  j["version"] = version();
  j["example"] = "modular";
  j["delta"] = delta;
  const char* method = "numeric ambiguity vs closed form on [-2,2]^2 step 0.05";
  j["plus"] = {{"file", plus.filename().string()}, {"residual", res.plus_deviation}, {"tolerance", tol}, {"method", method}};
  j["minus"] = {{"file", minus.filename().string()}, {"residual", res.minus_deviation}, {"tolerance", tol}, {"method", method}};
  j["pass"] = pass;
  j["config"] = cfg.to_json();
  write_file_atomic(out_path(cfg, "example-modular.json"), dump(j));
  return pass ? kExitPass : kExitFail;
}

int cmd_example(const RunConfig& cfg, const std::string& which, double delta, std::ostream& out) {
  if (which != "hex" && which != "modular") throw Error(ErrorKind::config, "example must be hex or modular");
  if (!(delta > 1.0)) {
    throw Error(ErrorKind::config, "delta must exceed 1: the examples need lattice volume 1/delta < 1");
  }
  return which == "hex" ? example_hex(cfg, delta, out) : example_modular(cfg, delta, out);
}

// ---- ambiguity -------------------------------------------------------------

int cmd_ambiguity(const RunConfig& cfg, const std::string& window_text, const std::string& transform_text,
                  const std::string& kind, double half, double step, std::ostream& out) {
  const WindowSpec window = parse_window(window_text);
  if (kind != "ambiguity" && kind != "wigner") throw Error(ErrorKind::config, "--kind must be ambiguity or wigner");
  SampledSignal f = window.sample(cfg.grid());
  if (!transform_text.empty()) f = apply(metaplectic_of(parse_transform(transform_text).matrix), f);
  TFGrid grid;
  try {
    grid = TFGrid::symmetric(half, step);
  } catch (const Error& e) {
    throw Error(ErrorKind::config, e.what());
  }
  const TFSurface s = kind == "wigner" ? wigner(f, grid) : ambiguity(f, grid);
  const fs::path path = write_surface(cfg, kind, s);
  out << kind << " of " << window.text << (transform_text.empty() ? "" : " after " + transform_text) << ": " << grid.nx
      << " x " << grid.nomega << " nodes, max |value| " << num(s.max_abs()) << "\nwrote " << path.string() << "\n";
  return kExitPass;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gabor frames under symplectic deformations: verification suites, frame bounds, deformations, examples.",
               "gfsi"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "Config file with 'key = value' lines (GFSI_CONFIG is read first)");
  std::map<std::string, std::string> overrides;
  for (const std::string& key : RunConfig::keys()) app.add_option("--" + key, overrides[key], "Override " + key);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "all, symplectic, metaplectic, tfa or frames")->capture_default_str();

  std::string window, lattice, transform, method = "battery";
  auto* bounds = app.add_subcommand("bounds", "Estimate frame bounds of a Gabor system");
  bounds->add_option("window", window, "gaussian:m=M or hermite:k=K,m=M")->required();
  bounds->add_option("lattice", lattice, "square|square45|hex:delta=D or basis:a,b,c,d,delta=D")->required();
  bounds->add_option("--method", method, "battery or dense")->capture_default_str();

  auto* deform_cmd = app.add_subcommand("deform", "Deform a Gabor system symplectically and compare bounds");
  deform_cmd->add_option("window", window, "Window spec")->required();
  deform_cmd->add_option("lattice", lattice, "Lattice spec")->required();
  deform_cmd->add_option("transform", transform, "rotate:tau=T, flow:tau=T,m=M, shear:p=P, modular:a,b,c,d or word:...")
      ->required();

  std::string which;
  double delta = 2.0;
  auto* example = app.add_subcommand("example", "Reproduce the hexagonal or modular worked example");
  example->add_option("which", which, "hex or modular")->required();
  example->add_option("--delta", delta, "Lattice density")->capture_default_str();

  std::string kind = "ambiguity";
  double half = 3.0, step = 0.05;
  auto* amb = app.add_subcommand("ambiguity", "Export an ambiguity or Wigner surface");
  amb->add_option("window", window, "Window spec")->required();
  amb->add_option("--transform", transform, "Apply a metaplectic operator first");
  amb->add_option("--kind", kind, "ambiguity or wigner")->capture_default_str();
  amb->add_option("--half", half, "Half-width of the square grid")->capture_default_str();
  amb->add_option("--step", step, "Grid step")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  try {
    RunConfig cfg;
    if (const char* env = std::getenv("GFSI_CONFIG"); env != nullptr && *env != '\0') apply_config_file(cfg, env);
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    for (const std::string& key : RunConfig::keys()) {
      if (app.count("--" + key) > 0) cfg.set(key, overrides[key]);
    }
    cfg.validate();

    if (verify->parsed()) return cmd_verify(cfg, suite, out);
    if (bounds->parsed()) return cmd_bounds(cfg, window, lattice, method, out);
    if (deform_cmd->parsed()) return cmd_deform(cfg, window, lattice, transform, out);
    if (example->parsed()) return cmd_example(cfg, which, delta, out);
    if (amb->parsed()) return cmd_ambiguity(cfg, window, transform, kind, half, step, out);
  } catch (const Error& e) {
    err << "gfsi: " << e.what() << "\n";
    return e.kind() == ErrorKind::config ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    err << "gfsi: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace gfsi::app
