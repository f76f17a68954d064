// Copyright 2026 The qlbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlbm/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qlbm/qasm.hpp"
#include "qlbm/reference.hpp"
#include "qlbm/solver.hpp"
#include "qlbm/stateprep.hpp"

namespace qlbm::cli {

namespace {

struct Options {
  std::size_t sites = 32;
  std::size_t steps = 40;
  double velocity = 0.0;
  double cs2 = kDefaultCs2;
  std::string initial = "triangle";
  std::string out;
  std::string svg;
  std::string qasm_dir;
  double tolerance = 1e-12;
  double perturb_angle = 0.0;
};

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("invalid number '" + text + "' in " + what);
  }
  if (used != text.size()) throw UsageError("invalid number '" + text + "' in " + what);
  return v;
}

std::vector<Eigen::VectorXd> values_of(const std::vector<ConcentrationField>& fields) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(fields.size());
  for (const auto& f : fields) out.push_back(f.values());
  return out;
}

LatticeConfig make_config(const Options& o) {
  if (o.sites == 0 || (o.sites & (o.sites - 1)) != 0)
    throw UsageError("sites must be a power of two");
  if (o.sites < LatticeConfig::kMinSites)
    throw UsageError("sites must be at least " + std::to_string(LatticeConfig::kMinSites));
  try {
    return LatticeConfig(o.sites, o.velocity, o.cs2);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ConcentrationField make_initial(const Options& o) {
  return ConcentrationField(parse_initial_field(o.initial, o.sites));
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file.exceptions(std::ios::failbit | std::ios::badbit);
  return file;
}

void write_qasm_file(const std::filesystem::path& path, const Kernel& kernel) {
  auto file = open_output(path.string());
  file << emit_qasm(kernel);
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!std::filesystem::is_directory(dir))
    throw std::runtime_error("output directory '" + dir + "' is not usable");
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err) {
  const LatticeConfig cfg = make_config(o);
  const ConcentrationField initial = make_initial(o);
  const auto trajectory = values_of(run_simulation(initial, o.steps, cfg));

  if (o.out.empty()) {
    write_csv(out, trajectory);
  } else {
    auto file = open_output(o.out);
    write_csv(file, trajectory);
  }
  if (!o.svg.empty()) {
    auto file = open_output(o.svg);
    const auto steps = default_plot_steps(trajectory.size());
    write_svg(file, trajectory, steps);
  }
  if (!o.qasm_dir.empty()) {
    ensure_directory(o.qasm_dir);
    // One encoding circuit per executed step (the initial field when steps = 0).
    const std::size_t count = std::max<std::size_t>(trajectory.size() - 1, 1);
    for (std::size_t t = 0; t < count; ++t) {
      const Eigen::VectorXd& c = trajectory[t];
      std::ostringstream name;
      name << "encoding_step_" << std::setw(4) << std::setfill('0') << t << ".qasm";
      write_qasm_file(std::filesystem::path(o.qasm_dir) / name.str(),
                      encode_amplitudes(c / c.norm()));
    }
  }
  err << "wrote " << trajectory.size() << " snapshots of " << cfg.sites() << " sites\n";
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const LatticeConfig cfg = make_config(o);
  const ConcentrationField initial = make_initial(o);

  CollisionAngles angles = collision_angles(cfg.velocity(), cfg.cs2());
  if (o.perturb_angle != 0.0) {
    angles.lambda1 += o.perturb_angle;
    angles.d1 = std::cos(angles.lambda1);
  }
  const auto quantum = values_of(run_simulation(initial, o.steps, cfg, angles));
  const auto classical =
      classical_trajectory(initial.values(), o.steps, cfg.velocity(), cfg.cs2());

  double global = 0.0;
  out << std::setprecision(6) << std::scientific;
  for (std::size_t t = 0; t < quantum.size(); ++t) {
    const double diff = (quantum[t] - classical[t]).cwiseAbs().maxCoeff();
    global = std::max(global, diff);
    out << "step " << t << " max_abs_diff " << diff << '\n';
  }
  const bool ok = global <= o.tolerance;
  out << "global_max_abs_diff " << global << " tolerance " << o.tolerance << ' '
      << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitFailure;
}

int cmd_emit_qasm(const Options& o, std::ostream& out) {
  if (o.sites == 0 || (o.sites & (o.sites - 1)) != 0 || o.sites < 2)
    throw UsageError("sites must be a power of two");
  const ConcentrationField initial = make_initial(o);
  if (!(initial.norm() > 0.0)) throw UsageError("initial field is identically zero");
  const Kernel kernel = encode_amplitudes(initial.values() / initial.norm());

  const std::string dir = o.qasm_dir.empty() ? "." : o.qasm_dir;
  ensure_directory(dir);
  const auto path = std::filesystem::path(dir) / "encoding.qasm";
  write_qasm_file(path, kernel);
  out << "wrote " << path.string() << " (" << kernel.num_qubits() << " qubits, "
      << kernel.size() << " gates)\n";
  return kExitOk;
}

}  // namespace

Eigen::VectorXd parse_initial_field(const std::string& spec, std::size_t sites) {
  const auto m = static_cast<Eigen::Index>(sites);
  if (spec == "triangle") {
    if (sites < 8) throw UsageError("triangle initial field needs at least 8 sites");
    Eigen::VectorXd c = Eigen::VectorXd::Zero(m);
    c(5) = 0.5;
    c(6) = 1.0;
    c(7) = 0.5;
    return c;
  }
  if (spec.rfind("gaussian:", 0) == 0) {
    std::vector<double> p;
    std::stringstream ss(spec.substr(9));
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(parse_double(item, "gaussian spec"));
    if (p.size() != 3) throw UsageError("gaussian spec must be gaussian:x0,sigma,amp");
    const double x0 = p[0], sigma = p[1], amp = p[2];
    if (!(sigma > 0.0) || amp < 0.0)
      throw UsageError("gaussian needs sigma > 0 and amp >= 0");
    Eigen::VectorXd c(m);
    for (Eigen::Index x = 0; x < m; ++x) {
      double d = std::fmod(std::abs(static_cast<double>(x) - x0), static_cast<double>(m));
      d = std::min(d, static_cast<double>(m) - d);  // periodic distance
      c(x) = amp * std::exp(-d * d / (2.0 * sigma * sigma));
    }
    return c;
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot read initial field file '" + path + "'");
    std::vector<double> values;
    std::string token;
    // Values separated by whitespace and/or commas.
    for (char ch; file.get(ch);) {
      if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
        if (!token.empty()) values.push_back(parse_double(token, "initial field file"));
        token.clear();
      } else {
        token.push_back(ch);
      }
    }
    if (!token.empty()) values.push_back(parse_double(token, "initial field file"));
    if (values.size() != sites)
      throw UsageError("initial field file has " + std::to_string(values.size()) +
                       " values, expected " + std::to_string(sites));
    return Eigen::Map<const Eigen::VectorXd>(values.data(), m);
  }
  throw UsageError("unknown initial field '" + spec +
                   "' (expected triangle, gaussian:x0,sigma,amp or file:<path>)");
}

void write_csv(std::ostream& out, std::span<const Eigen::VectorXd> trajectory) {
  out << "step,x,concentration\n";
  out << std::setprecision(17);
  for (std::size_t t = 0; t < trajectory.size(); ++t)
    for (Eigen::Index x = 0; x < trajectory[t].size(); ++x)
      out << t << ',' << x << ',' << trajectory[t](x) << '\n';
}

std::vector<std::size_t> default_plot_steps(std::size_t trajectory_length) {
  std::vector<std::size_t> steps;
  if (trajectory_length == 0) return steps;
  const std::size_t last = trajectory_length - 1;
  const std::size_t count = std::min<std::size_t>(5, trajectory_length);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t s = count == 1 ? 0 : (last * i) / (count - 1);
    if (steps.empty() || steps.back() != s) steps.push_back(s);
  }
  return steps;
}

void write_svg(std::ostream& out, std::span<const Eigen::VectorXd> trajectory,
               std::span<const std::size_t> steps) {
  constexpr double width = 640, height = 400, margin = 50;
  static const char* const colours[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                        "#8c564b", "#e377c2", "#7f7f7f"};
  double peak = 0.0;
  Eigen::Index sites = 0;
  for (const std::size_t s : steps) {
    if (s >= trajectory.size()) throw std::out_of_range("plot step beyond trajectory");
    peak = std::max(peak, trajectory[s].maxCoeff());
    sites = std::max(sites, trajectory[s].size());
  }
  if (peak <= 0.0) peak = 1.0;
  const double x_scale = (width - 2 * margin) / static_cast<double>(std::max<Eigen::Index>(sites - 1, 1));
  const double y_scale = (height - 2 * margin) / peak;

  out << std::setprecision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-size=\"12\">x (lattice site)</text>\n";
  out << "<text x=\"14\" y=\"" << height / 2 << "\" font-size=\"12\" transform=\"rotate(-90 14 "
      << height / 2 << ")\" text-anchor=\"middle\">concentration</text>\n";
  out << "<text x=\"" << margin - 6 << "\" y=\"" << margin + 4
      << "\" text-anchor=\"end\" font-size=\"10\">" << peak << "</text>\n";

  std::size_t series = 0;
  for (const std::size_t s : steps) {
    const char* colour = colours[series % std::size(colours)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (Eigen::Index x = 0; x < trajectory[s].size(); ++x) {
      out << (x == 0 ? "" : " ") << margin + x_scale * static_cast<double>(x) << ','
          << height - margin - y_scale * trajectory[s](x);
    }
    out << "\"/>\n";
    out << "<text x=\"" << width - margin + 4 << "\" y=\"" << margin + 14 * static_cast<double>(series)
        << "\" font-size=\"11\" fill=\"" << colour << "\">step " << s << "</text>\n";
    ++series;
  }
  out << "</svg>\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum lattice Boltzmann (D1Q2) advection-diffusion solver", "qlbm"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--sites", o.sites, "Lattice sites (power of two)");
    sub->add_option("--steps", o.steps, "Time steps");
    sub->add_option("--velocity", o.velocity, "Advection velocity u (lattice units)");
    sub->add_option("--cs2", o.cs2, "Sound speed squared");
    sub->add_option("--initial", o.initial,
                    "Initial field: triangle | gaussian:x0,sigma,amp | file:<path>");
  };

  auto* run = app.add_subcommand("run", "Run the hybrid solver and write the trajectory");
  add_common(run);
  run->add_option("--out", o.out, "CSV output path (stdout when omitted)");
  run->add_option("--svg", o.svg, "SVG plot output path");
  run->add_option("--emit-qasm-dir", o.qasm_dir, "Directory for per-step encoding circuits");

  auto* validate = app.add_subcommand("validate", "Compare against the classical LBM");
  add_common(validate);
  validate->add_option("--tolerance", o.tolerance, "Maximum allowed abs difference");
  validate->add_option("--perturb-angle", o.perturb_angle,
                       "Add this offset to lambda1 (fault injection)");

  auto* emit = app.add_subcommand("emit-qasm", "Write the encoding circuit as OpenQASM 2.0");
  add_common(emit);
  emit->add_option("--emit-qasm-dir", o.qasm_dir, "Output directory (default .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(o, out, err);
    if (validate->parsed()) return cmd_validate(o, out);
    return cmd_emit_qasm(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace qlbm::cli
