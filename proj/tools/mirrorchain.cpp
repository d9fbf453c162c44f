/*
 * Copyright 2026 The mirrorchain authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mirrorchain/chain.hpp"
#include "mirrorchain/dynamics.hpp"
#include "mirrorchain/ed_oracle.hpp"
#include "mirrorchain/eigensystem.hpp"
#include "mirrorchain/presets.hpp"
#include "mirrorchain/reconstruct.hpp"
#include "mirrorchain/series.hpp"
#include "mirrorchain/spectrum.hpp"
#include "mirrorchain/string_correlators.hpp"
#include "mirrorchain/thermal.hpp"

namespace {

using nlohmann::json;
using namespace mirrorchain;

constexpr int kExitValidation = 2;
constexpr int kExitNonConvergence = 3;

// Data goes to --output ("-" = stdout).  Human summaries go to stdout unless
// the data itself is on stdout, in which case they move to stderr as JSON
// lines to keep the data stream clean.
struct Output {
  std::string path = "-";

  bool to_stdout() const { return path == "-"; }

  void emit(const std::string& data) const {
    if (to_stdout()) {
      std::cout << data;
      if (!data.empty() && data.back() != '\n') std::cout << '\n';
    } else {
      std::ofstream out(path);
      if (!out) throw std::invalid_argument("cannot write output file: " + path);
      out << data;
      if (!data.empty() && data.back() != '\n') out << '\n';
    }
  }

  void note(const std::string& line) const {
    if (to_stdout()) {
      std::cerr << json{{"note", line}}.dump() << '\n';
    } else {
      std::cout << line << '\n';
    }
  }
};

void warn_all(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) {
    std::cerr << json{{"warning", w}}.dump() << '\n';
  }
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> t;
  if (steps <= 0) return t;
  t.reserve(steps);
  if (steps == 1) {
    t.push_back(lo);
    return t;
  }
  for (int i = 0; i < steps; ++i) {
    t.push_back(lo + i * (hi - lo) / (steps - 1));
  }
  return t;
}

double parse_temperature(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "Inf") {
    return std::numeric_limits<double>::infinity();
  }
  return std::stod(text);
}

std::string format_certificate(const MirrorCertificate& cert) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "certificate: %s, tau=%.12g, phi0=%.12g, worst_residual=%.3g",
                cert.valid ? "valid" : "invalid", cert.tau, cert.phi0,
                cert.worst_residual);
  return buf;
}

std::string format_variation(const CouplingVariation& v) {
  char buf[120];
  std::snprintf(buf, sizeof buf, "J in [%.6g, %.6g], variation %.2f%%",
                v.min_coupling, v.max_coupling, 100.0 * v.relative);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"Spin chains as quantum state mirrors: spectrum design, "
               "inverse eigenvalue reconstruction, exact dynamics"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  std::string format = "csv";
  std::uint64_t seed = 0;
  double tolerance = -1.0;  // per-command default when negative
  app.add_option("--output,-o", output.path, "output path ('-' = stdout)")
      ->capture_default_str();
  app.add_option("--format", format, "series output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "PRNG seed for stochastic methods");
  app.add_option("--tolerance", tolerance, "override the command's tolerance");

  // ---- design ---------------------------------------------------------
  auto* design = app.add_subcommand("design", "generate a mirror spectrum");
  design->require_subcommand(1);
  int levels = 31;
  double omega0 = 0.0, omega = 1.0;
  int quad_p = 1, quad_q = 1;
  double amplitude = 0.0, a0 = 0.2311;

  auto* lin = design->add_subcommand("linear", "equally spaced levels");
  lin->add_option("--levels", levels, "number of levels")->required();
  lin->add_option("--omega0", omega0, "offset of the lowest level");
  lin->add_option("--omega", omega, "level spacing")->capture_default_str();

  auto* quad = design->add_subcommand("quadratic", "quadratically spaced levels");
  quad->add_option("--levels", levels, "number of levels")->required();
  quad->add_option("--omega0", omega0, "offset");
  quad->add_option("--omega", omega, "energy unit")->capture_default_str();
  quad->add_option("--p", quad_p, "integer p >= 1")->capture_default_str();
  quad->add_option("--q", quad_q, "integer q >= 1")->capture_default_str();

  auto* cosine = design->add_subcommand(
      "cosine", "near-homogeneous distorted-cosine band");
  cosine->add_option("--levels", levels, "number of levels")->required();
  cosine->add_option("--amplitude", amplitude,
                     "band half-width (default a0*(levels-1)^2)");
  cosine->add_option("--a0", a0, "amplitude unit when --amplitude is absent")
      ->capture_default_str();

  // ---- certify --------------------------------------------------------
  auto* certify = app.add_subcommand("certify", "check the mirror condition");
  std::string spectrum_path;
  double tau_override = 0.0;
  certify->add_option("spectrum", spectrum_path, "SpectrumSpec JSON file")
      ->required();
  certify->add_option("--tau", tau_override, "check at this tau instead");

  // ---- reconstruct ----------------------------------------------------
  auto* reconstruct =
      app.add_subcommand("reconstruct", "solve the inverse eigenvalue problem");
  std::string method = "direct";
  std::string schedule_path;
  AnnealSchedule schedule;
  reconstruct->add_option("spectrum", spectrum_path, "SpectrumSpec JSON file")
      ->required();
  reconstruct->add_option("--method", method, "direct or annealing")
      ->check(CLI::IsMember({"direct", "annealing"}))
      ->capture_default_str();
  reconstruct->add_option("--schedule", schedule_path,
                          "AnnealSchedule JSON file");
  reconstruct->add_option("--t0", schedule.t0, "initial temperature");
  reconstruct->add_option("--cooling", schedule.cooling, "cooling factor")
      ->capture_default_str();
  reconstruct->add_option("--sweeps", schedule.sweeps, "cooling sweeps")
      ->capture_default_str();

  // ---- correlate ------------------------------------------------------
  auto* correlate =
      app.add_subcommand("correlate", "thermal spin correlation series");
  std::string chain_path, observable = "zz", temperature_text = "0";
  std::vector<int> sites;
  double tmin = 0.0, tmax = 0.0;
  int steps = 0;
  correlate->add_option("chain", chain_path, "chain JSON file")->required();
  correlate->add_option("--observable", observable, "zz or xx")
      ->check(CLI::IsMember({"zz", "xx"}))
      ->capture_default_str();
  correlate->add_option("--sites", sites, "one site (xx) or two (zz, xx cross)")
      ->expected(1, 2)
      ->required();
  correlate
      ->add_option("--temperature,-T", temperature_text,
                   "temperature (0, positive, or 'inf')")
      ->capture_default_str();
  correlate->add_option("--tmin", tmin, "grid start")->capture_default_str();
  correlate->add_option("--tmax", tmax, "grid end")->capture_default_str();
  correlate->add_option("--steps", steps, "number of grid points")->required();

  // ---- fidelity -------------------------------------------------------
  auto* fidelity_cmd =
      app.add_subcommand("fidelity", "end-to-end transfer probability");
  double single_time = std::numeric_limits<double>::quiet_NaN();
  fidelity_cmd->add_option("chain", chain_path, "chain JSON file")->required();
  fidelity_cmd->add_option("--time", single_time, "single time instead of a grid");
  fidelity_cmd->add_option("--tmin", tmin, "grid start")->capture_default_str();
  fidelity_cmd->add_option("--tmax", tmax, "grid end")->capture_default_str();
  fidelity_cmd->add_option("--steps", steps, "number of grid points");

  // ---- oracle-check ---------------------------------------------------
  auto* oracle = app.add_subcommand(
      "oracle-check", "compare fermionic correlators against dense spin ED");
  oracle->add_option("chain", chain_path, "chain JSON file (<= 12 sites)")
      ->required();
  oracle
      ->add_option("--temperature,-T", temperature_text,
                   "temperature (0, positive, or 'inf')")
      ->capture_default_str();
  double oracle_tmax = 3.0;
  int oracle_steps = 7;
  oracle->add_option("--tmax", oracle_tmax, "grid end")->capture_default_str();
  oracle->add_option("--steps", oracle_steps, "grid points")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  // ---------------------------------------------------------------------
  if (design->parsed()) {
    SpectrumSpec spec;
    if (lin->parsed()) {
      spec = linear_spectrum(levels, omega0, omega);
    } else if (quad->parsed()) {
      spec = quadratic_spectrum(levels, omega0, omega, quad_p, quad_q);
    } else {
      const double a = amplitude > 0.0 ? amplitude
                                       : default_cosine_amplitude(levels, a0);
      spec = cosine_distorted_spectrum(levels, a);
    }
    const double tol = tolerance > 0.0 ? tolerance : kDefaultCertTol;
    const MirrorCertificate cert = certify_spectrum(spec, tol);
    output.emit(spectrum_to_json(spec).dump(2));
    output.note(format_certificate(cert));
    return cert.valid ? 0 : kExitValidation;
  }

  if (certify->parsed()) {
    SpectrumSpec spec = load_spectrum(spectrum_path);
    if (tau_override > 0.0) spec.tau = tau_override;
    const double tol = tolerance > 0.0 ? tolerance : kDefaultCertTol;
    const MirrorCertificate cert = certify_spectrum(spec, tol);
    json result{{"valid", cert.valid},
                {"tau", cert.tau},
                {"phi0", cert.phi0},
                {"worst_residual", cert.worst_residual},
                {"residuals", cert.residuals},
                {"n_assign", cert.n_assign}};
    output.emit(result.dump(2));
    output.note(format_certificate(cert));
    return cert.valid ? 0 : kExitValidation;
  }

  if (reconstruct->parsed()) {
    const SpectrumSpec spec = load_spectrum(spectrum_path);
    ReconstructionReport report;
    if (method == "direct") {
      const double tol = tolerance > 0.0 ? tolerance : 1e-8;
      report = reconstruct_direct(spec, tol);
    } else {
      if (!schedule_path.empty()) {
        std::ifstream in(schedule_path);
        if (!in) {
          throw std::invalid_argument("cannot open schedule file: " +
                                      schedule_path);
        }
        json j;
        in >> j;
        schedule = schedule_from_json(j);
      }
      if (seed != 0) schedule.seed = seed;
      const double tol = tolerance > 0.0 ? tolerance : 1e-6;
      report = reconstruct_annealing(spec, schedule.seed, schedule, tol);
    }
    output.emit(report_to_json(report).dump(2));
    output.note(format_variation(coupling_variation(report.chain)));
    char buf[120];
    std::snprintf(buf, sizeof buf, "residual=%.3g, method=%s, converged=%s",
                  report.spectral_residual, method.c_str(),
                  report.converged ? "yes" : "no");
    output.note(buf);
    return report.converged ? 0 : kExitNonConvergence;
  }

  if (correlate->parsed()) {
    const SymmetricChainSpec chain = load_chain(chain_path);
    warn_all(validate(chain));
    const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));
    const double temperature = parse_temperature(temperature_text);
    const ThermalState state = ThermalState::from_temperature(eig, temperature);
    const std::vector<double> grid = linspace(tmin, tmax, steps);

    CorrelationSeries series;
    if (observable == "zz") {
      if (sites.size() != 2) {
        throw std::invalid_argument("zz needs two sites");
      }
      series = zz_correlation(eig, state, sites[0], sites[1], grid);
    } else if (sites.size() == 1) {
      series = xx_correlation(eig, state, sites[0], grid);
    } else {
      series = xx_cross_correlation(eig, state, std::min(sites[0], sites[1]),
                                    std::max(sites[0], sites[1]), grid);
    }
    series.chain_hash = chain_hash(chain);
    output.emit(format == "csv" ? to_csv(series)
                                : series_to_json(series).dump(2));
    return 0;
  }

  if (fidelity_cmd->parsed()) {
    const SymmetricChainSpec chain = load_chain(chain_path);
    warn_all(validate(chain));
    const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));
    std::vector<double> grid;
    if (!std::isnan(single_time)) {
      grid.push_back(single_time);
    } else {
      grid = linspace(tmin, tmax, steps);
    }
    if (format == "json") {
      json result;
      result["chain_hash"] = chain_hash(chain);
      result["times"] = grid;
      std::vector<double> values;
      for (double t : grid) values.push_back(transfer_fidelity(eig, t));
      result["fidelity"] = values;
      output.emit(result.dump(2));
    } else {
      std::string csv;
      csv += json{{"observable", "fidelity"},
                  {"sites", {static_cast<int>(chain.n_sites) - 1, 0}},
                  {"chain_hash", chain_hash(chain)}}
                 .dump() +
             "\n";
      csv += "t,fidelity\n";
      char buf[80];
      for (double t : grid) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t,
                      transfer_fidelity(eig, t));
        csv += buf;
      }
      output.emit(csv);
    }
    return 0;
  }

  if (oracle->parsed()) {
    const SymmetricChainSpec chain = load_chain(chain_path);
    warn_all(validate(chain));
    const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));
    const double temperature = parse_temperature(temperature_text);
    const double beta = beta_from_temperature(temperature);
    const ThermalState state = ThermalState::make(eig, beta);
    const DenseSpinModel model = build_spin_hamiltonian(chain);
    const std::vector<double> grid = linspace(0.0, oracle_tmax, oracle_steps);
    const int top = chain.n_sites - 1;
    const int mid = top / 2;

    double worst = 0.0;
    auto compare = [&](const CorrelationSeries& fermionic,
                       const CorrelationSeries& ed) {
      for (std::size_t i = 0; i < fermionic.size(); ++i) {
        worst = std::max(worst,
                         std::abs(fermionic.values[i] - ed.values[i]));
      }
    };
    compare(zz_correlation(eig, state, top, 0, grid),
            ed_correlation(model, {SpinAxis::z, top}, {SpinAxis::z, 0}, beta,
                           grid));
    compare(xx_correlation(eig, state, mid, grid),
            ed_correlation(model, {SpinAxis::x, mid}, {SpinAxis::x, mid}, beta,
                           grid));
    compare(xx_cross_correlation(eig, state, 0, mid, grid),
            ed_correlation(model, {SpinAxis::x, 0}, {SpinAxis::x, mid}, beta,
                           grid));

    // Free-fermion structure: the many-body spectrum must be the subset sums
    // of the single-particle energies.
    model.ensure_solved();
    const std::vector<double> sums = subset_sum_spectrum(eig.eigenvalues);
    double spectrum_dev = 0.0;
    for (int i = 0; i < model.dimension(); ++i) {
      spectrum_dev = std::max(spectrum_dev,
                              std::abs(sums[i] - model.energies[i]));
    }

    const double tol = tolerance > 0.0 ? tolerance : 1e-8;
    const bool pass = worst < tol && spectrum_dev < tol;
    json result{{"max_correlator_deviation", worst},
                {"max_spectrum_deviation", spectrum_dev},
                {"tolerance", tol},
                {"pass", pass}};
    output.emit(result.dump(2));
    return pass ? 0 : kExitNonConvergence;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return kExitNonConvergence;
  }
}
