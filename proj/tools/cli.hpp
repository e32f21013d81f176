// Copyright 2026 The qslm Authors
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


// Command-line front end. Kept in a header so the test suite can drive it
// in-process.

#ifndef QSLM_TOOLS_CLI_HPP
#define QSLM_TOOLS_CLI_HPP

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qslm/qslm.hpp"

namespace qslm::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kValidation = 3,
  kDimension = 4,
  kDegenerate = 5,
  kGoldenCheck = 6,
  kFuzzViolation = 7,
};

struct CliConfig {
  double hbar = 1.0;
  int precision = 6;
  std::string format = "text";
  std::uint64_t seed = 0;
};

inline constexpr const char* kCsvColumns = R"(CSV columns (fixed order):
  phases     index,theta
  metric     value                          (--pseudo: value,argmin_x,candidates_examined)
  bound      p,epsilon,hbar,x_c,A_p,tau_c1,tau_c2,moment_Ep,dpe,optimal_reference,tight,phase_angles
  constants  p,x_c,A_p
  table1     state,tau_exact,tau_scan,r_p0.1,r_p0.5,r_p1.0,r_p1.5,r_p2.0
  fuzz       mode,trials,n,p,seed,tolerance,violations,max_slack,max_symmetry_deviation,max_biinvariance_deviation
phase_angles is ';'-separated. Exit codes: 0 ok, 2 parse, 3 validation, 4 dimension,
5 degenerate state, 6 table check failed, 7 fuzz violations.)";

namespace detail {

inline std::string fmt(double x, const CliConfig& c) { return io::format_real(x, c.precision); }

inline UnitaryMatrix load_unitary(const std::string& path) {
  const ComplexMatrix m = io::matrix_from_json(io::read_json_file(path));
  return validate_unitary(m);
}

inline WeightVector weights_or_uniform(const std::vector<double>& mu, std::size_t n) {
  return mu.empty() ? WeightVector::uniform(n) : WeightVector(mu);
}

inline int cmd_phases(const CliConfig& c, const std::string& file, std::ostream& out) {
  const EigenphaseList theta = eigenphases(load_unitary(file));
  std::vector<double> phases(theta.phases().begin(), theta.phases().end());
  if (c.format == "json") {
    out << io::json{{"n", phases.size()}, {"phases", phases}}.dump() << '\n';
  } else if (c.format == "csv") {
    out << "index,theta\n";
    for (std::size_t i = 0; i < phases.size(); ++i) out << i << ',' << fmt(phases[i], c) << '\n';
  } else {
    out << io::join(phases, c.precision, " ") << '\n';
  }
  return kOk;
}

inline int cmd_metric(const CliConfig& c, const std::string& ufile, const std::string& vfile,
                      const std::vector<double>& mu, double p, bool pseudo, std::ostream& out, std::ostream& err) {
  const UnitaryMatrix u = load_unitary(ufile);
  const UnitaryMatrix v = load_unitary(vfile);
  if (u.dim() != v.dim()) throw DimensionMismatch("U and V have different dimensions");
  if (!mu.empty() && static_cast<Eigen::Index>(mu.size()) != u.dim())
    throw DimensionMismatch("--mu has " + std::to_string(mu.size()) + " entries for dimension " + std::to_string(u.dim()));
  const MetricSpec spec{weights_or_uniform(mu, static_cast<std::size_t>(u.dim())), PExponent(p)};
  if (p < 1.0) err << "warning: p < 1, the metric axioms are conjectural here\n";
  if (pseudo) {
    const PhaseMinResult r = pseudometric_d(u, v, spec);
    if (c.format == "json")
      out << io::to_json(r).dump() << '\n';
    else if (c.format == "csv")
      out << "value,argmin_x,candidates_examined\n"
          << fmt(r.value, c) << ',' << fmt(r.argmin_x, c) << ',' << r.candidates_examined << '\n';
    else
      out << fmt(r.value, c) << ' ' << fmt(r.argmin_x, c) << '\n';
  } else {
    const double d = metric_d(u, v, spec);
    if (c.format == "json")
      out << io::json{{"value", d}}.dump() << '\n';
    else if (c.format == "csv")
      out << "value\n" << fmt(d, c) << '\n';
    else
      out << fmt(d, c) << '\n';
  }
  return kOk;
}

inline int cmd_bound(const CliConfig& c, const std::string& file, double p, double epsilon, std::ostream& out,
                     std::ostream& err) {
  const SpectralState state = io::state_from_json(io::read_json_file(file));
  const PExponent pe(p);
  if (p > kHalfPi) err << "warning: p > pi/2, the bound is not tight for every epsilon\n";
  if (p > 2.0 && epsilon > 0.25)
    err << "warning: p > 2 with epsilon > 1/4, A_p = 1/2 does not guarantee a valid lower bound\n";
  const QslReport r = tau_c2(state, pe, epsilon, c.hbar);
  if (c.format == "json") {
    io::json j = io::to_json(r);
    j.update(io::state_to_json(state));
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "p,epsilon,hbar,x_c,A_p,tau_c1,tau_c2,moment_Ep,dpe,optimal_reference,tight,phase_angles\n"
        << fmt(r.p, c) << ',' << fmt(r.epsilon, c) << ',' << fmt(r.hbar, c) << ',' << fmt(r.x_c, c) << ','
        << fmt(r.A_p, c) << ',' << fmt(r.tau_c1, c) << ',' << fmt(r.tau_c2, c) << ',' << fmt(r.moment_Ep, c) << ','
        << fmt(r.dpe, c) << ',' << fmt(r.optimal_reference, c) << ',' << (r.tight ? "true" : "false") << ','
        << io::join(r.phase_angles, c.precision, ";") << '\n';
  } else {
    out << "p " << fmt(r.p, c) << "\nepsilon " << fmt(r.epsilon, c) << "\nx_c " << fmt(r.x_c, c) << "\nA_p "
        << fmt(r.A_p, c) << "\ntau_c1 " << fmt(r.tau_c1, c) << "\ntau_c2 " << fmt(r.tau_c2, c) << "\nmoment_Ep "
        << fmt(r.moment_Ep, c) << "\ndpe " << fmt(r.dpe, c) << "\noptimal_reference " << fmt(r.optimal_reference, c)
        << "\ntight " << (r.tight ? "true" : "false") << "\nphase_angles " << io::join(r.phase_angles, c.precision, " ")
        << '\n';
  }
  return kOk;
}

inline int cmd_constants(const CliConfig& c, double p, std::ostream& out) {
  const QslConstants k = amplitude_constant(PExponent(p));
  if (c.format == "json")
    out << io::to_json(k).dump() << '\n';
  else if (c.format == "csv")
    out << "p,x_c,A_p\n" << fmt(k.p, c) << ',' << fmt(k.x_c, c) << ',' << fmt(k.A_p, c) << '\n';
  else
    out << fmt(k.x_c, c) << ' ' << fmt(k.A_p, c) << '\n';
  return kOk;
}

inline int cmd_table1(const CliConfig& c, bool check, std::size_t large_n, std::ostream& out, std::ostream& err) {
  const std::vector<TableRow> rows = reproduce_table1(large_n);
  if (c.format == "json") {
    io::json j = io::json::array();
    for (const TableRow& r : rows) j.push_back(io::to_json(r));
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "state,tau_exact,tau_scan,r_p0.1,r_p0.5,r_p1.0,r_p1.5,r_p2.0\n";
    for (const TableRow& r : rows) {
      out << '"' << r.state_label << "\"," << fmt(r.tau_exact, c) << ',' << fmt(r.tau_scan, c);
      for (double x : r.ratios) out << ',' << fmt(x, c);
      out << '\n';
    }
  } else {
    out << "tau_exact  p=0.1 p=0.5 p=1.0 p=1.5 p=2.0  state\n";
    for (const TableRow& r : rows) {
      out << io::format_real(r.tau_exact, c.precision);
      for (double x : r.ratios) out << ' ' << io::format_real(x, std::min(c.precision, 4));
      out << "  " << r.state_label << '\n';
    }
  }
  if (!check) return kOk;

  const auto& ref = table1_reference();
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < kTableExponents.size(); ++k) {
      const double dev = std::abs(rows[i].ratios[k] - ref[i][k]);
      if (dev > kTableTolerance) {
        ok = false;
        err << "check failed: row " << i + 1 << ", p = " << kTableExponents[k] << ": computed "
            << io::format_real(rows[i].ratios[k], 6) << ", reference " << io::format_real(ref[i][k], 4) << '\n';
      }
      if (rows[i].finite_ratios && std::abs((*rows[i].finite_ratios)[k] - rows[i].ratios[k]) > 1e-2) {
        ok = false;
        err << "check failed: finite comb n = " << rows[i].finite_n << ", p = " << kTableExponents[k]
            << " is not within 1e-2 of the limit\n";
      }
    }
  return ok ? kOk : kGoldenCheck;
}

struct FuzzArgs {
  std::size_t n = 2;
  double p = 1.0;
  std::vector<double> mu;
  std::uint64_t trials = 1000;
  std::string mode = "triangle";
  unsigned threads = 0;
  std::size_t grid_points = 100000;
  int k_range = 2;
};

inline int cmd_fuzz(const CliConfig& c, const FuzzArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n < 1) throw InvalidArgument("--n must be >= 1");
  if (!a.mu.empty() && a.mu.size() != a.n)
    throw DimensionMismatch("--mu has " + std::to_string(a.mu.size()) + " entries for n = " + std::to_string(a.n));
  const MetricSpec spec{weights_or_uniform(a.mu, a.n), PExponent(a.p)};
  FuzzReport r;
  if (a.mode == "triangle") {
    if (a.p < 1.0) {
      err << "note: p < 1, fuzzing the conjectured metric sum_j mu_j |theta|_j^p\n";
      r = conjecture_fuzz(a.n, spec.p, spec.mu, a.trials, c.seed, a.threads);
    } else {
      r = triangle_fuzz(a.n, spec, a.trials, c.seed, DistanceForm::Metric, a.threads);
    }
  } else if (a.mode == "pseudo-oracle") {
    r = pseudo_oracle_fuzz(a.n, spec, a.trials, c.seed, a.grid_points, a.threads);
  } else {
    r = generator_fuzz(a.n, spec, a.trials, c.seed, a.k_range, a.threads);
  }
  if (c.format == "json") {
    out << io::to_json(r).dump() << '\n';
  } else if (c.format == "csv") {
    out << "mode,trials,n,p,seed,tolerance,violations,max_slack,max_symmetry_deviation,max_biinvariance_deviation\n"
        << r.mode << ',' << r.trials << ',' << r.dimension << ',' << fmt(r.p, c) << ',' << r.seed << ','
        << io::json(r.tolerance).dump() << ',' << r.violations.size() << ',' << io::json(r.max_slack).dump() << ','
        << io::json(r.max_symmetry_deviation).dump() << ',' << io::json(r.max_biinvariance_deviation).dump() << '\n';
  } else {
    out << "mode " << r.mode << "\ntrials " << r.trials << "\nn " << r.dimension << "\np " << fmt(r.p, c)
        << "\nseed " << r.seed << "\nviolations " << r.violations.size() << "\nmax_slack "
        << io::json(r.max_slack).dump() << '\n';
    for (const Violation& v : r.violations)
      out << "violation trial " << v.trial << " seed " << v.seed << " slack " << io::json(v.slack).dump() << '\n';
  }
  return r.violations.empty() ? kOk : kFuzzViolation;
}

}  // namespace detail

/// Runs the tool; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metrics on U(n) from weighted l^p norms and the matching quantum speed limits", "qslm"};
  app.footer(kCsvColumns);
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--precision", cfg.precision, "Decimal places of text and CSV output")->check(CLI::Range(1, 17));
  app.add_option("--hbar", cfg.hbar, "Reduced Planck constant")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Base seed of the fuzzers");

  std::string file_a, file_b;
  std::vector<double> mu;
  double p = 1.0, epsilon = 0.0;
  bool pseudo = false, check = false;
  std::size_t large_n = 1000;
  detail::FuzzArgs fa;

  auto* phases = app.add_subcommand("phases", "Principal eigenphases of a unitary matrix");
  phases->add_option("matrix", file_a, "Matrix JSON file")->required();

  auto* metric = app.add_subcommand("metric", "Metric (or with --pseudo, pseudo-metric) between two unitaries");
  metric->add_option("u", file_a, "Matrix JSON file of U")->required();
  metric->add_option("v", file_b, "Matrix JSON file of V")->required();
  metric->add_option("--mu", mu, "Comma-separated weights (default: all ones)")->delimiter(',');
  metric->add_option("--p", p, "Exponent p > 0")->required();
  metric->add_flag("--pseudo", pseudo, "Minimize over the global phase");

  auto* bound = app.add_subcommand("bound", "Speed-limit bounds for a spectral state");
  bound->add_option("state", file_a, "State JSON file")->required();
  bound->add_option("--p", p, "Exponent p > 0")->required();
  bound->add_option("--epsilon", epsilon, "Target fidelity in [0, 1]")->required();

  auto* constants = app.add_subcommand("constants", "Critical angle x_c and constant A_p");
  constants->add_option("--p", p, "Exponent p > 0")->required();

  auto* table1 = app.add_subcommand("table1", "Speed-limit comparison table at epsilon = 0");
  table1->add_flag("--check", check, "Compare with the reference four-decimal values");
  table1->add_option("--large-n", large_n, "Comb size used for the large-n row")->check(CLI::PositiveNumber);

  auto* fuzz = app.add_subcommand("fuzz", "Randomized checks on Haar-random unitaries");
  fuzz->add_option("--n", fa.n, "Dimension")->required();
  fuzz->add_option("--p", fa.p, "Exponent p > 0")->required();
  fuzz->add_option("--mu", fa.mu, "Comma-separated weights (default: all ones)")->delimiter(',');
  fuzz->add_option("--trials", fa.trials, "Number of random trials");
  fuzz->add_option("--mode", fa.mode, "triangle | pseudo-oracle | generator")
      ->check(CLI::IsMember({"triangle", "pseudo-oracle", "generator"}));
  fuzz->add_option("--threads", fa.threads, "Worker threads (0 = hardware)");
  fuzz->add_option("--grid-points", fa.grid_points, "Grid size of the pseudo-metric oracle");
  fuzz->add_option("--k-range", fa.k_range, "Branch offset range of the generator check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParse;
  }

  try {
    if (*phases) return detail::cmd_phases(cfg, file_a, out);
    if (*metric) return detail::cmd_metric(cfg, file_a, file_b, mu, p, pseudo, out, err);
    if (*bound) return detail::cmd_bound(cfg, file_a, p, epsilon, out, err);
    if (*constants) return detail::cmd_constants(cfg, p, out);
    if (*table1) return detail::cmd_table1(cfg, check, large_n, out, err);
    if (*fuzz) return detail::cmd_fuzz(cfg, fa, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const NotUnitary& e) {
    err << "validation error: " << e.what() << "\ndefect " << e.defect() << '\n';
    return kValidation;
  } catch (const DimensionMismatch& e) {
    err << "dimension error: " << e.what() << '\n';
    return kDimension;
  } catch (const DegenerateState& e) {
    err << "degenerate state: " << e.what() << '\n';
    return kDegenerate;
  } catch (const EigenSolverFailure& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  }
  return kInternal;
}

}  // namespace qslm::cli

#endif  // QSLM_TOOLS_CLI_HPP
