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


// Numerical experiments: the speed-limit comparison table, triangle-inequality
// fuzzers on U(n), and consistency checks of the metric's operational reading.

#ifndef QSLM_EXPERIMENTS_HPP
#define QSLM_EXPERIMENTS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qslm/detail/search.hpp"
#include "qslm/metrics.hpp"
#include "qslm/norms.hpp"
#include "qslm/qsl.hpp"
#include "qslm/unitary.hpp"

namespace qslm {

// ---------------------------------------------------------------------------
// Speed-limit comparison table
// ---------------------------------------------------------------------------

inline constexpr std::array<double, 5> kTableExponents{0.1, 0.5, 1.0, 1.5, 2.0};
inline constexpr double kTableTolerance = 5e-4;

struct TableRow {
  std::string state_label;
  double tau_exact = 0.0;
  /// Independent confirmation of tau_exact by fidelity scanning.
  double tau_scan = 0.0;
  /// tau_c2 / tau_exact at epsilon = 0, one entry per kTableExponents.
  std::array<double, 5> ratios{};
  /// Large-n row only: the same ratios for a finite comb.
  std::optional<std::array<double, 5>> finite_ratios;
  std::size_t finite_n = 0;
};

/// Reference four-decimal values, rows in reproduce_table1 order.
inline const std::array<std::array<double, 5>, 6>& table1_reference() {
  static const std::array<std::array<double, 5>, 6> ref{{
      {0.9897, 0.9450, 0.8786, 0.9982, 0.9003},
      {0.2463, 0.9084, 1.0000, 0.9540, 0.7885},
      {0.0167, 0.6879, 0.9480, 0.9975, 0.8658},
      {0.9897, 0.9450, 0.8786, 0.7923, 0.6366},
      {0.0836, 0.7973, 0.9884, 0.9810, 0.8270},
      {0.0025, 0.5316, 0.8786, 0.9194, 0.7797},
  }};
  return ref;
}

/// Equal superposition of the levels k E, k = -n..n.
inline SpectralState comb_state(std::size_t n, double energy) {
  const std::size_t m = 2 * n + 1;
  std::vector<double> e(m), w(m, 1.0 / static_cast<double>(m));
  for (std::size_t j = 0; j < m; ++j) e[j] = (static_cast<double>(j) - static_cast<double>(n)) * energy;
  return SpectralState(std::move(e), std::move(w));
}

/// Three-level state (1 - beta)|0>, beta/2 at -E and +E.
inline SpectralState three_level_state(double beta, double energy) {
  return SpectralState({0.0, -energy, energy}, {1.0 - beta, 0.5 * beta, 0.5 * beta});
}

/// Large-comb limit of tau_c2 / tau: (p + 1)^(1/p) / (A_p^(1/p) pi).
inline double comb_limit_ratio(double p) {
  const double a = amplitude_constant(PExponent(p)).A_p;
  return std::pow((p + 1.0) / a, 1.0 / p) / kPi;
}

inline std::vector<TableRow> reproduce_table1(std::size_t large_n = 1000) {
  constexpr double kEnergy = 1.0;
  constexpr double kHbar = 1.0;
  const QslConstants c1 = amplitude_constant(PExponent(1.0));

  // For (1 - beta) + beta cos(E t / hbar) the overlap is real and decreasing
  // until E t / hbar = pi, so it first vanishes at arccos(1 - 1 / beta).
  auto three_level_tau = [](double beta) { return std::acos(1.0 - 1.0 / beta) * kHbar / kEnergy; };

  struct Spec {
    std::string label;
    SpectralState state;
    double tau;
  };
  const double beta_ii = 1.0 / (c1.A_p * c1.x_c);
  const double beta_iii = 4.0 / (4.0 - std::sqrt(2.0) + std::sqrt(6.0));
  std::vector<Spec> specs;
  specs.push_back({"equal weights at -E, +E", SpectralState({-kEnergy, kEnergy}, {0.5, 0.5}), kHalfPi * kHbar / kEnergy});
  specs.push_back({"three-level, beta = 1/(A_1 x_c)", three_level_state(beta_ii, kEnergy), three_level_tau(beta_ii)});
  specs.push_back({"three-level, beta = 4/(4 - sqrt2 + sqrt6)", three_level_state(beta_iii, kEnergy), three_level_tau(beta_iii)});
  specs.push_back({"three-level, beta = 1/2", three_level_state(0.5, kEnergy), three_level_tau(0.5)});
  specs.push_back({"equal weights at -E, 0, +E",
                   SpectralState({-kEnergy, 0.0, kEnergy}, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}), 2.0 * kPi * kHbar / (3.0 * kEnergy)});

  std::vector<TableRow> rows;
  for (const Spec& s : specs) {
    TableRow row;
    row.state_label = s.label;
    row.tau_exact = s.tau;
    row.tau_scan = first_passage_time(s.state, 0.0, kHbar);
    for (std::size_t k = 0; k < kTableExponents.size(); ++k)
      row.ratios[k] = tau_c2(s.state, PExponent(kTableExponents[k]), 0.0, kHbar).tau_c2 / s.tau;
    rows.push_back(std::move(row));
  }

  TableRow comb;
  comb.state_label = "equal weights at k E, k = -n..n, large n";
  comb.finite_n = large_n;
  const SpectralState finite = comb_state(large_n, kEnergy);
  comb.tau_exact = kTwoPi * kHbar / (static_cast<double>(2 * large_n + 1) * kEnergy);
  comb.tau_scan = first_passage_time(finite, 0.0, kHbar);
  std::array<double, 5> finite_ratios{};
  for (std::size_t k = 0; k < kTableExponents.size(); ++k) {
    comb.ratios[k] = comb_limit_ratio(kTableExponents[k]);
    finite_ratios[k] = tau_c2(finite, PExponent(kTableExponents[k]), 0.0, kHbar).tau_c2 / comb.tau_exact;
  }
  comb.finite_ratios = finite_ratios;
  rows.push_back(std::move(comb));
  return rows;
}

// ---------------------------------------------------------------------------
// Fuzzers
// ---------------------------------------------------------------------------

inline constexpr double kTriangleTolerance = 1e-9;
inline constexpr double kOracleTolerance = 1e-8;

/// Distance used by the triangle fuzzer.
enum class DistanceForm {
  Metric,         // (sum mu_desc |theta|_desc^p)^(1/p)
  ConjectureSum,  // sum mu_desc |theta|_desc^p, no outer root
};

struct Violation {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::vector<double> values;  // mode-specific, e.g. d(U,V), d(V,W), d(U,W)
  double slack = 0.0;
};

struct FuzzReport {
  std::string mode;
  std::uint64_t trials = 0;
  std::size_t dimension = 0;
  double p = 0.0;
  std::vector<double> mu;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<Violation> violations;
  double max_slack = -std::numeric_limits<double>::infinity();
  // Metric-form triangle runs also check symmetry and bi-invariance.
  double max_symmetry_deviation = 0.0;
  double max_biinvariance_deviation = 0.0;
};

/// Per-trial generator: seed XOR trial index, so any evaluation order agrees.
inline std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) { return std::mt19937_64(seed ^ trial); }

namespace detail {

struct TrialOutcome {
  double slack = -std::numeric_limits<double>::infinity();
  std::vector<double> values;
  double symmetry = 0.0;
  double biinvariance = 0.0;
};

template <class TrialFn>
FuzzReport run_fuzz(FuzzReport report, TrialFn&& trial, unsigned threads) {
  std::vector<TrialOutcome> outcomes(report.trials);
  parallel_for(report.trials, threads, [&](std::size_t i) { outcomes[i] = trial(static_cast<std::uint64_t>(i)); });
  for (std::uint64_t i = 0; i < report.trials; ++i) {
    const TrialOutcome& o = outcomes[i];
    report.max_slack = std::max(report.max_slack, o.slack);
    report.max_symmetry_deviation = std::max(report.max_symmetry_deviation, o.symmetry);
    report.max_biinvariance_deviation = std::max(report.max_biinvariance_deviation, o.biinvariance);
    if (o.slack > report.tolerance) report.violations.push_back({i, report.seed ^ i, o.values, o.slack});
  }
  return report;
}

inline double distance_of(const EigenphaseList& theta, const MetricSpec& spec, DistanceForm form) {
  return form == DistanceForm::Metric ? symmetric_lp_norm(theta.phases(), spec.mu, spec.p)
                                      : symmetric_lp_sum(theta.phases(), spec.mu, spec.p);
}

}  // namespace detail

/// Relative triangle slack (d(U,W) - d(U,V) - d(V,W)) / (d(U,V) + d(V,W)).
inline double relative_triangle_slack(double uv, double vw, double uw) {
  const double rhs = uv + vw;
  return (uw - rhs) / std::max(rhs, 1e-12);
}

/// Triangle inequality over Haar triples (U, V, W). A violation is a relative
/// slack above kTriangleTolerance.
inline FuzzReport triangle_fuzz(std::size_t n, const MetricSpec& spec, std::uint64_t trials, std::uint64_t seed,
                                DistanceForm form, unsigned threads = 0) {
  if (spec.mu.size() != n) throw DimensionMismatch("weight vector length differs from n");
  FuzzReport report;
  report.mode = form == DistanceForm::Metric ? "triangle" : "triangle-conjecture";
  report.trials = trials;
  report.dimension = n;
  report.p = spec.p.value();
  report.mu.assign(spec.mu.mu().begin(), spec.mu.mu().end());
  report.seed = seed;
  report.tolerance = kTriangleTolerance;
  const auto dim = static_cast<Eigen::Index>(n);
  auto trial = [&](std::uint64_t i) {
    auto engine = trial_engine(seed, i);
    const UnitaryMatrix u = haar_random_unitary(dim, engine);
    const UnitaryMatrix v = haar_random_unitary(dim, engine);
    const UnitaryMatrix w = haar_random_unitary(dim, engine);
    auto d = [&](const UnitaryMatrix& a, const UnitaryMatrix& b) {
      return detail::distance_of(relative_eigenphases(a, b), spec, form);
    };
    detail::TrialOutcome o;
    const double uv = d(u, v), vw = d(v, w), uw = d(u, w);
    o.values = {uv, vw, uw};
    o.slack = relative_triangle_slack(uv, vw, uw);
    if (form == DistanceForm::Metric) {
      o.symmetry = std::abs(d(v, u) - uv);
      o.biinvariance = std::max(std::abs(d(w * u, w * v) - uv), std::abs(d(u * w, v * w) - uv));
    }
    return o;
  };
  return detail::run_fuzz(std::move(report), trial, threads);
}

/// Evidence run for the conjecture that sum_j mu_desc_j |theta|_desc_j^p is a
/// metric on U(n) for 0 < p < 1 whenever the largest weight is positive.
inline FuzzReport conjecture_fuzz(std::size_t n, PExponent p, const WeightVector& mu, std::uint64_t trials,
                                  std::uint64_t seed, unsigned threads = 0) {
  if (!(p.value() < 1.0)) throw OutOfRange("conjecture fuzz needs 0 < p < 1");
  return triangle_fuzz(n, MetricSpec{mu, p}, trials, seed, DistanceForm::ConjectureSum, threads);
}

/// Breakpoint minimizer against the dense-grid oracle on Haar pairs.
inline FuzzReport pseudo_oracle_fuzz(std::size_t n, const MetricSpec& spec, std::uint64_t trials, std::uint64_t seed,
                                     std::size_t grid_points = 100000, unsigned threads = 0) {
  if (spec.mu.size() != n) throw DimensionMismatch("weight vector length differs from n");
  FuzzReport report;
  report.mode = "pseudo-oracle";
  report.trials = trials;
  report.dimension = n;
  report.p = spec.p.value();
  report.mu.assign(spec.mu.mu().begin(), spec.mu.mu().end());
  report.seed = seed;
  report.tolerance = kOracleTolerance;
  const auto dim = static_cast<Eigen::Index>(n);
  auto trial = [&](std::uint64_t i) {
    auto engine = trial_engine(seed, i);
    const UnitaryMatrix u = haar_random_unitary(dim, engine);
    const UnitaryMatrix v = haar_random_unitary(dim, engine);
    const EigenphaseList theta = relative_eigenphases(u, v);
    const PhaseMinResult fast = minimize_global_phase(theta, spec);
    const double oracle = pseudometric_grid_oracle(theta, spec, grid_points);
    detail::TrialOutcome o;
    o.values = {fast.value, oracle, fast.argmin_x};
    o.slack = std::abs(fast.value - oracle);
    return o;
  };
  return detail::run_fuzz(std::move(report), trial, threads);
}

// ---------------------------------------------------------------------------
// Consistency of the operational reading
// ---------------------------------------------------------------------------

struct GeneratorReport {
  double principal_value = 0.0;
  double min_branch_value = 0.0;          // over all examined offset vectors
  double min_nonprincipal_value = 0.0;    // over offset vectors with some k_j != 0
  std::uint64_t branches_examined = 0;
  std::uint64_t branches_below_principal = 0;
};

/// Evaluates the symmetric weighted l^p norm of theta_j + 2 pi k_j over
/// branch offsets |k_j| <= k_range: all of them for n <= 4, otherwise
/// `samples` random offset vectors. The principal branch must be minimal.
inline GeneratorReport generator_consistency(const UnitaryMatrix& u, const UnitaryMatrix& v, const MetricSpec& spec,
                                             int k_range, std::uint64_t samples = 4096, std::uint64_t seed = 0) {
  if (k_range < 0) throw InvalidArgument("k_range must be nonnegative");
  const EigenphaseList theta = relative_eigenphases(u, v);
  if (theta.size() != spec.mu.size()) throw DimensionMismatch("weight vector length differs from n");
  const auto t = theta.phases();
  const std::size_t n = t.size();

  GeneratorReport r;
  r.principal_value = symmetric_lp_norm(t, spec.mu, spec.p);
  r.min_branch_value = r.principal_value;
  r.min_nonprincipal_value = std::numeric_limits<double>::infinity();
  const double tol = 1e-12 * std::max(1.0, r.principal_value);

  std::vector<int> k(n, -k_range);
  std::vector<double> shifted(n);
  auto evaluate = [&] {
    bool principal = true;
    for (std::size_t j = 0; j < n; ++j) {
      shifted[j] = t[j] + kTwoPi * k[j];
      principal = principal && k[j] == 0;
    }
    const double val = symmetric_lp_norm(shifted, spec.mu, spec.p);
    ++r.branches_examined;
    r.min_branch_value = std::min(r.min_branch_value, val);
    if (!principal) r.min_nonprincipal_value = std::min(r.min_nonprincipal_value, val);
    if (val < r.principal_value - tol) ++r.branches_below_principal;
  };

  if (n <= 4) {
    while (true) {
      evaluate();
      std::size_t j = 0;
      while (j < n && k[j] == k_range) k[j++] = -k_range;
      if (j == n) break;
      ++k[j];
    }
  } else {
    std::mt19937_64 engine(seed);
    std::uniform_int_distribution<int> offset(-k_range, k_range);
    for (std::uint64_t s = 0; s < samples; ++s) {
      for (int& kj : k) kj = offset(engine);
      evaluate();
    }
  }
  return r;
}

/// Generator consistency on Haar pairs; a violation is any branch below the
/// principal value.
inline FuzzReport generator_fuzz(std::size_t n, const MetricSpec& spec, std::uint64_t trials, std::uint64_t seed,
                                 int k_range = 2, unsigned threads = 0) {
  if (spec.mu.size() != n) throw DimensionMismatch("weight vector length differs from n");
  FuzzReport report;
  report.mode = "generator";
  report.trials = trials;
  report.dimension = n;
  report.p = spec.p.value();
  report.mu.assign(spec.mu.mu().begin(), spec.mu.mu().end());
  report.seed = seed;
  report.tolerance = 0.0;
  const auto dim = static_cast<Eigen::Index>(n);
  auto trial = [&](std::uint64_t i) {
    auto engine = trial_engine(seed, i);
    const UnitaryMatrix u = haar_random_unitary(dim, engine);
    const UnitaryMatrix v = haar_random_unitary(dim, engine);
    const GeneratorReport g = generator_consistency(u, v, spec, k_range, 4096, seed ^ i);
    detail::TrialOutcome o;
    o.values = {g.principal_value, g.min_branch_value, static_cast<double>(g.branches_examined)};
    o.slack = static_cast<double>(g.branches_below_principal);
    return o;
  };
  return detail::run_fuzz(std::move(report), trial, threads);
}

struct RearrangementReport {
  double brute_force_max = 0.0;
  double brute_force_min = 0.0;
  double sorted_pairing = 0.0;
  std::uint64_t permutations = 0;
};

/// Compares max over permutations P of sum_j (mu_P(j) / sum mu) |theta_j|^p
/// with the sorted pairing sum_j mu_hat_desc_j (|theta|_desc_j)^p.
inline RearrangementReport rearrangement_consistency(const EigenphaseList& theta, const WeightVector& mu, PExponent p) {
  const std::size_t n = theta.size();
  if (mu.size() != n) throw LengthMismatch("weight vector length differs from the phase count");
  if (n > 8) throw InvalidArgument("brute-force rearrangement is limited to n <= 8");
  const double total = mu.total();
  std::vector<double> powered(n);
  for (std::size_t j = 0; j < n; ++j) powered[j] = std::pow(std::abs(theta[j]), p.value());

  RearrangementReport r;
  r.brute_force_max = -std::numeric_limits<double>::infinity();
  r.brute_force_min = std::numeric_limits<double>::infinity();
  const auto m = mu.mu();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += (m[perm[j]] / total) * powered[j];
    r.brute_force_max = std::max(r.brute_force_max, s);
    r.brute_force_min = std::min(r.brute_force_min, s);
    ++r.permutations;
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Rank of each coordinate by |theta| descending, summed in index order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return powered[a] > powered[b]; });
  std::vector<double> paired(n);
  for (std::size_t r_ = 0; r_ < n; ++r_) paired[order[r_]] = mu.mu_desc()[r_] / total;
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += paired[j] * powered[j];
  r.sorted_pairing = s;
  return r;
}

}  // namespace qslm

#endif  // QSLM_EXPERIMENTS_HPP
