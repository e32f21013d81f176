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


// The metric d_mu^p and pseudo-metric on U(n) induced by the symmetric
// weighted l^p norm of the eigenphases of U V^{-1}.

#ifndef QSLM_METRICS_HPP
#define QSLM_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "qslm/detail/search.hpp"
#include "qslm/error.hpp"
#include "qslm/norms.hpp"
#include "qslm/unitary.hpp"

namespace qslm {

struct MetricSpec {
  WeightVector mu;
  PExponent p;
};

struct PhaseMinResult {
  double value = 0.0;
  double argmin_x = 0.0;  // in [0, 2 pi)
  std::size_t candidates_examined = 0;
};

/// Bracket width of the 1-D searches, in radians.
inline constexpr double kPhaseSearchTol = 1e-12;

/// Threshold below which a metric value counts as zero.
inline constexpr double kIndiscernibleTol = 1e-8;

namespace detail {

inline void check_metric_dims(const UnitaryMatrix& u, const UnitaryMatrix& v, const MetricSpec& spec) {
  if (u.dim() != v.dim()) throw DimensionMismatch("U and V have different dimensions");
  if (static_cast<std::size_t>(u.dim()) != spec.mu.size())
    throw DimensionMismatch("weight vector length differs from the matrix dimension");
}

inline double normalize_period(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace detail

/// Eigenphases of U V^{-1}; exactly zero when U and V are the same matrix.
inline EigenphaseList relative_eigenphases(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("U and V have different dimensions");
  if (u.matrix() == v.matrix())
    return EigenphaseList::from_angles(std::vector<double>(static_cast<std::size_t>(u.dim()), 0.0));
  return eigenphases(relative_operator(u, v));
}

/// Metric value from already-computed eigenphases of U V^{-1}.
inline double metric_from_phases(const EigenphaseList& theta, const MetricSpec& spec) {
  return symmetric_lp_norm(theta.phases(), spec.mu, spec.p);
}

inline double metric_d(const UnitaryMatrix& u, const UnitaryMatrix& v, const MetricSpec& spec) {
  detail::check_metric_dims(u, v, spec);
  return metric_from_phases(relative_eigenphases(u, v), spec);
}

/// G(x): the metric of e^{ix} U against V, given the eigenphases of U V^{-1}.
inline double phase_objective(std::span<const double> theta, const MetricSpec& spec, double x) {
  std::vector<double> shifted(theta.size());
  std::transform(theta.begin(), theta.end(), shifted.begin(), [x](double t) { return wrap_angle(t + x); });
  return symmetric_lp_norm(shifted, spec.mu, spec.p);
}

/// Minimizes G over one period.
///
/// Between consecutive kinks of G (wrap cuts pi - theta_j, zero crossings
/// -theta_j, and order swaps -(theta_i + theta_j)/2 mod pi) the pairing and
/// all signs are fixed, so each piece is smooth. Every kink is evaluated and
/// each piece gets a golden-section search; for p == 1 the pieces are affine
/// and the kinks suffice.
inline PhaseMinResult minimize_global_phase(const EigenphaseList& theta, const MetricSpec& spec) {
  if (theta.size() != spec.mu.size()) throw DimensionMismatch("eigenphase count differs from weight length");
  const auto t = theta.phases();
  const std::size_t n = t.size();

  std::vector<double> kinks{0.0};
  kinks.reserve(2 * n + n * (n - 1) + 1);
  for (std::size_t j = 0; j < n; ++j) {
    kinks.push_back(detail::normalize_period(kPi - t[j]));
    kinks.push_back(detail::normalize_period(-t[j]));
    for (std::size_t i = 0; i < j; ++i) {
      const double s = -0.5 * (t[i] + t[j]);
      kinks.push_back(detail::normalize_period(s));
      kinks.push_back(detail::normalize_period(s + kPi));
    }
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());

  auto objective = [&](double x) { return phase_objective(t, spec, x); };

  PhaseMinResult best{objective(kinks.front()), kinks.front(), 0};
  auto consider = [&best](double x, double value) {
    x = detail::normalize_period(x);
    if (value < best.value || (value == best.value && x < best.argmin_x)) {
      best.value = value;
      best.argmin_x = x;
    }
  };

  const bool piecewise_affine = spec.p.value() == 1.0;
  for (std::size_t k = 0; k < kinks.size(); ++k) {
    const double a = kinks[k];
    const double b = (k + 1 < kinks.size()) ? kinks[k + 1] : kinks.front() + kTwoPi;
    consider(a, objective(a));
    ++best.candidates_examined;
    if (piecewise_affine || b - a <= kPhaseSearchTol) continue;
    const auto m = detail::golden_section_min(objective, a, b, kPhaseSearchTol);
    consider(m.x, m.value);
    ++best.candidates_examined;
  }
  return best;
}

inline PhaseMinResult pseudometric_d(const UnitaryMatrix& u, const UnitaryMatrix& v, const MetricSpec& spec) {
  detail::check_metric_dims(u, v, spec);
  return minimize_global_phase(relative_eigenphases(u, v), spec);
}

/// Test oracle for the global-phase minimum: dense uniform grid on [0, 2 pi),
/// then golden-section refinement around every grid local minimum that could
/// still hold the global one.
inline double pseudometric_grid_oracle(const EigenphaseList& theta, const MetricSpec& spec, std::size_t grid_points) {
  if (grid_points < 3) throw InvalidArgument("grid oracle needs at least 3 points");
  if (theta.size() != spec.mu.size()) throw DimensionMismatch("eigenphase count differs from weight length");
  const auto t = theta.phases();
  auto objective = [&](double x) { return phase_objective(t, spec, x); };

  const double h = kTwoPi / static_cast<double>(grid_points);
  std::vector<double> g(grid_points);
  for (std::size_t k = 0; k < grid_points; ++k) g[k] = objective(h * static_cast<double>(k));
  const double grid_best = *std::min_element(g.begin(), g.end());

  // |G(x) - G(y)| <= g(1, ..., 1) |x - y| for p >= 1. Below 1 the objective
  // is only Holder near a kink, so the modulus is |x - y|^p. Doubled as a
  // margin.
  const std::vector<double> ones(t.size(), 1.0);
  const double lipschitz = symmetric_lp_norm(ones, spec.mu, spec.p);
  const double p = spec.p.value();
  const double slack = 2.0 * lipschitz * (p >= 1.0 ? h : std::pow(h, p) / p);

  // A cusp of order p < 1 turns an x error of d into a value error of d^p,
  // so those refinements run down to machine resolution.
  const double refine_tol = p >= 1.0 ? kPhaseSearchTol : 0.0;
  double best = grid_best;
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double prev = g[(k + grid_points - 1) % grid_points];
    const double next = g[(k + 1) % grid_points];
    if (!(g[k] < prev) || g[k] > next || g[k] > grid_best + slack) continue;
    const double x = h * static_cast<double>(k);
    best = std::min(best, detail::golden_section_min(objective, x - h, x + h, refine_tol).value);
  }
  return best;
}

/// d_mu^p(U V, V U).
inline double degree_of_noncommutativity(const UnitaryMatrix& u, const UnitaryMatrix& v, const MetricSpec& spec) {
  detail::check_metric_dims(u, v, spec);
  return metric_d(u * v, v * u, spec);
}

/// Evaluates metric_d over many pairs; results are stored by index so they do
/// not depend on the number of threads.
inline std::vector<double> metric_batch(std::span<const std::pair<UnitaryMatrix, UnitaryMatrix>> pairs,
                                        const MetricSpec& spec, unsigned threads = 0) {
  for (const auto& [u, v] : pairs) detail::check_metric_dims(u, v, spec);
  std::vector<double> out(pairs.size());
  detail::parallel_for(pairs.size(), threads, [&](std::size_t i) { out[i] = metric_d(pairs[i].first, pairs[i].second, spec); });
  return out;
}

}  // namespace qslm

#endif  // QSLM_METRICS_HPP
