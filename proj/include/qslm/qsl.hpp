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


// Quantum speed limits built on the p-th absolute energy moment.
//
// For 0 < p <= 2 the constant A_p = sup_{x>0} (1 - cos x) / x^p is attained
// at the critical angle x_c solving p tan(x_c / 2) = x_c; for p > 2 the
// constant of p = 2 is used. With it, the time to reach fidelity eps obeys
//
//   tau >= tau_c1 = hbar ((1 - sqrt(eps)) / (A_p <|E|^p>))^(1/p)
//   tau >= tau_c2 = hbar / D_pE ((1 - sqrt(eps)) / A_p)^(1/p)
//
// where D_pE is the p-th root of the moment minimized over the reference
// energy. Both are tight for p <= pi/2 on the three-level magic state.

#ifndef QSLM_QSL_HPP
#define QSLM_QSL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "qslm/detail/search.hpp"
#include "qslm/error.hpp"
#include "qslm/norms.hpp"
#include "qslm/unitary.hpp"

namespace qslm {

inline constexpr double kHalfPi = 0.5 * kPi;

/// Energies E_j with occupation probabilities w_j = |alpha_j|^2.
class SpectralState {
 public:
  SpectralState(std::vector<double> energies, std::vector<double> weights)
      : energies_(std::move(energies)), weights_(std::move(weights)) {
    if (energies_.size() != weights_.size()) throw LengthMismatch("energies and weights differ in length");
    if (energies_.empty()) throw InvalidArgument("state must have at least one level");
    double total = 0.0;
    for (std::size_t j = 0; j < energies_.size(); ++j) {
      if (!std::isfinite(energies_[j])) throw InvalidArgument("energies must be finite");
      if (!(weights_[j] >= 0.0) || !std::isfinite(weights_[j])) throw InvalidArgument("weights must be nonnegative");
      total += weights_[j];
    }
    if (std::abs(total - 1.0) > 1e-12) throw InvalidArgument("weights must sum to 1");
  }

  std::span<const double> energies() const noexcept { return energies_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return energies_.size(); }

 private:
  std::vector<double> energies_;
  std::vector<double> weights_;
};

struct QslConstants {
  double p = 0.0;
  double x_c = 0.0;
  double A_p = 0.0;
};

struct QslReport {
  double p = 0.0;
  double epsilon = 0.0;
  double hbar = 1.0;
  double x_c = 0.0;
  double A_p = 0.0;
  double tau_c1 = 0.0;
  double tau_c2 = 0.0;
  double moment_Ep = 0.0;  // at reference energy 0
  double dpe = 0.0;
  double optimal_reference = 0.0;
  bool tight = false;  // p <= pi/2
  std::vector<double> phase_angles;  // tau_c2 |E_j| / hbar
};

struct DpeResult {
  double value = 0.0;
  double optimal_reference = 0.0;
};

/// Root of p sin(x/2) - x cos(x/2) in (0, pi) for 0 < p < 2; zero at p = 2.
inline double critical_angle(double p) {
  if (!(p > 0.0) || !(p <= 2.0)) throw OutOfRange("critical angle needs 0 < p <= 2");
  if (p == 2.0) return 0.0;
  auto h = [p](double x) { return p * std::sin(0.5 * x) - x * std::cos(0.5 * x); };
  // h < 0 just above 0, h(pi) = p > 0. Bisect down to adjacent doubles:
  // near x = pi the tan form amplifies any slack by 1 / cos^2(x/2).
  double lo = 0.0, hi = kPi;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline QslConstants amplitude_constant(PExponent pe) {
  const double p = pe.value();
  if (p > 2.0) return {p, 0.0, 0.5};
  const double xc = critical_angle(p);
  if (p >= 2.0 - 1e-6) return {p, xc, 0.5};
  const double s = std::sin(0.5 * xc);
  return {p, xc, 2.0 * s * s / std::pow(xc, p)};
}

/// sum_j w_j |E_j - reference|^p.
inline double moment_Ep(const SpectralState& state, PExponent p, double reference) {
  const auto e = state.energies();
  const auto w = state.weights();
  double sum = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const double d = std::abs(e[j] - reference);
    if (w[j] != 0.0 && d != 0.0) sum += w[j] * std::pow(d, p.value());
  }
  return sum;
}

/// min over the reference level of moment_Ep^(1/p).
inline DpeResult dpe(const SpectralState& state, PExponent pe) {
  const double p = pe.value();
  const auto e = state.energies();
  const auto w = state.weights();
  double ref = 0.0;
  if (p == 1.0) {
    // Weighted median.
    std::vector<std::size_t> idx(e.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return e[a] < e[b]; });
    double acc = 0.0;
    ref = e[idx.back()];
    for (std::size_t i : idx) {
      acc += w[i];
      if (acc >= 0.5) {
        ref = e[i];
        break;
      }
    }
  } else if (p == 2.0) {
    ref = 0.0;
    for (std::size_t j = 0; j < e.size(); ++j) ref += w[j] * e[j];
  } else if (p > 1.0) {
    const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
    const double scale = std::max({1.0, std::abs(*lo), std::abs(*hi)});
    auto f = [&](double x) { return moment_Ep(state, pe, x); };
    ref = detail::golden_section_min(f, *lo, *hi, 1e-13 * scale).x;
  } else {
    // Concave pieces: the minimum sits on one of the levels.
    double best = INFINITY;
    for (std::size_t j = 0; j < e.size(); ++j) {
      const double m = moment_Ep(state, pe, e[j]);
      if (m < best || (m == best && e[j] < ref)) {
        best = m;
        ref = e[j];
      }
    }
  }
  return {std::pow(moment_Ep(state, pe, ref), 1.0 / p), ref};
}

namespace detail {

inline void check_epsilon(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw OutOfRange("fidelity epsilon must lie in [0, 1]");
}

}  // namespace detail

inline double tau_c1(const SpectralState& state, PExponent p, double epsilon, double hbar = 1.0) {
  detail::check_epsilon(epsilon);
  if (epsilon == 1.0) return 0.0;
  const double moment = moment_Ep(state, p, 0.0);
  if (moment == 0.0) throw DegenerateState("zero energy moment: no finite bound");
  const double a = amplitude_constant(p).A_p;
  return hbar * std::pow((1.0 - std::sqrt(epsilon)) / (a * moment), 1.0 / p.value());
}

inline QslReport tau_c2(const SpectralState& state, PExponent p, double epsilon, double hbar = 1.0) {
  detail::check_epsilon(epsilon);
  const QslConstants c = amplitude_constant(p);
  QslReport r;
  r.p = p.value();
  r.epsilon = epsilon;
  r.hbar = hbar;
  r.x_c = c.x_c;
  r.A_p = c.A_p;
  r.tight = p.value() <= kHalfPi;
  r.moment_Ep = moment_Ep(state, p, 0.0);
  const DpeResult d = dpe(state, p);
  r.dpe = d.value;
  r.optimal_reference = d.optimal_reference;
  if (epsilon < 1.0) {
    if (r.dpe == 0.0) throw DegenerateState("state has a single energy level: no finite bound");
    const double factor = std::pow((1.0 - std::sqrt(epsilon)) / c.A_p, 1.0 / p.value());
    r.tau_c2 = hbar / r.dpe * factor;
    r.tau_c1 = tau_c1(state, p, epsilon, hbar);
  }
  r.phase_angles.reserve(state.size());
  for (double e : state.energies()) r.phase_angles.push_back(r.tau_c2 * std::abs(e) / hbar);
  return r;
}

/// Three-level state sqrt(1-beta)|0> + sqrt(beta/2)(|-E> + |E>) with
/// beta = (1 - sqrt(eps)) / (A_p x_c^p).
inline SpectralState magic_state(PExponent pe, double epsilon, double energy) {
  detail::check_epsilon(epsilon);
  if (!(energy > 0.0) || !std::isfinite(energy)) throw InvalidArgument("magic state energy must be positive");
  const double p = pe.value();
  if (p >= 2.0) throw InvalidP("magic state needs p < 2");
  const QslConstants c = amplitude_constant(pe);
  double beta = (1.0 - std::sqrt(epsilon)) / (c.A_p * std::pow(c.x_c, p));
  if (beta > 1.0 + 1e-9) throw InvalidP("magic state is not a valid state for this (p, epsilon); p <= pi/2 always works");
  beta = std::clamp(beta, 0.0, 1.0);
  return SpectralState({0.0, -energy, energy}, {1.0 - beta, 0.5 * beta, 0.5 * beta});
}

namespace detail {

struct Overlap {
  Complex amplitude;
  Complex derivative;
};

inline Overlap overlap(const SpectralState& state, double t, double hbar) {
  Overlap o{};
  const auto e = state.energies();
  const auto w = state.weights();
  for (std::size_t j = 0; j < e.size(); ++j) {
    const Complex z = w[j] * std::polar(1.0, -e[j] * t / hbar);
    o.amplitude += z;
    o.derivative += Complex(0.0, -e[j] / hbar) * z;
  }
  return o;
}

inline double fidelity_slope(const SpectralState& state, double t, double hbar) {
  const Overlap o = overlap(state, t, hbar);
  return 2.0 * std::real(std::conj(o.amplitude) * o.derivative);
}

// Common period of the distinct energy gaps, or 0 if they look incommensurate.
inline double recurrence_gap(std::span<const double> energies) {
  std::vector<double> e(energies.begin(), energies.end());
  std::sort(e.begin(), e.end());
  const double scale = std::max(std::abs(e.front()), std::abs(e.back()));
  std::vector<double> gaps;
  for (std::size_t j = 1; j < e.size(); ++j)
    if (e[j] - e[j - 1] > 1e-12 * scale) gaps.push_back(e[j] - e[j - 1]);
  if (gaps.empty()) return 0.0;
  const double max_gap = *std::max_element(gaps.begin(), gaps.end());
  const double tol = 1e-9 * max_gap;
  double g = gaps.front();
  for (double d : gaps) {
    double a = std::max(g, d), b = std::min(g, d);
    while (b > tol) {
      double r = std::fmod(a, b);
      if (b - r <= tol) r = 0.0;
      a = b;
      b = r;
    }
    g = a;
    if (g < 1e-6 * max_gap) return 0.0;
  }
  return g;
}

}  // namespace detail

/// |sum_j w_j exp(-i E_j t / hbar)|^2.
inline double fidelity_at(const SpectralState& state, double t, double hbar = 1.0) {
  return std::norm(detail::overlap(state, t, hbar).amplitude);
}

struct PassageOptions {
  double hbar = 1.0;
  /// Scan horizon; 0 selects the recurrence period when the gaps are
  /// commensurate, otherwise max_steps scan steps.
  double horizon = 0.0;
  std::size_t max_steps = std::size_t{1} << 22;
  /// Fidelity excess below which a tangential touch counts as attained.
  double touch_tol = 1e-12;
};

/// Smallest t > 0 with fidelity_at(state, t) = epsilon.
///
/// Scans with step pi hbar / (64 max|E_j|), below the Nyquist spacing of the
/// fidelity's highest frequency, then bisects the first bracketing interval.
/// Tangential zeros, which are the norm when epsilon = 0, are found by
/// bisecting the sign change of the fidelity's slope.
inline double first_passage_time(const SpectralState& state, double epsilon, const PassageOptions& opt = {}) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw OutOfRange("first passage needs epsilon in [0, 1)");
  const double hbar = opt.hbar;
  double emax = 0.0;
  for (double e : state.energies()) emax = std::max(emax, std::abs(e));
  const double gap = detail::recurrence_gap(state.energies());
  if (emax == 0.0) throw NeverAttained(epsilon, 1.0);
  if (gap == 0.0) {
    const auto [lo, hi] = std::minmax_element(state.energies().begin(), state.energies().end());
    if (*hi - *lo <= 1e-12 * emax) throw NeverAttained(epsilon, 1.0);  // a single level never evolves
  }
  const double step = kPi * hbar / (64.0 * emax);
  double horizon = opt.horizon;
  if (horizon <= 0.0) horizon = gap > 0.0 ? kTwoPi * hbar / gap : step * static_cast<double>(opt.max_steps);
  const auto steps = static_cast<std::size_t>(
      std::min<double>(std::ceil(horizon / step), static_cast<double>(opt.max_steps)));

  auto g = [&](double t) { return fidelity_at(state, t, hbar) - epsilon; };
  auto slope = [&](double t) { return detail::fidelity_slope(state, t, hbar); };

  double infimum = 1.0;
  double t0 = 0.0, d0 = slope(0.0);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t1 = step * static_cast<double>(k);
    const double g1 = g(t1);
    const double d1 = slope(t1);
    if (d0 < 0.0 && d1 >= 0.0) {
      const double tm = detail::bisect(slope, t0, t1, 1e-15);
      const double gm = g(tm);
      infimum = std::min(infimum, gm + epsilon);
      if (gm < 0.0) return detail::bisect(g, t0, tm, 1e-12);
      if (gm <= opt.touch_tol) return tm;
    }
    if (g1 <= 0.0) return g1 == 0.0 ? t1 : detail::bisect(g, t0, t1, 1e-12);
    infimum = std::min(infimum, g1 + epsilon);
    t0 = t1;
    d0 = d1;
  }
  throw NeverAttained(epsilon, infimum);
}

inline double first_passage_time(const SpectralState& state, double epsilon, double hbar) {
  PassageOptions opt;
  opt.hbar = hbar;
  return first_passage_time(state, epsilon, opt);
}

}  // namespace qslm

#endif  // QSLM_QSL_HPP
