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


#ifndef QSLM_NORMS_HPP
#define QSLM_NORMS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "qslm/error.hpp"

namespace qslm {

/// Exponent p > 0 of an l^p expression. The norm axioms hold for p >= 1 only.
class PExponent {
 public:
  explicit PExponent(double p) : p_(p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw InvalidArgument("exponent p must be a finite positive number");
  }
  double value() const noexcept { return p_; }
  operator double() const noexcept { return p_; }

 private:
  double p_;
};

/// Nonnegative weights mu_j with a descending copy.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> mu) : mu_(std::move(mu)) {
    if (mu_.empty()) throw InvalidArgument("weight vector must not be empty");
    bool any_positive = false;
    for (double m : mu_) {
      if (!(m >= 0.0) || !std::isfinite(m)) throw InvalidArgument("weights must be finite and nonnegative");
      any_positive = any_positive || m > 0.0;
    }
    if (!any_positive) throw InvalidArgument("at least one weight must be positive");
    desc_ = mu_;
    std::sort(desc_.begin(), desc_.end(), std::greater<>());
  }

  static WeightVector uniform(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0)); }

  std::span<const double> mu() const noexcept { return mu_; }
  std::span<const double> mu_desc() const noexcept { return desc_; }
  std::size_t size() const noexcept { return mu_.size(); }
  double total() const noexcept {
    double s = 0.0;
    for (double m : mu_) s += m;
    return s;
  }

 private:
  std::vector<double> mu_;
  std::vector<double> desc_;
};

namespace detail {

inline void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) throw LengthMismatch("vector and weight lengths differ");
}

inline std::vector<double> abs_desc(std::span<const double> v) {
  std::vector<double> a(v.size());
  std::transform(v.begin(), v.end(), a.begin(), [](double x) { return std::abs(x); });
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

// (sum_j w_j a_j^p)^(1/p), scaled by max a_j so large p cannot overflow.
inline double scaled_power_root(std::span<const double> w, std::span<const double> a, double p) {
  double scale = 0.0;
  for (double x : a) scale = std::max(scale, x);
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (w[j] == 0.0 || a[j] == 0.0) continue;
    sum += w[j] * std::pow(a[j] / scale, p);
  }
  return scale * std::pow(sum, 1.0 / p);
}

}  // namespace detail

/// (sum_j mu_j |v_j|^p)^(1/p), weights paired with coordinates in order.
inline double lp_seminorm(std::span<const double> v, const WeightVector& mu, PExponent p) {
  detail::check_lengths(v.size(), mu.size());
  std::vector<double> a(v.size());
  std::transform(v.begin(), v.end(), a.begin(), [](double x) { return std::abs(x); });
  return detail::scaled_power_root(mu.mu(), a, p.value());
}

/// Symmetric weighted l^p norm: descending weights against descending |v_j|.
inline double symmetric_lp_norm(std::span<const double> v, const WeightVector& mu, PExponent p) {
  detail::check_lengths(v.size(), mu.size());
  const auto a = detail::abs_desc(v);
  return detail::scaled_power_root(mu.mu_desc(), a, p.value());
}

/// sum_j mu_desc_j (|v|_desc_j)^p with no outer root.
inline double symmetric_lp_sum(std::span<const double> v, const WeightVector& mu, PExponent p) {
  detail::check_lengths(v.size(), mu.size());
  const auto a = detail::abs_desc(v);
  const auto w = mu.mu_desc();
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (w[j] != 0.0 && a[j] != 0.0) sum += w[j] * std::pow(a[j], p.value());
  return sum;
}

}  // namespace qslm

#endif  // QSLM_NORMS_HPP
