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


#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qslm/norms.hpp"

using namespace qslm;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double scale = 3.0) {
  std::normal_distribution<double> g(0.0, scale);
  std::vector<double> v(n);
  for (double& x : v) x = g(rng);
  return v;
}

WeightVector random_weights(std::mt19937_64& rng, std::size_t n, bool strictly_positive = true) {
  std::uniform_real_distribution<double> u(strictly_positive ? 0.05 : 0.0, 2.0);
  std::vector<double> mu(n);
  for (double& m : mu) m = u(rng);
  mu[0] = std::max(mu[0], 0.1);
  return WeightVector(mu);
}

}  // namespace

TEST_CASE("lp_seminorm", "[norms]") {
  CHECK_THAT(lp_seminorm(std::vector{3.0, 4.0}, WeightVector({1, 1}), PExponent(2)), WithinAbs(5.0, 1e-15));
  CHECK_THAT(lp_seminorm(std::vector{1.0, 3.0}, WeightVector({2, 1}), PExponent(1)), WithinAbs(5.0, 1e-15));
  CHECK(lp_seminorm(std::vector{0.0, 0.0, 0.0}, WeightVector({1, 2, 3}), PExponent(0.3)) == 0.0);
  CHECK_THROWS_AS(lp_seminorm(std::vector{1.0}, WeightVector({1, 1}), PExponent(1)), LengthMismatch);
}

TEST_CASE("symmetric_lp_norm", "[norms]") {
  CHECK_THAT(symmetric_lp_norm(std::vector{1.0, 3.0}, WeightVector({2, 1}), PExponent(1)), WithinAbs(7.0, 1e-15));
  CHECK_THAT(symmetric_lp_norm(std::vector{-3.0, 4.0}, WeightVector({1, 1}), PExponent(2)), WithinAbs(5.0, 1e-15));
  CHECK(symmetric_lp_norm(std::vector{0.0, 0.0}, WeightVector({1, 1}), PExponent(0.5)) == 0.0);
  CHECK_THROWS_AS(symmetric_lp_norm(std::vector{1.0}, WeightVector({1, 1}), PExponent(1)), LengthMismatch);
}

TEST_CASE("weights and exponents are validated", "[norms]") {
  CHECK_THROWS_AS(WeightVector({0.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(WeightVector({1.0, -1.0}), InvalidArgument);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{}), InvalidArgument);
  CHECK_THROWS_AS(PExponent(0.0), InvalidArgument);
  CHECK_THROWS_AS(PExponent(-1.0), InvalidArgument);
  const WeightVector w({0.5, 3.0, 1.0});
  CHECK(std::vector<double>(w.mu_desc().begin(), w.mu_desc().end()) == std::vector<double>{3.0, 1.0, 0.5});
}

TEST_CASE("sorted pairing equals the brute-force maximum over permutations", "[norms][oracle]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const auto v = random_vector(rng, n);
    const auto mu = random_weights(rng, n, false);
    for (double p : {0.4, 1.0, 1.7, 3.0}) {
      const double brute = oracle::brute_force_symmetric_norm(v, {mu.mu().begin(), mu.mu().end()}, p);
      CHECK_THAT(symmetric_lp_norm(v, mu, PExponent(p)), WithinRel(brute, 1e-12));
    }
  }
}

TEST_CASE("symmetric norm axioms for p >= 1", "[norms][property]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pick_p(1.0, 6.0);
  std::uniform_real_distribution<double> scalar(-5.0, 5.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    const PExponent p(trial % 5 == 0 ? 1.0 : pick_p(rng));
    const auto mu = random_weights(rng, n);
    const auto u = random_vector(rng, n);
    const auto v = random_vector(rng, n);
    std::vector<double> sum(n);
    for (std::size_t j = 0; j < n; ++j) sum[j] = u[j] + v[j];
    const double gu = symmetric_lp_norm(u, mu, p), gv = symmetric_lp_norm(v, mu, p);
    CHECK(symmetric_lp_norm(sum, mu, p) <= (gu + gv) * (1.0 + 1e-12));

    const double c = scalar(rng);
    std::vector<double> cu(u);
    for (double& x : cu) x *= c;
    CHECK_THAT(symmetric_lp_norm(cu, mu, p), WithinRel(std::abs(c) * gu, 1e-12));

    // Permutation and sign flips leave the value unchanged.
    std::vector<double> shuffled(u);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t j = 0; j < n; j += 2) shuffled[j] = -shuffled[j];
    CHECK(symmetric_lp_norm(shuffled, mu, p) == gu);
  }
}

TEST_CASE("positive definiteness with positive weights", "[norms][property]") {
  std::mt19937_64 rng(8);
  const WeightVector mu({0.2, 1.0, 3.0});
  for (double p : {0.5, 1.0, 2.0}) {
    CHECK(symmetric_lp_norm(std::vector<double>(3, 0.0), mu, PExponent(p)) == 0.0);
    for (int i = 0; i < 100; ++i) {
      auto v = random_vector(rng, 3);
      v[static_cast<std::size_t>(i % 3)] = 0.0;
      CHECK(symmetric_lp_norm(v, mu, PExponent(p)) > 0.0);
    }
  }
}

TEST_CASE("normalized weighted power mean is nondecreasing in p", "[norms][property]") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const auto raw = random_weights(rng, n);
    std::vector<double> normalized(raw.mu().begin(), raw.mu().end());
    const double total = raw.total();
    for (double& m : normalized) m /= total;
    const WeightVector mu(normalized);
    const auto v = random_vector(rng, n);
    double prev = 0.0;
    for (double p = 0.1; p < 8.0; p *= 1.3) {
      const double g = symmetric_lp_norm(v, mu, PExponent(p));
      CHECK(g >= prev * (1.0 - 1e-12));
      prev = g;
    }
  }
}

TEST_CASE("large p does not overflow", "[norms]") {
  const std::vector<double> v{1e300, 5e299};
  const double g = symmetric_lp_norm(v, WeightVector({1, 1}), PExponent(400));
  CHECK(std::isfinite(g));
  CHECK_THAT(g, WithinRel(1e300, 1e-10));
  CHECK_THAT(symmetric_lp_norm(std::vector{1e-300, 0.0}, WeightVector({1, 1}), PExponent(0.01)), WithinRel(1e-300, 1e-10));
}

TEST_CASE("symmetric_lp_sum omits the root", "[norms]") {
  CHECK_THAT(symmetric_lp_sum(std::vector{1.0, -4.0}, WeightVector({1, 2}), PExponent(0.5)), WithinAbs(2.0 * 2.0 + 1.0, 1e-15));
}
