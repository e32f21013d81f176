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


#ifndef QSLM_DETAIL_SEARCH_HPP
#define QSLM_DETAIL_SEARCH_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

namespace qslm::detail {

struct Minimum {
  double x;
  double value;
};

/// Golden-section search for a minimum of f on [a, b] down to bracket width
/// `tol`. Returns the best point seen, endpoints included.
template <class F>
Minimum golden_section_min(F&& f, double a, double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  Minimum best{a, f(a)};
  const double fb = f(b);
  if (fb < best.value) best = {b, fb};
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  if (fc < best.value || (fc == best.value && c < best.x)) best = {c, fc};
  if (fd < best.value || (fd == best.value && d < best.x)) best = {d, fd};
  const double mid = 0.5 * (a + b);
  const double fm = f(mid);
  if (fm < best.value) best = {mid, fm};
  return best;
}

/// Bisection for a sign change of g on [lo, hi] with g(lo) and g(hi) of
/// opposite sign (or zero at hi).
template <class G>
double bisect(G&& g, double lo, double hi, double rel_tol, int max_iter = 400) {
  const double glo = g(lo);
  const bool lo_negative = glo < 0.0;
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == lo_negative)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Runs fn(i) for i in [0, count) over `threads` workers. Each index is
/// handled by exactly one worker; callers write results by index.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
}

}  // namespace qslm::detail

#endif  // QSLM_DETAIL_SEARCH_HPP
