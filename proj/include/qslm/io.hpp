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


// JSON and CSV encodings used by the command-line tool.
//
//   matrix: {"n": int, "re": [[...], ...], "im": [[...], ...]}  (row-major)
//   state:  {"energies": [...], "weights": [...]}

#ifndef QSLM_IO_HPP
#define QSLM_IO_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qslm/error.hpp"
#include "qslm/experiments.hpp"
#include "qslm/metrics.hpp"
#include "qslm/qsl.hpp"
#include "qslm/unitary.hpp"

namespace qslm::io {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace detail {

inline std::vector<double> real_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& x : j) {
    if (!x.is_number()) throw ParseError(std::string(what) + " must contain numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline ComplexMatrix matrix_from_json(const json& j) {
  const json& jn = detail::member(j, "n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) throw ParseError("\"n\" must be a positive integer");
  const auto n = static_cast<Eigen::Index>(jn.get<long long>());
  const json& re = detail::member(j, "re");
  const json& im = detail::member(j, "im");
  if (!re.is_array() || !im.is_array() || static_cast<Eigen::Index>(re.size()) != n ||
      static_cast<Eigen::Index>(im.size()) != n)
    throw ParseError("\"re\" and \"im\" must have n rows");
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto row_re = detail::real_array(re[static_cast<std::size_t>(r)], "re row");
    const auto row_im = detail::real_array(im[static_cast<std::size_t>(r)], "im row");
    if (static_cast<Eigen::Index>(row_re.size()) != n || static_cast<Eigen::Index>(row_im.size()) != n)
      throw ParseError("matrix rows must have n entries");
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = Complex(row_re[static_cast<std::size_t>(c)], row_im[static_cast<std::size_t>(c)]);
  }
  return m;
}

inline json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ri = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return json{{"n", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

/// Structural errors raise ParseError; invalid values raise the state's own
/// validation errors.
inline SpectralState state_from_json(const json& j) {
  auto e = detail::real_array(detail::member(j, "energies"), "energies");
  auto w = detail::real_array(detail::member(j, "weights"), "weights");
  return SpectralState(std::move(e), std::move(w));
}

inline json state_to_json(const SpectralState& s) {
  return json{{"energies", std::vector<double>(s.energies().begin(), s.energies().end())},
              {"weights", std::vector<double>(s.weights().begin(), s.weights().end())}};
}

inline json to_json(const QslConstants& c) { return json{{"p", c.p}, {"x_c", c.x_c}, {"A_p", c.A_p}}; }

inline json to_json(const QslReport& r) {
  return json{{"p", r.p},
              {"epsilon", r.epsilon},
              {"hbar", r.hbar},
              {"x_c", r.x_c},
              {"A_p", r.A_p},
              {"tau_c1", r.tau_c1},
              {"tau_c2", r.tau_c2},
              {"moment_Ep", r.moment_Ep},
              {"dpe", r.dpe},
              {"optimal_reference", r.optimal_reference},
              {"tight", r.tight},
              {"phase_angles", r.phase_angles}};
}

inline json to_json(const PhaseMinResult& r) {
  return json{{"value", r.value}, {"argmin_x", r.argmin_x}, {"candidates_examined", r.candidates_examined}};
}

inline json to_json(const TableRow& row) {
  json j{{"state", row.state_label},
         {"tau_exact", row.tau_exact},
         {"tau_scan", row.tau_scan},
         {"p", kTableExponents},
         {"ratios", row.ratios}};
  if (row.finite_ratios) {
    j["finite_n"] = row.finite_n;
    j["finite_ratios"] = *row.finite_ratios;
  }
  return j;
}

inline json to_json(const FuzzReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations)
    violations.push_back(json{{"trial", v.trial}, {"seed", v.seed}, {"values", v.values}, {"slack", v.slack}});
  return json{{"mode", r.mode},
              {"trials", r.trials},
              {"n", r.dimension},
              {"p", r.p},
              {"mu", r.mu},
              {"seed", r.seed},
              {"tolerance", r.tolerance},
              {"violation_count", r.violations.size()},
              {"violations", std::move(violations)},
              {"max_slack", r.max_slack},
              {"max_symmetry_deviation", r.max_symmetry_deviation},
              {"max_biinvariance_deviation", r.max_biinvariance_deviation}};
}

/// Fixed-point with `precision` decimals, trailing zeros dropped, "-0" as "0".
inline std::string format_real(double x, int precision) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

inline std::string join(const std::vector<double>& xs, int precision, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += format_real(xs[i], precision);
  }
  return out;
}

}  // namespace qslm::io

#endif  // QSLM_IO_HPP
