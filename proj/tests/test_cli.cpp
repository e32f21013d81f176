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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace qslm;
using qslm::io::json;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qslm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data_path(const std::string& name) {
  std::filesystem::create_directories(QSLM_TEST_DATA_DIR);
  return std::string(QSLM_TEST_DATA_DIR) + "/" + name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const std::string path = data_path(name);
  std::ofstream(path) << text;
  return path;
}

std::string write_matrix(const std::string& name, const ComplexMatrix& m) {
  return write_file(name, io::matrix_to_json(m).dump());
}

ComplexMatrix diag(std::vector<double> phases) {
  const auto n = static_cast<Eigen::Index>(phases.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = std::polar(1.0, phases[static_cast<std::size_t>(i)]);
  return m;
}

}  // namespace

TEST_CASE("phases command", "[cli]") {
  const auto id = write_matrix("id3.json", ComplexMatrix::Identity(3, 3));
  auto r = run({"phases", id});
  CHECK(r.code == 0);
  CHECK(r.out == "0 0 0\n");

  const auto minus = write_matrix("minus_id2.json", -ComplexMatrix::Identity(2, 2));
  r = run({"phases", minus});
  CHECK(r.code == 0);
  CHECK(r.out == "3.141593 3.141593\n");

  r = run({"--format", "json", "phases", minus});
  CHECK(json::parse(r.out).at("phases")[0].get<double>() == kPi);

  r = run({"phases", write_file("broken.json", "{\"n\": 2, \"re\": [")});
  CHECK(r.code == 2);
  r = run({"phases", data_path("does_not_exist.json")});
  CHECK(r.code == 2);

  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 0) = 2.0;
  r = run({"phases", write_matrix("not_unitary.json", bad)});
  CHECK(r.code == 3);
  CHECK_THAT(r.err, ContainsSubstring("defect"));
}

TEST_CASE("metric command", "[cli]") {
  const auto id2 = write_matrix("id2.json", ComplexMatrix::Identity(2, 2));
  const auto minus = write_matrix("minus_id2.json", -ComplexMatrix::Identity(2, 2));
  const auto a = write_matrix("diag_a.json", diag({1.0, -2.5}));
  const auto h = write_matrix("haar3.json", haar_random_unitary(3, 12).matrix());

  auto r = run({"metric", h, h, "--mu", "1,2,3", "--p", "1.5"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");

  r = run({"metric", minus, id2, "--mu", "1,1", "--p", "1", "--pseudo"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 3.141593\n");

  r = run({"metric", a, id2, "--mu", "3,1", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "4.444097\n");

  r = run({"--format", "json", "metric", a, id2, "--mu", "3,1", "--p", "2"});
  CHECK_THAT(json::parse(r.out).at("value").get<double>(), WithinAbs(std::sqrt(19.75), 1e-12));

  r = run({"metric", a, id2, "--mu", "3,1", "--p", "0.5"});
  CHECK(r.code == 0);
  CHECK_THAT(r.err, ContainsSubstring("conjectural"));

  r = run({"metric", a, id2, "--mu", "1,2,3", "--p", "1"});
  CHECK(r.code == 4);
  r = run({"metric", a, h, "--p", "1"});
  CHECK(r.code == 4);
}

TEST_CASE("bound command", "[cli]") {
  const auto two = write_file("two_level.json", R"({"energies": [-2.0, 2.0], "weights": [0.5, 0.5]})");
  auto r = run({"--format", "json", "bound", two, "--p", "1", "--epsilon", "1"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("tau_c1") == 0.0);
  CHECK(j.at("tau_c2") == 0.0);

  r = run({"--format", "json", "bound", two, "--p", "1", "--epsilon", "0"});
  j = json::parse(r.out);
  const double a1 = amplitude_constant(PExponent(1.0)).A_p;
  CHECK_THAT(j.at("tau_c2").get<double>(), WithinRel(1.0 / (a1 * 2.0), 1e-14));

  // Emitted JSON carries the state, so it is accepted back as input.
  const auto echoed = write_file("echoed.json", r.out);
  const auto again = run({"--format", "json", "bound", echoed, "--p", "1", "--epsilon", "0"});
  CHECK(again.out == r.out);

  const auto magic = write_file("magic.json", io::state_to_json(magic_state(PExponent(1.0), 0.0, 1.0)).dump());
  r = run({"--format", "json", "bound", magic, "--p", "1", "--epsilon", "0"});
  j = json::parse(r.out);
  CHECK_THAT(j.at("tau_c1").get<double>(), WithinRel(critical_angle(1.0), 1e-12));
  CHECK_THAT(j.at("tau_c2").get<double>(), WithinRel(critical_angle(1.0), 1e-12));

  r = run({"--hbar", "2", "--format", "json", "bound", magic, "--p", "1", "--epsilon", "0"});
  CHECK_THAT(json::parse(r.out).at("tau_c2").get<double>(), WithinRel(2.0 * critical_angle(1.0), 1e-12));

  r = run({"bound", two, "--p", "1.8", "--epsilon", "0.2"});
  CHECK(r.code == 0);
  CHECK_THAT(r.err, ContainsSubstring("not tight"));
  CHECK_THAT(r.out, ContainsSubstring("tau_c2 "));

  r = run({"--format", "csv", "bound", two, "--p", "1", "--epsilon", "0.5"});
  CHECK(r.out.rfind("p,epsilon,hbar,x_c,A_p,tau_c1,tau_c2,moment_Ep,dpe,optimal_reference,tight,phase_angles\n", 0) == 0);

  const auto single = write_file("single.json", R"({"energies": [0.0], "weights": [1.0]})");
  CHECK(run({"bound", single, "--p", "1", "--epsilon", "0.5"}).code == 5);
  CHECK(run({"bound", two, "--p", "1", "--epsilon", "1.5"}).code == 3);
  CHECK(run({"bound", write_file("bad_state.json", R"({"energies": [1]})"), "--p", "1", "--epsilon", "0"}).code == 2);
}

TEST_CASE("constants command", "[cli]") {
  auto r = run({"constants", "--p", "2"});
  CHECK(r.out == "0 0.5\n");
  r = run({"--format", "json", "constants", "--p", "1.5707963"});
  auto j = json::parse(r.out);
  CHECK_THAT(j.at("x_c").get<double>(), WithinAbs(kHalfPi, 1e-6));
  CHECK_THAT(j.at("A_p").get<double>(), WithinRel(std::pow(kHalfPi, -kHalfPi), 1e-6));
  r = run({"constants", "--p", "1"});
  CHECK(r.out == "2.331122 0.724611\n");
  r = run({"--format", "csv", "--precision", "3", "constants", "--p", "1"});
  CHECK(r.out == "p,x_c,A_p\n1,2.331,0.725\n");
}

TEST_CASE("table1 command", "[cli]") {
  auto r = run({"--format", "json", "table1", "--large-n", "200"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.size() == 6);
  CHECK_THAT(j[0].at("ratios")[0].get<double>(), WithinAbs(0.9897, 5e-4));
  CHECK_THAT(j[2].at("ratios")[3].get<double>(), WithinAbs(0.9975, 5e-4));
  CHECK_THAT(j[4].at("ratios")[2].get<double>(), WithinAbs(0.9884, 5e-4));

  // The reference entry for the beta = 0.794 state at p = 0.1 (0.0167) equals
  // tau_c1 / tau rather than tau_c2 / tau, so --check reports exactly that cell.
  r = run({"table1", "--check", "--large-n", "200"});
  CHECK(r.code == 6);
  CHECK_THAT(r.err, ContainsSubstring("row 3, p = 0.1"));
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("fuzz command", "[cli]") {
  auto r = run({"--format", "json", "fuzz", "--n", "2", "--p", "1", "--trials", "2000", "--mode", "triangle"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("violation_count") == 0);

  const auto a = run({"--seed", "5", "fuzz", "--n", "3", "--p", "0.5", "--trials", "500", "--threads", "1"});
  const auto b = run({"--seed", "5", "fuzz", "--n", "3", "--p", "0.5", "--trials", "500", "--threads", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_THAT(a.err, ContainsSubstring("conjectured"));

  r = run({"--format", "json", "fuzz", "--n", "3", "--p", "1.3", "--trials", "5", "--mode", "pseudo-oracle",
           "--grid-points", "20000"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("max_slack").get<double>() <= 1e-8);

  r = run({"fuzz", "--n", "3", "--p", "1", "--trials", "20", "--mode", "generator"});
  CHECK(r.code == 0);

  CHECK(run({"fuzz", "--n", "3", "--p", "1", "--mu", "1,2"}).code == 4);
  CHECK(run({"fuzz", "--n", "3", "--p", "1", "--mode", "bogus"}).code == 2);
}

TEST_CASE("usage errors and help", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"--format", "xml", "constants", "--p", "1"}).code == 2);
  CHECK(run({"--precision", "40", "constants", "--p", "1"}).code == 2);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK_THAT(h.out, ContainsSubstring("CSV columns"));
}
