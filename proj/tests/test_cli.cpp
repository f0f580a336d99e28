#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "q1dh/cli.hpp"

using q1dh::cli::run;
namespace exit_code = q1dh::cli::exit_code;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    v.push_back(l);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, sep);)
    v.push_back(f);
  return v;
}

long long ten_thousandths(const std::string& field) { return std::llround(std::stod(field) * 1e4); }

} // namespace

TEST_CASE("table: first row") {
  const auto r = call({"table", "--n-max", "1"});
  REQUIRE(r.code == exit_code::ok);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "n,S_rho,S_gamma_o,S_gamma_s,sum_o,sum_s");
  CHECK(l[1] == "1,1.1544,1.2242,0.5575,2.3786,1.7119");
}

TEST_CASE("table: precondition and usage errors") {
  CHECK(call({"table", "--n-max", "0"}).code == exit_code::usage);
  CHECK(call({"table", "--n-max", "33"}).code == exit_code::usage);
  CHECK(call({"table", "--format", "xml"}).code == exit_code::usage);
  CHECK(call({}).code == exit_code::usage);
  CHECK(call({"bogus"}).code == exit_code::usage);
  CHECK(call({"--help"}).code == exit_code::ok);
}

TEST_CASE("table: json rows") {
  const auto r = call({"table", "--n-max", "3", "--format", "json"});
  REQUIRE(r.code == exit_code::ok);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 3);
  for (const char* key : {"n", "s_rho", "s_gamma_o", "s_gamma_s", "sum_o", "sum_s"})
    CHECK(doc[2].contains(key));
  CHECK(doc[2]["n"] == 3);
}

TEST_CASE("table: printed rows satisfy the row sums exactly") {
  const auto r = call({"table", "--n-max", "10"});
  REQUIRE(r.code == exit_code::ok);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 11);
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto f = split(l[i], ',');
    REQUIRE(f.size() == 6);
    CHECK(f[1].size() - f[1].find('.') == 5);  // four decimals
    CHECK(ten_thousandths(f[1]) + ten_thousandths(f[2]) == ten_thousandths(f[4]));
    CHECK(ten_thousandths(f[1]) + ten_thousandths(f[3]) == ten_thousandths(f[5]));
  }
}

TEST_CASE("output is deterministic") {
  CHECK(call({"table", "--n-max", "5"}).out == call({"table", "--n-max", "5"}).out);
  CHECK(call({"figure", "--id", "4", "--n", "1,2,3"}).out == call({"figure", "--id", "4", "--n", "1,2,3"}).out);
}

TEST_CASE("figure 1: psi_2 node at x = 2") {
  const auto r = call({"figure", "--id", "1", "--n", "2"});
  REQUIRE(r.code == exit_code::ok);
  const auto l = lines(r.out);
  CHECK(l[0] == "coordinate,value_n=2");
  CHECK(l.size() == 1 + 1501);
  bool seen = false;
  for (const auto& row : l) {
    const auto f = split(row, ',');
    if (f[0] == "2") {
      seen = true;
      CHECK(std::fabs(std::stod(f[1])) < 1e-12);
    }
  }
  CHECK(seen);
}

TEST_CASE("figure 2: Lorentzian at the origin, default grid mirrored") {
  const auto r = call({"figure", "--id", "2", "--n", "1"});
  REQUIRE(r.code == exit_code::ok);
  const auto l = lines(r.out);
  CHECK(split(l[1], ',')[0] == "-3");
  CHECK(split(l.back(), ',')[0] == "3");
  for (const auto& row : l) {
    const auto f = split(row, ',');
    if (f[0] == "0")
      CHECK(std::stod(f[1]) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-11));
  }
}

TEST_CASE("figure 4: first hump of n = 2 peaks near 0.18") {
  const auto r = call({"figure", "--id", "4", "--n", "2", "--format", "json"});
  REQUIRE(r.code == exit_code::ok);
  const auto doc = nlohmann::json::parse(r.out);
  const auto p = doc["coordinate"].get<std::vector<double>>();
  const auto v = doc["series"][0]["values"].get<std::vector<double>>();
  double best = -1, at = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0.5 && v[i] > best) {
      best = v[i];
      at = p[i];
    }
  CHECK(std::fabs(at - 0.18) <= 0.01);
}

TEST_CASE("figure: custom and malformed grids") {
  const auto r = call({"figure", "--id", "3", "--n", "1", "--grid", "-1:1:0.5"});
  REQUIRE(r.code == exit_code::ok);
  CHECK(lines(r.out).size() == 6);
  CHECK(call({"figure", "--id", "3", "--grid", "0:1"}).code == exit_code::usage);
  CHECK(call({"figure", "--id", "3", "--grid", "0:1:0"}).code == exit_code::usage);
  CHECK(call({"figure", "--id", "3", "--grid", "a:b:c"}).code == exit_code::usage);
  CHECK(call({"figure", "--id", "5"}).code == exit_code::usage);
}

TEST_CASE("eval") {
  auto value = [](std::vector<std::string> a) { return std::stod(call(std::move(a)).out); };
  CHECK(value({"eval", "psi", "--n", "1", "--x", "1"}) == doctest::Approx(0.7357588823).epsilon(1e-10));
  CHECK(value({"eval", "phi5", "--n", "1", "--p", "1"}) == doctest::Approx(0.7978845608).epsilon(1e-10));
  CHECK(value({"eval", "phi7", "--n", "1", "--p", "1"}) == doctest::Approx(-0.3989422804).epsilon(1e-10));
  CHECK(value({"eval", "rho", "--n", "1", "--x", "1"}) == doctest::Approx(4.0 * std::exp(-2.0)));
  CHECK(value({"eval", "gamma", "--family", "lorentz", "--n", "1", "--p", "0"}) ==
        doctest::Approx(2.0 / std::numbers::pi));
  CHECK(value({"eval", "psi", "--family", "1d", "--parity", "odd", "--n", "1", "--x", "-1"}) ==
        doctest::Approx(-std::sqrt(2.0) / std::exp(1.0)));

  const auto c = call({"eval", "phi6", "--n", "1", "--p", "1"});
  CHECK(c.code == exit_code::ok);
  CHECK(c.out.find('i') != std::string::npos);

  CHECK(call({"eval", "phi5", "--n", "1", "--p", "-1"}).code == exit_code::usage);
  CHECK(call({"eval", "psi", "--n", "1", "--x", "-1"}).code == exit_code::usage);
  CHECK(call({"eval", "psi", "--n", "0", "--x", "1"}).code == exit_code::usage);
  CHECK(call({"eval", "psi", "--n", "1"}).code == exit_code::usage);
}

TEST_CASE("verify suites") {
  const auto id = call({"verify", "--suite", "identities"});
  CHECK(id.code == exit_code::ok);
  CHECK(id.out.find("imag_eq6_equals_eq7: pass") != std::string::npos);

  const auto bbm = call({"verify", "--suite", "bbm"});
  CHECK(bbm.out.find("n=1: pass") != std::string::npos);
  CHECK(bbm.out.find("violated") != std::string::npos);
  CHECK(bbm.out.find("n=4: pass") != std::string::npos);

  const auto tr = call({"verify", "--suite", "transforms"});
  CHECK(tr.out.find("correspondence n=1 Eq5") != std::string::npos);

  const auto js = call({"verify", "--suite", "normalization", "--format", "json"});
  CHECK(js.code == exit_code::ok);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["checks"][0].contains("max_abs_deviation"));

  CHECK(call({"verify", "--suite", "nope"}).code == exit_code::usage);
}

TEST_CASE("grid parsing") {
  const auto g = q1dh::cli::parse_grid("0:3:0.002");
  REQUIRE(g);
  CHECK(g->points().size() == 1501);
  CHECK(g->points().back() == doctest::Approx(3.0));
  CHECK_FALSE(q1dh::cli::parse_grid("1:0:0.1"));
  CHECK_FALSE(q1dh::cli::parse_grid("0:1:-0.1"));
  CHECK(q1dh::cli::format_fixed4(-4356) == "-0.4356");
  CHECK(q1dh::cli::format_fixed4(23786) == "2.3786");
  CHECK(q1dh::cli::format_fixed4(-5) == "-0.0005");
}
