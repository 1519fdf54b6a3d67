#include <catch_amalgamated.hpp>

#include <clocale>
#include <cmath>
#include <json.hpp>

#include "nearfield/cli/scan.hpp"
#include "nearfield/cli/verify.hpp"
#include "nearfield/errors.hpp"

using namespace nearfield;
using namespace nearfield::cli;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

TEST_CASE("grid parsing and validation", "[cli]") {
  const auto g = GridSpec::parse("t:-2:2:5");
  CHECK(g.axis == "t");
  CHECK(g.points() == std::vector<double>{-2, -1, 0, 1, 2});
  const auto l = GridSpec::parse("R:1e-3:1e-1:3:log");
  const auto p = l.points();
  CHECK(p.front() == 1e-3);
  CHECK_THAT(p[1], WithinRel(1e-2, 1e-14));
  CHECK(p.back() == 1e-1);
  CHECK_THROWS_AS(GridSpec::parse("t:2:-2:5"), ValidationError);
  CHECK_THROWS_AS(GridSpec::parse("t:1:1:5"), ValidationError);
  CHECK_THROWS_AS(GridSpec::parse("t:0:1:1"), ValidationError);
  CHECK_THROWS_AS(GridSpec::parse("t:0:1:2.5"), ValidationError);
  CHECK_THROWS_AS(GridSpec::parse("t:0:1:5:log"), ValidationError);
  CHECK_THROWS_AS(GridSpec::parse("t:0:x:5"), ValidationError);
  CHECK_THROWS_AS(GridSpec::parse("t:0:1"), ValidationError);
}

TEST_CASE("unit scale parsing", "[cli]") {
  const auto u = UnitScale::parse("length=2.5,time=4");
  CHECK(u.length == 2.5);
  CHECK(u.time == 4.0);
  CHECK(u.factor(Dimension::inverse_time) == 0.25);
  CHECK(UnitScale::parse("time=3").length == 1.0);
  CHECK_THROWS_AS(UnitScale::parse("length=0"), ValidationError);
  CHECK_THROWS_AS(UnitScale::parse("mass=1"), ValidationError);
}

TEST_CASE("number formatting is locale independent", "[cli]") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(1e-300) == "1e-300");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
  const char* old = std::setlocale(LC_NUMERIC, nullptr);
  std::string saved = old ? old : "C";
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8")) {
    CHECK(format_number(1.5) == "1.5");
    std::setlocale(LC_NUMERIC, saved.c_str());
  }
}

TEST_CASE("CSV quoting", "[cli]") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  ResultTable t{{{"x", Dimension::length}, {"y,z", Dimension::none}}, {{1.0, 2.0}}};
  CHECK(to_csv(t, UnitScale{3.0, 1.0}) == "x,\"y,z\"\r\n3,2\r\n");
}

TEST_CASE("propagator scan is odd in t", "[cli]") {
  ScanRequest req;
  req.target = "propagator";
  req.quantity = "D_N";
  req.grid = GridSpec::parse("t:-2:2:9");
  const auto table = run_scan(req);
  REQUIRE(table.rows.size() == 9);
  CHECK(table.columns[1].name == "value_re");
  CHECK(table.columns[2].name == "value_im");
  CHECK(table.rows[4][1] == 0.0);
  for (std::size_t i = 0; i < 9; ++i) CHECK(table.rows[i][1] == -table.rows[8 - i][1]);
}

TEST_CASE("self-energy scan", "[cli]") {
  ScanRequest req;
  req.target = "point-charge";
  req.quantity = "self_energy";
  req.grid = GridSpec::parse("gamma:1:4:3:log");
  const auto table = run_scan(req);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[1][0] == 2.0);
  for (const auto& row : table.rows) CHECK_THAT(row[2], WithinRel(2.994e-3, 1e-3));
}

TEST_CASE("every registered quantity evaluates at its defaults", "[cli]") {
  for (const auto& target : scan_targets()) {
    for (const auto& q : scan_quantities(target)) {
      INFO(target << "/" << q.name);
      Params p;
      for (const auto& [k, v] : q.defaults) p[k] = v;
      std::vector<double> row;
      CHECK_NOTHROW(row = q.eval(p));
      CHECK(row.size() == q.outputs.size());
    }
  }
}

TEST_CASE("scan validation errors name the parameter", "[cli]") {
  ScanRequest req;
  req.target = "propagator";
  req.grid = GridSpec::parse("t:-1:1:3");
  req.parameters["bogus"] = 1.0;
  CHECK_THROWS_WITH(run_scan(req), ContainsSubstring("bogus"));
  req.parameters.clear();
  req.grid.axis = "omega";
  CHECK_THROWS_WITH(run_scan(req), ContainsSubstring("omega"));
  req.target = "nowhere";
  CHECK_THROWS_AS(run_scan(req), ValidationError);
}

TEST_CASE("scan output is deterministic under threading", "[cli]") {
  ScanRequest req;
  req.target = "point-charge";
  req.quantity = "field_time";
  req.grid = GridSpec::parse("r:0.5:5:40");
  req.parameters["t"] = 0.2;
  req.threads = 1;
  const std::string serial = render(run_scan(req), req);
  req.threads = 6;
  CHECK(render(run_scan(req), req) == serial);
  CHECK(render(run_scan(req), req) == serial);
}

TEST_CASE("JSON output layout", "[cli]") {
  ScanRequest req;
  req.target = "switching";
  req.quantity = "g1_freq";
  req.grid = GridSpec::parse("omega:-1:1:3");
  req.format = OutputFormat::json;
  req.units = UnitScale{1.0, 2.0};
  const auto j = nlohmann::json::parse(render(run_scan(req), req));
  CHECK(j["meta"]["request"]["target"] == "switching");
  CHECK(j["meta"]["version"] == NEARFIELD_VERSION);
  CHECK(j["meta"].contains("ft_conventions"));
  REQUIRE(j["rows"].size() == 3);
  // omega is an inverse time, g(omega) a time
  CHECK(j["rows"][0]["omega"].get<double>() == -0.5);
  CHECK_THAT(j["rows"][1]["value"].get<double>(), WithinRel(2.0 / M_PI, 1e-15));
}

TEST_CASE("verify suites", "[cli]") {
  const auto pc = run_verify("point_charge");
  bool has_coefficient = false;
  for (const auto& c : pc.criteria) has_coefficient |= c.name.find("7/(24 pi^4)") != std::string::npos;
  CHECK(has_coefficient);
  CHECK(pc.passed());
  const auto j = nlohmann::json::parse(pc.json());
  CHECK(j["criteria"].size() == pc.criteria.size());
  CHECK_THAT(pc.summary(), ContainsSubstring("[PASS]"));
  CHECK_THROWS_AS(run_verify("bogus"), ValidationError);
}
