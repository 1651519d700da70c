#include <cstdint>
#include <doctest.h>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "binsum/report_io.hpp"
#include "binsum/verifier.hpp"

using namespace binsum;
using nlohmann::json;

namespace {

// Valuation has no default constructor, so json::get<Valuation>() cannot
// materialize one; parse into an existing value instead.
Valuation parse_valuation(const json& j) {
  Valuation v = Valuation::finite(0);
  j.get_to(v);
  return v;
}

}  // namespace

TEST_CASE("Valuation serializes as number or the literal inf") {
  CHECK(json(Valuation::finite(7)) == json(7));
  CHECK(json(Valuation::infinity()) == json("inf"));
  CHECK(parse_valuation(json(Valuation::finite(7))) == Valuation::finite(7));
  CHECK(parse_valuation(json("inf")) == Valuation::infinity());
  CHECK_THROWS_AS(parse_valuation(json("Inf")), std::invalid_argument);
  CHECK_THROWS_AS(parse_valuation(json("")), std::invalid_argument);
}

TEST_CASE("TheoremRecord JSON shape") {
  const TheoremRecord record = verify_theorem(2, 1);
  const json j = record;
  CHECK(j.size() == 7);
  CHECK(j.at("n") == 2);
  CHECK(j.at("r") == 1);
  CHECK(j.at("f_value") == "16");  // decimal string, never a number
  CHECK(j.at("f_value").is_string());
  CHECK(j.at("nu2") == 4);
  CHECK(j.at("bound") == 3);
  CHECK(j.at("slack") == 1);
  CHECK(j.at("pass") == true);
  CHECK(j.get<TheoremRecord>() == record);
}

TEST_CASE("TheoremRecord JSON carries infinite valuations and big values") {
  const TheoremRecord zero = verify_theorem(0, 3);
  const json j = zero;
  CHECK(j.at("nu2") == "inf");
  CHECK(j.at("slack") == "inf");
  CHECK(j.get<TheoremRecord>() == zero);

  const TheoremRecord big = verify_theorem(60, 40);
  const json jb = big;
  CHECK(jb.at("f_value").get<std::string>().size() == 153);
  CHECK(jb.get<TheoremRecord>() == big);
}

TEST_CASE("CSV header and rows") {
  CHECK(std::string(kRecordCsvHeader) == "n,r,f_nu2,bound,slack,pass");
  CHECK(to_csv_row(verify_theorem(2, 1)) == "2,1,4,3,1,true");
  CHECK(to_csv_row(verify_theorem(1, 1)) == "1,1,1,1,0,true");
  CHECK(to_csv_row(verify_theorem(0, 3)) == "0,3,inf,0,inf,true");
  CHECK(to_csv_row(verify_theorem(0, 0)) == "0,0,0,0,0,true");
}

TEST_CASE("SweepFailure round-trips") {
  SweepFailure failure;
  failure.check = CheckKind::guo_zeng;
  failure.record = verify_theorem(3, 2);
  const json j = failure;
  CHECK(j.at("check") == "guo-zeng");
  CHECK(j.get<SweepFailure>() == failure);
}

TEST_CASE("SweepReport round-trips") {
  SweepConfig config;
  config.n_max = 12;
  config.r_max = 7;
  config.checks = {CheckKind::theorem, CheckKind::shapiro};
  const SweepReport report = sweep(config);
  const json j = report;
  CHECK(j.at("n_range") == json::array({0, 12}));
  CHECK(j.at("r_range") == json::array({0, 7}));
  CHECK(j.at("total") == 13 * 8);
  CHECK(j.at("failures").is_array());
  CHECK(j.at("failures").empty());
  CHECK(j.at("checks") == json::array({"theorem", "shapiro"}));
  CHECK(j.at("slack_histogram").is_array());
  CHECK(j.at("slack_histogram").at(0).is_array());
  CHECK(j.get<SweepReport>() == report);
}

TEST_CASE("JSON text re-parses to an equal report") {
  SweepConfig config;
  config.n_max = 8;
  config.r_max = 5;
  const SweepReport report = sweep(config);
  const std::string text = json(report).dump(2);
  const SweepReport reparsed = json::parse(text).get<SweepReport>();
  CHECK(reparsed == report);
  CHECK(json(reparsed).dump(2) == text);
}

TEST_CASE("synthetic failing report serializes its failure list") {
  SweepReport report;
  report.n_range = {0, 4};
  report.r_range = {0, 4};
  report.checks = {CheckKind::theorem};
  report.total = 25;
  report.failure_cap = 100;
  SweepFailure failure;
  failure.check = CheckKind::theorem;
  failure.record = verify_theorem(2, 1);
  failure.record.pass = false;  // fabricated: exercises the failure path
  report.failures.push_back(failure);
  report.min_slack = Valuation::finite(0);
  report.slack_histogram = {{0, 20}, {1, 4}};

  CHECK_FALSE(report.all_pass());
  const json j = report;
  CHECK(j.at("failures").size() == 1);
  CHECK(j.at("failures").at(0).at("check") == "theorem");
  CHECK(j.get<SweepReport>() == report);

  const std::string plain = to_plain(report);
  CHECK(plain.find("failures: 1") != std::string::npos);
  CHECK(plain.find("[theorem]") != std::string::npos);
  CHECK(plain.find("2,1,4,3,1,false") != std::string::npos);
}

TEST_CASE("plain rendering mentions the essentials") {
  const std::string record_text = to_plain(verify_theorem(2, 1));
  CHECK(record_text.find("F(2, 1) = 16") != std::string::npos);
  CHECK(record_text.find("nu_2 = 4") != std::string::npos);
  CHECK(record_text.find("pass") != std::string::npos);

  SweepConfig config;
  config.n_max = 3;
  config.r_max = 3;
  const std::string report_text = to_plain(sweep(config));
  CHECK(report_text.find("sweep n in [0, 3], r in [0, 3]") !=
        std::string::npos);
  CHECK(report_text.find("failures: 0") != std::string::npos);
  CHECK(report_text.find("min slack: 0") != std::string::npos);
}
