#include "binsum/report_io.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace binsum {

void to_json(nlohmann::json& j, const Valuation& v) {
  if (v.is_infinite()) {
    j = "inf";
  } else {
    j = v.value();
  }
}

void from_json(const nlohmann::json& j, Valuation& v) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") {
      throw std::invalid_argument("valuation string must be \"inf\"");
    }
    v = Valuation::infinity();
  } else {
    v = Valuation::finite(j.get<std::uint64_t>());
  }
}

void to_json(nlohmann::json& j, const TheoremRecord& record) {
  j = nlohmann::json{{"n", record.n},
                     {"r", record.r},
                     {"f_value", record.f_value.str()},
                     {"nu2", record.nu2},
                     {"bound", record.bound},
                     {"slack", record.slack},
                     {"pass", record.pass}};
}

void from_json(const nlohmann::json& j, TheoremRecord& record) {
  j.at("n").get_to(record.n);
  j.at("r").get_to(record.r);
  record.f_value = ExactInt(j.at("f_value").get<std::string>());
  j.at("nu2").get_to(record.nu2);
  j.at("bound").get_to(record.bound);
  j.at("slack").get_to(record.slack);
  j.at("pass").get_to(record.pass);
}

void to_json(nlohmann::json& j, const SweepFailure& failure) {
  j = nlohmann::json{{"check", to_string(failure.check)},
                     {"record", failure.record}};
}

void from_json(const nlohmann::json& j, SweepFailure& failure) {
  failure.check = parse_check_kind(j.at("check").get<std::string>());
  j.at("record").get_to(failure.record);
}

void to_json(nlohmann::json& j, const SweepReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (CheckKind kind : report.checks) checks.push_back(to_string(kind));
  nlohmann::json histogram = nlohmann::json::array();
  for (const auto& [slack, count] : report.slack_histogram) {
    histogram.push_back({slack, count});
  }
  j = nlohmann::json{
      {"n_range", {report.n_range.first, report.n_range.second}},
      {"r_range", {report.r_range.first, report.r_range.second}},
      {"checks", std::move(checks)},
      {"total", report.total},
      {"failure_cap", report.failure_cap},
      {"failures", report.failures},
      {"min_slack", report.min_slack},
      {"slack_histogram", std::move(histogram)},
      {"elapsed_ms", report.elapsed_ms}};
}

void from_json(const nlohmann::json& j, SweepReport& report) {
  j.at("n_range").at(0).get_to(report.n_range.first);
  j.at("n_range").at(1).get_to(report.n_range.second);
  j.at("r_range").at(0).get_to(report.r_range.first);
  j.at("r_range").at(1).get_to(report.r_range.second);
  report.checks.clear();
  for (const auto& name : j.at("checks")) {
    report.checks.push_back(parse_check_kind(name.get<std::string>()));
  }
  j.at("total").get_to(report.total);
  j.at("failure_cap").get_to(report.failure_cap);
  j.at("failures").get_to(report.failures);
  j.at("min_slack").get_to(report.min_slack);
  report.slack_histogram.clear();
  for (const auto& entry : j.at("slack_histogram")) {
    report.slack_histogram[entry.at(0).get<std::uint64_t>()] =
        entry.at(1).get<std::uint64_t>();
  }
  j.at("elapsed_ms").get_to(report.elapsed_ms);
}

std::string to_csv_row(const TheoremRecord& record) {
  return std::to_string(record.n) + "," + std::to_string(record.r) + "," +
         to_string(record.nu2) + "," + std::to_string(record.bound) + "," +
         to_string(record.slack) + "," + (record.pass ? "true" : "false");
}

std::string to_plain(const TheoremRecord& record) {
  std::string out;
  out += "F(" + std::to_string(record.n) + ", " + std::to_string(record.r) +
         ") = " + record.f_value.str() + "\n";
  out += "nu_2 = " + to_string(record.nu2) +
         "  bound = " + std::to_string(record.bound) +
         "  slack = " + to_string(record.slack) + "  " +
         (record.pass ? "pass" : "FAIL") + "\n";
  return out;
}

std::string to_plain(const SweepReport& report) {
  std::string out;
  out += "sweep n in [" + std::to_string(report.n_range.first) + ", " +
         std::to_string(report.n_range.second) + "], r in [" +
         std::to_string(report.r_range.first) + ", " +
         std::to_string(report.r_range.second) + "]  (" +
         std::to_string(report.total) + " cells)\n";
  out += "checks:";
  for (CheckKind kind : report.checks) out += " " + to_string(kind);
  out += "\n";
  out += "failures: " + std::to_string(report.failures.size());
  if (report.failures.size() >= report.failure_cap) {
    out += " (list capped at " + std::to_string(report.failure_cap) + ")";
  }
  out += "\n";
  for (const SweepFailure& failure : report.failures) {
    out += "  [" + to_string(failure.check) + "] " +
           to_csv_row(failure.record) + "\n";
  }
  out += "min slack: " + to_string(report.min_slack) + "\n";
  out += "slack histogram:\n";
  for (const auto& [slack, count] : report.slack_histogram) {
    out += "  " + std::to_string(slack) + ": " + std::to_string(count) + "\n";
  }
  out += "elapsed: " + std::to_string(report.elapsed_ms) + " ms\n";
  return out;
}

}  // namespace binsum
