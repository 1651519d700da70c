// binsum: compute central binomial sums F(n, r) exactly and verify the
// 2-adic lower bound nu_2(F(n, r)) >= 2n - min{alpha(n), alpha(r)} over
// rectangles of (n, r).
//
// Exit codes: 0 success / all checks pass, 1 usage or I/O error,
// 2 a mathematical check failed.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "binsum/binomial_sums.hpp"
#include "binsum/report_io.hpp"
#include "binsum/verifier.hpp"

namespace {

// Payload goes to out_path when given, stdout otherwise. False on I/O error.
bool emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return static_cast<bool>(std::cout);
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "binsum: cannot open " << out_path << " for writing\n";
    return false;
  }
  file << payload;
  file.flush();
  if (!file) {
    std::cerr << "binsum: write to " << out_path << " failed\n";
    return false;
  }
  return true;
}

std::string render_record(const binsum::TheoremRecord& record,
                          const std::string& format) {
  if (format == "json") {
    return nlohmann::json(record).dump(2) + "\n";
  }
  if (format == "csv") {
    return std::string(binsum::kRecordCsvHeader) + "\n" +
           binsum::to_csv_row(record) + "\n";
  }
  return binsum::to_plain(record);
}

std::string render_report(const binsum::SweepReport& report,
                          const std::string& format) {
  if (format == "json") {
    return nlohmann::json(report).dump(2) + "\n";
  }
  if (format == "csv") {
    // CSV rows carry no check-kind column, so only the failing cells are
    // listed; an all-pass sweep yields a header and nothing else.
    std::string out = std::string(binsum::kRecordCsvHeader) + "\n";
    for (const binsum::SweepFailure& failure : report.failures) {
      out += binsum::to_csv_row(failure.record) + "\n";
    }
    return out;
  }
  return binsum::to_plain(report);
}

int run_compute(std::uint64_t n, std::uint64_t r, const std::string& algo) {
  binsum::ExactInt value;
  if (algo == "direct") {
    value = binsum::f_direct(n, r);
  } else if (algo == "rec-r") {
    binsum::MemoTable memo;
    value = binsum::f_recurrence_r(n, r, memo);
  } else {
    binsum::MemoTable memo;
    value = binsum::f_recurrence_mixed(n, r, memo);
  }
  std::cout << value.str() << "\n";
  return 0;
}

int run_verify(std::uint64_t n, std::uint64_t r, const std::string& format,
               const std::string& out_path) {
  const binsum::TheoremRecord record = binsum::verify_theorem(n, r);
  if (!emit(render_record(record, format), out_path)) return 1;
  return record.pass ? 0 : 2;
}

int run_sweep(std::uint64_t n_max, std::uint64_t r_max,
              const std::vector<std::string>& check_names, unsigned workers,
              const std::string& format, const std::string& out_path) {
  binsum::SweepConfig config;
  config.n_max = n_max;
  config.r_max = r_max;
  config.workers = workers;
  config.checks.clear();
  for (const std::string& name : check_names) {
    config.checks.insert(binsum::parse_check_kind(name));
  }
  const binsum::SweepReport report = binsum::sweep(config);
  if (!emit(render_report(report, format), out_path)) return 1;
  return report.all_pass() ? 0 : 2;
}

int run_table(std::uint64_t n_max, std::uint64_t r_max,
              const std::string& format, const std::string& out_path) {
  std::vector<binsum::TheoremRecord> records;
  records.reserve((n_max + 1) * (r_max + 1));
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    for (std::uint64_t r = 0; r <= r_max; ++r) {
      records.push_back(binsum::verify_theorem(n, r));
    }
  }
  std::string payload;
  if (format == "json") {
    payload = nlohmann::json(records).dump(2) + "\n";
  } else {
    payload = std::string(binsum::kRecordCsvHeader) + "\n";
    for (const binsum::TheoremRecord& record : records) {
      payload += binsum::to_csv_row(record) + "\n";
    }
  }
  if (!emit(payload, out_path)) return 1;
  for (const binsum::TheoremRecord& record : records) {
    if (!record.pass) return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact central binomial sums and their 2-adic divisibility bound"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"plain", "json", "csv"};
  const std::vector<std::string> check_names_all = {
      "theorem",  "split",   "recurrences",  "closed-forms",
      "guo-zeng", "shapiro", "odd-vanishing"};

  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::uint64_t n_max = 0;
  std::uint64_t r_max = 0;
  std::string algo = "direct";
  std::string format = "plain";
  std::string out_path;
  std::vector<std::string> checks = {"theorem"};
  unsigned workers = 1;

  CLI::App* compute =
      app.add_subcommand("compute", "print F(n, r) in decimal");
  compute->add_option("--n", n, "row index n")->required();
  compute->add_option("--r", r, "exponent half r (the sum uses k^(2r))")
      ->required();
  compute->add_option("--algo", algo, "evaluation algorithm")
      ->check(CLI::IsMember({"direct", "rec-r", "rec-mixed"}))
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify", "check the 2-adic bound at one (n, r) and print the record");
  verify->add_option("--n", n, "row index n")->required();
  verify->add_option("--r", r, "exponent half r")->required();
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  verify->add_option("--out", out_path, "write output to a file");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "run checks over the rectangle [0, n-max] x [0, r-max]");
  sweep->add_option("--n-max", n_max, "largest n")->required();
  sweep->add_option("--r-max", r_max, "largest r")->required();
  sweep->add_option("--checks", checks, "comma-separated checks to run")
      ->delimiter(',')
      ->check(CLI::IsMember(check_names_all))
      ->capture_default_str();
  sweep->add_option("--workers", workers, "worker threads (rows of n)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--format", format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  sweep->add_option("--out", out_path, "write the report to a file");

  CLI::App* table = app.add_subcommand(
      "table", "emit per-cell valuation records for a rectangle");
  table->add_option("--n-max", n_max, "largest n")->required();
  table->add_option("--r-max", r_max, "largest r")->required();
  table->add_option("--format", format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  table->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (compute->parsed()) return run_compute(n, r, algo);
    if (verify->parsed()) return run_verify(n, r, format, out_path);
    if (sweep->parsed()) {
      return run_sweep(n_max, r_max, checks, workers, format, out_path);
    }
    return run_table(n_max, r_max, format, out_path);
  } catch (const binsum::IdentityError& e) {
    std::cerr << "binsum: identity violated: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "binsum: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "binsum: " << e.what() << "\n";
    return 1;
  }
}
