#include "binsum/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "binsum/binomial_sums.hpp"

namespace binsum {

std::uint64_t theorem_bound(std::uint64_t n, std::uint64_t r) {
  // min{alpha(n), alpha(r)} <= alpha(n) <= n, so no underflow.
  return 2 * n - std::min(digit_sum(n, 2), digit_sum(r, 2));
}

TheoremRecord verify_theorem(std::uint64_t n, std::uint64_t r) {
  TheoremRecord record;
  record.n = n;
  record.r = r;
  record.f_value = f_direct(n, r);
  record.nu2 = nu_int(record.f_value, 2);
  record.bound = theorem_bound(n, r);
  record.pass = record.nu2.at_least(record.bound);
  if (record.nu2.is_infinite()) {
    record.slack = Valuation::infinity();
  } else if (record.pass) {
    record.slack = Valuation::finite(record.nu2.value() - record.bound);
  } else {
    record.slack = Valuation::finite(0);
  }
  return record;
}

SplitBounds verify_split(std::uint64_t n, std::uint64_t r) {
  const ExactInt f = f_direct(n, r);
  const Valuation nu2 = nu_int(f, 2);
  SplitBounds split;
  const std::uint64_t alpha_n = digit_sum(n, 2);
  const std::uint64_t alpha_r = digit_sum(r, 2);
  // 2n - alpha(r) can go negative for n << r; the claim is vacuous there.
  split.bound_alpha_n = 2 * n >= alpha_n ? 2 * n - alpha_n : 0;
  split.bound_alpha_r = 2 * n >= alpha_r ? 2 * n - alpha_r : 0;
  split.pass_alpha_n = nu2.at_least(split.bound_alpha_n);
  split.pass_alpha_r = nu2.at_least(split.bound_alpha_r);
  return split;
}

bool verify_recurrence_r(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r == 0) {
    throw std::invalid_argument("recurrence check requires n, r >= 1");
  }
  const ExactInt expected = ExactInt(n) * n * f_direct(n, r - 1) -
                            ExactInt(2) * n * (2 * n - 1) *
                                f_direct(n - 1, r - 1);
  return f_direct(n, r) == expected;
}

bool verify_recurrence_mixed(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r == 0) {
    throw std::invalid_argument("recurrence check requires n, r >= 1");
  }
  ExactInt expected = 4 * f_direct(n - 1, r);
  for (std::uint64_t j = 0; j < r; ++j) {
    const ExactInt f_here = f_direct(n, j);
    const ExactInt f_prev = f_direct(n - 1, j);
    const ExactInt even_weight =
        binomial(2 * r, static_cast<std::int64_t>(2 * j));
    const ExactInt odd_weight =
        binomial(2 * r, static_cast<std::int64_t>(2 * j + 1));
    expected -= even_weight * f_here;
    expected -= ExactInt(2) * (2 * n - 1) * odd_weight * f_prev;
    expected += ExactInt(n) * odd_weight * f_here;
    expected += 2 * even_weight * f_prev;
  }
  return f_direct(n, r) == expected;
}

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::theorem:
      return "theorem";
    case CheckKind::split:
      return "split";
    case CheckKind::recurrences:
      return "recurrences";
    case CheckKind::closed_forms:
      return "closed-forms";
    case CheckKind::guo_zeng:
      return "guo-zeng";
    case CheckKind::shapiro:
      return "shapiro";
    case CheckKind::odd_vanishing:
      return "odd-vanishing";
  }
  throw std::logic_error("unknown check kind");
}

CheckKind parse_check_kind(const std::string& name) {
  if (name == "theorem") return CheckKind::theorem;
  if (name == "split") return CheckKind::split;
  if (name == "recurrences") return CheckKind::recurrences;
  if (name == "closed-forms") return CheckKind::closed_forms;
  if (name == "guo-zeng") return CheckKind::guo_zeng;
  if (name == "shapiro") return CheckKind::shapiro;
  if (name == "odd-vanishing") return CheckKind::odd_vanishing;
  throw std::invalid_argument("unknown check kind: " + name);
}

namespace {

struct Partial {
  std::vector<SweepFailure> failures;
  std::map<std::uint64_t, std::uint64_t> slack_histogram;
  std::optional<std::uint64_t> min_slack;
};

// Runs one check at one cell; true means the cell passed.
bool run_check(CheckKind kind, std::uint64_t n, std::uint64_t r,
               const TheoremRecord& record) {
  switch (kind) {
    case CheckKind::theorem:
      return record.pass;
    case CheckKind::split: {
      const SplitBounds split = verify_split(n, r);
      return split.pass_alpha_n && split.pass_alpha_r;
    }
    case CheckKind::recurrences:
      if (n == 0 || r == 0) return true;
      return verify_recurrence_r(n, r) && verify_recurrence_mixed(n, r);
    case CheckKind::closed_forms:
      if (n == 0 || r < 1 || r > 4) return true;
      return closed_form_even(n, r) ==
             sum_general({n, 2 * r, SumRange::positive});
    case CheckKind::guo_zeng:
      if (n == 0 || r == 0) return true;
      return guo_zeng_quotient(n, r) % 2 == 1;
    case CheckKind::shapiro: {
      if (n == 0 || r != 0) return true;  // one check per row
      const ShapiroSum sum = shapiro_sum(n);
      return sum.lhs == sum.rhs;
    }
    case CheckKind::odd_vanishing:
      return odd_sum_zero(n, 2 * r + 1) == 0;
  }
  throw std::logic_error("unknown check kind");
}

void sweep_rows(const SweepConfig& config,
                const std::vector<CheckKind>& checks, std::uint64_t first_row,
                std::uint64_t stride, Partial& partial) {
  for (std::uint64_t n = first_row; n <= config.n_max; n += stride) {
    for (std::uint64_t r = 0; r <= config.r_max; ++r) {
      const TheoremRecord record = verify_theorem(n, r);
      if (!record.nu2.is_infinite()) {
        const std::uint64_t slack = record.slack.value();
        ++partial.slack_histogram[slack];
        if (!partial.min_slack || slack < *partial.min_slack) {
          partial.min_slack = slack;
        }
      }
      for (CheckKind kind : checks) {
        bool ok;
        try {
          ok = run_check(kind, n, r, record);
        } catch (const IdentityError&) {
          ok = false;
        }
        if (!ok && partial.failures.size() < config.failure_cap) {
          partial.failures.push_back({kind, record});
        }
      }
    }
  }
}

}  // namespace

SweepReport sweep(const SweepConfig& config) {
  if (config.checks.empty()) {
    throw std::invalid_argument("sweep requires at least one check");
  }
  if (config.workers == 0) {
    throw std::invalid_argument("sweep requires at least one worker");
  }
  const auto start = std::chrono::steady_clock::now();

  const std::vector<CheckKind> checks(config.checks.begin(),
                                      config.checks.end());
  const std::uint64_t rows = config.n_max + 1;
  const std::uint64_t workers = std::min<std::uint64_t>(config.workers, rows);

  std::vector<Partial> partials(workers);
  if (workers == 1) {
    sweep_rows(config, checks, 0, 1, partials[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back(sweep_rows, std::cref(config), std::cref(checks), w,
                        workers, std::ref(partials[w]));
    }
    for (std::thread& t : pool) t.join();
  }

  SweepReport report;
  report.n_range = {0, config.n_max};
  report.r_range = {0, config.r_max};
  report.checks = checks;
  report.total = (config.n_max + 1) * (config.r_max + 1);
  report.failure_cap = config.failure_cap;
  report.min_slack = Valuation::infinity();
  for (Partial& partial : partials) {
    for (const auto& [slack, count] : partial.slack_histogram) {
      report.slack_histogram[slack] += count;
    }
    if (partial.min_slack &&
        (report.min_slack.is_infinite() ||
         *partial.min_slack < report.min_slack.value())) {
      report.min_slack = Valuation::finite(*partial.min_slack);
    }
    report.failures.insert(report.failures.end(),
                           std::make_move_iterator(partial.failures.begin()),
                           std::make_move_iterator(partial.failures.end()));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const SweepFailure& a, const SweepFailure& b) {
              if (a.record.n != b.record.n) return a.record.n < b.record.n;
              if (a.record.r != b.record.r) return a.record.r < b.record.r;
              return a.check < b.check;
            });
  if (report.failures.size() > config.failure_cap) {
    report.failures.resize(config.failure_cap);
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(elapsed).count();
  return report;
}

}  // namespace binsum
