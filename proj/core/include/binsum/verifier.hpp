#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "binsum/binomial_sums.hpp"
#include "binsum/exact_int.hpp"
#include "binsum/padic.hpp"

namespace binsum {

// Instance-level verification of the 2-adic divisibility bound
//
//   nu_2(F(n, r)) >= 2n - min{alpha(n), alpha(r)}
//
// where alpha is the binary digit sum, together with the supporting
// identities, over finite rectangles of (n, r).

// One (n, r) verification outcome. pass <=> nu2 >= bound (infinity passes
// any bound); slack = nu2 - bound when both are finite. For zero F-values
// nu2 and slack are infinite and the bound is vacuous.
struct TheoremRecord {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  ExactInt f_value;
  Valuation nu2 = Valuation::finite(0);
  std::uint64_t bound = 0;
  Valuation slack = Valuation::finite(0);
  bool pass = false;

  friend bool operator==(const TheoremRecord&, const TheoremRecord&) = default;
};

// 2n - min{alpha(n), alpha(r)}, with alpha(0) = 0. Never negative:
// min{alpha(n), alpha(r)} <= alpha(n) <= n.
std::uint64_t theorem_bound(std::uint64_t n, std::uint64_t r);

// Computes F(n, r) by direct summation, its nu_2, the bound, slack and pass
// flag. A failed bound is data (pass = false), not an error.
TheoremRecord verify_theorem(std::uint64_t n, std::uint64_t r);

// The bound splits into two inequalities checked separately:
//   nu_2(F(n, r)) >= 2n - alpha(n)   and   nu_2(F(n, r)) >= 2n - alpha(r).
// 2n - alpha(r) can be negative for n << r; the inequality is then vacuous
// (nu_2 >= 0 always), so that bound clamps to zero. theorem_bound equals the
// larger of the two, and the combined bound passes iff both split bounds do.
struct SplitBounds {
  std::uint64_t bound_alpha_n = 0;
  std::uint64_t bound_alpha_r = 0;
  bool pass_alpha_n = false;
  bool pass_alpha_r = false;

  friend bool operator==(const SplitBounds&, const SplitBounds&) = default;
};

SplitBounds verify_split(std::uint64_t n, std::uint64_t r);

// True iff F(n, r) = n^2 F(n, r-1) - 2n(2n-1) F(n-1, r-1) with all three
// values computed independently by direct summation. Rejects n = 0 or r = 0.
bool verify_recurrence_r(std::uint64_t n, std::uint64_t r);

// True iff the five-term mixed recurrence holds at (n, r) with every F
// computed by direct summation. Rejects n = 0 or r = 0.
bool verify_recurrence_mixed(std::uint64_t n, std::uint64_t r);

// The checks a sweep can run. A closed enumeration; parse_check_kind rejects
// anything else.
enum class CheckKind {
  theorem,       // nu_2(F) >= 2n - min{alpha(n), alpha(r)}
  split,         // both split inequalities separately
  recurrences,   // r-lowering and mixed recurrences at (n, r), n, r >= 1
  closed_forms,  // closed form == positive-range sum, n >= 1, r in 1..4
  guo_zeng,      // quotient divides exactly and is odd, n, r >= 1
  shapiro,       // row-sum identity at n >= 1 (r-independent, run once per n)
  odd_vanishing, // sum with exponent 2r + 1 vanishes
};

// Stable external name ("theorem", "closed-forms", ...).
std::string to_string(CheckKind kind);

// Inverse of to_string; throws std::invalid_argument for unknown names.
CheckKind parse_check_kind(const std::string& name);

struct SweepConfig {
  std::uint64_t n_max = 0;
  std::uint64_t r_max = 0;
  std::set<CheckKind> checks = {CheckKind::theorem};
  unsigned workers = 1;
  // Bounds the failures list on hypothetical mass failure; recorded in the
  // report.
  std::size_t failure_cap = 100;
};

// A failed check at one cell: which check failed, plus the cell's theorem
// record for context.
struct SweepFailure {
  CheckKind check = CheckKind::theorem;
  TheoremRecord record;

  friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

// Aggregate over the rectangle [0, n_max] x [0, r_max]. Content is
// deterministic for any worker count; only elapsed_ms varies run to run.
struct SweepReport {
  std::pair<std::uint64_t, std::uint64_t> n_range{0, 0};  // inclusive
  std::pair<std::uint64_t, std::uint64_t> r_range{0, 0};  // inclusive
  std::vector<CheckKind> checks;
  std::uint64_t total = 0;  // grid cells = |n_range| * |r_range|
  std::size_t failure_cap = 0;
  std::vector<SweepFailure> failures;  // sorted by (n, r, check), capped
  // Minimum finite slack over theorem records; infinity when the theorem
  // check produced no finite slack (all F-values zero, or not selected).
  Valuation min_slack = Valuation::infinity();
  // finite slack -> count; infinite slacks are excluded.
  std::map<std::uint64_t, std::uint64_t> slack_histogram;
  double elapsed_ms = 0.0;

  bool all_pass() const { return failures.empty(); }

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

// Runs the selected checks over the full rectangle, restricted to each
// check's precondition domain. The grid is partitioned by rows of n across
// workers; each check is a pure function, and the merge is deterministic, so
// the report content does not depend on the worker count.
SweepReport sweep(const SweepConfig& config);

}  // namespace binsum
