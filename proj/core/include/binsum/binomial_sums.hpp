#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>

#include "binsum/exact_int.hpp"

namespace binsum {

// F(n, r) is the central binomial sum
//
//   F(n, r) = sum_{k = -n}^{n} C(2n, n - k) * k^(2r)
//
// with the 0^0 = 1 convention, so F(n, 0) = 4^n. This header evaluates
// F and related sums by three independent algorithms plus the named
// identities that constrain them.

enum class SumRange {
  full,      // k = -n .. n
  positive,  // k = 1 .. n
};

// Parameters of a generalized sum: sum over the selected k-range of
// C(2n, n - k) * k^exponent. F proper uses an even exponent 2r with the
// full range; the evaluator accepts any exponent.
struct SumSpec {
  std::uint64_t n = 0;
  std::uint64_t exponent = 0;
  SumRange range = SumRange::full;
};

// Exact C(n, k); 0 when k < 0 or k > n. Multiplicative formula with an
// exact division at every step.
ExactInt binomial(std::uint64_t n, std::int64_t k);

// Sum over the selected k-range of C(2n, n - k) * k^exponent, with 0^0 = 1
// (so exponent 0 over the full range gives 4^n).
ExactInt sum_general(const SumSpec& spec);

// F(n, r) by literal summation over k = -n .. n. This is the reference
// evaluator the recurrences and the verifier are checked against.
ExactInt f_direct(std::uint64_t n, std::uint64_t r);

// Cache of F(n, r) values keyed by (n, r). A table belongs to a single
// evaluation thread; sweep workers each own one. Values are deterministic,
// so recomputing a key is harmless.
class MemoTable {
 public:
  const ExactInt* find(std::uint64_t n, std::uint64_t r) const;
  const ExactInt& store(std::uint64_t n, std::uint64_t r, ExactInt value);
  std::size_t size() const { return values_.size(); }

 private:
  static std::uint64_t key(std::uint64_t n, std::uint64_t r);

  std::unordered_map<std::uint64_t, ExactInt> values_;
};

// F(n, r) via the r-lowering recurrence
//   F(n, r) = n^2 F(n, r-1) - 2n(2n-1) F(n-1, r-1)
// with base cases F(m, 0) = 4^m and F(0, s) = [s == 0].
ExactInt f_recurrence_r(std::uint64_t n, std::uint64_t r, MemoTable& memo);

// F(n, r) via the five-term mixed recurrence
//   F(n, r) = 4 F(n-1, r)
//           - sum_{i<r} C(2r, 2i)   F(n,   i)
//           - 2(2n-1) sum_{i<r} C(2r, 2i+1) F(n-1, i)
//           + n       sum_{i<r} C(2r, 2i+1) F(n,   i)
//           + 2       sum_{i<r} C(2r, 2i)   F(n-1, i)
// with the same base cases. The dependency triangle {(m, i) : m <= n, i <= r}
// is filled iteratively in lexicographic order, bounding call depth.
ExactInt f_recurrence_mixed(std::uint64_t n, std::uint64_t r, MemoTable& memo);

// Literal sum_{k = -n}^{n} C(2n, n - k) * k^j for odd j. The k <-> -k
// symmetry forces the result to 0; the sum is returned so callers can
// assert that. Rejects even j.
ExactInt odd_sum_zero(std::uint64_t n, std::uint64_t j);

struct ShapiroSum {
  ExactInt lhs;  // sum_{k=1}^{n} k * C(2n, n - k)
  ExactInt rhs;  // (n / 2) * C(2n, n), computed exactly

  friend bool operator==(const ShapiroSum&, const ShapiroSum&) = default;
};

// Both sides of Shapiro's row-sum identity for the Catalan triangle;
// lhs == rhs for every n >= 1. n * C(2n, n) is always even, so rhs is an
// integer. Rejects n == 0.
ShapiroSum shapiro_sum(std::uint64_t n);

// The Guo-Zeng quotient
//   q = 2 * sum_{k=1}^{n} C(2n, n - k) k^(2r+1) / (n^2 C(2n, n)),
// an odd integer for all n, r >= 1. Throws IdentityError if the division is
// not exact (which would falsify the identity). Rejects n == 0 or r == 0.
ExactInt guo_zeng_quotient(std::uint64_t n, std::uint64_t r);

// The closed form 2^(2n - r - 1) * n * P_r(n) for
// sum_{k=1}^{n} C(2n, n - k) k^(2r), known for r in 1..4:
//   P_1 = 1
//   P_2 = 3n - 1
//   P_3 = 15n^2 - 15n + 4
//   P_4 = 105n^3 - 210n^2 + 147n - 34
// Evaluated over exact rationals since the power of two has a negative
// exponent for small n (e.g. n = 1, r = 3); the result is asserted integral.
// Rejects n == 0 and r outside 1..4.
ExactInt closed_form_even(std::uint64_t n, std::uint64_t r);

}  // namespace binsum
