#include <cstdint>
#include <doctest.h>
#include <stdexcept>
#include <vector>

#include "binsum/binomial_sums.hpp"

using namespace binsum;

namespace {

// base^exponent with 0^0 = 1, written without the library's helpers.
ExactInt slow_pow(std::int64_t base, std::uint64_t exponent) {
  ExactInt out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

TEST_CASE("binomial examples and range") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 1) == 0);
}

TEST_CASE("binomial against Pascal addition") {
  std::vector<ExactInt> row = {1};
  for (std::uint64_t n = 0; n <= 80; ++n) {
    if (n > 0) {
      row.push_back(1);
      for (std::uint64_t j = n - 1; j >= 1; --j) row[j] += row[j - 1];
    }
    for (std::uint64_t k = 0; k <= n; ++k) {
      CHECK(binomial(n, static_cast<std::int64_t>(k)) == row[k]);
    }
  }
}

TEST_CASE("binomial symmetry") {
  for (std::uint64_t n = 0; n <= 60; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      CHECK(binomial(n, static_cast<std::int64_t>(k)) ==
            binomial(n, static_cast<std::int64_t>(n - k)));
    }
  }
}

TEST_CASE("f_direct frozen values") {
  CHECK(f_direct(0, 0) == 1);
  CHECK(f_direct(0, 3) == 0);
  CHECK(f_direct(1, 1) == 2);
  CHECK(f_direct(1, 3) == 2);
  CHECK(f_direct(1, 4) == 2);
  CHECK(f_direct(2, 1) == 16);
  CHECK(f_direct(2, 2) == 40);
  CHECK(f_direct(3, 0) == 64);
  CHECK(f_direct(3, 1) == 96);
  CHECK(f_direct(3, 3) == 2256);
  CHECK(f_direct(4, 2) == 2816);
  CHECK(f_direct(5, 3) == 194560);
  CHECK(f_direct(6, 2) == 104448);
  CHECK(f_direct(10, 7) == ExactInt("5302839337287680"));
}

TEST_CASE("f_direct base rows") {
  for (std::uint64_t n = 0; n <= 40; ++n) {
    CHECK(f_direct(n, 0) == slow_pow(4, n));  // row sum of C(2n, .)
  }
  for (std::uint64_t r = 1; r <= 12; ++r) {
    CHECK(f_direct(0, r) == 0);
  }
}

TEST_CASE("sum_general range split") {
  // Even exponent: the k and -k terms match and the k = 0 term dies, so
  // full = 2 * positive once the exponent is nonzero.
  for (std::uint64_t n = 0; n <= 20; ++n) {
    for (std::uint64_t r = 1; r <= 6; ++r) {
      CHECK(sum_general({n, 2 * r, SumRange::full}) ==
            2 * sum_general({n, 2 * r, SumRange::positive}));
    }
    // Exponent 0 keeps the k <= 0 terms: full - positive counts them.
    ExactInt nonpositive = 0;
    for (std::int64_t k = -static_cast<std::int64_t>(n); k <= 0; ++k) {
      nonpositive += binomial(2 * n, static_cast<std::int64_t>(n) - k);
    }
    CHECK(sum_general({n, 0, SumRange::full}) -
              sum_general({n, 0, SumRange::positive}) ==
          nonpositive);
  }
}

TEST_CASE("MemoTable semantics") {
  MemoTable memo;
  CHECK(memo.size() == 0);
  CHECK(memo.find(3, 4) == nullptr);
  memo.store(3, 4, ExactInt(42));
  REQUIRE(memo.find(3, 4) != nullptr);
  CHECK(*memo.find(3, 4) == 42);
  CHECK(memo.size() == 1);
  memo.store(3, 4, ExactInt(42));  // overwrite with the same value
  CHECK(memo.size() == 1);
  CHECK(memo.find(4, 3) == nullptr);  // key is ordered
  CHECK_THROWS_AS(memo.find(1ULL << 32, 0), std::invalid_argument);
  CHECK_THROWS_AS(memo.store(0, 1ULL << 32, ExactInt(1)),
                  std::invalid_argument);
}

TEST_CASE("r-lowering recurrence matches direct summation") {
  MemoTable shared;
  for (std::uint64_t n = 0; n <= 25; ++n) {
    for (std::uint64_t r = 0; r <= 25; ++r) {
      CHECK(f_recurrence_r(n, r, shared) == f_direct(n, r));
    }
  }
  MemoTable fresh;
  CHECK(f_recurrence_r(25, 25, fresh) == f_direct(25, 25));
}

TEST_CASE("mixed recurrence matches direct summation") {
  MemoTable shared;
  for (std::uint64_t n = 0; n <= 25; ++n) {
    for (std::uint64_t r = 0; r <= 25; ++r) {
      CHECK(f_recurrence_mixed(n, r, shared) == f_direct(n, r));
    }
  }
  MemoTable fresh;
  CHECK(f_recurrence_mixed(18, 12, fresh) == f_direct(18, 12));
}

TEST_CASE("recurrences agree on a tall-thin and short-wide cell") {
  MemoTable m1, m2;
  CHECK(f_recurrence_r(40, 3, m1) == f_recurrence_mixed(40, 3, m2));
  MemoTable m3, m4;
  CHECK(f_recurrence_r(3, 40, m3) == f_recurrence_mixed(3, 40, m4));
}

TEST_CASE("odd-row sums halve into F") {
  // For even exponent j = 2m, twice the sum over k = -(n+1) .. n of
  // C(2n+1, n-k) k^j collapses to F(n+1, m). Checked literally.
  for (std::uint64_t n = 0; n <= 15; ++n) {
    for (std::uint64_t m = 0; m <= 6; ++m) {
      ExactInt sum = 0;
      const std::int64_t sn = static_cast<std::int64_t>(n);
      for (std::int64_t k = -sn - 1; k <= sn; ++k) {
        sum += binomial(2 * n + 1, sn - k) * slow_pow(k, 2 * m);
      }
      CHECK(2 * sum == f_direct(n + 1, m));
    }
  }
}

TEST_CASE("odd exponents vanish") {
  for (std::uint64_t n = 0; n <= 15; ++n) {
    for (std::uint64_t j = 1; j <= 9; j += 2) {
      CHECK(odd_sum_zero(n, j) == 0);
    }
  }
  CHECK_THROWS_AS(odd_sum_zero(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(odd_sum_zero(3, 0), std::invalid_argument);
}

TEST_CASE("shapiro_sum frozen values and identity") {
  CHECK_THROWS_AS(shapiro_sum(0), std::invalid_argument);
  const std::pair<std::uint64_t, std::int64_t> frozen[] = {
      {1, 1}, {2, 6}, {3, 30}, {4, 140}, {10, 923780}};
  for (const auto& [n, expected] : frozen) {
    const ShapiroSum s = shapiro_sum(n);
    CHECK(s.lhs == expected);
    CHECK(s.rhs == expected);
  }
  for (std::uint64_t n = 1; n <= 100; ++n) {
    const ShapiroSum s = shapiro_sum(n);
    CHECK(s.lhs == s.rhs);
  }
}

TEST_CASE("guo_zeng_quotient frozen values") {
  CHECK(guo_zeng_quotient(1, 1) == 1);
  CHECK(guo_zeng_quotient(2, 1) == 1);
  CHECK(guo_zeng_quotient(2, 2) == 3);
  CHECK(guo_zeng_quotient(3, 2) == 5);
  CHECK(guo_zeng_quotient(4, 3) == 67);
  CHECK(guo_zeng_quotient(5, 5) == 31425);
  CHECK_THROWS_AS(guo_zeng_quotient(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(guo_zeng_quotient(1, 0), std::invalid_argument);
}

TEST_CASE("guo_zeng_quotient is odd") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t r = 1; r <= 12; ++r) {
      CHECK(guo_zeng_quotient(n, r) % 2 == 1);
    }
  }
}

TEST_CASE("closed forms match the positive-range sums") {
  for (std::uint64_t r = 1; r <= 4; ++r) {
    for (std::uint64_t n = 1; n <= 30; ++n) {
      CHECK(closed_form_even(n, r) ==
            sum_general({n, 2 * r, SumRange::positive}));
    }
  }
}

TEST_CASE("closed forms at the fractional-power edge") {
  // 2^(2n - r - 1) has a negative exponent here; the rational value is
  // still integral.
  CHECK(closed_form_even(1, 3) == 1);
  CHECK(closed_form_even(1, 4) == 1);
  CHECK(closed_form_even(1, 1) == 1);
  CHECK(closed_form_even(1, 2) == 1);
}

TEST_CASE("closed form argument checks") {
  CHECK_THROWS_AS(closed_form_even(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_even(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_even(5, 5), std::invalid_argument);
}
