#include "binsum/binomial_sums.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace binsum {

namespace {

// base^exponent with 0^0 = 1.
ExactInt int_pow(std::int64_t base, std::uint64_t exponent) {
  if (exponent == 0) return 1;
  return pow(ExactInt(base), static_cast<unsigned>(exponent));
}

// 2^exponent as an exact rational; exponent may be negative.
ExactRat pow2_rational(std::int64_t exponent) {
  if (exponent >= 0) return ExactRat(ExactInt(1) << exponent);
  return ExactRat(1, ExactInt(1) << -exponent);
}

}  // namespace

ExactInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  std::uint64_t kk = static_cast<std::uint64_t>(k);
  kk = std::min(kk, n - kk);
  ExactInt result = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // divides exactly: result is C(n - kk + i, i)
  }
  return result;
}

ExactInt sum_general(const SumSpec& spec) {
  const std::int64_t n = static_cast<std::int64_t>(spec.n);
  const std::int64_t k_lo = spec.range == SumRange::positive ? 1 : -n;
  ExactInt total = 0;
  for (std::int64_t k = k_lo; k <= n; ++k) {
    total += binomial(2 * spec.n, n - k) * int_pow(k, spec.exponent);
  }
  return total;
}

ExactInt f_direct(std::uint64_t n, std::uint64_t r) {
  return sum_general({n, 2 * r, SumRange::full});
}

std::uint64_t MemoTable::key(std::uint64_t n, std::uint64_t r) {
  if ((n >> 32) != 0 || (r >> 32) != 0) {
    throw std::invalid_argument("memo keys support n, r < 2^32");
  }
  return (n << 32) | r;
}

const ExactInt* MemoTable::find(std::uint64_t n, std::uint64_t r) const {
  const auto it = values_.find(key(n, r));
  return it == values_.end() ? nullptr : &it->second;
}

const ExactInt& MemoTable::store(std::uint64_t n, std::uint64_t r,
                                 ExactInt value) {
  return values_.insert_or_assign(key(n, r), std::move(value)).first->second;
}

ExactInt f_recurrence_r(std::uint64_t n, std::uint64_t r, MemoTable& memo) {
  if (r == 0) return int_pow(4, n);
  if (n == 0) return 0;
  if (const ExactInt* hit = memo.find(n, r)) return *hit;
  ExactInt value = ExactInt(n) * n * f_recurrence_r(n, r - 1, memo) -
                   ExactInt(2) * n * (2 * n - 1) *
                       f_recurrence_r(n - 1, r - 1, memo);
  return memo.store(n, r, std::move(value));
}

ExactInt f_recurrence_mixed(std::uint64_t n, std::uint64_t r,
                            MemoTable& memo) {
  // Fill (m, i) in lexicographic order; every dependency of a cell is
  // lexicographically smaller, so it is already present.
  for (std::uint64_t m = 0; m <= n; ++m) {
    for (std::uint64_t i = 0; i <= r; ++i) {
      if (memo.find(m, i) != nullptr) continue;
      ExactInt value;
      if (i == 0) {
        value = int_pow(4, m);
      } else if (m == 0) {
        value = 0;
      } else {
        value = 4 * *memo.find(m - 1, i);
        for (std::uint64_t j = 0; j < i; ++j) {
          const ExactInt& f_here = *memo.find(m, j);
          const ExactInt& f_prev = *memo.find(m - 1, j);
          const ExactInt even_weight =
              binomial(2 * i, static_cast<std::int64_t>(2 * j));
          const ExactInt odd_weight =
              binomial(2 * i, static_cast<std::int64_t>(2 * j + 1));
          value -= even_weight * f_here;
          value -= ExactInt(2) * (2 * m - 1) * odd_weight * f_prev;
          value += ExactInt(m) * odd_weight * f_here;
          value += 2 * even_weight * f_prev;
        }
      }
      memo.store(m, i, std::move(value));
    }
  }
  return *memo.find(n, r);
}

ExactInt odd_sum_zero(std::uint64_t n, std::uint64_t j) {
  if (j % 2 == 0) {
    throw std::invalid_argument("exponent must be odd");
  }
  return sum_general({n, j, SumRange::full});
}

ShapiroSum shapiro_sum(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("shapiro_sum requires n >= 1");
  }
  ExactInt lhs = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    lhs += k * binomial(2 * n, static_cast<std::int64_t>(n - k));
  }
  ExactInt product = ExactInt(n) * binomial(2 * n, static_cast<std::int64_t>(n));
  ExactInt rhs, remainder;
  divide_qr(product, ExactInt(2), rhs, remainder);
  if (remainder != 0) {
    throw IdentityError("n * C(2n, n) is odd at n = " + std::to_string(n));
  }
  return {std::move(lhs), std::move(rhs)};
}

ExactInt guo_zeng_quotient(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r == 0) {
    throw std::invalid_argument("guo_zeng_quotient requires n, r >= 1");
  }
  const ExactInt numerator =
      2 * sum_general({n, 2 * r + 1, SumRange::positive});
  const ExactInt denominator =
      ExactInt(n) * n * binomial(2 * n, static_cast<std::int64_t>(n));
  ExactInt quotient, remainder;
  divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw IdentityError("quotient is not an integer at n = " +
                        std::to_string(n) + ", r = " + std::to_string(r));
  }
  return quotient;
}

ExactInt closed_form_even(std::uint64_t n, std::uint64_t r) {
  if (n == 0) {
    throw std::invalid_argument("closed forms are stated for n >= 1");
  }
  const ExactInt nn = n;
  ExactInt poly;
  switch (r) {
    case 1:
      poly = 1;
      break;
    case 2:
      poly = 3 * nn - 1;
      break;
    case 3:
      poly = (15 * nn - 15) * nn + 4;
      break;
    case 4:
      poly = ((105 * nn - 210) * nn + 147) * nn - 34;
      break;
    default:
      throw std::invalid_argument("closed form known only for r in 1..4");
  }
  const std::int64_t exponent =
      2 * static_cast<std::int64_t>(n) - static_cast<std::int64_t>(r) - 1;
  const ExactRat value = ExactRat(nn * poly) * pow2_rational(exponent);
  if (denominator(value) != 1) {
    throw IdentityError("closed form is not integral at n = " +
                        std::to_string(n) + ", r = " + std::to_string(r));
  }
  return numerator(value);
}

}  // namespace binsum
