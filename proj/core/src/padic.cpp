#include "binsum/padic.hpp"

#include <stdexcept>

namespace binsum {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  }
}

}  // namespace

std::uint64_t Valuation::value() const {
  if (infinite_) {
    throw std::logic_error("infinite valuation has no finite value");
  }
  return value_;
}

std::string to_string(const Valuation& v) {
  return v.is_infinite() ? "inf" : std::to_string(v.value());
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base) {
  if (base < 2) {
    throw std::invalid_argument("digit_sum requires base >= 2");
  }
  std::uint64_t sum = 0;
  while (n != 0) {
    sum += n % base;
    n /= base;
  }
  return sum;
}

Valuation nu_int(const ExactInt& x, std::uint64_t p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  ExactInt rest = abs(x);
  std::uint64_t v = 0;
  ExactInt quotient, remainder;
  for (;;) {
    divide_qr(rest, ExactInt(p), quotient, remainder);
    if (remainder != 0) break;
    rest = quotient;
    ++v;
  }
  return Valuation::finite(v);
}

std::uint64_t nu_factorial(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  // Floor-sum route: sum_i floor(n / p^i).
  std::uint64_t floor_sum = 0;
  for (std::uint64_t q = n / p; q != 0; q /= p) {
    floor_sum += q;
  }
  // Digit-sum route: (n - digit_sum(n, p)) / (p - 1), always an exact
  // division.
  const std::uint64_t digit_route = (n - digit_sum(n, p)) / (p - 1);
  if (floor_sum != digit_route) {
    throw IdentityError("factorial valuation routes disagree at n = " +
                        std::to_string(n) + ", p = " + std::to_string(p));
  }
  return floor_sum;
}

std::uint64_t nu_binomial(std::uint64_t s, std::uint64_t t, std::uint64_t p) {
  if (t > s) {
    throw std::invalid_argument("nu_binomial requires s >= t");
  }
  require_prime(p);
  const std::uint64_t via_factorials =
      nu_factorial(s, p) - nu_factorial(t, p) - nu_factorial(s - t, p);
  const std::uint64_t digit_numerator =
      digit_sum(t, p) + digit_sum(s - t, p) - digit_sum(s, p);
  if (digit_numerator % (p - 1) != 0 ||
      via_factorials != digit_numerator / (p - 1)) {
    throw IdentityError("binomial valuation routes disagree at C(" +
                        std::to_string(s) + ", " + std::to_string(t) +
                        "), p = " + std::to_string(p));
  }
  return via_factorials;
}

bool check_nu2_digit_identity(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("identity is stated for n >= 1");
  }
  const auto nu2 = nu_int(ExactInt(n), 2);
  const std::int64_t lhs = static_cast<std::int64_t>(nu2.value()) - 1;
  const std::int64_t rhs = static_cast<std::int64_t>(digit_sum(n - 1, 2)) -
                           static_cast<std::int64_t>(digit_sum(n, 2));
  return lhs == rhs;
}

}  // namespace binsum
