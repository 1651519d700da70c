#pragma once

#include <cstdint>
#include <string>

#include "binsum/exact_int.hpp"

namespace binsum {

// Value of nu_p: a natural number for nonzero arguments, infinity for 0
// (every power of p divides 0). Also reused for slack values, which live in
// the same extended-natural domain.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation finite(std::uint64_t v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }

  // Finite value; throws on the infinite valuation.
  std::uint64_t value() const;

  // Infinity clears any finite bound.
  bool at_least(std::uint64_t bound) const {
    return infinite_ || value_ >= bound;
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation(bool infinite, std::uint64_t value)
      : infinite_(infinite), value_(value) {}

  bool infinite_;
  std::uint64_t value_;
};

// "inf" or the decimal value.
std::string to_string(const Valuation& v);

// Sum of the base-p digits of n (alpha_p). Base 2 gives the number of 1-bits.
// Requires base >= 2.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base);

// Multiplicity of the prime p in x; infinity iff x == 0. The sign of x is
// ignored. Rejects non-prime p (trial division; p is small in all uses here).
Valuation nu_int(const ExactInt& x, std::uint64_t p);

// nu_p(n!) by Legendre's formula. Both routes are computed and must agree:
// the floor sum over powers of p, and (n - digit_sum(n, p)) / (p - 1).
std::uint64_t nu_factorial(std::uint64_t n, std::uint64_t p);

// nu_p(C(s, t)) via factorial valuations, cross-checked against the digit
// form (digit_sum(t, p) + digit_sum(s - t, p) - digit_sum(s, p)) / (p - 1).
// Requires s >= t.
std::uint64_t nu_binomial(std::uint64_t s, std::uint64_t t, std::uint64_t p);

// True iff nu_2(n) - 1 == digit_sum(n - 1, 2) - digit_sum(n, 2). This holds
// for every n >= 1; the function exposes the identity as a testable unit.
// Rejects n == 0.
bool check_nu2_digit_identity(std::uint64_t n);

}  // namespace binsum
