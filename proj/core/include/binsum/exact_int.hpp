#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace binsum {

// Arbitrary-precision signed integer. Every sum, binomial coefficient and
// quotient in this library is computed in ExactInt; nothing is ever rounded.
using ExactInt = boost::multiprecision::cpp_int;

// Exact rational, used where a closed form involves a power of two whose
// exponent may be negative.
using ExactRat = boost::multiprecision::cpp_rational;

// Thrown when a computation contradicts an identity that is supposed to hold
// exactly (an inexact division, a non-integral closed form, or two routes to
// the same value disagreeing). Seeing this exception on valid inputs means
// either a bug or a falsified identity.
class IdentityError : public std::runtime_error {
 public:
  explicit IdentityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace binsum
