#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>

namespace crn {

/// Exact rational scalar used everywhere; no floating point enters any
/// rank, basis, or equilibrium computation.
using Rational = mpq_class;

/// Arbitrary-precision integer (Bell numbers, binomials).
using Integer = mpz_class;

/// Parses "p" or "p/q" in base 10, with an optional leading '-'.
/// Decimal literals and everything else are rejected. The result is
/// canonicalized (lowest terms, positive denominator).
std::optional<Rational> parse_rational(std::string_view text);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace crn

// Scalar traits so Eigen dense types can carry mpq_class entries.
namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
