#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace ncosc {

// Exact arbitrary-precision rational. cpp_rational keeps the canonical form
// (gcd-reduced, positive denominator, zero = 0/1) after every operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

// Accepts "p/q", plain integers, and decimal literals ("0.25", "1e-4"),
// all converted exactly. Throws DomainError on malformed input.
Rational parse_rational(const std::string& text);

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& r);

// Smallest-denominator rational within rel_tol of x (continued fractions).
// Used only for display/detection; exact code paths never round-trip floats.
std::optional<Rational> approximate_rational(double x, double rel_tol = 1e-6,
                                             std::int64_t max_denominator = 1000000000);

}  // namespace ncosc
