#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace sumlab {

/// Exact ratio of cell counts. Numerators and denominators stay below 2^62.
using Rational = boost::rational<std::int64_t>;

/// "p/q" with q > 0; integers still carry "/1".
std::string to_string(const Rational& r);

/// Parses "p/q", "p" or a terminating decimal such as "0.02".
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// True when |a - b| <= tol, compared exactly.
bool within(const Rational& a, const Rational& b, const Rational& tol);

}  // namespace sumlab
