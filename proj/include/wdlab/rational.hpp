#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace wdlab {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or "p". Throws InvalidArgument on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// Largest integer not greater than r.
std::int64_t floor(const Rational& r);

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace wdlab
