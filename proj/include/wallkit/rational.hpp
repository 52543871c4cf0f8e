#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace wallkit {

/// Exact ratio used for every verdict; never converted to floating point
/// before a comparison.
using Rational = boost::rational<std::int64_t>;

/// Accepts "p/q" or a bare integer "p". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Renders as "num/den" (den is always printed, so 1 becomes "1/1").
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// (1 - 6l + 4l^2) / (1 - 2l): local density bound for relator neighborhoods.
Rational local_density_bound(const Rational& lambda);

/// (1 - 6l + 4l^2) / (2 - 4l): bi-Lipschitz constant between the wall
/// pseudo-metric and the path metric.
Rational separation_constant(const Rational& lambda);

}  // namespace wallkit
