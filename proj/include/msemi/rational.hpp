#pragma once

#include <boost/rational.hpp>
#include <string>

namespace msemi {

using Rational = boost::rational<long long>;

/// Parses "p" or "p/q"; throws input_error on junk or zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

}  // namespace msemi
