#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace arrtopo {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0 and gcd(|p|, q) = 1; integers keep the "/1".
std::string to_canonical(const Rational& r);

/// Accepts "p/q" (q > 0) or an integer "p"; throws InputError otherwise.
Rational parse_rational(std::string_view text);

/// Nearest double, for display and fitting only.
double to_double(const Rational& r);

} // namespace arrtopo
