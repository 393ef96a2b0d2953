#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hamfix {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Throws if r is not an integer or does not fit.
long long to_ll(const Rational& r);

std::string to_string(const Rational& r);

}  // namespace hamfix
