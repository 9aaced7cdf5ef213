#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace steinercut {

// Exact arithmetic only. Every weight, coefficient and right-hand side in the
// library is a Rat; nothing is ever rounded through floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with optional sign on p; q must be a positive integer.
// The result is in lowest terms (the backing type normalizes on construction).
Rat parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& value);

std::string to_string(const Int& value);

}  // namespace steinercut
