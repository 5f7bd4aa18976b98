#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gkmkit {

/// Arbitrary precision integer.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Exact rational, always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Floor of a / b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace gkmkit
