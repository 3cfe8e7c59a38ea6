#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

namespace chartherm {

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator.
/// Expression templates are off so that Rational behaves as a plain value
/// type in containers and generic code.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws ParseError on anything else, including a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Nearest binary64 to r.
double to_double(const Rational& r);

Rational factorial(unsigned n);

}  // namespace chartherm
