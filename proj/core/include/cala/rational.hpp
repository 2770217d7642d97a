#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "cala/errors.hpp"

namespace cala {

// Arbitrary-precision exact rational. cpp_rational is kept in lowest terms
// with a positive denominator, which is exactly the invariant the scalar
// layer needs; zero is canonically 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// "p", "-p" or "p/q" with q > 0.
Rational parse_rational(std::string_view text);

}  // namespace cala
