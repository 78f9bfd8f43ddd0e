#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fanol2 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline std::string to_string(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline Rational make_rational(long long num, long long den) { return Rational(num) / Rational(den); }

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

inline double to_double(const BigInt& value) { return value.convert_to<double>(); }

} // namespace fanol2
