#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace icesep
{

// All program states and constraint coefficients use arbitrary precision:
// separator joins and solver models can exceed machine range.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Division rounding toward -inf (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) == (b < 0)))
        ++q;
    return q;
}

} // namespace icesep
