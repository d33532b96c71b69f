#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "error.hpp"

namespace nodal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Quotient rounded toward negative infinity; divisor must be positive.
inline BigInt floor_div(const BigInt &a, const BigInt &b) {
    BigInt q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

inline BigInt parse_bigint(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    if (body.empty())
        throw Error(ErrorCode::parse, "expected an integer, got '" + std::string(text) + "'");
    for (char c : body)
        if (c < '0' || c > '9')
            throw Error(ErrorCode::parse, "expected an integer, got '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+')
        s.erase(0, 1);
    return BigInt(s);
}

} // namespace nodal
