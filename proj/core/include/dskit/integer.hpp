#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dskit {

/// Exact integer used for every face count, coefficient and residual.
using Integer = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Integer binomial(std::int64_t n, std::int64_t k);

/// (-1)^e for any integer exponent e.
inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

std::string to_decimal(const Integer& value);

/// Parses an optionally signed decimal string; throws ParseError on junk.
Integer parse_decimal(std::string_view text);

/// Narrowing conversion that throws OverflowError instead of wrapping.
std::int64_t to_int64(const Integer& value);

}  // namespace dskit
