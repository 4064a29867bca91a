#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hallskew {

// Expression templates off: results are plain values usable with auto and .str().
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned exponent);

// Narrowing with a range check; throws BoundExceeded when the value does not fit.
std::uint64_t to_u64(const BigInt& value);

}  // namespace hallskew
