#include "hallskew/bigint.hpp"

#include <limits>

#include "hallskew/errors.hpp"

namespace hallskew {

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt pow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max())
    throw BoundExceeded("integer " + value.str() + " does not fit in 64 bits");
  return value.convert_to<std::uint64_t>();
}

}  // namespace hallskew
