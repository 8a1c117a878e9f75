#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace mpcjoin {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// base^exp over arbitrary-precision integers; 0^0 = 1.
BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Largest r >= 0 with r^k <= n. Requires n >= 0, k >= 1.
BigInt iroot_floor(const BigInt& n, std::uint64_t k);

/// Smallest r >= 0 with r^k >= n. Requires n >= 0, k >= 1.
BigInt iroot_ceil(const BigInt& n, std::uint64_t k);

/// Smallest r >= 1 with r^k * den >= num, i.e. ceil((num/den)^(1/k)) clamped
/// to at least 1. Requires num >= 0, den >= 1, k >= 1.
BigInt iroot_ceil_ratio(const BigInt& num, const BigInt& den, std::uint64_t k);

/// True iff a^k <= b, evaluated exactly.
bool pow_leq(const BigInt& a, std::uint64_t k, const BigInt& b);

inline std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || v > BigInt(UINT64_MAX)) throw std::overflow_error("BigInt out of u64 range");
    return static_cast<std::uint64_t>(v);
}

}  // namespace mpcjoin
