#include "mpcjoin/bigmath.hpp"

namespace mpcjoin {

BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp > 0) b *= b;
    }
    return result;
}

BigInt iroot_floor(const BigInt& n, std::uint64_t k) {
    if (n < 0) throw std::domain_error("iroot_floor: negative input");
    if (k == 0) throw std::domain_error("iroot_floor: zeroth root");
    if (n == 0 || n == 1 || k == 1) return n;

    // Initial upper bound from the bit length: if n < 2^b then n^(1/k) < 2^(ceil(b/k)).
    const std::uint64_t bits = boost::multiprecision::msb(n) + 1;
    BigInt hi = BigInt(1) << static_cast<unsigned>((bits + k - 1) / k);
    BigInt lo = 0;
    // Invariant: lo^k <= n < hi^k.
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (ipow(mid, k) <= n)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

BigInt iroot_ceil(const BigInt& n, std::uint64_t k) {
    BigInt r = iroot_floor(n, k);
    if (ipow(r, k) == n) return r;
    return r + 1;
}

BigInt iroot_ceil_ratio(const BigInt& num, const BigInt& den, std::uint64_t k) {
    if (den <= 0) throw std::domain_error("iroot_ceil_ratio: nonpositive denominator");
    if (num <= 0) return 1;
    // ceil((num/den)^(1/k)) = min r with r^k * den >= num.
    BigInt r = iroot_floor(num / den, k);
    if (r < 1) r = 1;
    while (ipow(r, k) * den < num) ++r;
    return r;
}

bool pow_leq(const BigInt& a, std::uint64_t k, const BigInt& b) {
    return ipow(a, k) <= b;
}

}  // namespace mpcjoin
