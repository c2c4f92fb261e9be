#pragma once

// Integer helpers shared by every module: primality, factorization by trial
// division, multiplicative orders and a few big-integer conveniences.

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdc {

using BigInt = boost::multiprecision::cpp_int;

/// (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

__extension__ using UInt128 = unsigned __int128;
__extension__ using Int128 = __int128;

/// a * b mod m without overflow.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<UInt128>(a) * b % m);
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// ord_d(q): least e >= 1 with q^e = 1 (mod d). Requires gcd(q, d) = 1; ord_1(q) = 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t d);

/// base^exp as uint64, throwing std::overflow_error when it does not fit.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// If n = p^k for a prime p and k >= 1, returns (p, k); otherwise (0, 0).
std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t n);

/// Exponent of the prime p in n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

BigInt big_pow(const BigInt& base, std::uint64_t exp);

}  // namespace sdc
