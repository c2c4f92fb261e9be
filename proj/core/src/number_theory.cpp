#include "sdc/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sdc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: zero has no factorization");
  Factorization out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [prime, exp] : factorize(n)) {
    const std::size_t count = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto [prime, exp] : factorize(n)) {
    (void)exp;
    result = result / prime * (prime - 1);
  }
  return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t left = a / g;
  if (left > std::numeric_limits<std::uint64_t>::max() / b) {
    throw std::overflow_error("lcm exceeds 64 bits");
  }
  return left * b;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  Int128 old_r = static_cast<Int128>(a % m), r = m;
  Int128 old_s = 1, s = 0;
  while (r != 0) {
    const Int128 quotient = old_r / r;
    std::swap(old_r, r);
    r -= quotient * old_r;
    std::swap(old_s, s);
    s -= quotient * old_s;
  }
  if (old_r != 1) {
    throw std::domain_error("inverse_mod: " + std::to_string(a) + " is not invertible modulo " +
                            std::to_string(m));
  }
  Int128 inv = old_s % static_cast<Int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t d) {
  if (d == 0) throw std::domain_error("multiplicative_order: modulus must be positive");
  if (d == 1) return 1;
  if (std::gcd(q % d, d) != 1) {
    throw std::domain_error("multiplicative_order: gcd(" + std::to_string(q) + ", " +
                            std::to_string(d) + ") != 1");
  }
  // The order divides phi(d); strip prime factors while the power stays 1.
  std::uint64_t order = euler_phi(d);
  for (auto [prime, exp] : factorize(order)) {
    for (unsigned i = 0; i < exp; ++i) {
      if (pow_mod(q, order / prime, d) == 1) {
        order /= prime;
      } else {
        break;
      }
    }
  }
  return order;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error(std::to_string(base) + "^" + std::to_string(exp) +
                                " exceeds 64 bits");
    }
    result *= base;
  }
  return result;
}

std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t n) {
  if (n < 2) return {0, 0};
  const auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

}  // namespace sdc
