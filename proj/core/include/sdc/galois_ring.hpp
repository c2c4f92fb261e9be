#pragma once

// Exact arithmetic in the Galois ring GR(p^r, s) = Z_{p^r}[x] / (f(x)), where f
// is the lift of a primitive polynomial of degree s over F_p. Elements are
// coefficient vectors (low degree first) with entries in [0, p^r).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/number_theory.hpp"

namespace sdc {

using Residue = std::uint64_t;

class GaloisRingElement;

class GaloisRing {
 public:
  /// Upper bound on p^r; keeps every residue product inside 64 bits.
  static constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 32;
  /// Upper bound on the residue field size p^s (modulus search and unit orders).
  static constexpr std::uint64_t kMaxResidueFieldSize = std::uint64_t{1} << 40;

  /// The ring GR(p^r, s). Instances are built once and live for the whole
  /// process; references stay valid and may be shared across threads.
  static const GaloisRing& get(std::uint64_t p, unsigned r, unsigned s);

  /// Parses "GR(p^r,s)", e.g. "GR(2^2,2)"; "GR(4,2)" is accepted as well.
  static const GaloisRing& parse(std::string_view text);

  GaloisRing(const GaloisRing&) = delete;
  GaloisRing& operator=(const GaloisRing&) = delete;

  std::uint64_t p() const { return p_; }
  unsigned r() const { return r_; }
  unsigned s() const { return s_; }
  /// p^r
  std::uint64_t characteristic() const { return characteristic_; }
  /// p^s
  std::uint64_t residue_field_size() const { return residue_field_size_; }
  /// Monic modulus, s + 1 coefficients, constant term first.
  const std::vector<Residue>& modulus() const { return modulus_; }

  BigInt size() const;
  BigInt unit_count() const;
  std::string name() const;

  GaloisRingElement zero() const;
  GaloisRingElement one() const;
  GaloisRingElement from_integer(std::int64_t value) const;
  GaloisRingElement from_coefficients(std::vector<Residue> coefficients) const;
  /// Class of x in Z_{p^r}[x]/(f).
  GaloisRingElement x() const;
  /// Teichmuller lift of x: a generator of the Teichmuller set, of order p^s - 1.
  GaloisRingElement teichmuller_generator() const;
  /// Parses the comma-separated coefficient format, e.g. "3,1" for 3 + x.
  GaloisRingElement parse_element(std::string_view text) const;

  /// out = a * b for raw coefficient spans of length s (out may alias neither).
  void multiply(std::span<const Residue> a, std::span<const Residue> b,
                std::span<Residue> out) const;

 private:
  GaloisRing(std::uint64_t p, unsigned r, unsigned s, std::vector<Residue> modulus);

  std::uint64_t p_;
  unsigned r_;
  unsigned s_;
  std::uint64_t characteristic_;
  std::uint64_t residue_field_size_;
  std::vector<Residue> modulus_;
  std::vector<Residue> teichmuller_generator_;
};

class GaloisRingElement {
 public:
  GaloisRingElement() = default;
  GaloisRingElement(const GaloisRing& ring, std::vector<Residue> coefficients);

  bool valid() const { return ring_ != nullptr; }
  const GaloisRing& ring() const;
  std::span<const Residue> coefficients() const { return coeffs_; }
  Residue coefficient(std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const;
  bool is_one() const;
  /// Units are exactly the elements with nonzero reduction mod p.
  bool is_unit() const;
  /// Largest k <= r with the element in p^k GR (r for zero).
  unsigned p_valuation() const;

  GaloisRingElement pow(std::uint64_t exponent) const;
  GaloisRingElement pow(const BigInt& exponent) const;
  GaloisRingElement inverse() const;

  GaloisRingElement& operator+=(const GaloisRingElement& other);
  GaloisRingElement& operator-=(const GaloisRingElement& other);
  GaloisRingElement& operator*=(const GaloisRingElement& other);
  GaloisRingElement operator-() const;

  friend GaloisRingElement operator+(GaloisRingElement a, const GaloisRingElement& b) {
    return a += b;
  }
  friend GaloisRingElement operator-(GaloisRingElement a, const GaloisRingElement& b) {
    return a -= b;
  }
  friend GaloisRingElement operator*(const GaloisRingElement& a, const GaloisRingElement& b);
  friend bool operator==(const GaloisRingElement& a, const GaloisRingElement& b);

  /// Scales every coefficient by an integer.
  GaloisRingElement scaled(std::uint64_t factor) const;

  /// "c0,c1,...,c_{s-1}"
  std::string to_string() const;

 private:
  void require_same_ring(const GaloisRingElement& other) const;

  const GaloisRing* ring_ = nullptr;
  std::vector<Residue> coeffs_;
};

/// t with t^{p^s} = t and t = a (mod p).
GaloisRingElement teichmuller_lift(const GaloisRingElement& a);
bool is_teichmuller(const GaloisRingElement& a);
/// All p^s Teichmuller elements: 0, 1, xi, ..., xi^{p^s - 2}.
std::vector<GaloisRingElement> teichmuller_set(const GaloisRing& ring);

/// (alpha_0, ..., alpha_{r-1}) with a = sum alpha_i p^i and every alpha_i Teichmuller.
std::vector<GaloisRingElement> teichmuller_digits(const GaloisRingElement& a);
GaloisRingElement from_teichmuller_digits(std::span<const GaloisRingElement> digits);

/// sum alpha_i^{p^k} p^i over the Teichmuller digits of a. k = s/2 is the bar map.
GaloisRingElement generalized_frobenius(const GaloisRingElement& a, std::uint64_t k);
/// Order-two automorphism of GR(p^r, s) for even s.
GaloisRingElement conjugate(const GaloisRingElement& a);

/// Unital ring monomorphism GR(p^r, s) -> GR(p^r, s*t) for target degree s*t.
GaloisRingElement embed(const GaloisRingElement& a, const GaloisRing& target);
/// Inverse of embed on its image; throws std::domain_error for elements
/// outside the subring.
GaloisRingElement pull_back(const GaloisRingElement& b, const GaloisRing& source);

/// xi^{(p^s - 1)/M}, a primitive M-th root of unity; requires M | p^s - 1.
GaloisRingElement root_of_unity(const GaloisRing& ring, std::uint64_t order);

}  // namespace sdc
