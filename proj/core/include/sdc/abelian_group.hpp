#pragma once

// Finite abelian groups presented as Z_{m_1} x ... x Z_{m_N}.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/number_theory.hpp"

namespace sdc {

struct GroupElement {
  std::vector<std::uint64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  /// "(1,2)"; the identity of the trivial group prints as "()".
  std::string to_string() const;
};

class AbelianGroup {
 public:
  /// The trivial group.
  AbelianGroup() = default;
  /// Each factor must be >= 2.
  explicit AbelianGroup(std::vector<std::uint64_t> factors);

  /// Grammar: "1" or Z<n> joined by 'x', e.g. "Z2xZ4".
  static AbelianGroup parse(std::string_view spec);

  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::uint64_t order() const { return order_; }
  std::uint64_t exponent() const { return exponent_; }
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const;
  std::string to_string() const;

  GroupElement identity() const;
  GroupElement element(std::vector<std::uint64_t> coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  /// k . a = a + ... + a (k times).
  GroupElement scale(std::uint64_t k, const GroupElement& a) const;
  /// Additive order: lcm_i m_i / gcd(m_i, a_i).
  std::uint64_t element_order(const GroupElement& a) const;

  /// Elements are indexed lexicographically, first coordinate most significant.
  std::size_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::size_t index) const;
  std::vector<GroupElement> elements() const;

  /// gamma_h(b) = sum_i b_i h_i (M / m_i) reduced mod the exponent M.
  std::uint64_t gamma(const GroupElement& h, const GroupElement& b) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::uint64_t> factors_;
  std::uint64_t order_ = 1;
  std::uint64_t exponent_ = 1;
};

/// Largest group order accepted by count_order_direct.
inline constexpr std::uint64_t kDirectCountBound = 1'000'000;

/// Number of elements of order d, by iterating over the group.
std::uint64_t count_order_direct(const AbelianGroup& group, std::uint64_t d);
/// Number of elements of order d, from the primary decomposition of the group.
std::uint64_t count_order_formula(const AbelianGroup& group, std::uint64_t d);

/// G = A (+) P with P the Sylow p-subgroup; both keep the factor order of G,
/// dropping trivial parts.
struct SylowSplit {
  AbelianGroup group;
  std::uint64_t p = 0;
  AbelianGroup complement;  // A, order prime to p
  AbelianGroup sylow;       // P

  /// g -> (a, b) with g = a + b.
  std::pair<GroupElement, GroupElement> split(const GroupElement& g) const;
  GroupElement join(const GroupElement& a, const GroupElement& b) const;

  // Per G-factor: which factor of A / P it feeds, or npos.
  std::vector<std::size_t> complement_slot;
  std::vector<std::size_t> sylow_slot;
};

SylowSplit sylow_decompose(const AbelianGroup& group, std::uint64_t p);

/// One group per isomorphism class, in invariant-factor form Z_{d_1} x ... x Z_{d_k}
/// with d_1 | d_2 | ... | d_k; sorted by factor list.
std::vector<AbelianGroup> abelian_groups_of_order(std::uint64_t n);

}  // namespace sdc
