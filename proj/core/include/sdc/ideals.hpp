#pragma once

// Abelian codes as ideals of GR(p^r, s)[G]. An ideal is stored as the Howell
// form of its underlying Z_{p^r}-module, which is canonical, so equality and
// hashing need no element enumeration. Operations that do enumerate elements
// are limited by the exhaustive bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdc/group_ring.hpp"
#include "sdc/howell.hpp"

namespace sdc {

/// Default number of ring elements an exhaustive search may visit.
inline constexpr std::uint64_t kDefaultExhaustiveBound = std::uint64_t{1} << 16;
/// Environment variable overriding the exhaustive bound.
inline constexpr const char* kExhaustiveBoundVariable = "SDC_EXHAUSTIVE_BOUND";
/// Largest Z_{p^r}-rank |G| s handled by the linear algebra.
inline constexpr std::size_t kMaxModuleRank = 512;

/// The bound from the environment, or the default. Malformed values throw.
std::uint64_t exhaustive_bound();
bool within_exhaustive_bound(const GroupRing& ring, std::uint64_t bound = exhaustive_bound());

/// Integer code sum_k residue_k (p^r)^k with k = g_index s + j; needs |ring| <= 2^64.
std::uint64_t encode(const GroupRingElement& x);
GroupRingElement decode(const GroupRing& ring, std::uint64_t code);

class Ideal {
 public:
  Ideal(GroupRing ring, HowellForm module, std::vector<GroupRingElement> generators);

  const GroupRing& ring() const { return ring_; }
  const HowellForm& module() const { return module_; }
  /// Generates the ideal (not necessarily minimal).
  const std::vector<GroupRingElement>& generators() const { return generators_; }

  BigInt size() const { return module_.size(); }
  /// log_p |C|
  std::uint64_t log_size() const { return module_.log_size(); }
  bool is_zero() const { return module_.rows().empty(); }
  bool is_whole_ring() const;

  bool contains(const GroupRingElement& x) const;
  bool contains(const Ideal& other) const { return module_.contains(other.module_); }

  /// Sorted element codes; throws if the ideal exceeds the exhaustive bound.
  std::vector<std::uint64_t> element_codes() const;
  std::vector<GroupRingElement> elements() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.module_ == b.module_;
  }

 private:
  GroupRing ring_;
  HowellForm module_;
  std::vector<GroupRingElement> generators_;
};

Ideal zero_ideal(const GroupRing& ring);
Ideal whole_ring(const GroupRing& ring);
Ideal ideal_generated_by(const GroupRing& ring, const std::vector<GroupRingElement>& generators);
Ideal principal_ideal(const GroupRingElement& x);
Ideal sum(const Ideal& a, const Ideal& b);
/// Greedy generator list: Howell rows added while they enlarge the ideal.
std::vector<GroupRingElement> minimal_generators(const Ideal& ideal);

/// All ideals, each once, ordered by size then canonical form. Requires the
/// ring to lie within the exhaustive bound.
std::vector<Ideal> enumerate_ideals(const GroupRing& ring);

Ideal dual(const Ideal& code, Duality duality);
bool is_self_dual(const Ideal& code, Duality duality);
/// Self-dual members of enumerate_ideals(ring).
std::vector<Ideal> self_dual_ideals(const GroupRing& ring, Duality duality);

struct SelfDualConstruction {
  GroupRing ring;
  std::vector<GroupRingElement> generators;
  Ideal ideal;
  /// "p^{r/2} R" or "componentwise"
  std::string method;
};

/// The explicit self-dual code of the existence criterion. Throws
/// std::domain_error when no self-dual code exists.
SelfDualConstruction construct_self_dual(std::uint64_t p, unsigned r, unsigned s,
                                         const AbelianGroup& group, Duality duality);

struct SemisimpleSelfDual {
  BigInt count;
  /// Component exponents i (code component p^i) per decomposition slot, for
  /// the first codes up to the listing limit.
  std::vector<std::vector<unsigned>> choices;
  /// Generators in GR(p^r, s)[A] matching `choices`.
  std::vector<GroupRingElement> generators;
};

/// Componentwise enumeration over the class decomposition of GR(p^r, s)[A],
/// gcd(|A|, p) = 1. Lists at most `listing_limit` codes.
SemisimpleSelfDual enumerate_semisimple_selfdual(std::uint64_t p, unsigned r, unsigned s,
                                                 const AbelianGroup& group, Duality duality,
                                                 std::size_t listing_limit = 64);

}  // namespace sdc
