#pragma once

// Property checks shared by the unit suites and the acceptance runner. Each
// check returns a CheckResult whose message names the first counterexample.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sdc/abelian_group.hpp"
#include "sdc/galois_ring.hpp"
#include "sdc/group_ring.hpp"

namespace sdc::testing {

using Rng = std::mt19937_64;

struct CheckResult {
  bool ok = true;
  std::string message;
  std::uint64_t cases = 0;

  static CheckResult fail(std::string text) { return {false, std::move(text), 0}; }
  explicit operator bool() const { return ok; }
};

struct RingConfig {
  std::uint64_t p;
  unsigned r;
  unsigned s;
  const char* group;

  GroupRing ring() const;
  std::string label() const;
};

/// gcd(|G|, p) = 1; used for the DFT and decomposition checks.
const std::vector<RingConfig>& semisimple_configs();
/// Nontrivial Sylow p-subgroup; used for the Phi checks.
const std::vector<RingConfig>& mixed_configs();

GaloisRingElement random_element(const GaloisRing& ring, Rng& rng);
/// Random element of p^k GR(p^r, s).
GaloisRingElement random_multiple(const GaloisRing& ring, unsigned k, Rng& rng);
GroupRingElement random_element(const GroupRing& ring, Rng& rng);

/// Phi is additive, multiplicative, unital and inverted by phi_inverse.
CheckResult check_phi(const RingConfig& config, int pairs, Rng& rng);
/// DFT: additive, convolution to pointwise product, round trip, values fixed by
/// the Frobenius power of their class size.
CheckResult check_dft(const RingConfig& config, int samples, Rng& rng);
/// Decomposition: ring isomorphism, round trip, involution image.
CheckResult check_decomposition(const RingConfig& config, Duality duality, int pairs, Rng& rng);
/// Every element of a small ring: decompose is injective and compose inverts it.
CheckResult check_decomposition_exhaustive(const RingConfig& config, Duality duality);

/// Every ideal: dual(dual(C)) = C, |C| |C^perp| = |ring|, inclusion reversed
/// and the ideal list is closed under dual and sum.
CheckResult check_duals_exhaustive(const GroupRing& ring);

/// Class-type and good-pair facts for one (A, q).
CheckResult check_class_facts(const AbelianGroup& group, std::uint64_t q);
/// Butler formula against the direct count for every divisor of the exponent.
CheckResult check_order_counts(const AbelianGroup& group);

/// (p, r, s, G, duality) for the orthogonality check; G = A + P with A nontrivial.
struct OrthogonalityConfig {
  RingConfig ring;
  Duality duality;
};
const std::vector<OrthogonalityConfig>& orthogonality_configs();

struct OrthogonalityTally {
  int pairs = 0;
  int vanishing = 0;
  int agreeing = 0;
};
/// For `pairs` pairs (x, u) in R[P]: the pairing vanishes iff the componentwise
/// conditions hold, and iff form(Y^a x, u) = 0 for every a in A.
CheckResult check_orthogonality(const OrthogonalityConfig& config, int pairs, Rng& rng,
                                OrthogonalityTally* tally = nullptr);

/// All (p, r, s, G) with p^{r s |G|} <= max_size, one group per isomorphism class.
struct SmallRing {
  std::uint64_t p;
  unsigned r;
  unsigned s;
  AbelianGroup group;
};
std::vector<SmallRing> small_rings(std::uint64_t max_size);

}  // namespace sdc::testing
