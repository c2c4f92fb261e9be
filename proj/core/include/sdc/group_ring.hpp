#pragma once

// Group rings GR(p^r, s)[G] with dense coefficient storage, the split
// GR[G] = R[P] (R = GR[A], G = A + P), the DFT over R when p does not divide
// |A|, and the Euclidean / Hermitian decompositions of R into Galois rings.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/abelian_group.hpp"
#include "sdc/cyclotomic.hpp"
#include "sdc/galois_ring.hpp"

namespace sdc {

class GroupRingElement;

enum class Duality { Euclidean, Hermitian };

std::string to_string(Duality duality);
/// "euclidean" / "hermitian"; throws std::invalid_argument otherwise.
Duality parse_duality(std::string_view text);

/// Shared, immutable handle on GR(p^r, s)[G]. Copies are cheap.
class GroupRing {
 public:
  GroupRing(const GaloisRing& ring, AbelianGroup group);

  const GaloisRing& ring() const { return *impl_->ring; }
  const AbelianGroup& group() const { return impl_->group; }
  /// |G|
  std::size_t order() const { return impl_->order; }
  /// Rank as a free Z_{p^r}-module: |G| * s.
  std::size_t rank() const { return impl_->order * impl_->ring->s(); }
  BigInt size() const;
  /// e.g. "GR(2^2,1)[Z2xZ3]"
  std::string name() const;

  GroupRingElement zero() const;
  GroupRingElement one() const;
  GroupRingElement monomial(const GaloisRingElement& alpha, const GroupElement& g) const;
  /// Y^g
  GroupRingElement basis(const GroupElement& g) const;
  /// Coefficients indexed like AbelianGroup::element_at.
  GroupRingElement from_coefficients(const std::vector<GaloisRingElement>& coefficients) const;
  /// Flat residues: entry g_index * s + j is coefficient j of the coefficient at g.
  GroupRingElement from_residues(std::vector<Residue> residues) const;
  /// Parses "(0)=1;(1)=1,1" or "0"; unlisted group elements get coefficient 0.
  GroupRingElement parse_element(std::string_view text) const;

  std::size_t add_index(std::size_t g, std::size_t h) const;
  std::size_t negate_index(std::size_t g) const;

  friend bool operator==(const GroupRing& a, const GroupRing& b) {
    return a.impl_ == b.impl_ || (a.impl_->ring == b.impl_->ring && a.group() == b.group());
  }

 private:
  struct Impl {
    const GaloisRing* ring;
    AbelianGroup group;
    std::size_t order;
    std::vector<std::uint32_t> add_table;  // empty when |G| is large
    std::vector<std::size_t> negate_table;
  };
  std::shared_ptr<const Impl> impl_;
};

class GroupRingElement {
 public:
  GroupRingElement(GroupRing context, std::vector<Residue> residues);

  const GroupRing& context() const { return context_; }
  const GaloisRing& ring() const { return context_.ring(); }
  std::span<const Residue> residues() const { return data_; }
  GaloisRingElement coefficient(const GroupElement& g) const;
  GaloisRingElement coefficient_at(std::size_t g_index) const;
  void set_coefficient(const GroupElement& g, const GaloisRingElement& alpha);
  bool is_zero() const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement operator-() const;
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

  GroupRingElement scaled(const GaloisRingElement& alpha) const;
  GroupRingElement scaled(std::uint64_t factor) const;
  /// Y^g times this element.
  GroupRingElement shifted(const GroupElement& g) const;

  std::string to_string() const;

 private:
  void require_same_context(const GroupRingElement& other) const;

  GroupRing context_;
  std::vector<Residue> data_;
};

/// sum_g alpha_g beta_g
GaloisRingElement form_euclidean(const GroupRingElement& u, const GroupRingElement& v);
/// sum_g alpha_g bar(beta_g); needs even s.
GaloisRingElement form_hermitian(const GroupRingElement& u, const GroupRingElement& v);
GaloisRingElement form(Duality duality, const GroupRingElement& u, const GroupRingElement& v);

/// Y^a -> Y^{-a}, scalars fixed.
GroupRingElement involution_hat(const GroupRingElement& x);
/// alpha Y^a -> bar(alpha) Y^{-a}; needs even s.
GroupRingElement involution_tilde(const GroupRingElement& x);
GroupRingElement involution(Duality duality, const GroupRingElement& x);

// ---------------------------------------------------------------------------
// GR[G] = R[P]

/// Element of R[P]: coefficients indexed by the elements of P.
struct SplitElement {
  std::vector<GroupRingElement> coefficients;
  friend bool operator==(const SplitElement&, const SplitElement&) = default;
};

class SylowView {
 public:
  explicit SylowView(GroupRing whole);

  const GroupRing& whole() const { return whole_; }
  /// R = GR(p^r, s)[A]
  const GroupRing& inner() const { return inner_; }
  const AbelianGroup& sylow() const { return split_.sylow; }
  const SylowSplit& split() const { return split_; }

  /// Coefficient of Y^b is sum_a alpha_{a+b} Y^a.
  SplitElement phi(const GroupRingElement& u) const;
  GroupRingElement phi_inverse(const SplitElement& x) const;

  SplitElement zero() const;
  SplitElement add(const SplitElement& x, const SplitElement& y) const;
  SplitElement multiply(const SplitElement& x, const SplitElement& y) const;
  /// sum_b x_b hat(u_b) (Euclidean) or sum_b x_b tilde(u_b) (Hermitian), in R.
  GroupRingElement pairing(Duality duality, const SplitElement& x, const SplitElement& u) const;

 private:
  GroupRing whole_;
  SylowSplit split_;
  GroupRing inner_;
  // whole index -> (inner index, sylow index)
  std::vector<std::pair<std::size_t, std::size_t>> coordinates_;
};

// ---------------------------------------------------------------------------
// DFT over R = GR(p^r, s)[A], gcd(|A|, p) = 1.

class FourierTransform {
 public:
  explicit FourierTransform(GroupRing ring);

  const GroupRing& source() const { return ring_; }
  /// GR(p^r, s mu), mu = ord_M(p^s).
  const GaloisRing& extension() const { return *extension_; }
  unsigned mu() const { return mu_; }
  const GaloisRingElement& zeta() const { return zeta_powers_.at(1 % zeta_powers_.size()); }
  /// zeta^k for 0 <= k < M.
  const GaloisRingElement& zeta_power(std::uint64_t k) const { return zeta_powers_.at(k); }

  /// c^_h = sum_a c_a zeta^{gamma_h(a)}
  GaloisRingElement coefficient(const GroupRingElement& c, const GroupElement& h) const;
  /// All c^_h, indexed like the group elements.
  std::vector<GaloisRingElement> dft(const GroupRingElement& c) const;
  /// c_a = |A|^{-1} sum_h c^_h zeta^{-gamma_h(a)}; throws std::domain_error when the
  /// result does not lie in GR(p^r, s)[A].
  GroupRingElement idft(std::span<const GaloisRingElement> spectrum) const;

 private:
  GroupRing ring_;
  const GaloisRing* extension_;
  unsigned mu_;
  std::vector<GaloisRingElement> zeta_powers_;  // zeta^0 .. zeta^{M-1}
};

// ---------------------------------------------------------------------------
// R = prod of Galois rings, arranged by class type.

/// How the involution (hat for Euclidean, tilde for Hermitian) acts on a slot.
enum class SlotKind { Fixed, Conjugate, PairFirst, PairSecond };

struct ComponentSlot {
  std::size_t class_index = 0;
  /// Point h whose DFT value gives this component.
  GroupElement point;
  /// GR(p^r, s |class|)
  const GaloisRing* ring = nullptr;
  SlotKind kind = SlotKind::Fixed;
  /// Index of the other slot of a pair.
  std::size_t partner = 0;
  /// Frobenius exponent applied after pulling back the DFT value (nonzero only
  /// for the second slot of a Hermitian pair).
  std::uint64_t twist = 0;
};

struct DecomposedElement {
  std::vector<GaloisRingElement> components;
  friend bool operator==(const DecomposedElement&, const DecomposedElement&) = default;
};

class Decomposition {
 public:
  Decomposition(GroupRing ring, Duality duality);

  Duality duality() const { return duality_; }
  const GroupRing& source() const { return transform_.source(); }
  const ClassPartition& partition() const { return partition_; }
  const FourierTransform& transform() const { return transform_; }
  /// Slots in order: I, II, III pairs (Euclidean) or II', III' pairs (Hermitian).
  const std::vector<ComponentSlot>& slots() const { return slots_; }

  DecomposedElement decompose(const GroupRingElement& x) const;
  GroupRingElement compose(const DecomposedElement& d) const;

  DecomposedElement zero() const;
  DecomposedElement one() const;
  /// 1 on a single slot, 0 elsewhere (a primitive idempotent image).
  DecomposedElement indicator(std::size_t slot) const;
  DecomposedElement add(const DecomposedElement& a, const DecomposedElement& b) const;
  DecomposedElement multiply(const DecomposedElement& a, const DecomposedElement& b) const;
  /// Image of hat (Euclidean) or tilde (Hermitian): identity on Fixed slots,
  /// bar on Conjugate slots, swap on pairs.
  DecomposedElement involution(const DecomposedElement& d) const;
  /// Componentwise conjugation used by the orthogonality conditions.
  GaloisRingElement slot_bar(std::size_t slot, const GaloisRingElement& z) const;

 private:
  Duality duality_;
  ClassPartition partition_;
  FourierTransform transform_;
  std::vector<ComponentSlot> slots_;
};

}  // namespace sdc
