#pragma once

// q-cyclotomic classes (q = p^s) of a finite abelian group of order prime to p,
// with their Euclidean (I / II / III) and Hermitian (II' / III') types, and the
// good / bad classification of pairs (j, q).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdc/abelian_group.hpp"

namespace sdc {

enum class EuclideanType { I, II, III };
enum class HermitianType { IIPrime, IIIPrime };

std::string to_string(EuclideanType type);
std::string to_string(HermitianType type);

/// q = p^s with p prime and s >= 1.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned s = 0;
  std::uint64_t q = 0;

  /// Throws std::invalid_argument if q is not a prime power.
  static PrimePower from(std::uint64_t q);
  /// p^{s/2}; requires s even.
  std::uint64_t half() const;
};

struct CyclotomicClass {
  GroupElement representative;
  /// Orbit order: representative, q.rep, q^2.rep, ...
  std::vector<GroupElement> elements;
  EuclideanType euclidean = EuclideanType::I;
  /// Present only for even s.
  std::optional<HermitianType> hermitian;

  std::size_t size() const { return elements.size(); }
  bool contains(const GroupElement& a) const;
};

/// Orbit of a under multiplication by q, with types filled in.
CyclotomicClass class_of(const AbelianGroup& group, std::uint64_t q, const GroupElement& a);

/// I if a = -a; II if -a lies in the orbit; III otherwise.
EuclideanType classify_euclidean(const AbelianGroup& group, const CyclotomicClass& c);
/// II' if the orbit contains -p^{s/2}.a, III' otherwise. Requires even s.
HermitianType classify_hermitian(const AbelianGroup& group, const CyclotomicClass& c,
                                 const PrimePower& q);

struct ClassPartition {
  AbelianGroup group;
  PrimePower q;
  /// Classes in discovery order; each representative is the lexicographically
  /// smallest element not covered by an earlier class.
  std::vector<CyclotomicClass> classes;
  /// Group index -> class index.
  std::vector<std::size_t> class_of_element;

  // Euclidean arrangement. Pairs are (primary, partner); the primary class
  // has the smaller representative, the partner contains -rep(primary).
  std::vector<std::size_t> type_I;
  std::vector<std::size_t> type_II;
  std::vector<std::pair<std::size_t, std::size_t>> type_III;

  // Hermitian arrangement (even s only); partner contains -p^{s/2}.rep(primary).
  std::vector<std::size_t> type_IIp;
  std::vector<std::pair<std::size_t, std::size_t>> type_IIIp;

  bool has_hermitian() const { return q.s % 2 == 0; }
  const CyclotomicClass& class_containing(const GroupElement& a) const;
};

ClassPartition partition(const AbelianGroup& group, std::uint64_t q);

enum class PairClass { OddlyGood, EvenlyGoodOnly, Bad };
std::string to_string(PairClass c);

/// Classifies (j, q): good iff j | q^t + 1 for some t >= 1, split by the
/// parity of the solutions t. Requires gcd(j, q) = 1.
PairClass pair_class(std::uint64_t j, std::uint64_t q);
/// Same classification by scanning t = 1 .. 2 ord_j(q) directly.
PairClass pair_class_by_scan(std::uint64_t j, std::uint64_t q);

/// 0 iff (j, q) is good.
int chi(std::uint64_t j, std::uint64_t q);
/// 0 iff (j, q) is oddly good.
int lambda(std::uint64_t j, std::uint64_t q);

}  // namespace sdc
