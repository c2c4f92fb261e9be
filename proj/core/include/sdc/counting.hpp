#pragma once

// Enumeration formulas for abelian codes and self-dual abelian codes in
// GR(p^r, s)[A + P]. Base counts for GR(p^r, s')[P] come from pluggable
// providers, so the cases where no closed form is known stay explicit.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "sdc/abelian_group.hpp"
#include "sdc/cyclotomic.hpp"
#include "sdc/group_ring.hpp"
#include "sdc/number_theory.hpp"

namespace sdc {

/// True iff a self-dual code exists: r even, or p = 2 and |G| even. The
/// Hermitian case needs even s.
bool exists_self_dual(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& group,
                      Duality duality);
/// r = 1: Sylow p-subgroup cyclic; r >= 2: gcd(p, |G|) = 1.
bool is_principal_ideal_group_ring(std::uint64_t p, unsigned r, const AbelianGroup& group);

/// Cyclic codes of length p^a over GR(p^2, s); a = 0 gives 3.
BigInt nc_p2(std::uint64_t p, unsigned s, unsigned a);
/// Euclidean self-dual cyclic codes of length p^a over GR(p^2, s); a = 0 gives 1.
BigInt nec_p2(std::uint64_t p, unsigned s, unsigned a);
/// Hermitian self-dual cyclic codes of length p^a over GR(p^2, s), s even; a = 0 gives 1.
BigInt nhc_p2(std::uint64_t p, unsigned s, unsigned a);

/// Self-dual codes in GR(p^r, s)[A], gcd(|A|, p) = 1.
BigInt nea_semisimple(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& group);
BigInt nha_semisimple(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& group);

// ---------------------------------------------------------------------------
// Base counts

enum class BaseCount { NA, NEA, NHA };
std::string to_string(BaseCount kind);

/// A provider was asked for a base count outside its validity domain.
class ProviderDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Supplies NA / NEA / NHA for GR(p^r, s)[P], P a p-group.
class BaseCountProvider {
 public:
  virtual ~BaseCountProvider() = default;
  virtual std::string name() const = 0;
  virtual std::string domain() const = 0;
  virtual bool supports(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                        const AbelianGroup& sylow) const = 0;
  /// Throws ProviderDomainError outside the domain.
  virtual BigInt count(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                       const AbelianGroup& sylow) const = 0;

 protected:
  [[noreturn]] void reject(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                           const AbelianGroup& sylow) const;
};

/// P trivial: NA = r + 1, NEA = NHA = 1 for even r and 0 for odd r.
class TrivialProvider : public BaseCountProvider {
 public:
  std::string name() const override { return "trivial"; }
  std::string domain() const override { return "trivial P"; }
  bool supports(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                const AbelianGroup& sylow) const override;
  BigInt count(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
               const AbelianGroup& sylow) const override;
};

/// r = 2 and P cyclic (possibly trivial): nc_p2 / nec_p2 / nhc_p2.
class ClosedFormProvider : public BaseCountProvider {
 public:
  std::string name() const override { return "closed"; }
  std::string domain() const override { return "r = 2 and P cyclic"; }
  bool supports(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                const AbelianGroup& sylow) const override;
  BigInt count(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
               const AbelianGroup& sylow) const override;
};

/// Exhaustive ideal enumeration of GR(p^r, s)[P] within the exhaustive bound.
/// Results are cached.
class BruteForceProvider : public BaseCountProvider {
 public:
  std::string name() const override { return "brute"; }
  std::string domain() const override;
  bool supports(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                const AbelianGroup& sylow) const override;
  BigInt count(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
               const AbelianGroup& sylow) const override;

 private:
  using Key = std::tuple<int, std::uint64_t, unsigned, unsigned, std::vector<std::uint64_t>>;
  mutable std::mutex mutex_;
  mutable std::map<Key, BigInt> cache_;
};

/// Tries trivial, then closed, then (unless disabled) brute.
class AutoProvider : public BaseCountProvider {
 public:
  explicit AutoProvider(bool allow_brute = true) : allow_brute_(allow_brute) {}

  std::string name() const override { return allow_brute_ ? "auto" : "formula"; }
  std::string domain() const override;
  bool supports(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                const AbelianGroup& sylow) const override;
  BigInt count(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
               const AbelianGroup& sylow) const override;
  /// The provider that would answer this query, or nullptr.
  const BaseCountProvider* choose(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                                  const AbelianGroup& sylow) const;

 private:
  TrivialProvider trivial_;
  ClosedFormProvider closed_;
  BruteForceProvider brute_;
  bool allow_brute_;
};

/// "auto", "formula" (auto without brute force), "trivial", "closed" or "brute".
std::unique_ptr<BaseCountProvider> make_provider(const std::string& name);

// ---------------------------------------------------------------------------
// General product formula

/// What is counted: self-dual codes for a duality, or all codes.
enum class CountKind { Euclidean, Hermitian, All };
std::string to_string(CountKind kind);
CountKind parse_count_kind(const std::string& text);  // euclidean | hermitian | none

struct DivisorTerm {
  std::uint64_t d = 0;
  /// Elements of A of order d (phi(d) for cyclic A).
  std::uint64_t elements = 0;
  /// ord_d(p^s)
  std::uint64_t order = 0;
  /// Classification of (d, p^s) for Euclidean and full counts, (d, p^{s/2}) for Hermitian.
  PairClass pair_class = PairClass::OddlyGood;
  BaseCount base = BaseCount::NA;
  /// Residue degree of the base ring GR(p^r, base_degree)[P].
  unsigned base_degree = 0;
  BigInt base_value;
  std::uint64_t exponent = 0;
  BigInt factor;
  std::string provider;
};

struct CountReport {
  std::uint64_t p = 0;
  unsigned r = 0;
  unsigned s = 0;
  std::string group;
  std::string complement;
  std::string sylow;
  CountKind kind = CountKind::Euclidean;
  BigInt count;
  std::vector<DivisorTerm> breakdown;
  /// Providers used, comma separated, in order of first use.
  std::string providers;
};

/// Count for GR(p^r, s)[A + P] from the product over divisors d of exp(A).
CountReport count_general(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& complement,
                          const AbelianGroup& sylow, CountKind kind,
                          const BaseCountProvider& provider);
/// Splits G = A + P first.
CountReport count_abelian_codes(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& group,
                                CountKind kind, const BaseCountProvider& provider);

CountReport nea_general(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& complement,
                        const AbelianGroup& sylow, const BaseCountProvider& provider);
CountReport nha_general(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& complement,
                        const AbelianGroup& sylow, const BaseCountProvider& provider);

/// Self-dual cyclic codes of length n over GR(p^2, s), via the cyclic-length
/// specialization with eta(m).
CountReport nec_length_n(std::uint64_t p, unsigned s, std::uint64_t n);
CountReport nhc_length_n(std::uint64_t p, unsigned s, std::uint64_t n);
/// All cyclic codes of length n over GR(p^2, s).
CountReport nc_length_n(std::uint64_t p, unsigned s, std::uint64_t n);

}  // namespace sdc
