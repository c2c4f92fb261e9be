#include "sdc/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdc {

std::string to_string(EuclideanType type) {
  switch (type) {
    case EuclideanType::I: return "I";
    case EuclideanType::II: return "II";
    case EuclideanType::III: return "III";
  }
  return "?";
}

std::string to_string(HermitianType type) {
  return type == HermitianType::IIPrime ? "II'" : "III'";
}

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::OddlyGood: return "oddly_good";
    case PairClass::EvenlyGoodOnly: return "evenly_good_only";
    case PairClass::Bad: return "bad";
  }
  return "?";
}

PrimePower PrimePower::from(std::uint64_t q) {
  const auto [p, s] = prime_power_decomposition(q);
  if (p == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return PrimePower{p, s, q};
}

std::uint64_t PrimePower::half() const {
  if (s % 2 != 0) {
    throw std::invalid_argument("Hermitian types need even s; q = " + std::to_string(q) +
                                " has s = " + std::to_string(s));
  }
  return checked_pow(p, s / 2);
}

bool CyclotomicClass::contains(const GroupElement& a) const {
  return std::find(elements.begin(), elements.end(), a) != elements.end();
}

namespace {

void require_coprime(const AbelianGroup& group, const PrimePower& q) {
  if (group.order() % q.p == 0) {
    throw std::invalid_argument("cyclotomic classes need gcd(|A|, p) = 1; |A| = " +
                                std::to_string(group.order()) + ", p = " + std::to_string(q.p));
  }
}

std::vector<GroupElement> orbit(const AbelianGroup& group, std::uint64_t q, const GroupElement& a) {
  std::vector<GroupElement> out{a};
  GroupElement next = group.scale(q, a);
  while (next != a) {
    out.push_back(next);
    next = group.scale(q, next);
  }
  return out;
}

}  // namespace

EuclideanType classify_euclidean(const AbelianGroup& group, const CyclotomicClass& c) {
  const GroupElement neg = group.negate(c.representative);
  if (neg == c.representative) return EuclideanType::I;
  return c.contains(neg) ? EuclideanType::II : EuclideanType::III;
}

HermitianType classify_hermitian(const AbelianGroup& group, const CyclotomicClass& c,
                                 const PrimePower& q) {
  const GroupElement target = group.scale(q.half(), group.negate(c.representative));
  return c.contains(target) ? HermitianType::IIPrime : HermitianType::IIIPrime;
}

CyclotomicClass class_of(const AbelianGroup& group, std::uint64_t q, const GroupElement& a) {
  const PrimePower pq = PrimePower::from(q);
  require_coprime(group, pq);
  CyclotomicClass c;
  c.representative = group.element(a.coords);
  c.elements = orbit(group, q, c.representative);
  c.euclidean = classify_euclidean(group, c);
  if (pq.s % 2 == 0) c.hermitian = classify_hermitian(group, c, pq);
  return c;
}

const CyclotomicClass& ClassPartition::class_containing(const GroupElement& a) const {
  return classes.at(class_of_element.at(group.index_of(a)));
}

ClassPartition partition(const AbelianGroup& group, std::uint64_t q) {
  ClassPartition out;
  out.group = group;
  out.q = PrimePower::from(q);
  require_coprime(group, out.q);
  constexpr auto unset = static_cast<std::size_t>(-1);
  out.class_of_element.assign(group.order(), unset);
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (out.class_of_element[i] != unset) continue;
    CyclotomicClass c = class_of(group, q, group.element_at(i));
    for (const auto& e : c.elements) out.class_of_element[group.index_of(e)] = out.classes.size();
    out.classes.push_back(std::move(c));
  }

  std::vector<bool> paired(out.classes.size(), false);
  for (std::size_t k = 0; k < out.classes.size(); ++k) {
    const auto& c = out.classes[k];
    switch (c.euclidean) {
      case EuclideanType::I: out.type_I.push_back(k); break;
      case EuclideanType::II: out.type_II.push_back(k); break;
      case EuclideanType::III: {
        if (paired[k]) break;
        const std::size_t partner =
            out.class_of_element[group.index_of(group.negate(c.representative))];
        paired[k] = paired[partner] = true;
        out.type_III.emplace_back(k, partner);
        break;
      }
    }
  }
  if (out.has_hermitian()) {
    std::fill(paired.begin(), paired.end(), false);
    const std::uint64_t half = out.q.half();
    for (std::size_t k = 0; k < out.classes.size(); ++k) {
      const auto& c = out.classes[k];
      if (c.hermitian == HermitianType::IIPrime) {
        out.type_IIp.push_back(k);
      } else if (!paired[k]) {
        const std::size_t partner = out.class_of_element[group.index_of(
            group.scale(half, group.negate(c.representative)))];
        paired[k] = paired[partner] = true;
        out.type_IIIp.emplace_back(k, partner);
      }
    }
  }
  return out;
}

PairClass pair_class(std::uint64_t j, std::uint64_t q) {
  if (j == 0) throw std::invalid_argument("pair_class: j must be positive");
  if (gcd_u64(j, q) != 1) {
    throw std::invalid_argument("pair_class: gcd(" + std::to_string(j) + ", " + std::to_string(q) +
                                ") != 1");
  }
  if (j <= 2) return PairClass::OddlyGood;
  const std::uint64_t e = multiplicative_order(q, j);
  if (e % 2 != 0 || pow_mod(q, e / 2, j) != j - 1) return PairClass::Bad;
  // Solutions of q^t = -1 are t = e/2 + k e, all of the parity of e/2.
  return (e / 2) % 2 == 1 ? PairClass::OddlyGood : PairClass::EvenlyGoodOnly;
}

PairClass pair_class_by_scan(std::uint64_t j, std::uint64_t q) {
  if (j == 0 || gcd_u64(j, q) != 1) throw std::invalid_argument("pair_class_by_scan: bad pair");
  const std::uint64_t e = multiplicative_order(q, j);
  bool odd = false;
  bool even = false;
  std::uint64_t power = 1 % j;
  for (std::uint64_t t = 1; t <= 2 * e; ++t) {
    power = mul_mod(power, q % j, j);
    if ((power + 1) % j == 0) (t % 2 == 1 ? odd : even) = true;
  }
  if (odd) return PairClass::OddlyGood;
  if (even) return PairClass::EvenlyGoodOnly;
  return PairClass::Bad;
}

int chi(std::uint64_t j, std::uint64_t q) { return pair_class(j, q) == PairClass::Bad ? 1 : 0; }

int lambda(std::uint64_t j, std::uint64_t q) {
  return pair_class(j, q) == PairClass::OddlyGood ? 0 : 1;
}

}  // namespace sdc
