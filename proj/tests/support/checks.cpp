#include "checks.hpp"

#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sdc/cyclotomic.hpp"
#include "sdc/ideals.hpp"

namespace sdc::testing {

GroupRing RingConfig::ring() const {
  return GroupRing(GaloisRing::get(p, r, s), AbelianGroup::parse(group));
}

std::string RingConfig::label() const {
  std::ostringstream out;
  out << "GR(" << p << "^" << r << "," << s << ")[" << group << "]";
  return out.str();
}

const std::vector<RingConfig>& semisimple_configs() {
  static const std::vector<RingConfig> configs{
      {2, 2, 1, "Z3"}, {2, 2, 1, "Z7"},   {2, 1, 2, "Z5"},     {2, 2, 2, "Z5"},
      {2, 3, 1, "Z15"}, {3, 2, 1, "Z4"},  {3, 2, 1, "Z2xZ2"},  {3, 1, 2, "Z8"},
      {5, 2, 1, "Z3"}, {2, 2, 1, "Z3xZ3"}, {2, 2, 2, "Z3"},    {3, 2, 2, "Z4"},
      {2, 2, 1, "Z9"}, {2, 2, 2, "Z7"},   {2, 2, 4, "Z5"},     {7, 2, 1, "Z2xZ4"},
  };
  return configs;
}

const std::vector<RingConfig>& mixed_configs() {
  static const std::vector<RingConfig> configs{
      {2, 2, 1, "Z6"},  {2, 2, 1, "Z12"},  {3, 2, 1, "Z6"},      {2, 1, 1, "Z2xZ6"},
      {2, 2, 2, "Z6"},  {2, 1, 2, "Z10"},  {3, 2, 1, "Z12"},     {5, 1, 1, "Z10"},
      {2, 3, 1, "Z4xZ3"}, {2, 2, 1, "Z2xZ2xZ3"}, {3, 1, 2, "Z6"}, {2, 1, 1, "Z8"},
  };
  return configs;
}

GaloisRingElement random_element(const GaloisRing& ring, Rng& rng) {
  std::uniform_int_distribution<Residue> digit(0, ring.characteristic() - 1);
  std::vector<Residue> c(ring.s());
  for (auto& x : c) x = digit(rng);
  return ring.from_coefficients(std::move(c));
}

GaloisRingElement random_multiple(const GaloisRing& ring, unsigned k, Rng& rng) {
  if (k >= ring.r()) return ring.zero();
  return random_element(ring, rng).scaled(checked_pow(ring.p(), k));
}

GroupRingElement random_element(const GroupRing& ring, Rng& rng) {
  std::uniform_int_distribution<Residue> digit(0, ring.ring().characteristic() - 1);
  std::vector<Residue> c(ring.rank());
  for (auto& x : c) x = digit(rng);
  return ring.from_residues(std::move(c));
}

namespace {

std::string show(const GroupRingElement& x) { return x.to_string(); }

}  // namespace

CheckResult check_phi(const RingConfig& config, int pairs, Rng& rng) {
  const GroupRing ring = config.ring();
  const SylowView view(ring);
  CheckResult result;
  SplitElement one = view.zero();
  one.coefficients.at(0) = view.inner().one();
  if (!(view.phi(ring.one()) == one)) return CheckResult::fail(config.label() + ": phi(1) != 1");
  for (int i = 0; i < pairs; ++i) {
    const auto u = random_element(ring, rng);
    const auto v = random_element(ring, rng);
    const auto pu = view.phi(u);
    const auto pv = view.phi(v);
    if (!(view.phi(u * v) == view.multiply(pu, pv))) {
      return CheckResult::fail(config.label() + ": phi not multiplicative at u=" + show(u) +
                               " v=" + show(v));
    }
    if (!(view.phi(u + v) == view.add(pu, pv))) {
      return CheckResult::fail(config.label() + ": phi not additive at u=" + show(u));
    }
    if (!(view.phi_inverse(pu) == u)) {
      return CheckResult::fail(config.label() + ": phi_inverse(phi(u)) != u at u=" + show(u));
    }
    ++result.cases;
  }
  return result;
}

CheckResult check_dft(const RingConfig& config, int samples, Rng& rng) {
  const GroupRing ring = config.ring();
  const FourierTransform ft(ring);
  const auto classes = partition(ring.group(), checked_pow(config.p, config.s));
  const auto points = ring.group().elements();
  CheckResult result;
  for (int i = 0; i < samples; ++i) {
    const auto u = random_element(ring, rng);
    const auto v = random_element(ring, rng);
    const auto du = ft.dft(u);
    const auto dv = ft.dft(v);
    const auto duv = ft.dft(u * v);
    const auto dsum = ft.dft(u + v);
    for (std::size_t h = 0; h < points.size(); ++h) {
      if (!(duv[h] == du[h] * dv[h])) {
        return CheckResult::fail(config.label() + ": dft(uv) != dft(u) dft(v) at u=" + show(u));
      }
      if (!(dsum[h] == du[h] + dv[h])) {
        return CheckResult::fail(config.label() + ": dft not additive at u=" + show(u));
      }
      const auto nu = classes.class_containing(points[h]).size();
      if (!(generalized_frobenius(du[h], config.s * nu) == du[h])) {
        return CheckResult::fail(config.label() + ": dft value at " + points[h].to_string() +
                                 " not fixed by its Frobenius power");
      }
    }
    if (!(ft.idft(du) == u)) {
      return CheckResult::fail(config.label() + ": idft(dft(u)) != u at u=" + show(u));
    }
    ++result.cases;
  }
  return result;
}

CheckResult check_decomposition(const RingConfig& config, Duality duality, int pairs, Rng& rng) {
  const GroupRing ring = config.ring();
  const Decomposition dec(ring, duality);
  const std::string tag = config.label() + " (" + to_string(duality) + ")";
  CheckResult result;
  if (!(dec.decompose(ring.one()) == dec.one())) return CheckResult::fail(tag + ": image of 1");
  for (int i = 0; i < pairs; ++i) {
    const auto u = random_element(ring, rng);
    const auto v = random_element(ring, rng);
    const auto du = dec.decompose(u);
    const auto dv = dec.decompose(v);
    if (!(dec.decompose(u * v) == dec.multiply(du, dv))) {
      return CheckResult::fail(tag + ": not multiplicative at u=" + show(u) + " v=" + show(v));
    }
    if (!(dec.decompose(u + v) == dec.add(du, dv))) {
      return CheckResult::fail(tag + ": not additive at u=" + show(u));
    }
    if (!(dec.compose(du) == u)) return CheckResult::fail(tag + ": round trip at u=" + show(u));
    if (!(dec.decompose(involution(duality, u)) == dec.involution(du))) {
      return CheckResult::fail(tag + ": involution image at u=" + show(u));
    }
    ++result.cases;
  }
  return result;
}

CheckResult check_decomposition_exhaustive(const RingConfig& config, Duality duality) {
  const GroupRing ring = config.ring();
  const Decomposition dec(ring, duality);
  const std::string tag = config.label() + " (" + to_string(duality) + ")";
  BigInt product = 1;
  for (const auto& slot : dec.slots()) product *= slot.ring->size();
  if (product != ring.size()) return CheckResult::fail(tag + ": component sizes do not multiply");
  if (ring.size() > 1 << 12) return CheckResult::fail(tag + ": ring too large for exhaustion");
  const auto n = static_cast<std::uint64_t>(ring.size());
  CheckResult result;
  for (std::uint64_t code = 0; code < n; ++code) {
    const auto x = decode(ring, code);
    if (!(dec.compose(dec.decompose(x)) == x)) {
      return CheckResult::fail(tag + ": round trip at " + show(x));
    }
    ++result.cases;
  }
  return result;
}

CheckResult check_duals_exhaustive(const GroupRing& ring) {
  const auto ideals = enumerate_ideals(ring);
  std::unordered_map<HowellForm, std::size_t, HowellHash> index;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!index.emplace(ideals[i].module(), i).second) {
      return CheckResult::fail(ring.name() + ": duplicate ideal in enumeration");
    }
  }
  std::vector<Duality> dualities{Duality::Euclidean};
  if (ring.ring().s() % 2 == 0) dualities.push_back(Duality::Hermitian);
  CheckResult result;
  for (const auto duality : dualities) {
    const std::string tag = ring.name() + " (" + to_string(duality) + ")";
    std::vector<std::size_t> dual_of(ideals.size());
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      const Ideal d = dual(ideals[i], duality);
      auto it = index.find(d.module());
      if (it == index.end()) return CheckResult::fail(tag + ": dual not in the ideal list");
      dual_of[i] = it->second;
      if (ideals[i].size() * d.size() != ring.size()) {
        return CheckResult::fail(tag + ": |C| |C^perp| != |ring|");
      }
      if (!(dual(d, duality) == ideals[i])) return CheckResult::fail(tag + ": dual not involutive");
      ++result.cases;
    }
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        if (ideals[j].contains(ideals[i]) && !ideals[dual_of[i]].contains(ideals[dual_of[j]])) {
          return CheckResult::fail(tag + ": dual does not reverse inclusion");
        }
      }
    }
  }
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      if (!index.count(sum(ideals[i], ideals[j]).module())) {
        return CheckResult::fail(ring.name() + ": ideal list not closed under sum");
      }
    }
  }
  return result;
}

CheckResult check_class_facts(const AbelianGroup& group, std::uint64_t q) {
  const PrimePower pq = PrimePower::from(q);
  const ClassPartition part = partition(group, q);
  const std::string tag = group.to_string() + ", q=" + std::to_string(q);
  CheckResult result;

  std::size_t total = 0;
  for (const auto& c : part.classes) total += c.size();
  if (total != group.order()) return CheckResult::fail(tag + ": classes do not partition A");
  const std::size_t euclidean_L = part.type_I.size() + part.type_II.size() + 2 * part.type_III.size();
  if (euclidean_L != part.classes.size()) return CheckResult::fail(tag + ": L != tI + tII + 2tIII");
  if (part.has_hermitian() &&
      part.type_IIp.size() + 2 * part.type_IIIp.size() != part.classes.size()) {
    return CheckResult::fail(tag + ": L != tII' + 2tIII'");
  }

  const auto& zero_class = part.class_containing(group.identity());
  if (zero_class.size() != 1 || zero_class.euclidean != EuclideanType::I ||
      (part.has_hermitian() && zero_class.hermitian != HermitianType::IIPrime)) {
    return CheckResult::fail(tag + ": {0} is not of type I (and II')");
  }

  // Per element order: type and size of the class.
  std::map<std::uint64_t, std::pair<std::string, std::size_t>> by_order;
  for (const auto& c : part.classes) {
    const GroupElement& a = c.representative;
    const GroupElement minus_a = group.negate(a);
    const std::uint64_t order = group.element_order(a);
    const std::size_t size = c.size();
    if (c.euclidean == EuclideanType::I && size != 1) {
      return CheckResult::fail(tag + ": type I class of size " + std::to_string(size));
    }
    if (c.euclidean == EuclideanType::II) {
      if (size % 2 != 0) return CheckResult::fail(tag + ": type II class of odd size");
      const auto nu = size / 2;
      if (!(group.scale(pow_mod(q, nu, group.exponent()), a) == minus_a)) {
        return CheckResult::fail(tag + ": type II class without -a = q^nu a at " + a.to_string());
      }
    }
    const bool bad = order > 1 && pair_class(order, q) == PairClass::Bad;
    if ((c.euclidean == EuclideanType::III) != bad) {
      return CheckResult::fail(tag + ": type III vs bad pair mismatch at " + a.to_string());
    }
    if (pair_class(order, q) != pair_class_by_scan(order, q)) {
      return CheckResult::fail(tag + ": pair_class scan mismatch at j=" + std::to_string(order));
    }
    std::string type = to_string(c.euclidean);
    if (part.has_hermitian()) {
      const std::uint64_t half = pq.half();
      type += "/" + to_string(*c.hermitian);
      if (*c.hermitian == HermitianType::IIPrime) {
        if (size % 2 != 1) return CheckResult::fail(tag + ": type II' class of even size");
        const std::uint64_t m = group.exponent();
        // -a = p^{s nu / 2} a and -p^{s/2} a = p^{s(nu+1)/2} a
        if (!(group.scale(pow_mod(half, size, m), a) == minus_a) ||
            !(group.negate(group.scale(half % m, a)) ==
              group.scale(pow_mod(half, size + 1, m), a))) {
          return CheckResult::fail(tag + ": type II' identities fail at " + a.to_string());
        }
      }
      const bool not_oddly = order > 1 && pair_class(order, half) != PairClass::OddlyGood;
      if (order > 1 && (*c.hermitian == HermitianType::IIIPrime) != not_oddly) {
        return CheckResult::fail(tag + ": type III' vs pair class mismatch at " + a.to_string());
      }
    }
    auto [it, fresh] = by_order.emplace(order, std::make_pair(type, size));
    if (!fresh && it->second != std::make_pair(type, size)) {
      return CheckResult::fail(tag + ": elements of order " + std::to_string(order) +
                               " in classes of different type or size");
    }
    ++result.cases;
  }
  return result;
}

CheckResult check_order_counts(const AbelianGroup& group) {
  std::uint64_t total = 0;
  CheckResult result;
  for (auto d : divisors(group.exponent())) {
    const auto formula = count_order_formula(group, d);
    const auto direct = count_order_direct(group, d);
    if (formula != direct) {
      return CheckResult::fail(group.to_string() + ": N(" + std::to_string(d) + ") formula " +
                               std::to_string(formula) + " vs direct " + std::to_string(direct));
    }
    total += formula;
    ++result.cases;
  }
  if (total != group.order()) return CheckResult::fail(group.to_string() + ": sum N(d) != |A|");
  return result;
}

const std::vector<OrthogonalityConfig>& orthogonality_configs() {
  static const std::vector<OrthogonalityConfig> configs{
      {{2, 2, 1, "Z6"}, Duality::Euclidean},   {{2, 2, 1, "Z14"}, Duality::Euclidean},
      {{3, 2, 1, "Z12"}, Duality::Euclidean},  {{2, 2, 2, "Z10"}, Duality::Hermitian},
      {{2, 2, 2, "Z6"}, Duality::Hermitian},   {{3, 2, 2, "Z12"}, Duality::Hermitian},
  };
  return configs;
}

namespace {

// Slot partner under the involution, itself for Fixed and Conjugate slots.
std::size_t involution_partner(const ComponentSlot& slot, std::size_t i) {
  return slot.kind == SlotKind::PairFirst || slot.kind == SlotKind::PairSecond ? slot.partner : i;
}

}  // namespace

CheckResult check_orthogonality(const OrthogonalityConfig& config, int pairs, Rng& rng,
                                OrthogonalityTally* tally) {
  const GroupRing whole = config.ring.ring();
  const SylowView view(whole);
  const Decomposition dec(view.inner(), config.duality);
  const auto& slots = dec.slots();
  const unsigned r = config.ring.r;
  const std::size_t sylow_order = view.sylow().order();
  const std::string tag = config.ring.label() + " (" + to_string(config.duality) + ")";
  CheckResult result;
  std::uniform_int_distribution<unsigned> level(0, r);
  std::uniform_int_distribution<std::size_t> pick_b(0, sylow_order - 1);
  std::uniform_int_distribution<std::size_t> pick_slot(0, slots.size() - 1);

  for (int n = 0; n < pairs; ++n) {
    // Components of x_b and u_b for every b in P.
    std::vector<DecomposedElement> xs(sylow_order), us(sylow_order);
    const int mode = n % 3;
    if (mode == 0) {
      for (std::size_t b = 0; b < sylow_order; ++b) {
        xs[b] = dec.decompose(random_element(view.inner(), rng));
        us[b] = dec.decompose(random_element(view.inner(), rng));
      }
    } else {
      // x in p^k, u's involution partner in p^{r-k}, slot by slot: orthogonal.
      std::vector<unsigned> k(slots.size());
      for (auto& v : k) v = level(rng);
      for (std::size_t b = 0; b < sylow_order; ++b) {
        xs[b].components.resize(slots.size());
        us[b].components.resize(slots.size());
        for (std::size_t i = 0; i < slots.size(); ++i) {
          const auto j = involution_partner(slots[i], i);
          xs[b].components[i] = random_multiple(*slots[i].ring, k[i], rng);
          us[b].components[j] = random_multiple(*slots[j].ring, r - k[i], rng);
        }
      }
      if (mode == 2) {
        const auto b = pick_b(rng);
        const auto i = pick_slot(rng);
        xs[b].components[i] += random_element(*slots[i].ring, rng);
      }
    }

    SplitElement x{std::vector<GroupRingElement>{}};
    SplitElement u{std::vector<GroupRingElement>{}};
    for (std::size_t b = 0; b < sylow_order; ++b) {
      x.coefficients.push_back(dec.compose(xs[b]));
      u.coefficients.push_back(dec.compose(us[b]));
    }

    const bool pairing_zero = view.pairing(config.duality, x, u).is_zero();

    bool componentwise = true;
    for (std::size_t i = 0; i < slots.size() && componentwise; ++i) {
      GaloisRingElement acc = slots[i].ring->zero();
      for (std::size_t b = 0; b < sylow_order; ++b) {
        const auto& w = us[b].components[involution_partner(slots[i], i)];
        acc += xs[b].components[i] * (slots[i].kind == SlotKind::Conjugate ? dec.slot_bar(i, w) : w);
      }
      componentwise = acc.is_zero();
    }

    const GroupRingElement xw = view.phi_inverse(x);
    const GroupRingElement uw = view.phi_inverse(u);
    bool shifts = true;
    const auto& split = view.split();
    for (const auto& a : split.complement.elements()) {
      const auto g = split.join(a, split.sylow.identity());
      if (!form(config.duality, xw.shifted(g), uw).is_zero()) {
        shifts = false;
        break;
      }
    }

    if (pairing_zero != componentwise || pairing_zero != shifts) {
      return CheckResult::fail(tag + ": pairing " + (pairing_zero ? "zero" : "nonzero") +
                               ", componentwise " + (componentwise ? "zero" : "nonzero") +
                               ", shifted forms " + (shifts ? "zero" : "nonzero") +
                               " for x=" + show(xw) + " u=" + show(uw));
    }
    if (tally) {
      ++tally->pairs;
      if (pairing_zero) ++tally->vanishing;
      ++tally->agreeing;
    }
    ++result.cases;
  }
  return result;
}

std::vector<SmallRing> small_rings(std::uint64_t max_size) {
  std::vector<SmallRing> out;
  for (std::uint64_t p = 2; p <= max_size; ++p) {
    if (!is_prime(p)) continue;
    unsigned e = 0;
    for (BigInt size = p; size <= max_size; size *= p) ++e;
    for (unsigned r = 1; r <= e; ++r) {
      for (unsigned s = 1; r * s <= e; ++s) {
        for (std::uint64_t n = 1; r * s * n <= e; ++n) {
          for (auto& g : abelian_groups_of_order(n)) out.push_back({p, r, s, std::move(g)});
        }
      }
    }
  }
  return out;
}

}  // namespace sdc::testing
