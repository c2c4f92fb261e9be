#include "sdc/ideals.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sdc {

std::uint64_t exhaustive_bound() {
  const char* text = std::getenv(kExhaustiveBoundVariable);
  if (text == nullptr || *text == '\0') return kDefaultExhaustiveBound;
  const std::string value(text);
  if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 19) {
    throw std::invalid_argument(std::string(kExhaustiveBoundVariable) + "='" + value +
                                "' is not a positive integer");
  }
  const std::uint64_t bound = std::stoull(value);
  if (bound == 0) {
    throw std::invalid_argument(std::string(kExhaustiveBoundVariable) + " must be positive");
  }
  return bound;
}

bool within_exhaustive_bound(const GroupRing& ring, std::uint64_t bound) {
  return ring.size() <= BigInt(bound);
}

namespace {

void require_within_bound(const GroupRing& ring, const std::string& what) {
  const std::uint64_t bound = exhaustive_bound();
  if (!within_exhaustive_bound(ring, bound)) {
    throw std::invalid_argument(what + ": " + ring.name() + " has " + ring.size().str() +
                                " elements, above the exhaustive bound " + std::to_string(bound) +
                                " (set " + kExhaustiveBoundVariable + " to raise it)");
  }
}

void require_rank(const GroupRing& ring) {
  if (ring.rank() > kMaxModuleRank) {
    throw std::invalid_argument(ring.name() + " has Z_{p^r}-rank " + std::to_string(ring.rank()) +
                                ", above the supported " + std::to_string(kMaxModuleRank));
  }
}

ResidueRow to_row(const GroupRingElement& x) {
  return ResidueRow(x.residues().begin(), x.residues().end());
}

// Z_{p^r}-spanning set of the ideal generated by x: x^j Y^h x for j < s, h in G.
std::vector<ResidueRow> ideal_rows(const GroupRingElement& x) {
  const GroupRing& ring = x.context();
  const GaloisRing& base = ring.ring();
  std::vector<ResidueRow> rows;
  if (x.is_zero()) return rows;
  rows.reserve(ring.rank());
  std::vector<GroupRingElement> scaled;
  GaloisRingElement power = base.one();
  for (unsigned j = 0; j < base.s(); ++j) {
    scaled.push_back(j == 0 ? x : x.scaled(power));
    power *= base.x();
  }
  for (std::size_t h = 0; h < ring.order(); ++h) {
    const GroupElement g = ring.group().element_at(h);
    for (const auto& y : scaled) rows.push_back(to_row(y.shifted(g)));
  }
  return rows;
}

HowellForm module_of(const GroupRing& ring, const std::vector<GroupRingElement>& generators) {
  require_rank(ring);
  std::vector<ResidueRow> rows;
  for (const auto& g : generators) {
    if (!(g.context() == ring)) throw std::invalid_argument("generator from another ring");
    auto more = ideal_rows(g);
    rows.insert(rows.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
  }
  const GaloisRing& base = ring.ring();
  return HowellForm::span(base.p(), base.r(), ring.rank(), std::move(rows));
}

// Matrix of the Z_{p^r}-linear map beta -> bar(beta) (or the identity) on GR(p^r, s).
std::vector<GaloisRingElement> twisted_basis(const GaloisRing& base, Duality duality) {
  std::vector<GaloisRingElement> out;
  GaloisRingElement power = base.one();
  for (unsigned j = 0; j < base.s(); ++j) {
    out.push_back(duality == Duality::Euclidean ? power : conjugate(power));
    power *= base.x();
  }
  return out;
}

// Rows f with f(v) = coordinate t of form(w, v), for every Howell row w of the
// code and every t < s.
std::vector<ResidueRow> orthogonality_functionals(const Ideal& code, Duality duality) {
  const GroupRing& ring = code.ring();
  const GaloisRing& base = ring.ring();
  const unsigned s = base.s();
  const auto basis = twisted_basis(base, duality);
  std::vector<ResidueRow> functionals;
  for (const auto& row : code.module().rows()) {
    const GroupRingElement w = ring.from_residues(row);
    std::vector<ResidueRow> block(s, ResidueRow(ring.rank(), 0));
    for (std::size_t g = 0; g < ring.order(); ++g) {
      const GaloisRingElement wg = w.coefficient_at(g);
      if (wg.is_zero()) continue;
      for (unsigned j = 0; j < s; ++j) {
        const GaloisRingElement prod = wg * basis[j];
        for (unsigned t = 0; t < s; ++t) block[t][g * s + j] = prod.coefficient(t);
      }
    }
    for (auto& f : block) functionals.push_back(std::move(f));
  }
  return functionals;
}

void require_duality(const GroupRing& ring, Duality duality) {
  if (duality == Duality::Hermitian && ring.ring().s() % 2 != 0) {
    throw std::invalid_argument("Hermitian duality needs even s; " + ring.ring().name() +
                                " has odd s");
  }
}

}  // namespace

std::uint64_t encode(const GroupRingElement& x) {
  const std::uint64_t m = x.ring().characteristic();
  if (x.context().size() > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw std::invalid_argument("encode: " + x.context().name() + " is too large for 64-bit codes");
  }
  std::uint64_t code = 0;
  const auto residues = x.residues();
  for (std::size_t k = residues.size(); k-- > 0;) code = code * m + residues[k];
  return code;
}

GroupRingElement decode(const GroupRing& ring, std::uint64_t code) {
  const std::uint64_t m = ring.ring().characteristic();
  std::vector<Residue> residues(ring.rank());
  for (auto& v : residues) {
    v = code % m;
    code /= m;
  }
  if (code != 0) throw std::invalid_argument("decode: code out of range for " + ring.name());
  return ring.from_residues(std::move(residues));
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(GroupRing ring, HowellForm module, std::vector<GroupRingElement> generators)
    : ring_(std::move(ring)), module_(std::move(module)), generators_(std::move(generators)) {
  if (module_.columns() != ring_.rank()) {
    throw std::invalid_argument("Ideal: module rank does not match " + ring_.name());
  }
}

bool Ideal::is_whole_ring() const {
  return log_size() == std::uint64_t{ring_.ring().r()} * ring_.rank();
}

bool Ideal::contains(const GroupRingElement& x) const {
  return x.context() == ring_ && module_.contains(x.residues());
}

std::vector<std::uint64_t> Ideal::element_codes() const {
  const std::uint64_t bound = exhaustive_bound();
  if (size() > BigInt(bound)) {
    throw std::invalid_argument("ideal of " + ring_.name() + " has " + size().str() +
                                " elements, above the exhaustive bound " + std::to_string(bound));
  }
  std::vector<std::uint64_t> codes;
  codes.reserve(static_cast<std::size_t>(size()));
  const std::uint64_t m = ring_.ring().characteristic();
  module_.for_each_element([&](const ResidueRow& row) {
    std::uint64_t code = 0;
    for (std::size_t k = row.size(); k-- > 0;) code = code * m + row[k];
    codes.push_back(code);
  });
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::vector<GroupRingElement> Ideal::elements() const {
  std::vector<GroupRingElement> out;
  for (auto code : element_codes()) out.push_back(decode(ring_, code));
  return out;
}

Ideal zero_ideal(const GroupRing& ring) {
  const GaloisRing& base = ring.ring();
  return Ideal(ring, HowellForm(base.p(), base.r(), ring.rank()), {});
}

Ideal whole_ring(const GroupRing& ring) { return principal_ideal(ring.one()); }

Ideal ideal_generated_by(const GroupRing& ring, const std::vector<GroupRingElement>& generators) {
  std::vector<GroupRingElement> kept;
  for (const auto& g : generators) {
    if (!g.is_zero()) kept.push_back(g);
  }
  HowellForm module = module_of(ring, kept);
  return Ideal(ring, std::move(module), std::move(kept));
}

Ideal principal_ideal(const GroupRingElement& x) {
  return ideal_generated_by(x.context(), {x});
}

Ideal sum(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("sum: ideals of different rings");
  std::vector<GroupRingElement> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), a.module().join(b.module()), std::move(gens));
}

std::vector<GroupRingElement> minimal_generators(const Ideal& ideal) {
  const GroupRing& ring = ideal.ring();
  std::vector<GroupRingElement> gens;
  HowellForm current = zero_ideal(ring).module();
  for (const auto& row : ideal.module().rows()) {
    if (current.contains(row)) continue;
    gens.push_back(ring.from_residues(row));
    current = module_of(ring, gens);
    if (current == ideal.module()) break;
  }
  return gens;
}

std::vector<Ideal> enumerate_ideals(const GroupRing& ring) {
  require_within_bound(ring, "enumerate_ideals");
  require_rank(ring);
  const std::uint64_t total = static_cast<std::uint64_t>(ring.size());

  std::unordered_map<HowellForm, std::size_t, HowellHash> index;
  std::vector<Ideal> ideals;
  auto insert = [&](Ideal ideal) {
    auto [it, fresh] = index.try_emplace(ideal.module(), ideals.size());
    if (fresh) ideals.push_back(std::move(ideal));
    return fresh;
  };

  insert(zero_ideal(ring));
  for (std::uint64_t code = 1; code < total; ++code) {
    const GroupRingElement x = decode(ring, code);
    insert(principal_ideal(x));
  }
  const std::size_t principal_count = ideals.size();

  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 1; j < principal_count; ++j) {
      if (ideals[i].contains(ideals[j])) continue;
      insert(sum(ideals[i], ideals[j]));
    }
  }

  std::sort(ideals.begin(), ideals.end(), [](const Ideal& a, const Ideal& b) {
    if (a.log_size() != b.log_size()) return a.log_size() < b.log_size();
    return a.module() < b.module();
  });
  return ideals;
}

Ideal dual(const Ideal& code, Duality duality) {
  const GroupRing& ring = code.ring();
  require_duality(ring, duality);
  require_rank(ring);
  const GaloisRing& base = ring.ring();
  HowellForm module =
      kernel(base.p(), base.r(), ring.rank(), orthogonality_functionals(code, duality));
  Ideal out(ring, std::move(module), {});
  return Ideal(ring, out.module(), minimal_generators(out));
}

bool is_self_dual(const Ideal& code, Duality duality) {
  const GroupRing& ring = code.ring();
  require_duality(ring, duality);
  if (2 * code.log_size() != std::uint64_t{ring.ring().r()} * ring.rank()) return false;
  for (const auto& f : orthogonality_functionals(code, duality)) {
    for (const auto& row : code.module().rows()) {
      std::uint64_t dot = 0;
      const std::uint64_t m = ring.ring().characteristic();
      for (std::size_t k = 0; k < row.size(); ++k) dot = (dot + mul_mod(f[k], row[k], m)) % m;
      if (dot != 0) return false;
    }
  }
  return dual(code, duality) == code;
}

std::vector<Ideal> self_dual_ideals(const GroupRing& ring, Duality duality) {
  require_duality(ring, duality);
  std::vector<Ideal> out;
  for (auto& ideal : enumerate_ideals(ring)) {
    if (is_self_dual(ideal, duality)) out.push_back(std::move(ideal));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

// R = GR[A] -> GR[G] along the inclusion A -> G of the Sylow split.
GroupRingElement lift_from_complement(const GroupRingElement& x, const SylowSplit& split,
                                      const GroupRing& whole) {
  GroupRingElement out = whole.zero();
  const GroupElement zero_p = split.sylow.identity();
  for (std::size_t a = 0; a < x.context().order(); ++a) {
    const GaloisRingElement c = x.coefficient_at(a);
    if (c.is_zero()) continue;
    out.set_coefficient(split.join(split.complement.element_at(a), zero_p), c);
  }
  return out;
}

}  // namespace

SelfDualConstruction construct_self_dual(std::uint64_t p, unsigned r, unsigned s,
                                         const AbelianGroup& group, Duality duality) {
  const GaloisRing& base = GaloisRing::get(p, r, s);
  GroupRing ring(base, group);
  require_duality(ring, duality);
  if (r % 2 == 0) {
    GroupRingElement gen = ring.one().scaled(checked_pow(p, r / 2));
    Ideal ideal = principal_ideal(gen);
    return SelfDualConstruction{ring, {gen}, std::move(ideal), "p^{r/2} R"};
  }
  if (p != 2 || group.order() % 2 != 0) {
    throw std::domain_error("no " + to_string(duality) + " self-dual code exists in " +
                            ring.name() + ": needs r even, or p = 2 and |G| even");
  }
  const SylowView view(ring);
  const AbelianGroup& sylow = view.sylow();
  GroupElement order_two;
  for (std::size_t i = 0; i < sylow.order(); ++i) {
    if (sylow.element_order(sylow.element_at(i)) == 2) {
      order_two = sylow.element_at(i);
      break;
    }
  }
  const Decomposition decomposition(view.inner(), duality);
  DecomposedElement e_main = decomposition.zero();
  DecomposedElement e_pairs = decomposition.zero();
  for (std::size_t k = 0; k < decomposition.slots().size(); ++k) {
    switch (decomposition.slots()[k].kind) {
      case SlotKind::Fixed:
      case SlotKind::Conjugate:
        e_main = decomposition.add(e_main, decomposition.indicator(k));
        break;
      case SlotKind::PairFirst:
        e_pairs = decomposition.add(e_pairs, decomposition.indicator(k));
        break;
      case SlotKind::PairSecond: break;
    }
  }
  const GroupRingElement e = lift_from_complement(decomposition.compose(e_main), view.split(), ring);
  const GroupRingElement e3 =
      lift_from_complement(decomposition.compose(e_pairs), view.split(), ring);
  const unsigned half = (r + 1) / 2;  // r = 2 half - 1
  const GroupElement x = view.split().join(view.split().complement.identity(), order_two);
  const GroupRingElement y_plus_one = ring.basis(x) + ring.one();
  std::vector<GroupRingElement> gens{e.scaled(checked_pow(2, half)),
                                     (y_plus_one * e).scaled(checked_pow(2, half - 1)), e3};
  std::erase_if(gens, [](const GroupRingElement& g) { return g.is_zero(); });
  Ideal ideal = ideal_generated_by(ring, gens);
  return SelfDualConstruction{ring, std::move(gens), std::move(ideal), "componentwise"};
}

SemisimpleSelfDual enumerate_semisimple_selfdual(std::uint64_t p, unsigned r, unsigned s,
                                                 const AbelianGroup& group, Duality duality,
                                                 std::size_t listing_limit) {
  const GaloisRing& base = GaloisRing::get(p, r, s);
  GroupRing ring(base, group);
  require_duality(ring, duality);
  const Decomposition decomposition(ring, duality);
  const auto& slots = decomposition.slots();

  // Per slot group (single slot or pair), the admissible exponent choices.
  // A chain-ring ideal p^i has dual p^{r-i} for both forms.
  struct Group {
    std::vector<std::size_t> slot_indices;
    std::vector<std::vector<unsigned>> options;
  };
  std::vector<Group> groups;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    Group g;
    switch (slots[k].kind) {
      case SlotKind::Fixed:
      case SlotKind::Conjugate:
        g.slot_indices = {k};
        for (unsigned i = 0; i <= r; ++i) {
          if (r - i == i) g.options.push_back({i});
        }
        break;
      case SlotKind::PairFirst:
        g.slot_indices = {k, slots[k].partner};
        // (p^i, p^j) has dual ((p^j)^perp, (p^i)^perp) = (p^{r-j}, p^{r-i}).
        for (unsigned i = 0; i <= r; ++i) {
          for (unsigned j = 0; j <= r; ++j) {
            if (r - j == i) g.options.push_back({i, j});
          }
        }
        break;
      case SlotKind::PairSecond: continue;
    }
    groups.push_back(std::move(g));
  }

  SemisimpleSelfDual out;
  out.count = 1;
  for (const auto& g : groups) out.count *= g.options.size();

  if (out.count == 0 || listing_limit == 0) return out;
  std::vector<std::size_t> odometer(groups.size(), 0);
  while (out.choices.size() < listing_limit) {
    std::vector<unsigned> choice(slots.size(), 0);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const auto& option = groups[gi].options[odometer[gi]];
      for (std::size_t t = 0; t < option.size(); ++t) choice[groups[gi].slot_indices[t]] = option[t];
    }
    DecomposedElement d = decomposition.zero();
    for (std::size_t k = 0; k < slots.size(); ++k) {
      d.components[k] = slots[k].ring->from_integer(
          static_cast<std::int64_t>(choice[k] >= r ? 0 : checked_pow(p, choice[k])));
    }
    out.generators.push_back(decomposition.compose(d));
    out.choices.push_back(std::move(choice));
    std::size_t gi = 0;
    for (; gi < groups.size(); ++gi) {
      if (++odometer[gi] < groups[gi].options.size()) break;
      odometer[gi] = 0;
    }
    if (gi == groups.size()) break;
  }
  return out;
}

}  // namespace sdc
