#include "sdc/group_ring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sdc {

std::string to_string(Duality duality) {
  return duality == Duality::Euclidean ? "euclidean" : "hermitian";
}

Duality parse_duality(std::string_view text) {
  if (text == "euclidean") return Duality::Euclidean;
  if (text == "hermitian") return Duality::Hermitian;
  throw std::invalid_argument("unknown duality '" + std::string(text) +
                              "' (expected euclidean or hermitian)");
}

namespace {

constexpr std::size_t kAddTableLimit = 1024;

void require_even_s(const GaloisRing& ring, const char* what) {
  if (ring.s() % 2 != 0) {
    throw std::invalid_argument(std::string(what) + " needs even s; " + ring.name() +
                                " has odd s");
  }
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupRing

GroupRing::GroupRing(const GaloisRing& ring, AbelianGroup group) {
  auto impl = std::make_shared<Impl>();
  impl->ring = &ring;
  impl->group = std::move(group);
  if (impl->group.order() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("group ring: |G| = " + std::to_string(impl->group.order()) +
                                " is too large for dense storage");
  }
  impl->order = impl->group.order();
  const auto& g = impl->group;
  impl->negate_table.resize(impl->order);
  for (std::size_t i = 0; i < impl->order; ++i) {
    impl->negate_table[i] = g.index_of(g.negate(g.element_at(i)));
  }
  if (impl->order <= kAddTableLimit) {
    impl->add_table.resize(impl->order * impl->order);
    for (std::size_t i = 0; i < impl->order; ++i) {
      const GroupElement a = g.element_at(i);
      for (std::size_t j = 0; j < impl->order; ++j) {
        impl->add_table[i * impl->order + j] =
            static_cast<std::uint32_t>(g.index_of(g.add(a, g.element_at(j))));
      }
    }
  }
  impl_ = std::move(impl);
}

BigInt GroupRing::size() const {
  return big_pow(BigInt(ring().p()), std::uint64_t{ring().r()} * rank());
}

std::string GroupRing::name() const { return ring().name() + "[" + group().to_string() + "]"; }

std::size_t GroupRing::add_index(std::size_t g, std::size_t h) const {
  if (!impl_->add_table.empty()) return impl_->add_table[g * impl_->order + h];
  const auto& grp = group();
  return grp.index_of(grp.add(grp.element_at(g), grp.element_at(h)));
}

std::size_t GroupRing::negate_index(std::size_t g) const { return impl_->negate_table[g]; }

GroupRingElement GroupRing::zero() const {
  return GroupRingElement(*this, std::vector<Residue>(rank(), 0));
}

GroupRingElement GroupRing::one() const { return basis(group().identity()); }

GroupRingElement GroupRing::monomial(const GaloisRingElement& alpha, const GroupElement& g) const {
  GroupRingElement out = zero();
  out.set_coefficient(g, alpha);
  return out;
}

GroupRingElement GroupRing::basis(const GroupElement& g) const {
  return monomial(ring().one(), g);
}

GroupRingElement GroupRing::from_coefficients(
    const std::vector<GaloisRingElement>& coefficients) const {
  if (coefficients.size() != order()) {
    throw std::invalid_argument("group ring " + name() + " needs " + std::to_string(order()) +
                                " coefficients, got " + std::to_string(coefficients.size()));
  }
  std::vector<Residue> data;
  data.reserve(rank());
  for (const auto& c : coefficients) {
    if (&c.ring() != &ring()) {
      throw std::invalid_argument("coefficient from " + c.ring().name() + " in " + name());
    }
    data.insert(data.end(), c.coefficients().begin(), c.coefficients().end());
  }
  return GroupRingElement(*this, std::move(data));
}

GroupRingElement GroupRing::from_residues(std::vector<Residue> residues) const {
  return GroupRingElement(*this, std::move(residues));
}

GroupRingElement GroupRing::parse_element(std::string_view text) const {
  const std::string body = strip_spaces(text);
  GroupRingElement out = zero();
  if (body == "0") return out;
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("malformed group ring element '" + std::string(text) + "': " +
                                 why + " (expected e.g. (0)=1;(1)=1)");
  };
  if (body.empty()) throw fail("empty");
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t semi = std::min(body.find(';', pos), body.size());
    const std::string term = body.substr(pos, semi - pos);
    pos = semi + 1;
    const std::size_t eq = term.find('=');
    if (eq == std::string::npos || term.empty() || term.front() != '(' || eq == 0 ||
        term[eq - 1] != ')') {
      throw fail("term '" + term + "' is not of the form (g)=coefficients");
    }
    const std::string coords_text = term.substr(1, eq - 2);
    std::vector<std::uint64_t> coords;
    std::size_t cpos = 0;
    while (cpos < coords_text.size()) {
      const std::size_t comma = std::min(coords_text.find(',', cpos), coords_text.size());
      const std::string num = coords_text.substr(cpos, comma - cpos);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
        throw fail("bad coordinate '" + num + "'");
      }
      coords.push_back(std::stoull(num));
      cpos = comma + 1;
    }
    if (coords.size() != group().rank()) {
      throw fail("group element needs " + std::to_string(group().rank()) + " coordinates");
    }
    const GroupElement g = group().element(std::move(coords));
    out.set_coefficient(g, out.coefficient(g) + ring().parse_element(term.substr(eq + 1)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// GroupRingElement

GroupRingElement::GroupRingElement(GroupRing context, std::vector<Residue> residues)
    : context_(std::move(context)), data_(std::move(residues)) {
  if (data_.size() != context_.rank()) {
    throw std::invalid_argument("group ring element of " + context_.name() + " needs " +
                                std::to_string(context_.rank()) + " residues, got " +
                                std::to_string(data_.size()));
  }
  const std::uint64_t m = ring().characteristic();
  for (auto& v : data_) v %= m;
}

void GroupRingElement::require_same_context(const GroupRingElement& other) const {
  if (!(context_ == other.context_)) {
    throw std::invalid_argument("mixed group rings: " + context_.name() + " and " +
                                other.context_.name());
  }
}

GaloisRingElement GroupRingElement::coefficient_at(std::size_t g_index) const {
  const unsigned s = ring().s();
  return ring().from_coefficients(
      std::vector<Residue>(data_.begin() + g_index * s, data_.begin() + (g_index + 1) * s));
}

GaloisRingElement GroupRingElement::coefficient(const GroupElement& g) const {
  return coefficient_at(context_.group().index_of(g));
}

void GroupRingElement::set_coefficient(const GroupElement& g, const GaloisRingElement& alpha) {
  if (&alpha.ring() != &ring()) {
    throw std::invalid_argument("coefficient from " + alpha.ring().name() + " in " +
                                context_.name());
  }
  const std::size_t base = context_.group().index_of(context_.group().element(g.coords)) *
                           ring().s();
  std::copy(alpha.coefficients().begin(), alpha.coefficients().end(), data_.begin() + base);
}

bool GroupRingElement::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  require_same_context(other);
  const std::uint64_t m = ring().characteristic();
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = (data_[i] + other.data_[i]) % m;
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  require_same_context(other);
  const std::uint64_t m = ring().characteristic();
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = (data_[i] + m - other.data_[i]) % m;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = context_.zero();
  out -= *this;
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.require_same_context(b);
  const GroupRing& ctx = a.context_;
  const GaloisRing& ring = ctx.ring();
  const unsigned s = ring.s();
  const std::uint64_t m = ring.characteristic();
  std::vector<Residue> out(ctx.rank(), 0);
  std::vector<Residue> product(s);
  auto nonzero = [s](const std::vector<Residue>& data, std::size_t g) {
    for (unsigned j = 0; j < s; ++j) {
      if (data[g * s + j] != 0) return true;
    }
    return false;
  };
  std::vector<std::size_t> support_b;
  for (std::size_t h = 0; h < ctx.order(); ++h) {
    if (nonzero(b.data_, h)) support_b.push_back(h);
  }
  for (std::size_t g = 0; g < ctx.order(); ++g) {
    if (!nonzero(a.data_, g)) continue;
    std::span<const Residue> ag(a.data_.data() + g * s, s);
    for (std::size_t h : support_b) {
      const std::size_t target = ctx.add_index(g, h) * s;
      if (s == 1) {
        out[target] = (out[target] + mul_mod(ag[0], b.data_[h], m)) % m;
        continue;
      }
      ring.multiply(ag, std::span<const Residue>(b.data_.data() + h * s, s), product);
      for (unsigned j = 0; j < s; ++j) out[target + j] = (out[target + j] + product[j]) % m;
    }
  }
  return GroupRingElement(ctx, std::move(out));
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.context_ == b.context_ && a.data_ == b.data_;
}

GroupRingElement GroupRingElement::scaled(const GaloisRingElement& alpha) const {
  return context_.monomial(alpha, context_.group().identity()) * *this;
}

GroupRingElement GroupRingElement::scaled(std::uint64_t factor) const {
  GroupRingElement out = *this;
  const std::uint64_t m = ring().characteristic();
  for (auto& v : out.data_) v = mul_mod(v, factor % m, m);
  return out;
}

GroupRingElement GroupRingElement::shifted(const GroupElement& g) const {
  const std::size_t gi = context_.group().index_of(context_.group().element(g.coords));
  const unsigned s = ring().s();
  std::vector<Residue> out(data_.size());
  for (std::size_t h = 0; h < context_.order(); ++h) {
    const std::size_t target = context_.add_index(gi, h);
    std::copy_n(data_.begin() + h * s, s, out.begin() + target * s);
  }
  return GroupRingElement(context_, std::move(out));
}

std::string GroupRingElement::to_string() const {
  std::string out;
  for (std::size_t g = 0; g < context_.order(); ++g) {
    const GaloisRingElement c = coefficient_at(g);
    if (c.is_zero()) continue;
    if (!out.empty()) out += ';';
    out += context_.group().element_at(g).to_string() + "=" + c.to_string();
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Forms and involutions

GaloisRingElement form_euclidean(const GroupRingElement& u, const GroupRingElement& v) {
  if (!(u.context() == v.context())) throw std::invalid_argument("form: mixed group rings");
  GaloisRingElement sum = u.ring().zero();
  for (std::size_t g = 0; g < u.context().order(); ++g) {
    sum += u.coefficient_at(g) * v.coefficient_at(g);
  }
  return sum;
}

GaloisRingElement form_hermitian(const GroupRingElement& u, const GroupRingElement& v) {
  if (!(u.context() == v.context())) throw std::invalid_argument("form: mixed group rings");
  require_even_s(u.ring(), "the Hermitian form");
  GaloisRingElement sum = u.ring().zero();
  for (std::size_t g = 0; g < u.context().order(); ++g) {
    const GaloisRingElement b = v.coefficient_at(g);
    if (!b.is_zero()) sum += u.coefficient_at(g) * conjugate(b);
  }
  return sum;
}

GaloisRingElement form(Duality duality, const GroupRingElement& u, const GroupRingElement& v) {
  return duality == Duality::Euclidean ? form_euclidean(u, v) : form_hermitian(u, v);
}

GroupRingElement involution_hat(const GroupRingElement& x) {
  const GroupRing& ctx = x.context();
  const unsigned s = ctx.ring().s();
  std::vector<Residue> out(ctx.rank());
  for (std::size_t g = 0; g < ctx.order(); ++g) {
    std::copy_n(x.residues().begin() + g * s, s, out.begin() + ctx.negate_index(g) * s);
  }
  return ctx.from_residues(std::move(out));
}

GroupRingElement involution_tilde(const GroupRingElement& x) {
  require_even_s(x.ring(), "the tilde involution");
  const GroupRing& ctx = x.context();
  GroupRingElement out = ctx.zero();
  for (std::size_t g = 0; g < ctx.order(); ++g) {
    const GaloisRingElement c = x.coefficient_at(g);
    if (c.is_zero()) continue;
    out.set_coefficient(ctx.group().element_at(ctx.negate_index(g)), conjugate(c));
  }
  return out;
}

GroupRingElement involution(Duality duality, const GroupRingElement& x) {
  return duality == Duality::Euclidean ? involution_hat(x) : involution_tilde(x);
}

// ---------------------------------------------------------------------------
// SylowView

SylowView::SylowView(GroupRing whole)
    : whole_(whole),
      split_(sylow_decompose(whole.group(), whole.ring().p())),
      inner_(whole.ring(), split_.complement) {
  const auto& g = whole_.group();
  coordinates_.reserve(whole_.order());
  for (std::size_t i = 0; i < whole_.order(); ++i) {
    const auto [a, b] = split_.split(g.element_at(i));
    coordinates_.emplace_back(split_.complement.index_of(a), split_.sylow.index_of(b));
  }
}

SplitElement SylowView::zero() const {
  return SplitElement{std::vector<GroupRingElement>(split_.sylow.order(), inner_.zero())};
}

SplitElement SylowView::phi(const GroupRingElement& u) const {
  if (!(u.context() == whole_)) throw std::invalid_argument("phi: element of another ring");
  const unsigned s = whole_.ring().s();
  std::vector<std::vector<Residue>> parts(split_.sylow.order(),
                                          std::vector<Residue>(inner_.rank(), 0));
  for (std::size_t g = 0; g < whole_.order(); ++g) {
    const auto [ai, bi] = coordinates_[g];
    std::copy_n(u.residues().begin() + g * s, s, parts[bi].begin() + ai * s);
  }
  SplitElement out;
  out.coefficients.reserve(parts.size());
  for (auto& part : parts) out.coefficients.push_back(inner_.from_residues(std::move(part)));
  return out;
}

GroupRingElement SylowView::phi_inverse(const SplitElement& x) const {
  if (x.coefficients.size() != split_.sylow.order()) {
    throw std::invalid_argument("phi_inverse: expected " + std::to_string(split_.sylow.order()) +
                                " coefficients");
  }
  const unsigned s = whole_.ring().s();
  std::vector<Residue> out(whole_.rank());
  for (std::size_t g = 0; g < whole_.order(); ++g) {
    const auto [ai, bi] = coordinates_[g];
    std::copy_n(x.coefficients[bi].residues().begin() + ai * s, s, out.begin() + g * s);
  }
  return whole_.from_residues(std::move(out));
}

SplitElement SylowView::add(const SplitElement& x, const SplitElement& y) const {
  SplitElement out = x;
  for (std::size_t b = 0; b < out.coefficients.size(); ++b) out.coefficients[b] += y.coefficients[b];
  return out;
}

SplitElement SylowView::multiply(const SplitElement& x, const SplitElement& y) const {
  const auto& p_group = split_.sylow;
  SplitElement out = zero();
  for (std::size_t i = 0; i < p_group.order(); ++i) {
    if (x.coefficients[i].is_zero()) continue;
    const GroupElement bi = p_group.element_at(i);
    for (std::size_t j = 0; j < p_group.order(); ++j) {
      if (y.coefficients[j].is_zero()) continue;
      const std::size_t k = p_group.index_of(p_group.add(bi, p_group.element_at(j)));
      out.coefficients[k] += x.coefficients[i] * y.coefficients[j];
    }
  }
  return out;
}

GroupRingElement SylowView::pairing(Duality duality, const SplitElement& x,
                                    const SplitElement& u) const {
  GroupRingElement sum = inner_.zero();
  for (std::size_t b = 0; b < x.coefficients.size(); ++b) {
    sum += x.coefficients[b] * involution(duality, u.coefficients[b]);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// FourierTransform

namespace {

std::vector<GaloisRingElement> embedded_coefficients(const GroupRingElement& c,
                                                     const GaloisRing& target) {
  std::vector<GaloisRingElement> out;
  out.reserve(c.context().order());
  for (std::size_t a = 0; a < c.context().order(); ++a) {
    out.push_back(embed(c.coefficient_at(a), target));
  }
  return out;
}

}  // namespace

FourierTransform::FourierTransform(GroupRing ring) : ring_(std::move(ring)) {
  const GaloisRing& base = ring_.ring();
  const AbelianGroup& group = ring_.group();
  if (group.order() % base.p() == 0) {
    throw std::invalid_argument("DFT needs gcd(|A|, p) = 1; |A| = " +
                                std::to_string(group.order()) + ", p = " +
                                std::to_string(base.p()));
  }
  const std::uint64_t exponent = group.exponent();
  const std::uint64_t mu = multiplicative_order(base.residue_field_size() % exponent, exponent);
  if (mu > std::numeric_limits<unsigned>::max() / base.s()) {
    throw std::invalid_argument("DFT extension degree too large");
  }
  mu_ = static_cast<unsigned>(mu);
  extension_ = &GaloisRing::get(base.p(), base.r(), base.s() * mu_);
  const GaloisRingElement zeta = root_of_unity(*extension_, exponent);
  zeta_powers_.reserve(exponent);
  GaloisRingElement power = extension_->one();
  for (std::uint64_t k = 0; k < exponent; ++k) {
    zeta_powers_.push_back(power);
    power *= zeta;
  }
}

GaloisRingElement FourierTransform::coefficient(const GroupRingElement& c,
                                                const GroupElement& h) const {
  if (!(c.context() == ring_)) throw std::invalid_argument("dft: element of another ring");
  const AbelianGroup& group = ring_.group();
  GaloisRingElement sum = extension_->zero();
  for (std::size_t a = 0; a < group.order(); ++a) {
    const GaloisRingElement ca = c.coefficient_at(a);
    if (ca.is_zero()) continue;
    sum += embed(ca, *extension_) * zeta_powers_[group.gamma(h, group.element_at(a))];
  }
  return sum;
}

std::vector<GaloisRingElement> FourierTransform::dft(const GroupRingElement& c) const {
  if (!(c.context() == ring_)) throw std::invalid_argument("dft: element of another ring");
  const AbelianGroup& group = ring_.group();
  const auto lifted = embedded_coefficients(c, *extension_);
  std::vector<GaloisRingElement> out;
  out.reserve(group.order());
  for (std::size_t h = 0; h < group.order(); ++h) {
    const GroupElement hh = group.element_at(h);
    GaloisRingElement sum = extension_->zero();
    for (std::size_t a = 0; a < group.order(); ++a) {
      if (lifted[a].is_zero()) continue;
      sum += lifted[a] * zeta_powers_[group.gamma(hh, group.element_at(a))];
    }
    out.push_back(std::move(sum));
  }
  return out;
}

GroupRingElement FourierTransform::idft(std::span<const GaloisRingElement> spectrum) const {
  const AbelianGroup& group = ring_.group();
  if (spectrum.size() != group.order()) {
    throw std::invalid_argument("idft: spectrum needs " + std::to_string(group.order()) +
                                " values");
  }
  const GaloisRing& base = ring_.ring();
  const std::uint64_t exponent = group.exponent();
  const std::uint64_t inv_order =
      inverse_mod(group.order() % base.characteristic(), base.characteristic());
  std::vector<GaloisRingElement> coeffs;
  coeffs.reserve(group.order());
  for (std::size_t a = 0; a < group.order(); ++a) {
    const GroupElement aa = group.element_at(a);
    GaloisRingElement sum = extension_->zero();
    for (std::size_t h = 0; h < group.order(); ++h) {
      if (spectrum[h].is_zero()) continue;
      const std::uint64_t g = group.gamma(group.element_at(h), aa);
      sum += spectrum[h] * zeta_powers_[(exponent - g) % exponent];
    }
    coeffs.push_back(pull_back(sum.scaled(inv_order), base));
  }
  return ring_.from_coefficients(coeffs);
}

// ---------------------------------------------------------------------------
// Decomposition

Decomposition::Decomposition(GroupRing ring, Duality duality)
    : duality_(duality),
      partition_(sdc::partition(ring.group(), ring.ring().residue_field_size())),
      transform_(ring) {
  const GaloisRing& base = ring.ring();
  const AbelianGroup& group = ring.group();
  if (duality == Duality::Hermitian) require_even_s(base, "the Hermitian decomposition");
  auto component_ring = [&](std::size_t class_index) {
    return &GaloisRing::get(base.p(), base.r(),
                            base.s() * static_cast<unsigned>(partition_.classes[class_index].size()));
  };
  auto single = [&](std::size_t k, SlotKind kind) {
    ComponentSlot slot;
    slot.class_index = k;
    slot.point = partition_.classes[k].representative;
    slot.ring = component_ring(k);
    slot.kind = kind;
    slot.partner = slots_.size();
    slots_.push_back(std::move(slot));
  };
  auto pair = [&](std::size_t k, std::size_t partner, const GroupElement& partner_point,
                  std::uint64_t twist) {
    const std::size_t first = slots_.size();
    ComponentSlot a;
    a.class_index = k;
    a.point = partition_.classes[k].representative;
    a.ring = component_ring(k);
    a.kind = SlotKind::PairFirst;
    a.partner = first + 1;
    ComponentSlot b;
    b.class_index = partner;
    b.point = partner_point;
    b.ring = component_ring(partner);
    b.kind = SlotKind::PairSecond;
    b.partner = first;
    b.twist = twist % b.ring->s();
    slots_.push_back(std::move(a));
    slots_.push_back(std::move(b));
  };
  if (duality == Duality::Euclidean) {
    for (auto k : partition_.type_I) single(k, SlotKind::Fixed);
    for (auto k : partition_.type_II) single(k, SlotKind::Conjugate);
    for (auto [k, partner] : partition_.type_III) {
      pair(k, partner, group.negate(partition_.classes[k].representative), 0);
    }
  } else {
    const std::uint64_t half = partition_.q.half();
    for (auto k : partition_.type_IIp) single(k, SlotKind::Conjugate);
    for (auto [k, partner] : partition_.type_IIIp) {
      const GroupElement point = group.scale(half, group.negate(partition_.classes[k].representative));
      // Twisting the second slot by the inverse of the half Frobenius makes
      // tilde act as a plain swap on the pair.
      const std::uint64_t degree = base.s() * partition_.classes[partner].size();
      pair(k, partner, point, degree - base.s() / 2);
    }
  }
}

DecomposedElement Decomposition::decompose(const GroupRingElement& x) const {
  if (!(x.context() == source())) throw std::invalid_argument("decompose: element of another ring");
  const AbelianGroup& group = source().group();
  const auto lifted = embedded_coefficients(x, transform_.extension());
  const FourierTransform& ft = transform_;
  DecomposedElement out;
  out.components.reserve(slots_.size());
  for (const auto& slot : slots_) {
    GaloisRingElement sum = ft.extension().zero();
    for (std::size_t a = 0; a < group.order(); ++a) {
      if (lifted[a].is_zero()) continue;
      const std::uint64_t g = group.gamma(slot.point, group.element_at(a));
      sum += lifted[a] * ft.zeta_power(g);
    }
    GaloisRingElement component = pull_back(sum, *slot.ring);
    if (slot.twist != 0) component = generalized_frobenius(component, slot.twist);
    out.components.push_back(std::move(component));
  }
  return out;
}

GroupRingElement Decomposition::compose(const DecomposedElement& d) const {
  if (d.components.size() != slots_.size()) {
    throw std::invalid_argument("compose: expected " + std::to_string(slots_.size()) +
                                " components, got " + std::to_string(d.components.size()));
  }
  const AbelianGroup& group = source().group();
  const GaloisRing& ext = transform_.extension();
  const std::uint64_t q = partition_.q.q;
  const unsigned s = source().ring().s();
  std::vector<GaloisRingElement> spectrum(group.order());
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    const auto& slot = slots_[i];
    if (&d.components[i].ring() != slot.ring) {
      throw std::invalid_argument("compose: component " + std::to_string(i) + " must lie in " +
                                  slot.ring->name());
    }
    GaloisRingElement z = d.components[i];
    if (slot.twist != 0) z = generalized_frobenius(z, slot.ring->s() - slot.twist);
    const std::size_t size = partition_.classes[slot.class_index].size();
    GroupElement point = slot.point;
    for (std::size_t k = 0; k < size; ++k) {
      spectrum[group.index_of(point)] = embed(z, ext);
      point = group.scale(q, point);
      z = generalized_frobenius(z, s);
    }
  }
  return transform_.idft(spectrum);
}

DecomposedElement Decomposition::zero() const {
  DecomposedElement out;
  for (const auto& slot : slots_) out.components.push_back(slot.ring->zero());
  return out;
}

DecomposedElement Decomposition::one() const {
  DecomposedElement out;
  for (const auto& slot : slots_) out.components.push_back(slot.ring->one());
  return out;
}

DecomposedElement Decomposition::indicator(std::size_t slot) const {
  DecomposedElement out = zero();
  out.components.at(slot) = slots_[slot].ring->one();
  return out;
}

DecomposedElement Decomposition::add(const DecomposedElement& a,
                                     const DecomposedElement& b) const {
  DecomposedElement out = a;
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] += b.components.at(i);
  return out;
}

DecomposedElement Decomposition::multiply(const DecomposedElement& a,
                                          const DecomposedElement& b) const {
  DecomposedElement out = a;
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] *= b.components.at(i);
  return out;
}

GaloisRingElement Decomposition::slot_bar(std::size_t slot, const GaloisRingElement& z) const {
  return slots_.at(slot).kind == SlotKind::Conjugate ? conjugate(z) : z;
}

DecomposedElement Decomposition::involution(const DecomposedElement& d) const {
  DecomposedElement out = d;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    switch (slots_[i].kind) {
      case SlotKind::Fixed: break;
      case SlotKind::Conjugate: out.components[i] = conjugate(d.components[i]); break;
      case SlotKind::PairFirst:
      case SlotKind::PairSecond: out.components[i] = d.components[slots_[i].partner]; break;
    }
  }
  return out;
}

}  // namespace sdc
