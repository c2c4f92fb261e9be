#include "sdc/galois_ring.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sdc {
namespace {

using Poly = std::vector<Residue>;

// out = a * b mod (f, m); f monic of degree n = a.size() = b.size().
void poly_mulmod(std::span<const Residue> a, std::span<const Residue> b,
                 std::span<const Residue> f, std::uint64_t m, std::span<Residue> out) {
  const std::size_t n = a.size();
  std::vector<Residue> buf(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      buf[i + j] = (buf[i + j] + mul_mod(a[i], b[j], m)) % m;
    }
  }
  // x^n = -(f_0 + ... + f_{n-1} x^{n-1})
  for (std::size_t k = buf.size(); k-- > n;) {
    const Residue c = buf[k];
    if (c == 0) continue;
    buf[k] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Residue t = mul_mod(c, f[i], m);
      Residue& slot = buf[k - n + i];
      slot = (slot + m - t) % m;
    }
  }
  std::copy_n(buf.begin(), n, out.begin());
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint64_t m) {
  const std::size_t n = f.size() - 1;
  Poly result(n, 0);
  result[0] = 1 % m;
  Poly tmp(n);
  while (exp > 0) {
    if (exp & 1U) {
      poly_mulmod(result, base, f, m, tmp);
      result.swap(tmp);
    }
    exp >>= 1U;
    if (exp > 0) {
      poly_mulmod(base, base, f, m, tmp);
      base.swap(tmp);
    }
  }
  return result;
}

bool is_one_poly(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](Residue c) { return c == 0; });
}

// Candidates are ordered by the integer sum c_i p^i, so x^{s-1} is the most
// significant coefficient. The first one whose root has order p^s - 1 wins.
Poly find_primitive_modulus(std::uint64_t p, unsigned s) {
  const std::uint64_t field = checked_pow(p, s);
  const std::uint64_t order = field - 1;
  const Factorization order_factors = factorize(order);
  for (std::uint64_t code = 0; code < field; ++code) {
    Poly f(s + 1, 0);
    std::uint64_t rest = code;
    for (unsigned i = 0; i < s; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[s] = 1;
    if (f[0] == 0) continue;  // x divides f
    Poly x(s, 0);
    if (s == 1) {
      x[0] = (p - f[0]) % p;
    } else {
      x[1] = 1;
    }
    if (!is_one_poly(poly_powmod(x, order, f, p))) continue;
    bool primitive = true;
    for (auto [prime, exp] : order_factors) {
      (void)exp;
      if (is_one_poly(poly_powmod(x, order / prime, f, p))) {
        primitive = false;
        break;
      }
    }
    if (primitive) return f;
  }
  throw std::logic_error("no primitive polynomial of degree " + std::to_string(s) + " over F_" +
                         std::to_string(p) + " found");
}

struct EmbeddingData {
  // powers[j] = image of x^j in the target ring.
  std::vector<GaloisRingElement> powers;
};

GaloisRingElement evaluate_modulus(const GaloisRing& source, const GaloisRingElement& y) {
  const auto& f = source.modulus();
  GaloisRingElement acc = y.ring().zero();
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * y + y.ring().from_integer(static_cast<std::int64_t>(f[i]));
  }
  return acc;
}

GaloisRingElement evaluate_modulus_derivative(const GaloisRing& source,
                                              const GaloisRingElement& y) {
  const auto& f = source.modulus();
  GaloisRingElement acc = y.ring().zero();
  for (std::size_t i = f.size(); i-- > 1;) {
    acc = acc * y + y.ring().one().scaled(mul_mod(f[i], i, source.characteristic()));
  }
  return acc;
}

bool divisible_by_p(const GaloisRingElement& a) {
  const auto p = a.ring().p();
  return std::all_of(a.coefficients().begin(), a.coefficients().end(),
                     [p](Residue c) { return c % p == 0; });
}

// Image of x: the Hensel lift of a residue root of the source modulus. The
// root is searched among xi_t^{e k}, e = (p^{st} - 1)/(p^s - 1), smallest k
// first, so k = 1 whenever the two moduli are compatible.
EmbeddingData build_embedding(const GaloisRing& source, const GaloisRing& target) {
  EmbeddingData data;
  const unsigned s = source.s();
  if (&source == &target) {
    for (unsigned j = 0; j < s; ++j) data.powers.push_back(source.x().pow(j));
    return data;
  }
  const std::uint64_t src_order = source.residue_field_size() - 1;
  const std::uint64_t step = (target.residue_field_size() - 1) / src_order;
  const GaloisRingElement base = target.teichmuller_generator().pow(step);
  GaloisRingElement candidate = target.one();
  GaloisRingElement root;
  for (std::uint64_t k = 1; k <= src_order; ++k) {
    candidate *= base;
    if (gcd_u64(k, src_order) != 1 && src_order > 1) continue;
    if (divisible_by_p(evaluate_modulus(source, candidate))) {
      root = candidate;
      break;
    }
  }
  if (!root.valid()) {
    throw std::logic_error("embed: no root of the modulus of " + source.name() + " in " +
                           target.name());
  }
  for (unsigned iter = 0; iter <= 2 * target.r(); ++iter) {
    const GaloisRingElement value = evaluate_modulus(source, root);
    if (value.is_zero()) break;
    root -= value * evaluate_modulus_derivative(source, root).inverse();
  }
  if (!evaluate_modulus(source, root).is_zero()) {
    throw std::logic_error("embed: Hensel lifting failed for " + source.name());
  }
  GaloisRingElement power = target.one();
  for (unsigned j = 0; j < s; ++j) {
    data.powers.push_back(power);
    power *= root;
  }
  return data;
}

const EmbeddingData& embedding(const GaloisRing& source, const GaloisRing& target) {
  if (source.p() != target.p() || source.r() != target.r() || target.s() % source.s() != 0) {
    throw std::invalid_argument("embed: " + source.name() + " is not a subring of " +
                                target.name() + " (degrees must divide)");
  }
  static std::mutex mutex;
  static std::map<std::pair<const GaloisRing*, const GaloisRing*>, std::unique_ptr<EmbeddingData>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{&source, &target}];
  if (!slot) slot = std::make_unique<EmbeddingData>(build_embedding(source, target));
  return *slot;
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ' && c != '\t') {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

// ---------------------------------------------------------------------------
// GaloisRing

GaloisRing::GaloisRing(std::uint64_t p, unsigned r, unsigned s, std::vector<Residue> modulus)
    : p_(p),
      r_(r),
      s_(s),
      characteristic_(checked_pow(p, r)),
      residue_field_size_(checked_pow(p, s)),
      modulus_(std::move(modulus)) {
  GaloisRingElement xi = teichmuller_lift(x());
  teichmuller_generator_.assign(xi.coefficients().begin(), xi.coefficients().end());
}

const GaloisRing& GaloisRing::get(std::uint64_t p, unsigned r, unsigned s) {
  if (!is_prime(p)) throw std::invalid_argument("GR: p = " + std::to_string(p) + " is not prime");
  if (r == 0 || s == 0) throw std::invalid_argument("GR: r and s must be positive");
  static std::mutex mutex;
  static std::map<std::tuple<std::uint64_t, unsigned, unsigned>, std::unique_ptr<GaloisRing>>
      registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[{p, r, s}];
  if (!slot) {
    std::uint64_t characteristic = 0;
    std::uint64_t field = 0;
    try {
      characteristic = checked_pow(p, r);
      field = checked_pow(p, s);
    } catch (const std::overflow_error&) {
    }
    if (characteristic == 0 || characteristic > kMaxCharacteristic) {
      throw std::invalid_argument("GR(" + std::to_string(p) + "^" + std::to_string(r) + "," +
                                  std::to_string(s) + "): p^r exceeds the supported bound 2^32");
    }
    if (field == 0 || field > kMaxResidueFieldSize) {
      throw std::invalid_argument("GR(" + std::to_string(p) + "^" + std::to_string(r) + "," +
                                  std::to_string(s) + "): p^s exceeds the supported bound 2^40");
    }
    Poly f = find_primitive_modulus(p, s);
    slot.reset(new GaloisRing(p, r, s, std::move(f)));
  }
  return *slot;
}

const GaloisRing& GaloisRing::parse(std::string_view text) {
  static const std::regex pattern(R"(\s*GR\(\s*(\d+)\s*(?:\^\s*(\d+))?\s*,\s*(\d+)\s*\)\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw std::invalid_argument("malformed ring '" + std::string(text) +
                                "', expected GR(p^r,s)");
  }
  const std::uint64_t base = std::stoull(m[1].str());
  const unsigned s = static_cast<unsigned>(std::stoul(m[3].str()));
  if (m[2].matched) return get(base, static_cast<unsigned>(std::stoul(m[2].str())), s);
  const auto [p, r] = prime_power_decomposition(base);
  if (p == 0) throw std::invalid_argument("GR: " + std::to_string(base) + " is not a prime power");
  return get(p, r, s);
}

BigInt GaloisRing::size() const { return big_pow(BigInt(p_), std::uint64_t{r_} * s_); }

BigInt GaloisRing::unit_count() const {
  return size() - big_pow(BigInt(p_), std::uint64_t{r_ - 1} * s_);
}

std::string GaloisRing::name() const {
  return "GR(" + std::to_string(p_) + "^" + std::to_string(r_) + "," + std::to_string(s_) + ")";
}

GaloisRingElement GaloisRing::zero() const { return {*this, std::vector<Residue>(s_, 0)}; }

GaloisRingElement GaloisRing::one() const { return from_integer(1); }

GaloisRingElement GaloisRing::from_integer(std::int64_t value) const {
  std::vector<Residue> c(s_, 0);
  const auto m = static_cast<std::int64_t>(characteristic_);
  std::int64_t reduced = value % m;
  if (reduced < 0) reduced += m;
  c[0] = static_cast<Residue>(reduced);
  return {*this, std::move(c)};
}

GaloisRingElement GaloisRing::from_coefficients(std::vector<Residue> coefficients) const {
  return {*this, std::move(coefficients)};
}

GaloisRingElement GaloisRing::x() const {
  std::vector<Residue> c(s_, 0);
  if (s_ == 1) {
    c[0] = (characteristic_ - modulus_[0]) % characteristic_;
  } else {
    c[1] = 1;
  }
  return {*this, std::move(c)};
}

GaloisRingElement GaloisRing::teichmuller_generator() const {
  return {*this, teichmuller_generator_};
}

GaloisRingElement GaloisRing::parse_element(std::string_view text) const {
  const auto parts = split_commas(text);
  if (parts.size() > s_) {
    throw std::invalid_argument("element '" + std::string(text) + "' has more than " +
                                std::to_string(s_) + " coefficients for " + name());
  }
  std::vector<Residue> c(s_, 0);
  const auto m = static_cast<long long>(characteristic_);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(parts[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (parts[i].empty() || used != parts[i].size()) {
      throw std::invalid_argument("malformed coefficient '" + parts[i] + "' in element '" +
                                  std::string(text) + "'");
    }
    v %= m;
    if (v < 0) v += m;
    c[i] = static_cast<Residue>(v);
  }
  return {*this, std::move(c)};
}

void GaloisRing::multiply(std::span<const Residue> a, std::span<const Residue> b,
                          std::span<Residue> out) const {
  poly_mulmod(a, b, modulus_, characteristic_, out);
}

// ---------------------------------------------------------------------------
// GaloisRingElement

GaloisRingElement::GaloisRingElement(const GaloisRing& ring, std::vector<Residue> coefficients)
    : ring_(&ring), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != ring.s()) {
    throw std::invalid_argument("element of " + ring.name() + " needs exactly " +
                                std::to_string(ring.s()) + " coefficients");
  }
  for (auto& c : coeffs_) c %= ring.characteristic();
}

const GaloisRing& GaloisRingElement::ring() const {
  if (ring_ == nullptr) throw std::logic_error("use of an empty GaloisRingElement");
  return *ring_;
}

void GaloisRingElement::require_same_ring(const GaloisRingElement& other) const {
  if (ring_ == nullptr || ring_ != other.ring_) {
    throw std::invalid_argument("Galois ring elements from different rings: " +
                                (ring_ ? ring_->name() : std::string("<empty>")) + " vs " +
                                (other.ring_ ? other.ring_->name() : std::string("<empty>")));
  }
}

bool GaloisRingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

bool GaloisRingElement::is_one() const {
  return !coeffs_.empty() && coeffs_[0] == 1 &&
         std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Residue c) { return c == 0; });
}

bool GaloisRingElement::is_unit() const {
  const auto p = ring().p();
  return std::any_of(coeffs_.begin(), coeffs_.end(), [p](Residue c) { return c % p != 0; });
}

unsigned GaloisRingElement::p_valuation() const {
  unsigned v = ring().r();
  for (Residue c : coeffs_) {
    if (c != 0) v = std::min(v, valuation(c, ring_->p()));
  }
  return v;
}

GaloisRingElement& GaloisRingElement::operator+=(const GaloisRingElement& other) {
  require_same_ring(other);
  const auto m = ring_->characteristic();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + other.coeffs_[i]) % m;
  return *this;
}

GaloisRingElement& GaloisRingElement::operator-=(const GaloisRingElement& other) {
  require_same_ring(other);
  const auto m = ring_->characteristic();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = (coeffs_[i] + m - other.coeffs_[i]) % m;
  }
  return *this;
}

GaloisRingElement& GaloisRingElement::operator*=(const GaloisRingElement& other) {
  *this = *this * other;
  return *this;
}

GaloisRingElement GaloisRingElement::operator-() const {
  GaloisRingElement out = ring().zero();
  out -= *this;
  return out;
}

GaloisRingElement operator*(const GaloisRingElement& a, const GaloisRingElement& b) {
  a.require_same_ring(b);
  std::vector<Residue> out(a.coeffs_.size());
  a.ring_->multiply(a.coeffs_, b.coeffs_, out);
  return {*a.ring_, std::move(out)};
}

bool operator==(const GaloisRingElement& a, const GaloisRingElement& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

GaloisRingElement GaloisRingElement::scaled(std::uint64_t factor) const {
  const auto m = ring().characteristic();
  std::vector<Residue> out(coeffs_);
  for (auto& c : out) c = mul_mod(c, factor % m, m);
  return {*ring_, std::move(out)};
}

GaloisRingElement GaloisRingElement::pow(std::uint64_t exponent) const {
  GaloisRingElement result = ring().one();
  GaloisRingElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

GaloisRingElement GaloisRingElement::pow(const BigInt& exponent) const {
  if (exponent < 0) throw std::domain_error("negative exponent");
  GaloisRingElement result = ring().one();
  if (exponent == 0) return result;
  const auto top = boost::multiprecision::msb(exponent);
  for (std::size_t bit = top + 1; bit-- > 0;) {
    result *= result;
    if (boost::multiprecision::bit_test(exponent, bit)) result *= *this;
  }
  return result;
}

GaloisRingElement GaloisRingElement::inverse() const {
  if (!is_unit()) {
    throw std::domain_error("element " + to_string() + " of " + ring().name() +
                            " is not a unit");
  }
  // Inverse modulo p from the residue field, then Newton steps b <- b(2 - ab).
  GaloisRingElement b = pow(ring_->residue_field_size() - 2);
  const GaloisRingElement two = ring_->from_integer(2);
  for (unsigned i = 0; i < ring_->r(); ++i) b = b * (two - *this * b);
  return b;
}

std::string GaloisRingElement::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out << ',';
    out << coeffs_[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Teichmuller machinery

namespace {

GaloisRingElement frobenius_power(const GaloisRingElement& t, std::uint64_t k) {
  GaloisRingElement out = t;
  for (std::uint64_t i = 0; i < k; ++i) out = out.pow(t.ring().p());
  return out;
}

}  // namespace

GaloisRingElement teichmuller_lift(const GaloisRingElement& a) {
  const GaloisRing& ring = a.ring();
  // Each t -> t^{p^s} step gains one p-adic digit of accuracy.
  GaloisRingElement t = a;
  for (unsigned i = 1; i < ring.r(); ++i) t = frobenius_power(t, ring.s());
  return t;
}

bool is_teichmuller(const GaloisRingElement& a) {
  return frobenius_power(a, a.ring().s()) == a;
}

std::vector<GaloisRingElement> teichmuller_set(const GaloisRing& ring) {
  if (ring.residue_field_size() > (std::uint64_t{1} << 20)) {
    throw std::invalid_argument("teichmuller_set: " + ring.name() + " is too large to list");
  }
  std::vector<GaloisRingElement> out{ring.zero()};
  const GaloisRingElement xi = ring.teichmuller_generator();
  GaloisRingElement power = ring.one();
  for (std::uint64_t i = 0; i + 1 < ring.residue_field_size(); ++i) {
    out.push_back(power);
    power *= xi;
  }
  return out;
}

std::vector<GaloisRingElement> teichmuller_digits(const GaloisRingElement& a) {
  const GaloisRing& ring = a.ring();
  std::vector<GaloisRingElement> digits;
  digits.reserve(ring.r());
  GaloisRingElement rest = a;
  for (unsigned i = 0; i < ring.r(); ++i) {
    GaloisRingElement digit = teichmuller_lift(rest);
    rest -= digit;
    std::vector<Residue> shifted(rest.coefficients().begin(), rest.coefficients().end());
    for (auto& c : shifted) c /= ring.p();
    rest = ring.from_coefficients(std::move(shifted));
    digits.push_back(std::move(digit));
  }
  return digits;
}

GaloisRingElement from_teichmuller_digits(std::span<const GaloisRingElement> digits) {
  if (digits.empty()) throw std::invalid_argument("from_teichmuller_digits: no digits");
  const GaloisRing& ring = digits.front().ring();
  GaloisRingElement out = ring.zero();
  std::uint64_t weight = 1;
  for (const auto& d : digits) {
    out += d.scaled(weight);
    weight = mul_mod(weight, ring.p(), ring.characteristic());
  }
  return out;
}

GaloisRingElement generalized_frobenius(const GaloisRingElement& a, std::uint64_t k) {
  const GaloisRing& ring = a.ring();
  k %= ring.s();
  if (k == 0) return a;
  auto digits = teichmuller_digits(a);
  for (auto& d : digits) d = frobenius_power(d, k);
  return from_teichmuller_digits(digits);
}

GaloisRingElement conjugate(const GaloisRingElement& a) {
  if (a.ring().s() % 2 != 0) {
    throw std::invalid_argument("conjugation needs even s; " + a.ring().name() + " has odd s");
  }
  return generalized_frobenius(a, a.ring().s() / 2);
}

GaloisRingElement embed(const GaloisRingElement& a, const GaloisRing& target) {
  const GaloisRing& source = a.ring();
  if (&source == &target) return a;
  const EmbeddingData& data = embedding(source, target);
  GaloisRingElement out = target.zero();
  for (unsigned j = 0; j < source.s(); ++j) {
    if (a.coefficient(j) != 0) out += data.powers[j].scaled(a.coefficient(j));
  }
  return out;
}

GaloisRingElement pull_back(const GaloisRingElement& b, const GaloisRing& source) {
  const GaloisRing& target = b.ring();
  if (&source == &target) return b;
  const EmbeddingData& data = embedding(source, target);
  const std::size_t rows = target.s();
  const std::size_t cols = source.s();
  const std::uint64_t m = target.characteristic();
  const std::uint64_t p = target.p();
  // Augmented system [powers | b]; columns of the basis are units mod p after
  // elimination because the image is a free direct summand.
  std::vector<std::vector<Residue>> sys(rows, std::vector<Residue>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) sys[i][j] = data.powers[j].coefficient(i);
    sys[i][cols] = b.coefficient(i);
  }
  std::vector<std::size_t> pivot_row(cols);
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t found = rows;
    for (std::size_t i = next; i < rows; ++i) {
      if (sys[i][c] % p != 0) {
        found = i;
        break;
      }
    }
    if (found == rows) throw std::logic_error("pull_back: embedding basis is degenerate");
    std::swap(sys[next], sys[found]);
    const Residue inv = inverse_mod(sys[next][c], m);
    for (auto& v : sys[next]) v = mul_mod(v, inv, m);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == next || sys[i][c] == 0) continue;
      const Residue factor = sys[i][c];
      for (std::size_t j = 0; j <= cols; ++j) {
        sys[i][j] = (sys[i][j] + m - mul_mod(factor, sys[next][j], m)) % m;
      }
    }
    pivot_row[c] = next++;
  }
  for (std::size_t i = next; i < rows; ++i) {
    if (sys[i][cols] != 0) {
      throw std::domain_error("pull_back: element " + b.to_string() + " of " + target.name() +
                              " does not lie in the image of " + source.name());
    }
  }
  std::vector<Residue> coeffs(cols);
  for (std::size_t c = 0; c < cols; ++c) coeffs[c] = sys[pivot_row[c]][cols];
  return source.from_coefficients(std::move(coeffs));
}

GaloisRingElement root_of_unity(const GaloisRing& ring, std::uint64_t order) {
  const std::uint64_t units = ring.residue_field_size() - 1;
  if (order == 0 || units % order != 0) {
    throw std::invalid_argument("root_of_unity: " + std::to_string(order) + " does not divide " +
                                std::to_string(units) + " = p^s - 1 for " + ring.name());
  }
  return ring.teichmuller_generator().pow(units / order);
}

}  // namespace sdc
