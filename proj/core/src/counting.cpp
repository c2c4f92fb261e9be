#include "sdc/counting.hpp"

#include <algorithm>

#include "sdc/ideals.hpp"

namespace sdc {

bool exists_self_dual(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& group,
                      Duality duality) {
  if (duality == Duality::Hermitian && s % 2 != 0) {
    throw std::invalid_argument("Hermitian self-duality needs even s, got s = " +
                                std::to_string(s));
  }
  return r % 2 == 0 || (p == 2 && group.order() % 2 == 0);
}

bool is_principal_ideal_group_ring(std::uint64_t p, unsigned r, const AbelianGroup& group) {
  if (r == 1) return sylow_decompose(group, p).sylow.is_cyclic();
  return group.order() % p != 0;
}

namespace {

BigInt geometric(const BigInt& base, std::uint64_t terms) {
  // 1 + base + ... + base^{terms-1}
  BigInt sum = 0;
  BigInt power = 1;
  for (std::uint64_t i = 0; i < terms; ++i) {
    sum += power;
    power *= base;
  }
  return sum;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

BigInt nc_p2(std::uint64_t p, unsigned s, unsigned a) {
  require_prime(p);
  if (s == 0) throw std::invalid_argument("nc_p2: s must be positive");
  if (a == 0) return 3;
  const BigInt q = big_pow(BigInt(p), s);
  const std::uint64_t length = checked_pow(p, a);
  const std::uint64_t top = checked_pow(p, a - 1);
  BigInt total = 0;
  for (std::uint64_t d = 0; d < length; ++d) {
    total += geometric(q, std::min<std::uint64_t>(d / 2, top) + 1);
  }
  return 2 * total + geometric(q, top + 1);
}

BigInt nec_p2(std::uint64_t p, unsigned s, unsigned a) {
  require_prime(p);
  if (s == 0) throw std::invalid_argument("nec_p2: s must be positive");
  if (a == 0) return 1;
  const BigInt q = big_pow(BigInt(p), s);
  if (p == 2) {
    if (a == 1) return 1;
    if (a == 2) return 1 + q;
    // (q^{2^{a-2}-1} - 1)/(q - 1) = 1 + q + ... + q^{2^{a-2}-2}
    return 1 + q + 2 * q * q * geometric(q, checked_pow(2, a - 2) - 1);
  }
  return 2 * geometric(q, (checked_pow(p, a - 1) + 1) / 2);
}

BigInt nhc_p2(std::uint64_t p, unsigned s, unsigned a) {
  require_prime(p);
  if (s == 0 || s % 2 != 0) {
    throw std::invalid_argument("nhc_p2 needs even s, got s = " + std::to_string(s));
  }
  if (a == 0) return 1;
  return geometric(big_pow(BigInt(p), s / 2), checked_pow(p, a - 1) + 1);
}

namespace {

void require_coprime(std::uint64_t p, const AbelianGroup& group) {
  if (group.order() % p == 0) {
    throw std::invalid_argument("needs gcd(|A|, p) = 1; |A| = " + std::to_string(group.order()) +
                                ", p = " + std::to_string(p));
  }
}

// sum over d | M of flag(d) N_A(d) / (2 ord_d(q)), checked for integrality.
std::uint64_t pair_class_exponent(const AbelianGroup& group, std::uint64_t q, std::uint64_t q_test,
                                  bool use_lambda) {
  std::uint64_t total = 0;
  for (auto d : divisors(group.exponent())) {
    const int flag = use_lambda ? lambda(d, q_test) : chi(d, q_test);
    if (flag == 0) continue;
    const std::uint64_t n = count_order_formula(group, d);
    const std::uint64_t denom = 2 * multiplicative_order(q % d, d);
    if (n % denom != 0) {
      throw std::logic_error("non-integral exponent N_A(" + std::to_string(d) + ")/" +
                             std::to_string(denom));
    }
    total += n / denom;
  }
  return total;
}

}  // namespace

BigInt nea_semisimple(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& group) {
  require_prime(p);
  require_coprime(p, group);
  if (r % 2 != 0) return 0;
  const std::uint64_t q = checked_pow(p, s);
  return big_pow(BigInt(r + 1), pair_class_exponent(group, q, q, false));
}

BigInt nha_semisimple(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& group) {
  require_prime(p);
  require_coprime(p, group);
  if (s % 2 != 0) throw std::invalid_argument("nha_semisimple needs even s");
  if (r % 2 != 0) return 0;
  const std::uint64_t q = checked_pow(p, s);
  return big_pow(BigInt(r + 1), pair_class_exponent(group, q, checked_pow(p, s / 2), true));
}

// ---------------------------------------------------------------------------
// Providers

std::string to_string(BaseCount kind) {
  switch (kind) {
    case BaseCount::NA: return "NA";
    case BaseCount::NEA: return "NEA";
    case BaseCount::NHA: return "NHA";
  }
  return "?";
}

void BaseCountProvider::reject(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                               const AbelianGroup& sylow) const {
  throw ProviderDomainError("provider '" + name() + "' (domain: " + domain() + ") cannot supply " +
                            to_string(kind) + "(GR(" + std::to_string(p) + "^" +
                            std::to_string(r) + "," + std::to_string(s) + ")[" +
                            sylow.to_string() + "])");
}

namespace {

bool hermitian_ok(BaseCount kind, unsigned s) { return kind != BaseCount::NHA || s % 2 == 0; }

bool is_p_group(std::uint64_t p, const AbelianGroup& g) {
  std::uint64_t n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

bool TrivialProvider::supports(BaseCount kind, std::uint64_t, unsigned, unsigned s,
                               const AbelianGroup& sylow) const {
  return sylow.is_trivial() && hermitian_ok(kind, s);
}

BigInt TrivialProvider::count(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                              const AbelianGroup& sylow) const {
  if (!supports(kind, p, r, s, sylow)) reject(kind, p, r, s, sylow);
  if (kind == BaseCount::NA) return r + 1;
  return r % 2 == 0 ? 1 : 0;
}

bool ClosedFormProvider::supports(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                                  const AbelianGroup& sylow) const {
  return r == 2 && sylow.is_cyclic() && is_p_group(p, sylow) && hermitian_ok(kind, s);
}

BigInt ClosedFormProvider::count(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                                 const AbelianGroup& sylow) const {
  if (!supports(kind, p, r, s, sylow)) reject(kind, p, r, s, sylow);
  const unsigned a = sylow.is_trivial() ? 0 : factorize(sylow.order()).front().second;
  switch (kind) {
    case BaseCount::NA: return nc_p2(p, s, a);
    case BaseCount::NEA: return nec_p2(p, s, a);
    case BaseCount::NHA: return nhc_p2(p, s, a);
  }
  return 0;
}

std::string BruteForceProvider::domain() const {
  return "|GR(p^r,s)[P]| <= " + std::to_string(exhaustive_bound());
}

bool BruteForceProvider::supports(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                                  const AbelianGroup& sylow) const {
  if (!hermitian_ok(kind, s) || !is_p_group(p, sylow)) return false;
  const BigInt size = big_pow(BigInt(p), std::uint64_t{r} * s * sylow.order());
  return size <= BigInt(exhaustive_bound());
}

BigInt BruteForceProvider::count(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                                 const AbelianGroup& sylow) const {
  if (!supports(kind, p, r, s, sylow)) reject(kind, p, r, s, sylow);
  const Key key{static_cast<int>(kind), p, r, s, sylow.factors()};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const GroupRing ring(GaloisRing::get(p, r, s), sylow);
  BigInt value;
  if (kind == BaseCount::NA) {
    value = enumerate_ideals(ring).size();
  } else {
    const Duality duality = kind == BaseCount::NEA ? Duality::Euclidean : Duality::Hermitian;
    value = self_dual_ideals(ring, duality).size();
  }
  std::lock_guard lock(mutex_);
  cache_.emplace(key, value);
  return value;
}

std::string AutoProvider::domain() const {
  std::string text = trivial_.domain() + "; " + closed_.domain();
  if (allow_brute_) text += "; " + brute_.domain();
  return text;
}

const BaseCountProvider* AutoProvider::choose(BaseCount kind, std::uint64_t p, unsigned r,
                                              unsigned s, const AbelianGroup& sylow) const {
  for (const BaseCountProvider* candidate :
       {static_cast<const BaseCountProvider*>(&trivial_),
        static_cast<const BaseCountProvider*>(&closed_),
        static_cast<const BaseCountProvider*>(&brute_)}) {
    if (candidate == &brute_ && !allow_brute_) break;
    if (candidate->supports(kind, p, r, s, sylow)) return candidate;
  }
  return nullptr;
}

bool AutoProvider::supports(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                            const AbelianGroup& sylow) const {
  return choose(kind, p, r, s, sylow) != nullptr;
}

BigInt AutoProvider::count(BaseCount kind, std::uint64_t p, unsigned r, unsigned s,
                           const AbelianGroup& sylow) const {
  const BaseCountProvider* chosen = choose(kind, p, r, s, sylow);
  if (chosen == nullptr) reject(kind, p, r, s, sylow);
  return chosen->count(kind, p, r, s, sylow);
}

std::unique_ptr<BaseCountProvider> make_provider(const std::string& name) {
  if (name == "auto") return std::make_unique<AutoProvider>();
  if (name == "formula") return std::make_unique<AutoProvider>(false);
  if (name == "trivial") return std::make_unique<TrivialProvider>();
  if (name == "closed") return std::make_unique<ClosedFormProvider>();
  if (name == "brute") return std::make_unique<BruteForceProvider>();
  throw std::invalid_argument("unknown provider '" + name +
                              "' (expected auto, formula, trivial, closed or brute)");
}

// ---------------------------------------------------------------------------
// General formula

std::string to_string(CountKind kind) {
  switch (kind) {
    case CountKind::Euclidean: return "euclidean";
    case CountKind::Hermitian: return "hermitian";
    case CountKind::All: return "none";
  }
  return "?";
}

CountKind parse_count_kind(const std::string& text) {
  if (text == "euclidean") return CountKind::Euclidean;
  if (text == "hermitian") return CountKind::Hermitian;
  if (text == "none") return CountKind::All;
  throw std::invalid_argument("unknown duality '" + text +
                              "' (expected euclidean, hermitian or none)");
}

namespace {

std::uint64_t exact_div(std::uint64_t a, std::uint64_t b, const std::string& what) {
  if (b == 0 || a % b != 0) {
    throw std::logic_error("non-integral exponent " + what + ": " + std::to_string(a) + "/" +
                           std::to_string(b));
  }
  return a / b;
}

void record_provider(CountReport& report, const std::string& name) {
  if (name.empty()) return;
  std::string list = "," + report.providers + ",";
  if (list.find("," + name + ",") != std::string::npos) return;
  if (!report.providers.empty()) report.providers += ",";
  report.providers += name;
}

}  // namespace

CountReport count_general(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& complement,
                          const AbelianGroup& sylow, CountKind kind,
                          const BaseCountProvider& provider) {
  require_prime(p);
  require_coprime(p, complement);
  if (!is_p_group(p, sylow)) {
    throw std::invalid_argument("P = " + sylow.to_string() + " is not a " + std::to_string(p) +
                                "-group");
  }
  if (kind == CountKind::Hermitian && s % 2 != 0) {
    throw std::invalid_argument("Hermitian counts need even s, got s = " + std::to_string(s));
  }
  const std::uint64_t q = checked_pow(p, s);
  const std::uint64_t half = kind == CountKind::Hermitian ? checked_pow(p, s / 2) : q;
  const auto* auto_provider = dynamic_cast<const AutoProvider*>(&provider);

  CountReport report;
  report.p = p;
  report.r = r;
  report.s = s;
  report.complement = complement.to_string();
  report.sylow = sylow.to_string();
  report.kind = kind;
  report.count = 1;

  for (auto d : divisors(complement.exponent())) {
    DivisorTerm term;
    term.d = d;
    term.elements = count_order_formula(complement, d);
    term.order = multiplicative_order(q % d, d);
    term.pair_class = pair_class(d, half);
    term.base_degree = static_cast<unsigned>(s * term.order);
    const bool paired = kind == CountKind::Hermitian ? lambda(d, half) == 1 : chi(d, q) == 1;
    switch (kind) {
      case CountKind::All:
        term.base = BaseCount::NA;
        term.exponent = exact_div(term.elements, term.order, "N_A(d)/ord");
        break;
      case CountKind::Euclidean:
        if (paired) {
          term.base = BaseCount::NA;
          term.exponent = exact_div(term.elements, 2 * term.order, "N_A(d)/(2 ord)");
        } else if (term.order == 1) {
          term.base = BaseCount::NEA;
          term.exponent = term.elements;
        } else {
          term.base = BaseCount::NHA;
          term.exponent = exact_div(term.elements, term.order, "N_A(d)/ord");
        }
        break;
      case CountKind::Hermitian:
        if (paired) {
          term.base = BaseCount::NA;
          term.exponent = exact_div(term.elements, 2 * term.order, "N_A(d)/(2 ord)");
        } else {
          term.base = BaseCount::NHA;
          term.exponent = exact_div(term.elements, term.order, "N_A(d)/ord");
        }
        break;
    }
    if (term.exponent == 0) {
      term.base_value = 1;
      term.factor = 1;
    } else {
      term.base_value = provider.count(term.base, p, r, term.base_degree, sylow);
      term.factor = big_pow(term.base_value, term.exponent);
      const BaseCountProvider* used =
          auto_provider ? auto_provider->choose(term.base, p, r, term.base_degree, sylow)
                        : &provider;
      term.provider = used->name();
      record_provider(report, term.provider);
    }
    report.count *= term.factor;
    report.breakdown.push_back(std::move(term));
  }
  return report;
}

CountReport count_abelian_codes(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& group,
                                CountKind kind, const BaseCountProvider& provider) {
  require_prime(p);
  const SylowSplit split = sylow_decompose(group, p);
  CountReport report = count_general(p, r, s, split.complement, split.sylow, kind, provider);
  report.group = group.to_string();
  return report;
}

CountReport nea_general(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& complement,
                        const AbelianGroup& sylow, const BaseCountProvider& provider) {
  return count_general(p, r, s, complement, sylow, CountKind::Euclidean, provider);
}

CountReport nha_general(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& complement,
                        const AbelianGroup& sylow, const BaseCountProvider& provider) {
  return count_general(p, r, s, complement, sylow, CountKind::Hermitian, provider);
}

namespace {

CountReport length_n(std::uint64_t p, unsigned s, std::uint64_t n, CountKind kind) {
  require_prime(p);
  if (n == 0) throw std::invalid_argument("length n must be positive");
  if (kind == CountKind::Hermitian && s % 2 != 0) {
    throw std::invalid_argument("Hermitian counts need even s, got s = " + std::to_string(s));
  }
  unsigned a = 0;
  std::uint64_t m = n;
  while (m % p == 0) {
    m /= p;
    ++a;
  }
  const std::uint64_t q = checked_pow(p, s);
  const std::uint64_t half = kind == CountKind::Hermitian ? checked_pow(p, s / 2) : q;

  CountReport report;
  report.p = p;
  report.r = 2;
  report.s = s;
  report.group = "Z" + std::to_string(n);
  report.complement = m == 1 ? "1" : "Z" + std::to_string(m);
  report.sylow = a == 0 ? "1" : "Z" + std::to_string(checked_pow(p, a));
  report.kind = kind;
  report.count = 1;
  report.providers = "closed";

  auto push = [&](DivisorTerm term) {
    term.factor = term.exponent == 0 ? BigInt(1) : big_pow(term.base_value, term.exponent);
    term.provider = "closed";
    report.count *= term.factor;
    report.breakdown.push_back(std::move(term));
  };

  if (kind == CountKind::Euclidean) {
    // Type I classes: {0}, and {m/2} for even m.
    DivisorTerm fixed;
    fixed.d = m % 2 == 0 ? 2 : 1;
    fixed.elements = m % 2 == 0 ? 2 : 1;
    fixed.order = 1;
    fixed.pair_class = PairClass::OddlyGood;
    fixed.base = BaseCount::NEA;
    fixed.base_degree = s;
    fixed.base_value = nec_p2(p, s, a);
    fixed.exponent = m % 2 == 0 ? 2 : 1;  // eta(m)
    push(std::move(fixed));
  }
  for (auto d : divisors(m)) {
    if (kind == CountKind::Euclidean && d <= 2) continue;
    DivisorTerm term;
    term.d = d;
    term.elements = euler_phi(d);
    term.order = multiplicative_order(q % d, d);
    term.pair_class = pair_class(d, half);
    term.base_degree = static_cast<unsigned>(s * term.order);
    const bool paired = kind == CountKind::Hermitian ? lambda(d, half) == 1 : chi(d, q) == 1;
    if (kind == CountKind::All) {
      term.base = BaseCount::NA;
      term.base_value = nc_p2(p, term.base_degree, a);
      term.exponent = exact_div(term.elements, term.order, "phi(d)/ord");
    } else if (paired) {
      term.base = BaseCount::NA;
      term.base_value = nc_p2(p, term.base_degree, a);
      term.exponent = exact_div(term.elements, 2 * term.order, "phi(d)/(2 ord)");
    } else {
      term.base = BaseCount::NHA;
      term.base_value = nhc_p2(p, term.base_degree, a);
      term.exponent = exact_div(term.elements, term.order, "phi(d)/ord");
    }
    push(std::move(term));
  }
  return report;
}

}  // namespace

CountReport nec_length_n(std::uint64_t p, unsigned s, std::uint64_t n) {
  return length_n(p, s, n, CountKind::Euclidean);
}

CountReport nhc_length_n(std::uint64_t p, unsigned s, std::uint64_t n) {
  return length_n(p, s, n, CountKind::Hermitian);
}

CountReport nc_length_n(std::uint64_t p, unsigned s, std::uint64_t n) {
  return length_n(p, s, n, CountKind::All);
}

}  // namespace sdc
