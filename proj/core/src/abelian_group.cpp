#include "sdc/abelian_group.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sdc {

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i != 0) out << ',';
    out << coords[i];
  }
  out << ')';
  return out.str();
}

AbelianGroup::AbelianGroup(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
  for (auto m : factors_) {
    if (m < 2) {
      throw std::invalid_argument("cyclic factor Z" + std::to_string(m) + " must have order >= 2");
    }
    if (order_ > std::numeric_limits<std::uint64_t>::max() / m) {
      throw std::overflow_error("group order exceeds 64 bits");
    }
    order_ *= m;
    exponent_ = lcm_u64(exponent_, m);
  }
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
  std::string text;
  for (char c : spec) {
    if (c != ' ' && c != '\t') text.push_back(c);
  }
  if (text == "1") return AbelianGroup{};
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("malformed group spec '" + std::string(spec) + "': " + why +
                                 " (expected e.g. Z2xZ4 or 1)");
  };
  if (text.empty()) throw fail("empty");
  std::vector<std::uint64_t> factors;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'Z') throw fail("factor must start with 'Z'");
    ++pos;
    std::size_t end = pos;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
    if (end == pos) throw fail("missing factor order");
    if (end - pos > 18) throw fail("factor order too large");
    const std::uint64_t m = std::stoull(text.substr(pos, end - pos));
    if (m < 2) throw fail("factor Z" + std::to_string(m) + " has order < 2");
    factors.push_back(m);
    pos = end;
    if (pos < text.size()) {
      if (text[pos] != 'x') throw fail("factors must be joined by 'x'");
      ++pos;
      if (pos == text.size()) throw fail("trailing 'x'");
    }
  }
  return AbelianGroup(std::move(factors));
}

bool AbelianGroup::is_cyclic() const {
  return exponent_ == order_;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i != 0) out += 'x';
    out += 'Z' + std::to_string(factors_[i]);
  }
  return out;
}

GroupElement AbelianGroup::identity() const {
  return GroupElement{std::vector<std::uint64_t>(factors_.size(), 0)};
}

GroupElement AbelianGroup::element(std::vector<std::uint64_t> coords) const {
  if (coords.size() != factors_.size()) {
    throw std::invalid_argument("element needs " + std::to_string(factors_.size()) +
                                " coordinates for group " + to_string());
  }
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] %= factors_[i];
  return GroupElement{std::move(coords)};
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = (a.coords[i] + b.coords[i]) % factors_[i];
  }
  return out;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = (factors_[i] - a.coords[i] % factors_[i]) % factors_[i];
  }
  return out;
}

GroupElement AbelianGroup::scale(std::uint64_t k, const GroupElement& a) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = mul_mod(k % factors_[i], a.coords[i], factors_[i]);
  }
  return out;
}

std::uint64_t AbelianGroup::element_order(const GroupElement& a) const {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    order = lcm_u64(order, factors_[i] / gcd_u64(factors_[i], a.coords[i] % factors_[i]));
  }
  return order;
}

std::size_t AbelianGroup::index_of(const GroupElement& a) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) index = index * factors_[i] + a.coords[i];
  return index;
}

GroupElement AbelianGroup::element_at(std::size_t index) const {
  GroupElement out = identity();
  for (std::size_t i = factors_.size(); i-- > 0;) {
    out.coords[i] = index % factors_[i];
    index /= factors_[i];
  }
  return out;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::uint64_t AbelianGroup::gamma(const GroupElement& h, const GroupElement& b) const {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint64_t weight = exponent_ / factors_[i];
    const std::uint64_t term =
        mul_mod(mul_mod(b.coords[i], h.coords[i], exponent_), weight % exponent_, exponent_);
    sum = (sum + term) % exponent_;
  }
  return sum;
}

std::uint64_t count_order_direct(const AbelianGroup& group, std::uint64_t d) {
  if (group.order() > kDirectCountBound) {
    throw std::invalid_argument("count_order_direct: |A| = " + std::to_string(group.order()) +
                                " exceeds the direct-count bound " +
                                std::to_string(kDirectCountBound));
  }
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (group.element_order(group.element_at(i)) == d) ++count;
  }
  return count;
}

std::uint64_t count_order_formula(const AbelianGroup& group, std::uint64_t d) {
  if (d == 0 || group.exponent() % d != 0) return 0;
  // prime -> multiplicities n_j of the cyclic factors Z_{prime^j}
  std::map<std::uint64_t, std::map<unsigned, std::uint64_t>> primary;
  for (auto m : group.factors()) {
    for (auto [prime, exp] : factorize(m)) ++primary[prime][exp];
  }
  std::map<std::uint64_t, unsigned> target;
  if (d > 1) {
    for (auto [prime, exp] : factorize(d)) target[prime] = exp;
  }
  std::uint64_t count = 1;
  for (const auto& [prime, multiplicity] : primary) {
    const unsigned i = target.contains(prime) ? target[prime] : 0;
    if (i == 0) continue;
    std::uint64_t rank = 0;  // N = sum_j n_j
    for (auto [j, n] : multiplicity) rank += n;
    // s_i = iN + sum_{j<i} (j - i) n_j
    auto exponent_sum = [&](unsigned level) -> std::uint64_t {
      if (level == 0) return 0;
      std::int64_t s = static_cast<std::int64_t>(level * rank);
      for (auto [j, n] : multiplicity) {
        if (j < level) {
          s += (static_cast<std::int64_t>(j) - static_cast<std::int64_t>(level)) *
               static_cast<std::int64_t>(n);
        }
      }
      return static_cast<std::uint64_t>(s);
    };
    const std::uint64_t hi = checked_pow(prime, static_cast<unsigned>(exponent_sum(i)));
    const std::uint64_t lo = checked_pow(prime, static_cast<unsigned>(exponent_sum(i - 1)));
    count *= hi - lo;
  }
  return count;
}

SylowSplit sylow_decompose(const AbelianGroup& group, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_decompose: " + std::to_string(p) + " is not prime");
  SylowSplit out;
  out.group = group;
  out.p = p;
  std::vector<std::uint64_t> a_factors;
  std::vector<std::uint64_t> p_factors;
  constexpr auto npos = static_cast<std::size_t>(-1);
  for (auto m : group.factors()) {
    std::uint64_t p_part = 1;
    std::uint64_t rest = m;
    while (rest % p == 0) {
      rest /= p;
      p_part *= p;
    }
    if (rest > 1) {
      out.complement_slot.push_back(a_factors.size());
      a_factors.push_back(rest);
    } else {
      out.complement_slot.push_back(npos);
    }
    if (p_part > 1) {
      out.sylow_slot.push_back(p_factors.size());
      p_factors.push_back(p_part);
    } else {
      out.sylow_slot.push_back(npos);
    }
  }
  out.complement = AbelianGroup(std::move(a_factors));
  out.sylow = AbelianGroup(std::move(p_factors));
  return out;
}

std::pair<GroupElement, GroupElement> SylowSplit::split(const GroupElement& g) const {
  GroupElement a = complement.identity();
  GroupElement b = sylow.identity();
  constexpr auto npos = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < group.rank(); ++i) {
    if (complement_slot[i] != npos) {
      a.coords[complement_slot[i]] = g.coords[i] % complement.factors()[complement_slot[i]];
    }
    if (sylow_slot[i] != npos) b.coords[sylow_slot[i]] = g.coords[i] % sylow.factors()[sylow_slot[i]];
  }
  return {std::move(a), std::move(b)};
}

GroupElement SylowSplit::join(const GroupElement& a, const GroupElement& b) const {
  GroupElement g = group.identity();
  constexpr auto npos = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const std::uint64_t m = group.factors()[i];
    std::uint64_t ma = 1, mb = 1, va = 0, vb = 0;
    if (complement_slot[i] != npos) {
      ma = complement.factors()[complement_slot[i]];
      va = a.coords[complement_slot[i]];
    }
    if (sylow_slot[i] != npos) {
      mb = sylow.factors()[sylow_slot[i]];
      vb = b.coords[sylow_slot[i]];
    }
    // CRT: x = va (mod ma), x = vb (mod mb), ma * mb = m.
    const std::uint64_t ea = ma == 1 ? 0 : mul_mod(mb, inverse_mod(mb % ma, ma), m);
    const std::uint64_t eb = mb == 1 ? 0 : mul_mod(ma, inverse_mod(ma % mb, mb), m);
    g.coords[i] = (mul_mod(va, ea, m) + mul_mod(vb, eb, m)) % m;
  }
  return g;
}

namespace {

// Partitions of k into non-increasing parts, each at most `cap`.
void partitions(unsigned k, unsigned cap, std::vector<unsigned>& prefix,
                std::vector<std::vector<unsigned>>& out) {
  if (k == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned part = std::min(k, cap); part >= 1; --part) {
    prefix.push_back(part);
    partitions(k - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("group order must be positive");
  // Invariant factors, largest first, built prime by prime.
  std::vector<std::vector<std::uint64_t>> shapes{{}};
  for (auto [prime, exp] : factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> prefix;
    partitions(exp, exp, prefix, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& shape : shapes) {
      for (const auto& part : parts) {
        std::vector<std::uint64_t> merged(std::max(shape.size(), part.size()), 1);
        for (std::size_t i = 0; i < shape.size(); ++i) merged[i] = shape[i];
        for (std::size_t i = 0; i < part.size(); ++i) merged[i] *= checked_pow(prime, part[i]);
        next.push_back(std::move(merged));
      }
    }
    shapes = std::move(next);
  }
  std::vector<AbelianGroup> groups;
  for (auto& shape : shapes) {
    std::reverse(shape.begin(), shape.end());
    groups.emplace_back(std::move(shape));
  }
  std::sort(groups.begin(), groups.end(),
            [](const AbelianGroup& a, const AbelianGroup& b) { return a.factors() < b.factors(); });
  return groups;
}

}  // namespace sdc
