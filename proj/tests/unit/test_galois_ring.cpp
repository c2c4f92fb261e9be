#include <gtest/gtest.h>

#include <set>

#include "checks.hpp"
#include "sdc/galois_ring.hpp"

namespace sdc {
namespace {

using testing::random_element;
using testing::Rng;

std::vector<Residue> mod_p(const GaloisRing& ring) {
  std::vector<Residue> m;
  for (auto c : ring.modulus()) m.push_back(c % ring.p());
  return m;
}

// Every element of a ring with p^{rs} elements, from the integer code.
GaloisRingElement element_from_code(const GaloisRing& ring, std::uint64_t code) {
  std::vector<Residue> c(ring.s());
  for (auto& x : c) {
    x = code % ring.characteristic();
    code /= ring.characteristic();
  }
  return ring.from_coefficients(c);
}

std::vector<std::tuple<std::uint64_t, unsigned, unsigned>> rings_up_to(std::uint64_t bound) {
  std::vector<std::tuple<std::uint64_t, unsigned, unsigned>> out;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    for (unsigned r = 1; r <= 13; ++r) {
      for (unsigned s = 1; r * s <= 13; ++s) {
        if (big_pow(BigInt(p), r * s) <= bound) out.emplace_back(p, r, s);
      }
    }
  }
  return out;
}

TEST(GaloisRing, ModulusExamples) {
  EXPECT_EQ(GaloisRing::get(2, 2, 1).modulus(), (std::vector<Residue>{1, 1}));
  EXPECT_EQ(GaloisRing::get(2, 2, 2).modulus(), (std::vector<Residue>{1, 1, 1}));
  EXPECT_EQ(GaloisRing::get(3, 2, 1).characteristic(), 9u);
  EXPECT_EQ(GaloisRing::get(2, 2, 2).name(), "GR(2^2,2)");
  EXPECT_EQ(&GaloisRing::parse("GR(2^2,2)"), &GaloisRing::get(2, 2, 2));
  EXPECT_EQ(&GaloisRing::parse("GR(4,2)"), &GaloisRing::get(2, 2, 2));
  EXPECT_THROW(GaloisRing::get(4, 1, 1), std::invalid_argument);
}

TEST(GaloisRing, ModulusIsPrimitiveModP) {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (unsigned s = 1; s <= 6; ++s) {
      const auto& field = GaloisRing::get(p, 1, s);
      const auto& ring = GaloisRing::get(p, 3, s);
      EXPECT_EQ(mod_p(ring), field.modulus());
      // The class of x has order exactly p^s - 1 in the residue field.
      const std::uint64_t n = checked_pow(p, s) - 1;
      EXPECT_TRUE(field.x().pow(n).is_one());
      for (auto [prime, e] : factorize(n)) EXPECT_FALSE(field.x().pow(n / prime).is_one());
    }
  }
}

TEST(GaloisRing, ArithmeticExamples) {
  const auto& z4 = GaloisRing::get(2, 2, 1);
  EXPECT_EQ(z4.from_integer(3) + z4.from_integer(3), z4.from_integer(2));
  const auto& gr42 = GaloisRing::get(2, 2, 2);
  const auto xi = gr42.x();
  EXPECT_TRUE((xi * xi * xi).is_one());
  EXPECT_EQ(gr42.parse_element("3,1") + gr42.zero(), gr42.parse_element("3,1"));
  EXPECT_EQ(gr42.parse_element("3,1").to_string(), "3,1");
  EXPECT_THROW(z4.one() + gr42.one(), std::invalid_argument);
}

TEST(GaloisRing, SizeAndUnitsExhaustive) {
  for (auto [p, r, s] : rings_up_to(6561)) {
    const auto& ring = GaloisRing::get(p, r, s);
    const auto n = static_cast<std::uint64_t>(ring.size());
    ASSERT_EQ(ring.size(), big_pow(BigInt(p), r * s));
    std::uint64_t units = 0;
    for (std::uint64_t code = 0; code < n; ++code) {
      const auto a = element_from_code(ring, code);
      if (a.is_unit()) {
        ++units;
        if (code % 97 == 1) EXPECT_TRUE((a * a.inverse()).is_one());
      }
    }
    EXPECT_EQ(BigInt(units), ring.unit_count()) << ring.name();
    EXPECT_EQ(BigInt(units), big_pow(BigInt(p), r * s) - big_pow(BigInt(p), (r - 1) * s));
  }
}

TEST(GaloisRing, TeichmullerSet) {
  for (auto [p, r, s] : rings_up_to(1 << 16)) {
    const auto& ring = GaloisRing::get(p, r, s);
    const auto set = teichmuller_set(ring);
    ASSERT_EQ(set.size(), checked_pow(p, s)) << ring.name();
    std::set<std::string> seen;
    for (const auto& t : set) {
      EXPECT_EQ(t.pow(checked_pow(p, s)), t);
      EXPECT_TRUE(is_teichmuller(t));
      seen.insert(t.to_string());
    }
    EXPECT_EQ(seen.size(), set.size());
    for (std::size_t i = 0; i < set.size(); i += 1 + set.size() / 8) {
      for (std::size_t j = 0; j < set.size(); j += 1 + set.size() / 8) {
        EXPECT_TRUE(is_teichmuller(set[i] * set[j]));
      }
    }
  }
}

TEST(GaloisRing, DigitExamples) {
  const auto& z4 = GaloisRing::get(2, 2, 1);
  auto d = teichmuller_digits(z4.from_integer(3));
  EXPECT_EQ(d[0], z4.one());
  EXPECT_EQ(d[1], z4.one());
  const auto& z9 = GaloisRing::get(3, 2, 1);
  d = teichmuller_digits(z9.from_integer(5));
  EXPECT_EQ(d[0], z9.from_integer(8));
  EXPECT_EQ(d[1], z9.from_integer(8));
  for (const auto& digit : teichmuller_digits(GaloisRing::get(3, 3, 2).zero())) {
    EXPECT_TRUE(digit.is_zero());
  }
}

TEST(GaloisRing, DigitsAreABijection) {
  for (auto [p, r, s] : rings_up_to(6561)) {
    const auto& ring = GaloisRing::get(p, r, s);
    const auto n = static_cast<std::uint64_t>(ring.size());
    for (std::uint64_t code = 0; code < n; ++code) {
      const auto a = element_from_code(ring, code);
      const auto digits = teichmuller_digits(a);
      ASSERT_EQ(digits.size(), r);
      for (const auto& t : digits) ASSERT_TRUE(is_teichmuller(t));
      ASSERT_EQ(from_teichmuller_digits(digits), a) << ring.name() << " " << a.to_string();
    }
  }
  Rng rng(7);
  for (auto [p, r, s] : {std::tuple{2ull, 8u, 5u}, std::tuple{3ull, 5u, 4u}, std::tuple{5ull, 3u, 3u}}) {
    const auto& ring = GaloisRing::get(p, r, s);
    for (int i = 0; i < 200; ++i) {
      const auto a = random_element(ring, rng);
      EXPECT_EQ(from_teichmuller_digits(teichmuller_digits(a)), a);
    }
  }
}

TEST(GaloisRing, FrobeniusExamplesAndProperties) {
  const auto& gr42 = GaloisRing::get(2, 2, 2);
  EXPECT_EQ(conjugate(gr42.x()), gr42.x() * gr42.x());
  EXPECT_EQ(generalized_frobenius(gr42.x(), 1), gr42.x() * gr42.x());
  Rng rng(11);
  for (auto [p, r, s] : {std::tuple{2ull, 2u, 2u}, std::tuple{2ull, 3u, 4u}, std::tuple{3ull, 2u, 3u},
                         std::tuple{5ull, 2u, 2u}, std::tuple{2ull, 4u, 6u}}) {
    const auto& ring = GaloisRing::get(p, r, s);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_element(ring, rng);
      const auto b = random_element(ring, rng);
      EXPECT_EQ(generalized_frobenius(a, s), a);
      for (std::uint64_t k = 0; k <= s; ++k) {
        EXPECT_EQ(generalized_frobenius(a + b, k),
                  generalized_frobenius(a, k) + generalized_frobenius(b, k));
        EXPECT_EQ(generalized_frobenius(a * b, k),
                  generalized_frobenius(a, k) * generalized_frobenius(b, k));
        EXPECT_EQ(generalized_frobenius(a, k + s), generalized_frobenius(a, k));
      }
      if (s % 2 == 0) EXPECT_EQ(conjugate(conjugate(a)), a);
    }
  }
}

TEST(GaloisRing, EmbedExamplesAndProperties) {
  const auto& z4 = GaloisRing::get(2, 2, 1);
  const auto& gr42 = GaloisRing::get(2, 2, 2);
  EXPECT_EQ(embed(z4.from_integer(3), gr42), gr42.from_integer(3));
  EXPECT_TRUE(embed(z4.zero(), gr42).is_zero());
  EXPECT_TRUE(embed(z4.one(), gr42).is_one());
  EXPECT_THROW(embed(gr42.one(), GaloisRing::get(2, 2, 3)), std::invalid_argument);

  for (auto [p, r, s, t] : {std::tuple{2ull, 2u, 2u, 2u}, std::tuple{2ull, 2u, 1u, 3u},
                            std::tuple{3ull, 2u, 1u, 2u}, std::tuple{2ull, 3u, 2u, 3u}}) {
    const auto& small = GaloisRing::get(p, r, s);
    const auto& big = GaloisRing::get(p, r, s * t);
    const auto xi = small.teichmuller_generator();
    EXPECT_TRUE(embed(xi, big).pow(checked_pow(p, s) - 1).is_one());
    const auto n = static_cast<std::uint64_t>(small.size());
    std::set<std::string> images;
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto a = element_from_code(small, i);
      const auto ea = embed(a, big);
      images.insert(ea.to_string());
      EXPECT_EQ(pull_back(ea, small), a);
      // Images are fixed by the Frobenius of the small ring's degree.
      EXPECT_EQ(generalized_frobenius(ea, s), ea);
      for (std::uint64_t j = 0; j < n; j += 1 + n / 16) {
        const auto b = element_from_code(small, j);
        EXPECT_EQ(embed(a * b, big), ea * embed(b, big));
        EXPECT_EQ(embed(a + b, big), ea + embed(b, big));
      }
    }
    EXPECT_EQ(images.size(), n);
  }
  EXPECT_THROW(pull_back(gr42.x(), z4), std::domain_error);
}

TEST(GaloisRing, RootsOfUnity) {
  EXPECT_TRUE(root_of_unity(GaloisRing::get(2, 2, 2), 1).is_one());
  const auto& gr42 = GaloisRing::get(2, 2, 2);
  EXPECT_EQ(root_of_unity(gr42, 3), gr42.teichmuller_generator());
  EXPECT_EQ(root_of_unity(GaloisRing::get(3, 2, 1), 2), GaloisRing::get(3, 2, 1).from_integer(8));
  EXPECT_THROW(root_of_unity(gr42, 5), std::invalid_argument);
  for (auto [p, r, s] : {std::tuple{2ull, 3u, 4u}, std::tuple{3ull, 2u, 2u}, std::tuple{5ull, 2u, 2u}}) {
    const auto& ring = GaloisRing::get(p, r, s);
    const std::uint64_t n = checked_pow(p, s) - 1;
    for (auto m : divisors(n)) {
      const auto z = root_of_unity(ring, m);
      EXPECT_TRUE(z.pow(m).is_one());
      for (std::uint64_t k = 1; k < m; ++k) EXPECT_FALSE(z.pow(k).is_one()) << m << " " << k;
    }
  }
}

}  // namespace
}  // namespace sdc
