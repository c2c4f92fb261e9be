#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "checks.hpp"
#include "sdc/counting.hpp"
#include "sdc/ideals.hpp"

namespace sdc {
namespace {

std::uint64_t brute(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& g, CountKind kind) {
  const GroupRing ring(GaloisRing::get(p, r, s), g);
  if (kind == CountKind::All) return enumerate_ideals(ring).size();
  return self_dual_ideals(ring, kind == CountKind::Euclidean ? Duality::Euclidean : Duality::Hermitian)
      .size();
}

TEST(Counting, ClosedFormExamples) {
  EXPECT_EQ(nc_p2(2, 1, 0), BigInt(3));
  EXPECT_EQ(nc_p2(2, 1, 1), BigInt(7));
  EXPECT_EQ(nc_p2(2, 1, 2), BigInt(23));
  EXPECT_EQ(nc_p2(3, 1, 1), BigInt(16));
  EXPECT_EQ(nc_p2(2, 2, 1), BigInt(9));
  EXPECT_EQ(nec_p2(2, 1, 0), BigInt(1));
  EXPECT_EQ(nec_p2(2, 1, 1), BigInt(1));
  EXPECT_EQ(nec_p2(2, 1, 2), BigInt(3));
  EXPECT_EQ(nec_p2(3, 1, 1), BigInt(2));
  EXPECT_EQ(nhc_p2(2, 2, 1), BigInt(3));
  EXPECT_EQ(nhc_p2(3, 2, 1), BigInt(4));
  EXPECT_THROW(nhc_p2(2, 1, 1), std::invalid_argument);
  EXPECT_THROW(nc_p2(4, 1, 1), std::invalid_argument);
}

TEST(Counting, ClosedFormsMatchEnumeration) {
  for (auto [p, s, a] : {std::tuple{2ull, 1u, 1u}, std::tuple{2ull, 1u, 2u}, std::tuple{2ull, 1u, 3u},
                         std::tuple{3ull, 1u, 1u}, std::tuple{5ull, 1u, 1u}, std::tuple{2ull, 2u, 1u},
                         std::tuple{2ull, 2u, 2u}}) {
    const auto g = AbelianGroup::parse("Z" + std::to_string(checked_pow(p, a)));
    if (!within_exhaustive_bound(GroupRing(GaloisRing::get(p, 2, s), g))) continue;
    EXPECT_EQ(nc_p2(p, s, a), BigInt(brute(p, 2, s, g, CountKind::All))) << p << " " << s << " " << a;
    EXPECT_EQ(nec_p2(p, s, a), BigInt(brute(p, 2, s, g, CountKind::Euclidean)));
    if (s % 2 == 0) EXPECT_EQ(nhc_p2(p, s, a), BigInt(brute(p, 2, s, g, CountKind::Hermitian)));
  }
}

TEST(Counting, HermitianOddPrimeAgainstEnumeration) {
  // GR(9,2)[Z3] has 3^12 elements, above the default bound.
  setenv(kExhaustiveBoundVariable, "600000", 1);
  const auto count = brute(3, 2, 2, AbelianGroup::parse("Z3"), CountKind::Hermitian);
  unsetenv(kExhaustiveBoundVariable);
  EXPECT_EQ(nhc_p2(3, 2, 1), BigInt(count));
}

TEST(Counting, ExistenceExamples) {
  const auto z3 = AbelianGroup::parse("Z3");
  EXPECT_FALSE(exists_self_dual(3, 1, 1, z3, Duality::Euclidean));
  EXPECT_TRUE(exists_self_dual(2, 2, 1, z3, Duality::Euclidean));
  EXPECT_TRUE(exists_self_dual(2, 1, 1, AbelianGroup::parse("Z2xZ3"), Duality::Euclidean));
  EXPECT_FALSE(exists_self_dual(2, 1, 1, z3, Duality::Euclidean));
  EXPECT_THROW(exists_self_dual(2, 2, 1, z3, Duality::Hermitian), std::invalid_argument);
  EXPECT_TRUE(is_principal_ideal_group_ring(2, 1, AbelianGroup::parse("Z4xZ3")));
  EXPECT_FALSE(is_principal_ideal_group_ring(2, 1, AbelianGroup::parse("Z2xZ2")));
  EXPECT_FALSE(is_principal_ideal_group_ring(2, 2, AbelianGroup::parse("Z2")));
  EXPECT_TRUE(is_principal_ideal_group_ring(2, 2, z3));
}

TEST(Counting, ExistenceAgreesWithEnumeration) {
  for (const auto& ring : testing::small_rings(4096)) {
    for (auto d : {Duality::Euclidean, Duality::Hermitian}) {
      if (d == Duality::Hermitian && ring.s % 2 != 0) continue;
      const auto kind = d == Duality::Euclidean ? CountKind::Euclidean : CountKind::Hermitian;
      EXPECT_EQ(exists_self_dual(ring.p, ring.r, ring.s, ring.group, d),
                brute(ring.p, ring.r, ring.s, ring.group, kind) > 0)
          << ring.p << " " << ring.r << " " << ring.s << " " << ring.group.to_string();
    }
  }
}

TEST(Counting, ProviderDomains) {
  const TrivialProvider trivial;
  const ClosedFormProvider closed;
  const BruteForceProvider brute_force;
  const auto z2 = AbelianGroup::parse("Z2");
  const auto z2z2 = AbelianGroup::parse("Z2xZ2");
  EXPECT_EQ(trivial.count(BaseCount::NA, 2, 3, 1, AbelianGroup()), BigInt(4));
  EXPECT_EQ(trivial.count(BaseCount::NEA, 2, 3, 1, AbelianGroup()), BigInt(0));
  EXPECT_EQ(trivial.count(BaseCount::NHA, 2, 4, 2, AbelianGroup()), BigInt(1));
  EXPECT_THROW(trivial.count(BaseCount::NA, 2, 2, 1, z2), ProviderDomainError);
  EXPECT_THROW(closed.count(BaseCount::NA, 2, 3, 1, z2), ProviderDomainError);
  EXPECT_THROW(closed.count(BaseCount::NA, 2, 2, 1, z2z2), ProviderDomainError);
  EXPECT_THROW(closed.count(BaseCount::NHA, 2, 2, 1, z2), ProviderDomainError);
  EXPECT_THROW(brute_force.count(BaseCount::NA, 2, 2, 1, AbelianGroup::parse("Z2xZ2xZ2xZ2xZ2")),
               ProviderDomainError);
  EXPECT_EQ(brute_force.count(BaseCount::NA, 2, 2, 1, z2z2),
            BigInt(brute(2, 2, 1, z2z2, CountKind::All)));

  const AutoProvider automatic;
  const AutoProvider formula(false);
  EXPECT_EQ(automatic.choose(BaseCount::NA, 2, 2, 1, z2)->name(), "closed");
  EXPECT_EQ(automatic.choose(BaseCount::NA, 2, 3, 1, AbelianGroup())->name(), "trivial");
  EXPECT_EQ(automatic.choose(BaseCount::NA, 2, 2, 1, z2z2)->name(), "brute");
  EXPECT_EQ(formula.choose(BaseCount::NA, 2, 2, 1, z2z2), nullptr);
  EXPECT_THROW(formula.count(BaseCount::NA, 2, 2, 1, z2z2), ProviderDomainError);
  for (const auto* name : {"auto", "formula", "trivial", "closed", "brute"}) {
    EXPECT_EQ(make_provider(name)->name(), name);
  }
  EXPECT_THROW(make_provider("oracle"), std::invalid_argument);
}

TEST(Counting, TrivialSylowMatchesSemisimple) {
  const TrivialProvider trivial;
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (unsigned r : {1u, 2u, 3u, 4u}) {
      for (std::uint64_t n = 1; n <= 50; ++n) {
        if (n % p == 0) continue;
        for (const auto& g : abelian_groups_of_order(n)) {
          EXPECT_EQ(nea_general(p, r, 1, g, AbelianGroup(), trivial).count, nea_semisimple(p, r, 1, g))
              << p << " " << r << " " << g.to_string();
          EXPECT_EQ(nha_general(p, r, 2, g, AbelianGroup(), trivial).count, nha_semisimple(p, r, 2, g))
              << p << " " << r << " " << g.to_string();
        }
      }
    }
  }
}

TEST(Counting, SemisimpleMatchesDecomposition) {
  for (std::uint64_t p : {2ull, 3ull}) {
    for (unsigned r : {1u, 2u, 4u}) {
      for (std::uint64_t n = 1; n <= 30; ++n) {
        if (n % p == 0) continue;
        // The decomposition works in GR(p^r, 2 ord_n(p^2)), which must have p^s <= 2^40.
        if (n > 1 && 2 * multiplicative_order(p * p % n, n) * std::log2(p) > 40) continue;
        for (const auto& g : abelian_groups_of_order(n)) {
          EXPECT_EQ(nea_semisimple(p, r, 1, g),
                    enumerate_semisimple_selfdual(p, r, 1, g, Duality::Euclidean, 0).count);
          EXPECT_EQ(nha_semisimple(p, r, 2, g),
                    enumerate_semisimple_selfdual(p, r, 2, g, Duality::Hermitian, 0).count);
        }
      }
    }
  }
}

TEST(Counting, LengthNMatchesGeneralFormula) {
  const ClosedFormProvider closed;
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (unsigned s : {1u, 2u}) {
      for (std::uint64_t n = 1; n <= 120; ++n) {
        const auto split = sylow_decompose(AbelianGroup::parse("Z" + std::to_string(n == 1 ? 2 : n)), p);
        const auto complement = n == 1 ? AbelianGroup() : split.complement;
        const auto sylow = n == 1 ? AbelianGroup() : split.sylow;
        EXPECT_EQ(nec_length_n(p, s, n).count, nea_general(p, 2, s, complement, sylow, closed).count)
            << p << " " << s << " " << n;
        EXPECT_EQ(nc_length_n(p, s, n).count,
                  count_general(p, 2, s, complement, sylow, CountKind::All, closed).count);
        if (s % 2 == 0) {
          EXPECT_EQ(nhc_length_n(p, s, n).count, nha_general(p, 2, s, complement, sylow, closed).count);
        }
      }
    }
  }
}

TEST(Counting, GeneralFormulaMatchesEnumeration) {
  const auto formula = make_provider("formula");
  std::size_t compared = 0;
  for (const auto& ring : testing::small_rings(4096)) {
    for (auto kind : {CountKind::All, CountKind::Euclidean, CountKind::Hermitian}) {
      if (kind == CountKind::Hermitian && ring.s % 2 != 0) continue;
      CountReport report;
      try {
        report = count_abelian_codes(ring.p, ring.r, ring.s, ring.group, kind, *formula);
      } catch (const ProviderDomainError&) {
        continue;
      }
      EXPECT_EQ(report.count, BigInt(brute(ring.p, ring.r, ring.s, ring.group, kind)))
          << ring.p << " " << ring.r << " " << ring.s << " " << ring.group.to_string() << " "
          << to_string(kind);
      ++compared;
    }
  }
  EXPECT_GT(compared, 100u);
}

TEST(Counting, BruteProviderExtendsTheFormula) {
  // Non-cyclic Sylow subgroups have no closed form; the brute provider fills in.
  const auto automatic = make_provider("auto");
  for (const auto* spec : {"Z2xZ6", "Z2xZ2xZ3"}) {
    const auto g = AbelianGroup::parse(spec);
    const auto report = count_abelian_codes(2, 1, 1, g, CountKind::Euclidean, *automatic);
    EXPECT_EQ(report.count, BigInt(brute(2, 1, 1, g, CountKind::Euclidean))) << spec;
    EXPECT_NE(report.providers.find("brute"), std::string::npos);
  }
}

TEST(Counting, ReportBreakdown) {
  const auto report = nec_length_n(2, 1, 14);
  EXPECT_EQ(report.complement, "Z7");
  EXPECT_EQ(report.sylow, "Z2");
  BigInt product = 1;
  for (const auto& term : report.breakdown) product *= term.factor;
  EXPECT_EQ(product, report.count);
  EXPECT_EQ(parse_count_kind("none"), CountKind::All);
  EXPECT_THROW(parse_count_kind("both"), std::invalid_argument);
}

}  // namespace
}  // namespace sdc
