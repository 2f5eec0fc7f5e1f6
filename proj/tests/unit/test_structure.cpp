#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

#include "support.hpp"

using namespace compa;
using testing_support::corpus;

namespace {

std::vector<std::uint64_t> factor_orders(const FactorList& factors) {
  std::vector<std::uint64_t> out;
  for (const auto& f : factors) out.push_back(f.order.convert_to<std::uint64_t>());
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::vector<Point>> element_set(const PermGroup& g) {
  std::set<std::vector<Point>> out;
  for (const auto& p : elements(g)) out.emplace(p.images().begin(), p.images().end());
  return out;
}

// PSL(3,4) on the 21 points of the projective plane over GF(4).
PermGroup psl34() {
  // GF(4) elements 0,1,w,w^2 as 0..3; addition is XOR.
  static constexpr std::array<std::array<std::uint32_t, 4>, 4> mul{
      {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
  static constexpr std::array<std::uint32_t, 4> inverse{0, 1, 3, 2};
  using Vec = std::array<std::uint32_t, 3>;
  auto normalize = [](Vec v) {
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    const auto s = inverse[v[lead]];
    for (auto& c : v) c = mul[c][s];
    return v;
  };
  std::vector<Vec> points;
  std::map<Vec, Point> index;
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      for (std::uint32_t c = 0; c < 4; ++c) {
        const Vec v{a, b, c};
        if (v == Vec{0, 0, 0} || normalize(v) != v) continue;
        index[v] = static_cast<Point>(points.size());
        points.push_back(v);
      }
    }
  }
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (std::uint32_t a : {1u, 2u}) {
        // v -> v + a v_i e_j
        std::vector<Point> images;
        for (const auto& v : points) {
          Vec w = v;
          w[j] ^= mul[a][v[i]];
          images.push_back(index.at(normalize(w)));
        }
        gens.emplace_back(std::move(images));
      }
    }
  }
  return PermGroup(points.size(), gens);
}

}  // namespace

TEST(Structure, CompositionFactorExamples) {
  EXPECT_EQ(factor_orders(composition_factors(build(GroupSpec::symmetric(4)))),
            (std::vector<std::uint64_t>{2, 2, 2, 3}));
  const auto a5 = composition_factors(build(GroupSpec::alternating(5)));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_FALSE(a5[0].is_abelian());
  EXPECT_EQ(a5[0].order, 60);
  EXPECT_EQ(a5[0].to_string(), "simple(60)");
  EXPECT_EQ(factor_orders(composition_factors(build(GroupSpec::cyclic(6)))), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_TRUE(composition_factors(PermGroup::trivial(3)).empty());
}

TEST(Structure, CompASets) {
  EXPECT_EQ(comp_a(build(GroupSpec::symmetric(4))), (PrimeSet{2, 3}));
  EXPECT_TRUE(comp_a(build(GroupSpec::alternating(5))).empty());
  EXPECT_EQ(comp_a(build(GroupSpec::cyclic(12))), (PrimeSet{2, 3}));
  EXPECT_EQ(comp_a(build(GroupSpec::symmetric(5))), (PrimeSet{2}));
}

TEST(Structure, MinimalNormalSubgroups) {
  auto mins = minimal_normal_subgroups(build(GroupSpec::symmetric(4)));
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0].order(), 4);
  EXPECT_EQ(socle(build(GroupSpec::symmetric(4))).order(), 4);
  mins = minimal_normal_subgroups(build(GroupSpec::symmetric(3)));
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0].order(), 3);
  const auto a5 = build(GroupSpec::alternating(5));
  mins = minimal_normal_subgroups(a5);
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0].order(), 60);
  EXPECT_FALSE(proper_normal_subgroup(a5));
  mins = minimal_normal_subgroups(build(GroupSpec::cyclic(6)));
  ASSERT_EQ(mins.size(), 2u);
  EXPECT_EQ(mins[0].order(), 2);
  EXPECT_EQ(mins[1].order(), 3);
}

TEST(Structure, PiAndExponent) {
  EXPECT_EQ(pi_product(build(GroupSpec::symmetric(3))), 6);
  EXPECT_EQ(exponent(build(GroupSpec::symmetric(3))), 6);
  EXPECT_EQ(pi_product(build(GroupSpec::cyclic(4))), 2);
  EXPECT_EQ(exponent(build(GroupSpec::cyclic(4))), 4);
  const auto f21 = build(GroupSpec::frobenius(7, 3));
  EXPECT_EQ(pi_product(f21), 21);
  EXPECT_EQ(exponent(f21), 21);
  std::uint64_t lcm = 1;
  for (const auto& p : testing_support::oracle_elements(f21)) lcm = std::lcm(lcm, oracle::perm_order(p));
  EXPECT_EQ(lcm, 21u);
  EXPECT_THROW(exponent(build(GroupSpec::symmetric(9)), Limits{1000, kDefaultOrderLimit}), ResourceLimit);
}

TEST(Structure, SimpleOrderCollisionIsSeparated) {
  const auto a8 = composition_factors(build(GroupSpec::alternating(8)));
  const auto l34 = composition_factors(psl34());
  ASSERT_EQ(a8.size(), 1u);
  ASSERT_EQ(l34.size(), 1u);
  EXPECT_EQ(a8[0].order, 20160);
  EXPECT_EQ(l34[0].order, 20160);
  ASSERT_TRUE(a8[0].refinement);
  ASSERT_TRUE(l34[0].refinement);
  EXPECT_NE(a8[0], l34[0]);
}

TEST(Structure, SocleCheckExamples) {
  auto r = check_socle_primitive(build(GroupSpec::frobenius(5, 4)));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.witness["quotient_order"], "4");
  EXPECT_EQ(r.witness["quotient_bound"], "5");
  r = check_socle_primitive(build(GroupSpec::symmetric(4)));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.witness["rank"], 2);
  EXPECT_EQ(r.witness["quotient_order"], "6");
  EXPECT_EQ(r.witness["quotient_bound"], "16");
  r = check_socle_primitive(build(GroupSpec::alternating(5)));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.witness["abelian"], false);
  EXPECT_THROW(check_socle_primitive(build(GroupSpec::cyclic(4))), InvalidArgument);
}

TEST(Structure, SubdirectExamples) {
  const auto diag = testing_support::group(4, {{{0, 1}, {2, 3}}});
  const std::vector<Point> first{0, 1}, second{2, 3};
  auto r = check_subdirect(diag, first, second);
  EXPECT_EQ(r.verdict, Verdict::pass);
  const auto full = testing_support::group(4, {{{0, 1}}, {{2, 3}}});
  r = check_subdirect(full, first, second);
  EXPECT_EQ(r.verdict, Verdict::pass);
  const auto not_onto = testing_support::group(4, {{{0, 1}}});
  const auto c2 = testing_support::group(2, {{{0, 1}}});
  EXPECT_THROW(check_subdirect(not_onto, first, second, {}, &c2, &c2), InvalidArgument);
  EXPECT_THROW(check_subdirect(not_onto, first, std::vector<Point>{2}), InvalidArgument);
}

TEST(Structure, SubdirectInstancesAllHold) {
  const auto instances = subdirect_instances();
  EXPECT_GE(instances.size(), 20u);
  for (const auto& s : instances) {
    const auto r = check_subdirect(s.group, s.first, s.second);
    EXPECT_EQ(r.verdict, Verdict::pass) << s.name << " " << r.witness.dump();
  }
}

TEST(StructureOracle, CompositionFactorsMatchNormalSubgroupLattice) {
  std::size_t checked = 0;
  for (const auto& e : corpus()) {
    if (e.group.order() > 200) continue;
    const auto all = testing_support::oracle_elements(e.group);
    EXPECT_EQ(factor_orders(composition_factors(e.group)), oracle::composition_factor_orders(all))
        << e.spec.name();
    EXPECT_EQ(comp_a(e.group), oracle::comp_a(all)) << e.spec.name();
    ++checked;
  }
  EXPECT_GT(checked, 40u);
}

TEST(StructureOracle, MinimalNormalSubgroupsMatchClosureScan) {
  for (const auto& e : corpus()) {
    if (e.group.order() > 200) continue;
    const auto all = testing_support::oracle_elements(e.group);
    auto want = oracle::minimal_normal_subgroups(all);
    std::vector<oracle::ElementSet> got;
    for (const auto& m : minimal_normal_subgroups(e.group)) {
      oracle::ElementSet s;
      for (const auto& p : element_set(m)) s.insert(oracle::Perm(p.begin(), p.end()));
      got.push_back(std::move(s));
    }
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want) << e.spec.name();
  }
}

TEST(StructureOracle, DerivedSubgroupMatchesCommutatorClosure) {
  for (const auto& e : corpus()) {
    if (e.group.order() > 1000) continue;
    const auto want = oracle::derived_subgroup(testing_support::oracle_elements(e.group));
    EXPECT_EQ(derived_subgroup(e.group).order(), want.size()) << e.spec.name();
  }
}

TEST(StructureProperties, JordanHolderStableUnderReversedScan) {
  for (const auto& e : corpus()) {
    if (e.group.order() > 10'000) continue;
    EXPECT_EQ(composition_factors(e.group, {}, ScanOrder::forward),
              composition_factors(e.group, {}, ScanOrder::reverse))
        << e.spec.name();
  }
}

TEST(StructureProperties, FactorOrdersMultiplyToGroupOrder) {
  for (const auto& e : corpus()) {
    const auto series = composition_series(e.group);
    BigInt product = 1;
    for (const auto& f : series.factors) {
      product *= f.order;
      if (f.is_abelian()) EXPECT_TRUE(is_prime(f.order.convert_to<std::uint64_t>()));
    }
    EXPECT_EQ(product, e.group.order()) << e.spec.name();
    ASSERT_EQ(series.chain.size(), series.factors.size() + 1);
    for (std::size_t i = 0; i + 1 < series.chain.size(); ++i) {
      EXPECT_TRUE(is_normal(series.chain[i], series.chain[i + 1])) << e.spec.name();
    }
    EXPECT_LE(std::ldexp(1.0, static_cast<int>(comp_a(e.group).size())), e.group.order().convert_to<double>());
  }
}

TEST(StructureProperties, SocleAndMinimalNormalSubgroups) {
  for (const auto& e : corpus()) {
    const auto soc = socle(e.group);
    EXPECT_TRUE(is_normal(e.group, soc)) << e.spec.name();
    if (is_primitive(e.group)) {
      for (const auto& m : minimal_normal_subgroups(e.group)) EXPECT_TRUE(is_transitive(m)) << e.spec.name();
    }
  }
}

TEST(StructureProperties, ExponentSharesEveryPrime) {
  for (const auto& e : corpus()) {
    const auto exp = exponent(e.group);
    EXPECT_EQ(e.group.order() % exp, 0) << e.spec.name();
    for (auto p : order_prime_divisors(e.group)) EXPECT_EQ(exp % p, 0) << e.spec.name();
  }
}
