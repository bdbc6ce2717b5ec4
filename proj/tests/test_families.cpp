#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace symcone;

namespace {

std::vector<SetFunction> corpus(int max_n) {
  std::vector<SetFunction> out;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 0; m <= n; ++m) out.push_back(uniform(m, n));
  for (int n = 2; n <= max_n; ++n)
    for (const auto& f : family_Un(n)) out.push_back(f);
  for (int n1 = 2; n1 + 2 <= max_n; ++n1)
    for (int n2 = 2; n1 + n2 <= max_n; ++n2) out.push_back(gap_witness(n1, n2));
  return out;
}

std::vector<std::vector<int>> images_of(const ExpansionMap& phi) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= phi.source_size(); ++i) out.push_back(elements_of(phi.image(i)));
  return out;
}

}  // namespace

TEST(Uniform, Examples) {
  EXPECT_EQ(uniform(2, 4)(0xD), 2);
  auto card = uniform(4, 4);
  for (SubsetMask a = 0; a < 16; ++a) EXPECT_EQ(card(a), cardinality(a));
  auto zero = uniform(0, 3);
  for (SubsetMask a = 0; a < 8; ++a) EXPECT_EQ(zero(a), 0);
  EXPECT_THROW(uniform(3, 2), ArgumentError);
  EXPECT_TRUE(is_matroid(uniform(2, 5)));
}

TEST(U1Loop, Examples) {
  auto u = u1_loop(4);
  EXPECT_EQ(u(0x5), 1);
  EXPECT_EQ(u(0xE), 0);
  EXPECT_TRUE(is_matroid(u));
  auto s = to_sym(u, Partition::parse("[1,3]"));
  EXPECT_EQ(s.values(), (RatVector{0, 0, 0, 0, 1, 1, 1, 1}));
}

TEST(Ukm, ClosedFormOnEveryTuple) {
  for (int n = 2; n <= 6; ++n) {
    auto p = Partition::consecutive({1, n - 1});
    for (const auto& tag : family_Un_tags(n)) {
      if (tag.kind != FamilyTag::Kind::Ukm) continue;
      auto s = to_sym(tag.build(), p);
      for (int j1 = 0; j1 <= 1; ++j1)
        for (int j2 = 0; j2 <= n - 1; ++j2)
          EXPECT_EQ(s.at({j1, j2}), oracle::u_km_closed(tag.params[0], tag.params[1], n, j1, j2)) << tag.to_string();
    }
  }
}

TEST(Ukm, SpecialCases) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      EXPECT_EQ(u_km(k, n, n), uniform(k, n));
      auto loop = u_km(k, n - 1, n);
      EXPECT_EQ(loop(element_bit(1)), 0);
      EXPECT_EQ(restrict(loop, GroundSet(n).full() & ~SubsetMask{1}), uniform(k, n - 1));
    }
  auto p = Partition::parse("[1,3]");
  auto s = to_sym(u_km(2, 5, 4), p);
  for (int j1 = 0; j1 <= 1; ++j1)
    for (int j2 = 0; j2 <= 3; ++j2) EXPECT_EQ(s.at({j1, j2}), std::min(2, 2 * j1 + j2));
  EXPECT_THROW(u_km(1, 2, 4), ArgumentError);
  EXPECT_THROW(u_km(4, 5, 4), ArgumentError);
  EXPECT_THROW(u_km(1, 6, 4), ArgumentError);
}

TEST(FamilyUn, SizesOrderAndMembership) {
  for (int n = 2; n <= 6; ++n) {
    auto tags = family_Un_tags(n);
    EXPECT_EQ(tags.size(), static_cast<std::size_t>(1 + (n - 1) + n * (n - 1) / 2));
    EXPECT_EQ(tags.front().kind, FamilyTag::Kind::U1Loop);
    auto p = Partition::consecutive({1, n - 1});
    auto cone = psi_p_hrep(p);
    for (const auto& f : family_Un(n)) {
      EXPECT_TRUE(is_p_symmetric(f, p));
      EXPECT_TRUE(is_polymatroid(f));
      EXPECT_TRUE(f.is_integral());
      EXPECT_TRUE(cone.contains(to_sym(f, p).coordinates()));
    }
  }
  EXPECT_EQ(family_Un(2).size(), 3u);
  EXPECT_EQ(family_Un(4).size(), 10u);
}

TEST(GapWitness, Shape) {
  auto h = gap_witness(2, 2);
  EXPECT_EQ(h(0x3), 4);
  EXPECT_EQ(h(0xC), 3);
  EXPECT_EQ(h(0x5), 3);
  EXPECT_EQ(h(0x1), 2);
  EXPECT_EQ(h(0x7), 4);
  EXPECT_TRUE(is_polymatroid(h));
  auto r = restrict(gap_witness(3, 3), 0x1B);  // {1,2,4,5}
  EXPECT_EQ(r, h);
  EXPECT_EQ(zhang_yeung_form(r.ground(), {1, 2, 3, 4}).evaluate(r), -1);
  EXPECT_THROW(gap_witness(1, 3), ArgumentError);
  for (int n1 = 2; n1 <= 4; ++n1)
    for (int n2 = 2; n1 + n2 <= 7; ++n2) EXPECT_TRUE(is_polymatroid(gap_witness(n1, n2)));
}

TEST(FreeExpansion, MatchesBruteForceAndRoundTrips) {
  for (const auto& h : corpus(4)) {
    auto phi = ExpansionMap::canonical(h);
    auto g = free_expansion(h, phi);
    EXPECT_EQ(g, oracle::free_expansion_brute(h, images_of(phi), phi.target_size()));
    EXPECT_TRUE(is_matroid(g));
    EXPECT_EQ(factor(g, phi), h);
  }
}

TEST(FreeExpansion, MatroidOnLargerCorpus) {
  for (const auto& h : corpus(5)) {
    auto phi = ExpansionMap::canonical(h);
    if (phi.target_size() > 10) continue;
    EXPECT_TRUE(is_matroid(free_expansion(h, phi)));
  }
}

TEST(FreeExpansion, OrderOfImagesDoesNotMatter) {
  auto h = gap_witness(2, 2);
  // Reverse the consecutive blocks.
  ExpansionMap phi(8, {0xC0, 0x30, 0x0C, 0x03});
  auto g = free_expansion(h, phi);
  EXPECT_TRUE(is_matroid(g));
  EXPECT_EQ(factor(g, phi), h);
}

TEST(FreeExpansion, VamosMatroid) {
  auto h = gap_witness(2, 2);
  auto g = free_expansion(h, ExpansionMap::canonical(h));
  EXPECT_EQ(g.n(), 8);
  EXPECT_EQ(g(g.ground().full()), 4);
  EXPECT_TRUE(is_matroid(g));
  for (SubsetMask a = 0; a < 256; ++a) EXPECT_EQ(g(a), oracle::vamos_rank(a)) << a;
}

TEST(FreeExpansion, ZeroSingletonIsDropped) {
  GroundSet g2(2);
  SetFunction h(g2, {0, 0, 1, 1});
  auto phi = ExpansionMap::canonical(h);
  EXPECT_EQ(phi.target_size(), 1);
  EXPECT_EQ(phi.image(1), SubsetMask{0});
  EXPECT_EQ(free_expansion(h, phi), uniform(1, 1));
}

TEST(FreeExpansion, Preconditions) {
  SetFunction half(GroundSet(1), {0, Rational(1, 2)});
  EXPECT_THROW(free_expansion(half, ExpansionMap(1, {1})), PreconditionError);
  EXPECT_THROW(free_expansion(uniform(1, 2), ExpansionMap(3, {0x3, 0x4})), PreconditionError);
  EXPECT_THROW(ExpansionMap(3, {0x3, 0x2}), ArgumentError);
}

TEST(Factor, UniformUnderPhiIsUkm) {
  for (int n = 2; n <= 5; ++n)
    for (int m = n - 1; m <= 2 * n - 2; ++m)
      for (int k = std::max(1, m - n + 1); k <= n - 1; ++k)
        EXPECT_EQ(factor(uniform(k, m), ExpansionMap::phi_mn(m, n)), u_km(k, m, n));
  auto f = gap_witness(2, 2);
  ExpansionMap swap(4, {0x2, 0x1, 0x4, 0x8});
  auto r = factor(f, swap);
  for (SubsetMask a = 0; a < 16; ++a) EXPECT_EQ(r(a), f(swap.image_of(a)));
}

TEST(FamilyTag, ParseAndBuild) {
  EXPECT_EQ(FamilyTag::parse("uniform:2,4").build(), uniform(2, 4));
  EXPECT_EQ(FamilyTag::parse("ukm:2,5,4").build(), u_km(2, 5, 4));
  EXPECT_EQ(FamilyTag::parse("u1loop:3").build(), u1_loop(3));
  EXPECT_EQ(FamilyTag::parse("gap:2,3").build(), gap_witness(2, 3));
  EXPECT_EQ(FamilyTag::parse("ukm:2,5,4").to_string(), "ukm:2,5,4");
  EXPECT_THROW(FamilyTag::parse("ukm:2,5"), ArgumentError);
  EXPECT_THROW(FamilyTag::parse("foo:1"), ArgumentError);
  EXPECT_THROW(FamilyTag::parse("uniform:5,4"), ArgumentError);
  EXPECT_THROW(FamilyTag::parse("gap:1,3"), ArgumentError);
}
