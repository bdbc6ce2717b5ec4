#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace symcone;

namespace {

SetFunction vamos_point() {
  GroundSet g(4);
  SetFunction h(g);
  for (SubsetMask a = 1; a <= g.full(); ++a) {
    int c = cardinality(a);
    h.set(a, c == 1 ? 2 : c == 2 ? (a == 0x3 ? 4 : 3) : 4);
  }
  return h;
}

}  // namespace

TEST(Number, RationalTextRoundTrip) {
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational("3/-6"), Rational(-1, 2));
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(parse_rational(" -3/2 "), Rational(-3, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), ArgumentError);
  EXPECT_THROW(parse_rational("x"), ArgumentError);
  EXPECT_THROW(parse_rational("1.5"), ArgumentError);
}

TEST(Number, PrimitiveKeepsDirection) {
  EXPECT_EQ(primitive(RatVector{Rational(1, 2), Rational(-3, 4), 0}), (IntVector{2, -3, 0}));
  EXPECT_EQ(primitive(IntVector{0, 0}), (IntVector{0, 0}));
}

TEST(GroundSet, DenseCap) {
  EXPECT_NO_THROW(GroundSet{kDenseCap});
  EXPECT_THROW(GroundSet(kDenseCap + 1), UnsupportedError);
  EXPECT_THROW(GroundSet(-1), ArgumentError);
}

TEST(SetFunction, EmptySetValueMustVanish) {
  RatVector v(4, 1);
  EXPECT_THROW(SetFunction(GroundSet(2), v), ArgumentError);
  v[0] = 0;
  EXPECT_NO_THROW(SetFunction(GroundSet(2), v));
  EXPECT_THROW(SetFunction(GroundSet(2), RatVector(3)), ArgumentError);
}

TEST(ElementalForms, CountsMatchDirectEnumeration) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(static_cast<long long>(elemental_forms(GroundSet(n)).size()), oracle::elemental_count(n)) << n;
    EXPECT_EQ(static_cast<long long>(elemental_count(n)), oracle::elemental_count(n)) << n;
  }
  EXPECT_EQ(elemental_forms(GroundSet(4)).size(), 28u);
  EXPECT_EQ(elemental_forms(GroundSet(3)).size(), 9u);
  EXPECT_EQ(elemental_forms(GroundSet(1)).size(), 1u);
}

TEST(ElementalForms, PairFormShape) {
  GroundSet g(3);
  auto f = elemental_form(g, FacetId{false, 0x3, 0x4});
  EXPECT_EQ(f.coefficients().size(), 4u);
  EXPECT_EQ(f.coefficients().at(0x5), 1);
  EXPECT_EQ(f.coefficients().at(0x6), 1);
  EXPECT_EQ(f.coefficients().at(0x4), -1);
  EXPECT_EQ(f.coefficients().at(0x7), -1);
  auto m = elemental_form(g, FacetId{true, 0x2, 0});
  EXPECT_EQ(m.coefficients().at(0x7), 1);
  EXPECT_EQ(m.coefficients().at(0x5), -1);
  EXPECT_EQ(FacetId({false, 0x5, 0xA}).to_string(), "E(13,{2,4})");
  EXPECT_EQ(FacetId({true, 0x2, 0}).to_string(), "E(2)");
}

TEST(Polymatroid, Examples) {
  GroundSet g(2);
  SetFunction card(g, {0, 1, 1, 2});
  EXPECT_TRUE(is_polymatroid(card));
  EXPECT_TRUE(is_matroid(card));
  SetFunction bad(g, {0, 1, 1, 3});
  auto r = check_polymatroid(bad);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.violated.has_value());
  EXPECT_EQ(r.violated->to_string(), "E(12,{})");
  SetFunction half(g, {0, Rational(1, 2), Rational(1, 2), 1});
  EXPECT_TRUE(is_polymatroid(half));
  EXPECT_FALSE(is_matroid(half));
  SetFunction big(g, {0, 2, 2, 2});
  EXPECT_TRUE(is_polymatroid(big));
  EXPECT_FALSE(is_matroid(big));
}

TEST(Polymatroid, EquivalentToFormEvaluation) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    GroundSet g(1 + trial % 4);
    SetFunction f = trial % 2 ? random_polymatroid(g, rng) : oracle::random_rational_function(g, rng);
    bool all = true;
    for (const auto& [id, form] : elemental_forms(g)) all = all && form.satisfied_by(f);
    EXPECT_EQ(all, is_polymatroid(f));
  }
}

TEST(Polymatroid, ConicCombinationsStayInside) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    GroundSet g(4);
    auto a = random_polymatroid(g, rng), b = random_polymatroid(g, rng);
    EXPECT_TRUE(is_polymatroid(Rational(2, 3) * a + Rational(5, 7) * b));
  }
}

TEST(ZhangYeung, VamosPointValue) {
  auto h = vamos_point();
  EXPECT_TRUE(is_polymatroid(h));
  EXPECT_EQ(zhang_yeung_form(h.ground(), {1, 2, 3, 4}).evaluate(h), -1);
  // The pieces named in the inequality.
  EXPECT_EQ(mutual_info(h, 1, 2), 0);
  EXPECT_EQ(mutual_info(h, element_bit(1), element_bit(3) | element_bit(4)), 1);
  EXPECT_EQ(mutual_info(h, 3, 4, element_bit(1)), 0);
  EXPECT_EQ(mutual_info(h, 3, 4, element_bit(2)), 0);
  EXPECT_EQ(mutual_info(h, 3, 4), 1);
}

TEST(ZhangYeung, NonnegativeOnUniformMatroids) {
  for (int m = 0; m <= 4; ++m) {
    SetFunction u(GroundSet(4));
    for (SubsetMask a = 1; a < 16; ++a) u.set(a, std::min(m, cardinality(a)));
    EXPECT_GE(zhang_yeung_form(u.ground(), {1, 2, 3, 4}).evaluate(u), 0);
  }
  EXPECT_THROW(zhang_yeung_form(GroundSet(4), {1, 1, 2, 3}), ArgumentError);
  EXPECT_THROW(zhang_yeung_form(GroundSet(4), {1, 2, 3, 5}), ArgumentError);
}

TEST(Restrict, RelabelsInOrder) {
  auto h = vamos_point();
  auto r = restrict(h, 0xA);  // {2,4}
  EXPECT_EQ(r.n(), 2);
  EXPECT_EQ(r(0x1), h(0x2));
  EXPECT_EQ(r(0x2), h(0x8));
  EXPECT_EQ(r(0x3), h(0xA));
  EXPECT_EQ(restrict(h, 0xF), h);
}

TEST(TextFormat, RoundTrip) {
  Rng rng(3);
  auto f = oracle::random_rational_function(GroundSet(3), rng);
  std::stringstream ss;
  write_text(ss, f);
  EXPECT_EQ(read_text(ss), f);
  std::istringstream bad("0 0\n1 1\n2 1\n");
  EXPECT_THROW(read_text(bad), ArgumentError);
  std::istringstream comment("# point\n0 0\n1 1/2\n");
  EXPECT_EQ(read_text(comment)(1), Rational(1, 2));
}
