#include "support.hpp"

#include <gtest/gtest.h>

using namespace conormal;
using namespace conormal::testing;

TEST(Ideal, SumProductIntersectionOfMonomialIdeals) {
    auto R = qq_ring({"x", "y", "z"});
    Ideal a = I(R, {"x^2", "y"}), b = I(R, {"x", "z"});
    EXPECT_TRUE(same_ideal(ideal_sum(a, b), I(R, {"x", "y", "z"})));
    EXPECT_TRUE(same_ideal(ideal_product(a, b), I(R, {"x^3", "x^2*z", "x*y", "y*z"})));
    // monomial intersection: lcms of generator pairs
    EXPECT_TRUE(same_ideal(ideal_intersection(a, b), I(R, {"x^2", "x*y", "y*z"})));
}

TEST(Ideal, QuotientAndSaturation) {
    auto R = qq_ring({"x", "y"});
    Ideal a = I(R, {"x^2", "x*y"});
    EXPECT_TRUE(same_ideal(ideal_quotient(a, I(R, {"x"})), I(R, {"x", "y"})));
    EXPECT_TRUE(same_ideal(saturate(a, I(R, {"x", "y"})), I(R, {"x"})));
    EXPECT_TRUE(same_ideal(ideal_quotient(a, I(R, {"y"})), I(R, {"x"})));
    EXPECT_THROW(ideal_quotient(a, Ideal::zero(R)), Error);
}

TEST(Ideal, EliminationRecoversTwistedCubic) {
    auto R = qq_ring({"s", "u", "v", "t", "w"});
    Ideal param = I(R, {"u - 1", "v - s", "t - s^2", "w - s^3"});
    Ideal e = eliminate(param, {"s"});
    auto S = qq_ring({"u", "v", "t", "w"});
    // dehomogenized twisted cubic in u = 1
    std::vector<Polynomial> moved;
    for (const auto& g : e.generators()) moved.push_back(remap_by_name(g, S));
    Ideal expect = I(S, {"u - 1", "t - v^2", "w - v*t"});
    EXPECT_TRUE(same_ideal(Ideal(S, moved), expect));
}

TEST(Ideal, KernelOfRingMapIsTwistedCubic) {
    auto S = qq_ring({"a", "b"});
    auto R = ex1_ring();
    Ideal k = kernel_of_ring_map(R, parse_list(S, {"a^3", "a^2*b", "a*b^2", "b^3"}));
    EXPECT_TRUE(same_ideal(k, ex1_ideal(R)));
}

TEST(Ideal, DimensionAndHeight) {
    auto R = ex1_ring();
    DimHeight dh = dimension_and_height(ex1_ideal(R));
    EXPECT_EQ(dh.dim, 2);
    EXPECT_EQ(dh.height, 2);
    EXPECT_EQ(height(Ideal::maximal(R)), 4);
    EXPECT_EQ(height(Ideal::zero(R)), 0);
    EXPECT_EQ(height(Ideal::unit(R)), kInfiniteHeight);
    EXPECT_THROW(dimension_and_height(Ideal::unit(R)), Error);
}

TEST(Ideal, MonomialDimensionMatchesBruteForce) {
    auto R = qq_ring({"a", "b", "c", "d"});
    Ideal m = I(R, {"a*b", "c*d", "a*c"});
    EXPECT_EQ(dimension_and_height(m).dim, brute_force_monomial_dim(m.generators(), 4));
    EXPECT_EQ(dimension_and_height(m).dim, 2);
}

TEST(Ideal, FittingIdealsOfGenericMatrix) {
    auto R = qq_ring({"a", "b", "c", "d", "e", "f"});
    Matrix m = M(R, {{"a", "b", "c"}, {"d", "e", "f"}});
    EXPECT_TRUE(same_ideal(fitting_ideal(m, 1), Ideal::maximal(R)));
    Ideal i2 = fitting_ideal(m, 2);
    EXPECT_EQ(i2.size(), 3u);
    EXPECT_EQ(height(i2), 2);  // Eagon-Northcott: (3 - 2 + 1)
    EXPECT_TRUE(fitting_ideal(m, 3).is_zero());
    EXPECT_TRUE(fitting_ideal(m, 0).is_unit());
}

TEST(Ideal, MinimalGeneratorCount) {
    auto R = ex1_ring();
    std::vector<Polynomial> g = ex1_ideal(R).generators();
    g.push_back(g[0] * P(R, "u") + g[1] * P(R, "v"));
    g.push_back(g[0] + g[2]);
    EXPECT_EQ(minimal_generator_count(Ideal(R, g)), 3);
    EXPECT_EQ(minimalize(Ideal(R, g)).size(), 3u);
}

TEST(Ideal, IntersectionMembershipOracle) {
    // every product of elements from each ideal lies in the intersection
    auto R = qq_ring({"x", "y", "z"});
    Ideal a = I(R, {"x^2 - y*z", "x*y"}), b = I(R, {"y^2", "x - z"});
    Ideal c = ideal_intersection(a, b);
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) EXPECT_TRUE(c.contains(f * g));
    EXPECT_TRUE(a.contains(c));
    EXPECT_TRUE(b.contains(c));
}
