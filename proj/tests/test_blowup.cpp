#include "support.hpp"

#include <gtest/gtest.h>

using namespace conormal;
using namespace conormal::testing;

namespace {

Ideal in_algebra(const GradedAlgebra& A, const std::vector<std::string>& gens) {
    return Ideal(A.ring, parse_list(A.ring, gens));
}

}  // namespace

TEST(Blowup, AssociatedGradedOfTwistedCubic) {
    auto R = ex1_ring();
    GradedAlgebra G = associated_graded(ex1_ideal(R));
    EXPECT_EQ(G.xnames, (std::vector<std::string>{"x1", "x2", "x3"}));
    EXPECT_EQ(G.xdeg, (std::vector<int>{2, 2, 2}));
    Ideal expect = in_algebra(G, {"u*t - v^2", "u*w - t*v", "v*w - t^2", "-t*x1 + v*x2 - u*x3", "w*x1 - t*x2 + v*x3"});
    EXPECT_TRUE(same_ideal(G.defining, expect));
}

TEST(Blowup, ReesAlgebraOfTwistedCubic) {
    auto R = ex1_ring();
    GradedAlgebra A = rees_of_ideal(ex1_ideal(R));
    // linear relations from the syzygies; linear type means nothing else
    Ideal expect = in_algebra(A, {"-t*x1 + v*x2 - u*x3", "w*x1 - t*x2 + v*x3"});
    EXPECT_TRUE(same_ideal(A.defining, expect));
    // x_i |-> f_i kills every defining generator
    std::vector<Polynomial> images;
    for (int i = 0; i < R->nvars(); ++i) images.push_back(Polynomial::variable(R, i));
    Ideal p = ex1_ideal(R);
    for (const auto& f : p.generators()) images.push_back(f);
    for (const auto& g : A.defining.generators()) EXPECT_TRUE(substitute(g, images, R).is_zero());
}

TEST(Blowup, ReesOfNonLinearTypeIdeal) {
    // (x^2, y^2) in k[x, y]: Rees relation y^2*X1 - x^2*X2 only
    auto R = qq_ring({"x", "y"});
    GradedAlgebra A = rees_of_ideal(I(R, {"x^2", "y^2"}));
    EXPECT_TRUE(same_ideal(A.defining, in_algebra(A, {"y^2*x1 - x^2*x2"})));
    // (x^2, xy, y^2) is not of linear type: the fiber relation x1*x3 - x2^2 appears
    GradedAlgebra B = rees_of_ideal(I(R, {"x^2", "x*y", "y^2"}));
    EXPECT_TRUE(B.defining.contains(P(B.ring, "x1*x3 - x2^2")));
    EXPECT_FALSE(linear_type_check(I(R, {"x^2", "x*y", "y^2"})));
}

TEST(Blowup, SymmetricAlgebraOfConormal) {
    auto R = ex1_ring();
    FPModule E = present_conormal(ex1_ideal(R));
    GradedAlgebra S = symmetric_algebra(E);
    EXPECT_EQ(S.nx(), 3);
    // Sym(p/p^2) equals G(p) for the twisted cubic
    GradedAlgebra G = associated_graded(ex1_ideal(R));
    EXPECT_EQ(S.xnames, G.xnames);
    EXPECT_TRUE(same_ideal(S.defining, G.defining));
    EXPECT_TRUE(linear_type_check(ex1_ideal(R)));
}

TEST(Blowup, GradedComponentsOfTwistedCubic) {
    auto R = ex1_ring();
    GradedAlgebra G = associated_graded(ex1_ideal(R));
    FPModule G0 = graded_component(G, 0);
    EXPECT_EQ(minimal_generators(G0), 1);
    FPModule G1 = graded_component(G, 1);
    EXPECT_EQ(G1.ngens(), 3);
    EXPECT_EQ(minimal_generators(G1), 3);
    // p^2/p^3 has the minimal generator count of p^2
    FPModule G2 = graded_component(G, 2);
    EXPECT_EQ(G2.ngens(), 6);
    EXPECT_EQ(minimal_generators(G2), minimal_generator_count(ideal_product(ex1_ideal(R), ex1_ideal(R))));
    EXPECT_THROW(graded_component(G, 5, 4), Error);
}

TEST(Blowup, AnalyticSpread) {
    auto R = ex1_ring();
    EXPECT_EQ(analytic_spread(ex1_ideal(R)), 3);
    auto S = qq_ring({"x", "y", "z"});
    EXPECT_EQ(analytic_spread(I(S, {"x", "y"})), 2);
    EXPECT_EQ(analytic_spread(I(S, {"x^2", "x*y", "y^2"})), 2);
}

TEST(Blowup, ClosureCandidateDegreeInference) {
    auto R = ex1_ring();
    GradedAlgebra G = associated_graded(ex1_ideal(R));
    ClosureCandidate c = make_closure_candidate(
        G, {"Y"}, {"Y*w - t*x3", "Y*t - v*x3", "Y*v - u*x3", "Y*u + v*x1 - u*x2", "Y^2 - Y*x2 + x1*x3"});
    EXPECT_EQ(c.new_degrees, (std::vector<int>{2}));
    EXPECT_EQ(c.monic, (std::vector<int>{4}));
    EXPECT_FALSE(c.ideal().is_unit());
    EXPECT_THROW(make_closure_candidate(G, {"u"}, {"u^2"}), Error);
    EXPECT_THROW(make_closure_candidate(G, {"Y"}, {"Y*w - t*x3"}), Error);
}
