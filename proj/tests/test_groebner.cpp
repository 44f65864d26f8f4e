#include "support.hpp"

#include <gtest/gtest.h>

using namespace conormal;
using namespace conormal::testing;

TEST(Groebner, TwistedCubicBasis) {
    auto R = ex1_ring();
    auto gens = ex1_ideal(R).generators();
    auto gb = groebner_basis(gens);
    EXPECT_EQ(gb.generators().size(), 3u);
    for (const auto& g : gens) EXPECT_TRUE(gb.contains(g));
    EXPECT_FALSE(gb.contains(P(R, "u*v")));
}

TEST(Groebner, SingleGeneratorIsMadeMonic) {
    auto R = qq_ring({"x", "y"});
    auto gb = groebner_basis({P(R, "3*x^2 - 6*y")});
    ASSERT_EQ(gb.generators().size(), 1u);
    EXPECT_EQ(gb.generators()[0], P(R, "x^2 - 2*y"));
}

TEST(Groebner, UnitIdealAndInconsistentSystem) {
    auto R = qq_ring({"x", "y"});
    auto gb = groebner_basis({P(R, "x*y - 1"), P(R, "x")});
    EXPECT_TRUE(gb.is_unit());
    EXPECT_EQ(gb.generators()[0], P(R, "1"));
}

TEST(Groebner, LexEliminationOfParametrization) {
    // (t, t^2, t^3) eliminated: lex basis contains the implicit equations
    auto R = ring_create({"t", "x", "y", "z"}, Field::rationals(), MonomialOrder::lex());
    auto gb = groebner_basis({P(R, "x - t"), P(R, "y - t^2"), P(R, "z - t^3")});
    EXPECT_TRUE(gb.contains(P(R, "y - x^2")));
    EXPECT_TRUE(gb.contains(P(R, "z - x*y")));
    EXPECT_FALSE(gb.contains(P(R, "z - x^2")));
}

TEST(Groebner, NormalFormIsCanonicalRemainder) {
    auto R = qq_ring({"x", "y"});
    auto gb = groebner_basis({P(R, "x^2 - y"), P(R, "x*y - 1")});
    Polynomial f = P(R, "x^3 + y^2");
    Polynomial r = gb.normal_form(f);
    EXPECT_TRUE(gb.contains(f - r));
    // remainder has no term divisible by a leading monomial
    for (const auto& t : r.terms())
        for (const auto& m : gb.leading_monomials()) EXPECT_FALSE(m.divides(t.mono));
    EXPECT_EQ(gb.normal_form(f + P(R, "x^2 - y") * P(R, "y + 3")), r);
}

TEST(Groebner, PrimeFieldBasis) {
    auto R = ring_create({"x", "y"}, Field::prime(5), MonomialOrder::grevlex());
    auto gb = groebner_basis({P(R, "x^2 + 4*y"), P(R, "x*y")});
    EXPECT_TRUE(gb.contains(P(R, "y^2")));
    EXPECT_TRUE(gb.contains(P(R, "x^2 - y")));
}

TEST(Groebner, StepLimitStopsComputation) {
    auto R = ex2_ring();
    Ideal p = ex2_ideal(R);
    ScopedStepLimit limit(3);
    EXPECT_THROW(groebner_basis(p.generators()), LimitExceeded);
}

TEST(Groebner, SyzygiesOfTwistedCubic) {
    auto R = ex1_ring();
    Matrix m = Matrix::row(R, ex1_ideal(R).generators());
    Matrix s = syzygies(m);
    EXPECT_EQ(s.cols(), 2);
    EXPECT_TRUE((m * s).is_zero());
    EXPECT_TRUE(s.is_homogeneous());
}

TEST(Groebner, KoszulSyzygiesOfRegularSequence) {
    auto R = qq_ring({"x", "y", "z"});
    Matrix m = Matrix::row(R, {P(R, "x"), P(R, "y"), P(R, "z")});
    Matrix s = syzygies(m);
    EXPECT_EQ(s.cols(), 3);
    EXPECT_TRUE((m * s).is_zero());
    // second syzygies: one Koszul relation
    Matrix s2 = syzygies(s);
    EXPECT_EQ(s2.cols(), 1);
    EXPECT_TRUE((s * s2).is_zero());
}

TEST(Groebner, KernelModuloSubmodule) {
    // { y : x*y in (x^2, y) } = (x, y)
    auto R = qq_ring({"x", "y"});
    Matrix A = Matrix::row(R, {P(R, "x")});
    Matrix Q = Matrix::row(R, {P(R, "x^2"), P(R, "y")});
    Matrix K = kernel_mod(A, Q);
    std::vector<Polynomial> gens;
    for (int j = 0; j < K.cols(); ++j) gens.push_back(K.at(0, j));
    EXPECT_TRUE(same_ideal(Ideal(R, gens), I(R, {"x", "y"})));
}

TEST(Groebner, MinimalGeneratorSelection) {
    auto R = qq_ring({"x", "y"});
    std::vector<Polynomial> g = parse_list(R, {"x^2", "x*y", "x^2 + x*y", "x^3", "y^3"});
    auto idx = minimal_generator_indices(R, g);
    EXPECT_EQ(idx, (std::vector<int>{0, 1, 4}));
}

TEST(Groebner, SubmoduleMembership) {
    auto R = qq_ring({"x", "y"});
    Matrix gens = M(R, {{"x", "y"}, {"y", "0"}});
    SubmoduleGB gb(gens);
    EXPECT_TRUE(gb.contains({P(R, "x^2 + y^2"), P(R, "x*y")}));
    EXPECT_FALSE(gb.contains({P(R, "1"), P(R, "0")}));
    EXPECT_TRUE(gb.contains({P(R, "y^2"), P(R, "0")}));
}

TEST(Groebner, FractionFreeNormalFormsOverQQ) {
    auto R = qq_ring({"x", "y", "z"});
    auto gb = groebner_basis({P(R, "3*x^2 - 2*y*z"), P(R, "5*y^2 - 7*x*z")});
    Polynomial f = P(R, "x^3*y + 1/3*z^4");
    Polynomial r = gb.normal_form(f);
    EXPECT_TRUE(gb.contains(f - r));
    // dividing the scale back out: the remainder of a scaled input scales
    EXPECT_EQ(gb.normal_form(f.scaled(Scalar(R->field(), 6))), r.scaled(Scalar(R->field(), 6)));
}
