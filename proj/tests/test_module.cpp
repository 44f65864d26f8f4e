#include "support.hpp"

#include <gtest/gtest.h>

using namespace conormal;
using namespace conormal::testing;

namespace {

Matrix column_matrix(const RingPtr& R, const std::vector<std::string>& entries) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : entries) rows.push_back({e});
    return M(R, rows);
}

}  // namespace

TEST(Resolution, TwistedCubicBetti) {
    auto R = ex1_ring();
    FreeResolution F = minimal_free_resolution(Matrix::row(R, ex1_ideal(R).generators()));
    EXPECT_EQ(F.betti(), (std::vector<int>{1, 3, 2}));
    EXPECT_EQ(F.twists(1), (std::vector<int>{2, 2, 2}));
    EXPECT_EQ(F.twists(2), (std::vector<int>{3, 3}));
    EXPECT_TRUE(F.is_complex());
    EXPECT_TRUE(F.is_minimal());
}

TEST(Resolution, KoszulComplexOfMaximalIdeal) {
    auto R = qq_ring({"x", "y", "z"});
    FreeResolution F = minimal_free_resolution(Matrix::row(R, Ideal::maximal(R).generators()));
    EXPECT_EQ(F.betti(), (std::vector<int>{1, 3, 3, 1}));
    EXPECT_TRUE(F.is_complex());
}

TEST(Resolution, PruningRemovesUnitEntries) {
    auto R = qq_ring({"x", "y"});
    // coker [[1, x], [0, y]] = R/(y) after eliminating the unit
    Matrix a = M(R, {{"1", "x"}, {"0", "y"}});
    a.set_row_degrees({1, 0});
    a.set_col_degrees({1, 1});
    PrunedPresentation p = prune_presentation(a);
    EXPECT_EQ(p.kept, (std::vector<int>{1}));
    ASSERT_EQ(p.relations.rows(), 1);
    ASSERT_EQ(p.relations.cols(), 1);
    EXPECT_EQ(p.relations.at(0, 0), P(R, "y"));
}

TEST(Module, ConormalOfTwistedCubic) {
    auto R = ex1_ring();
    FPModule E = present_conormal(ex1_ideal(R));
    EXPECT_EQ(E.ngens(), 3);
    EXPECT_EQ(minimal_generators(E), 3);
    EXPECT_EQ(E.presentation().cols(), 2);
    // relations are syzygies of the generators modulo p
    Matrix row = Matrix::row(R, E.base().generators());
    Matrix prod = row * E.presentation();
    for (int j = 0; j < prod.cols(); ++j) EXPECT_TRUE(E.base().contains(prod.at(0, j)));
}

TEST(Module, ConormalOfCompleteIntersectionIsFree) {
    auto R = qq_ring({"x", "y", "z"});
    FPModule E = present_conormal(I(R, {"x", "y^2 - x*z"}));
    EXPECT_EQ(minimal_generators(E), 2);
    // Koszul relation lies in p*F, so no relation survives modulo p
    EXPECT_EQ(minimal_presentation(E).presentation().cols(), 0);
}

TEST(Module, DualOfFreeModuleIsFree) {
    auto R = qq_ring({"x", "y"});
    FPModule F = FPModule::free(Ideal::zero(R), {0, 1});
    FPModule D = dual(F);
    EXPECT_EQ(D.ngens(), 2);
    EXPECT_EQ(D.presentation().cols(), 0);
    BidualResult b = bidual_and_compare(F);
    EXPECT_TRUE(b.is_reflexive());
}

TEST(Module, MaximalIdealIsNotReflexiveInDimensionTwo) {
    // m = (x, y) in k[x, y]: m** = R, defect k
    auto R = qq_ring({"x", "y"});
    Matrix pres = column_matrix(R, {"-y", "x"});
    pres.set_row_degrees({1, 1});
    pres.set_col_degrees({2});
    FPModule m(Ideal::zero(R), pres);
    BidualResult b = bidual_and_compare(m);
    EXPECT_FALSE(b.is_reflexive());
    EXPECT_TRUE(b.injective);
    EXPECT_EQ(minimal_generators(b.bidual), 1);
    auto hf = hilbert_function_finite(b.defect);
    long total = 0;
    for (auto [d, v] : hf) total += v;
    EXPECT_EQ(total, 1);
}

TEST(Module, BidualOfTwistedCubicConormal) {
    auto R = ex1_ring();
    BidualResult b = bidual_and_compare(present_conormal(ex1_ideal(R)));
    EXPECT_FALSE(b.is_reflexive());
    EXPECT_TRUE(b.injective);
    EXPECT_EQ(minimal_generators(b.bidual), 4);
    EXPECT_EQ(hilbert_function_finite(b.defect), (std::map<int, long>{{2, 1}}));
}

TEST(Module, HomIntoRingMatchesDual) {
    auto R = ex1_ring();
    FPModule E = present_conormal(ex1_ideal(R));
    FPModule S = FPModule::free(E.base(), {0});
    FPModule H = hom_module(E, S);
    EXPECT_EQ(minimal_generators(H), minimal_generators(dual(E)));
}

TEST(Module, KoszulHomologyDetectsRegularSequences) {
    auto R = qq_ring({"x", "y", "z"});
    EXPECT_TRUE(is_zero_module(koszul_homology(I(R, {"x", "y"}), 1)));
    EXPECT_FALSE(is_zero_module(koszul_homology(I(R, {"x", "x*y"}), 1)));
    FPModule h0 = koszul_homology(I(R, {"x", "y"}), 0);
    EXPECT_EQ(minimal_generators(h0), 1);
}

TEST(Module, DepthAgreesWithRegularSequenceOracle) {
    auto R = qq_ring({"x", "y", "z"});
    std::mt19937 rng(7);
    for (const auto& gens : std::vector<std::vector<std::string>>{{"x", "y"}, {"x^2", "x*y"}, {"x*y", "x*z", "y*z"}}) {
        Ideal J = I(R, gens);
        FPModule Q(Ideal::zero(R), Matrix::row(R, J.generators()));
        EXPECT_EQ(depth_via_ab(Q), depth_by_regular_sequence(J, rng)) << J.to_string();
    }
}

TEST(Module, ExtOfResidueField) {
    auto R = qq_ring({"x", "y", "z"});
    FPModule k(Ideal::zero(R), Matrix::row(R, Ideal::maximal(R).generators()));
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(is_zero_module(ext_against_ring(k, i))) << i;
    FPModule e3 = ext_against_ring(k, 3);
    EXPECT_EQ(hilbert_function_finite(e3), (std::map<int, long>{{-3, 1}}));
}

TEST(Module, HilbertFunctionOfArtinianQuotient) {
    auto R = qq_ring({"x", "y"});
    FPModule A(Ideal::zero(R), Matrix::row(R, parse_list(R, {"x^2", "y^2"})));
    EXPECT_EQ(hilbert_function_finite(A), (std::map<int, long>{{0, 1}, {1, 2}, {2, 1}}));
    FPModule B(Ideal::zero(R), Matrix::row(R, parse_list(R, {"x"})));
    EXPECT_THROW(hilbert_function_finite(B), Error);
}

TEST(Module, DeterminantIdealAndDivisorialHull) {
    auto R = qq_ring({"x", "y"});
    Matrix e = M(R, {{"x", "y", "0"}, {"0", "x", "y"}});
    EXPECT_TRUE(same_ideal(determinant_ideal(e), I(R, {"x^2", "x*y", "y^2"})));
    Ideal D = I(R, {"x^2", "x*y"});
    EXPECT_TRUE(same_ideal(divisorial_hull(D, Ideal::zero(R)), I(R, {"x"})));
    EXPECT_FALSE(is_divisorial(D, Ideal::zero(R)));
    EXPECT_TRUE(is_divisorial(I(R, {"x"}), Ideal::zero(R)));
}

TEST(Module, FreeModuleIsMFull) {
    auto R = qq_ring({"x", "y"});
    FPModule F = FPModule::free(Ideal::zero(R), {0, 0});
    MFullResult r = m_full_test(F, default_mfull_candidates(R, 0));
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.tried, 1);
}

TEST(Module, MFullCandidatesAreSeeded) {
    auto R = qq_ring({"x", "y", "z"});
    auto a = default_mfull_candidates(R, 5), b = default_mfull_candidates(R, 5), c = default_mfull_candidates(R, 6);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    EXPECT_EQ(a.size(), 32u);
}
