#include "support.hpp"

#include <gtest/gtest.h>

using namespace conormal;
using namespace conormal::testing;

namespace {

const EvidenceRow* find_row(const CriterionReport& r, const std::string& quantity) {
    for (const auto& e : r.evidence)
        if (e.quantity == quantity) return &e;
    return nullptr;
}

}  // namespace

TEST(Criteria, FittingProfileOfTwistedCubic) {
    auto R = ex1_ring();
    HeightProfile prof = fitting_height_profile(ex1_ideal(R));
    EXPECT_EQ(prof.n, 3);
    EXPECT_EQ(prof.g, 2);
    ASSERT_EQ(prof.entries.size(), 1u);
    EXPECT_EQ(prof.entries[0].height, 4);
    EXPECT_EQ(prof.entries[0].bound, 4);
    EXPECT_TRUE(prof.all_pass());
}

TEST(Criteria, DomainHoldsForTwistedCubic) {
    auto R = ex1_ring();
    CriterionReport r = domain_criterion(ex1_ideal(R));
    EXPECT_EQ(r.verdict, Verdict::holds);
    EXPECT_EQ(r.conclusion, "G_domain");
    EXPECT_EQ(r.witness("nu(p)"), "3");
}

TEST(Criteria, NormalityFailsAtMaximalIdealForTwistedCubic) {
    auto R = ex1_ring();
    CriterionReport r = normality_criterion(ex1_ideal(R));
    EXPECT_EQ(r.verdict, Verdict::fails);
    EXPECT_EQ(r.witness("fails_at"), "m");
    const EvidenceRow* m = find_row(r, "nu(p_m)");
    ASSERT_NE(m, nullptr);
    EXPECT_EQ(m->computed, 3);
    EXPECT_EQ(m->required, 2);
}

TEST(Criteria, NormalLocusObstructionsOfTwistedCubic) {
    auto R = ex1_ring();
    CriterionReport r = normal_locus_obstructions(ex1_ideal(R));
    EXPECT_EQ(r.verdict, Verdict::fails);
    EXPECT_EQ(r.witness("Sigma"), "{4}");
}

TEST(Criteria, SlidingDepthAndPipelineForTwistedCubic) {
    auto R = ex1_ring();
    CriterionReport sd = sliding_depth_check(ex1_ideal(R));
    EXPECT_EQ(sd.verdict, Verdict::holds);
    EXPECT_EQ(sd.witness("strongly_cohen_macaulay"), "true");
    CriterionReport pipe = conormal_closedness_pipeline(ex1_ideal(R));
    EXPECT_EQ(pipe.conclusion, "not_integrally_closed");
    EXPECT_EQ(pipe.witness("nu(E**)"), "4");
    EXPECT_EQ(pipe.witness("reflexive"), "false");
}

TEST(Criteria, Nu2CheckForTwistedCubic) {
    auto R = ex1_ring();
    CriterionReport r = nu2_defect_check(ex1_ideal(R));
    EXPECT_EQ(r.verdict, Verdict::holds);
    EXPECT_EQ(r.witness("defect_hf"), "{2: 1}");
}

TEST(Criteria, CompleteIntersectionIsTrivial) {
    auto R = qq_ring({"x", "y", "z", "w"});
    Ideal p = I(R, {"x*y - z*w", "x^2 - y*z"});
    EXPECT_TRUE(fitting_height_profile(p).entries.empty());
    CriterionReport d = domain_criterion(p);
    EXPECT_EQ(d.verdict, Verdict::holds);
    CriterionReport nl = normal_locus_obstructions(p);
    EXPECT_EQ(nl.witness("Sigma"), "{}");
    CriterionReport top = top_component_nonreflexive(p);
    EXPECT_EQ(top.verdict, Verdict::inconclusive);
    ConormalAnalysis a = analyze_conormal(p);
    EXPECT_TRUE(a.bidual.is_reflexive());
    EXPECT_EQ(a.nu_E, 2);
    EXPECT_EQ(a.nu_bidual, 2);
}

TEST(Criteria, GradedComparisonAlignsShift) {
    GradedComparison c = compare_graded({{2, 1}, {3, 2}}, {{-4, 1}, {-3, 2}});
    EXPECT_TRUE(c.equal);
    EXPECT_EQ(c.shift, -6);
    EXPECT_FALSE(compare_graded({{2, 1}}, {{0, 2}}).equal);
    EXPECT_FALSE(compare_graded({{2, 1}}, {}).equal);
    EXPECT_EQ(format_hf({{2, 1}, {3, 4}}), "{2: 1, 3: 4}");
}

TEST(Criteria, ConductorOfTwistedCubicClosure) {
    auto R = ex1_ring();
    GradedAlgebra G = associated_graded(ex1_ideal(R));
    ClosureCandidate c = make_closure_candidate(
        G, {"Y"}, {"Y*w - t*x3", "Y*t - v*x3", "Y*v - u*x3", "Y*u + v*x1 - u*x2", "Y^2 - Y*x2 + x1*x3"});
    ConductorResult res = verify_integral_closure_candidate(G, c, irrelevant_extension(G), "mG");
    EXPECT_TRUE(res.consistent);
    EXPECT_TRUE(res.relations_in_ideal);
    EXPECT_TRUE(res.injective);
    EXPECT_TRUE(res.annihilates);
    EXPECT_EQ(res.basis_size, 2);
    ASSERT_TRUE(res.equals_named.has_value());
    EXPECT_TRUE(*res.equals_named);
}

TEST(Criteria, NonHomogeneousInputRejected) {
    auto R = qq_ring({"x", "y"});
    EXPECT_THROW(domain_criterion(I(R, {"x - 1", "y"})), Error);
}
