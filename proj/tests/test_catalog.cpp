#include <gtest/gtest.h>

#include "gaquot/catalog.hpp"
#include "gaquot/parse.hpp"

using namespace gaquot;

TEST(Fixture, Examples) {
    Fixture w = fixture("winkelmann");
    EXPECT_EQ(w.spec.summands(), (std::vector<unsigned>{1, 1, 1}));
    EXPECT_EQ(w.equations.front(), parse("1 + (w2*w5 - w3*w4) - w0", w.spec.coords()));
    EXPECT_EQ(w.expected, Verdict::StrictlyQuasiAffine);

    Fixture s = fixture("sl2-in-v2");
    EXPECT_EQ(s.spec.summands(), (std::vector<unsigned>{1, 1}));
    EXPECT_EQ(s.equations.front(), parse("1 - w0*w3 + w1*w2", s.spec.coords()));
    EXPECT_EQ(s.expected, Verdict::StrictlyQuasiAffine);

    Fixture a = fixture("affine-slice");
    EXPECT_EQ(a.spec.summands(), (std::vector<unsigned>{1}));
    EXPECT_EQ(a.equations.front(), parse("1 - w0", a.spec.coords()));
    EXPECT_EQ(a.expected, Verdict::Affine);
    EXPECT_EQ(a.expected_slice_degree, 1u);

    Fixture d = fixture("deveney-finston");
    EXPECT_EQ(d.spec.normalization(), Normalization::Unit);
    EXPECT_EQ(d.spec.coords().name(0), "w1");
    EXPECT_EQ(d.expected, Verdict::NotEverywhereStable);
    EXPECT_EQ(d.expected_witness_subspace, (std::vector<std::string>{"w1", "w3"}));
}

TEST(Fixture, FamilyNames) {
    Fixture f = fixture("family-phi(t^2 - 2)");
    ASSERT_TRUE(f.family);
    EXPECT_EQ(f.equations.front(), parse("(w2*w5 - w3*w4)^2 - 1 - w0", f.spec.coords()));
    EXPECT_THROW(fixture("family-phi(s*t)"), Error);
    EXPECT_THROW(fixture("family-phi(3)"), Error);
    EXPECT_THROW(fixture("family-phi(t - 1)"), Error);
    EXPECT_THROW(fixture("family-phi(t +)"), ParseError);
}

TEST(Fixture, UnknownName) {
    EXPECT_THROW(fixture("nonesuch"), UnknownFixture);
    EXPECT_THROW(fixture("family-phi()"), Error);
}

TEST(Fixture, EveryFixtureChecksOut) {
    for (const auto& name : fixture_names()) {
        auto c = check_fixture(name);
        EXPECT_TRUE(c.pass) << name << ": " << (c.failures.empty() ? "" : c.failures.front());
    }
}

TEST(Fixture, DeveneyFinstonWitness) {
    auto c = check_fixture("deveney-finston");
    ASSERT_TRUE(c.report && c.report->witness);
    EXPECT_EQ(c.report->witness->subspace, (std::vector<std::string>{"w1", "w3"}));
    EXPECT_EQ(c.report->witness->subspace_dimension, 3);
    EXPECT_EQ(c.report->witness->point.at("w7"), 1);
}

TEST(Fixture, DeveneyFinstonEquationsAreNotSeparatelyInvariant) {
    Fixture d = fixture("deveney-finston");
    Derivation der = build_derivation(d.spec);
    int invariant = 0;
    for (const auto& e : d.equations) invariant += der(e).is_zero();
    EXPECT_LT(invariant, 3);
    // but the subvariety is stable, which the graph shows
    EXPECT_NO_THROW(restrict_to_graph(der, *d.graph));
}

TEST(WinkelmannRelation, Examples) {
    EXPECT_TRUE(verify_winkelmann_relation());
    EXPECT_TRUE(winkelmann_relation_residue("x1*x4 - x2*x3 - x5*(x5 + 1)").is_zero());
    EXPECT_FALSE(winkelmann_relation_residue("x1*x4 - x2*x3 - x5*(x5 + 2)").is_zero());
    EXPECT_FALSE(winkelmann_relation_residue("x1*x4 - x2*x3 - x5*(x5 + 1)", false).is_zero());
}

// Before imposing the equation, x1 x4 - x2 x3 = w0 x5 holds identically.
TEST(WinkelmannRelation, HandCheck) {
    Fixture w = fixture("winkelmann");
    EXPECT_EQ(winkelmann_relation_residue("x1*x4 - x2*x3", false),
              parse("w0*(w2*w5 - w3*w4)", w.spec.coords()));
}

TEST(Fixture, ParseRoundTrip) {
    for (const auto& name : fixture_names()) {
        Fixture fx = fixture(name);
        for (const auto& e : fx.equations) EXPECT_EQ(parse(e.str(), fx.spec.coords()), e) << name;
        if (fx.graph)
            for (const auto& [w, h] : fx.graph->images) EXPECT_EQ(parse(h.str(), fx.graph->z), h) << name;
    }
}
