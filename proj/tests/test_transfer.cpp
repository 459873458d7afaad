#include <gtest/gtest.h>

#include "gaquot/catalog.hpp"
#include "gaquot/parse.hpp"
#include "gaquot/transfer.hpp"
#include "support.hpp"

using namespace gaquot;

namespace {

const RepSpec kSym1({Block::sym(1)});
const RepSpec kV2({Block::vblock(2)});

VarTable uvw(const RepSpec& s) { return VarTable{"u", "v"}.concat(s.coords()); }

}  // namespace

TEST(Extend, Examples) {
    auto a = extend(kSym1, parse("w0", kSym1.coords()));
    EXPECT_EQ(a.F, parse("v*w0 - u*w1", uvw(kSym1)));
    EXPECT_TRUE(a.F00.is_zero());
    EXPECT_EQ(a.boundary, Boundary::Contains);

    auto b = extend(kSym1, parse("1", kSym1.coords()));
    EXPECT_EQ(b.F, Poly::constant(uvw(kSym1), 1));
    EXPECT_EQ(b.F00, Poly::constant(kSym1.coords(), 1));
    EXPECT_TRUE(b.g.is_zero());
    EXPECT_EQ(b.boundary, Boundary::Misses);

    Poly f = parse("1 - w0*w3 + w1*w2", kV2.coords());
    auto c = extend(kV2, f);
    EXPECT_EQ(c.F, f.embed(uvw(kV2)));
    EXPECT_EQ(c.F00, f);
    EXPECT_EQ(c.boundary, Boundary::Intersects);
}

TEST(Extend, RejectsNonInvariant) {
    EXPECT_THROW(extend(kSym1, parse("w1", kSym1.coords())), NotInvariant);
}

TEST(Extend, RejectsUVNames) {
    RepSpec s({Block::sym(1)}, Normalization::Section5, std::vector<std::string>{"u", "x"});
    EXPECT_THROW(extend(s, parse("u", s.coords())), Error);
}

TEST(VerifyInvariance, Examples) {
    EXPECT_TRUE(verify_invariance(kSym1, parse("v*w0 - u*w1", uvw(kSym1))));
    EXPECT_FALSE(verify_invariance(kSym1, parse("u*w0", uvw(kSym1))));
    EXPECT_TRUE(verify_invariance(kSym1, Poly::constant(uvw(kSym1), 1)));
}

// A polynomial passing both checks is the unique invariant extension, so
// these two checks together are the oracle for F.
TEST(Extend, FixtureRoundTrip) {
    for (const auto& name : fixture_names()) {
        Fixture fx = fixture(name);
        if (!fx.hypersurface()) continue;
        const Poly& f = fx.equations.front();
        auto t = extend(fx.spec, f);
        EXPECT_EQ(restrict_to_identity_coset(fx.spec, t.F), f) << name;
        EXPECT_TRUE(verify_invariance(fx.spec, t.F)) << name;
        EXPECT_EQ(extend_via_alternate_section(fx.spec, f), t.F) << name;
        EXPECT_EQ(t.F00 + t.g, f) << name;
        EXPECT_TRUE(extend(fx.spec, t.g).F00.is_zero()) << name;
        EXPECT_TRUE(sl2_triple(fx.spec).annihilates(t.F00)) << name;
    }
}

TEST(Extend, Sym1HighestWeightVector) {
    // w0^k extends to (v w0 - u w1)^k
    for (unsigned k = 1; k <= 4; ++k) {
        auto t = extend(kSym1, parse("w0", kSym1.coords()).pow(k));
        EXPECT_EQ(t.F, parse("v*w0 - u*w1", uvw(kSym1)).pow(k));
    }
}

TEST(Extend, MultiplicativeAndAdditive) {
    std::mt19937 rng(71);
    for (int it = 0; it < 30; ++it) {
        RepSpec s = testsupport::random_spec(rng, 6);
        auto pool = testsupport::invariant_pool(s, 2);
        Poly f1 = testsupport::random_invariant(rng, s, pool, 2), f2 = testsupport::random_invariant(rng, s, pool, 2);
        auto a = extend(s, f1), b = extend(s, f2);
        EXPECT_EQ(extend(s, f1 * f2).F, a.F * b.F);
        EXPECT_EQ(extend(s, f1 + f2).F, a.F + b.F);
        EXPECT_EQ(extend(s, f1 * f2).F00, a.F00 * b.F00);
    }
}

TEST(Extend, SL2InvariantsAreFixed) {
    for (const auto& s : {RepSpec({Block::sym(3)}), RepSpec({Block::sym(1), Block::vblock(2)})})
        for (const auto& ci : catalog_invariants(s)) {
            auto t = extend(s, ci.poly);
            EXPECT_EQ(t.F, ci.poly.embed(uvw(s)));
            EXPECT_EQ(t.F00, ci.poly);
        }
}

TEST(ClassifyBoundary, Trichotomy) {
    VarTable w{"w0"};
    EXPECT_EQ(classify_boundary(Poly(w)), Boundary::Contains);
    EXPECT_EQ(classify_boundary(Poly::constant(w, 3)), Boundary::Misses);
    EXPECT_EQ(classify_boundary(parse("w0 + 1", w)), Boundary::Intersects);
    EXPECT_EQ(to_string(Boundary::Intersects), "intersects");
}
