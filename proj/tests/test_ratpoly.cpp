#include <gtest/gtest.h>

#include "gaquot/linalg.hpp"
#include "gaquot/parse.hpp"
#include "gaquot/poly.hpp"
#include "gaquot/univariate.hpp"
#include "support.hpp"

using namespace gaquot;
using testsupport::random_poly;

namespace {

const VarTable W{"w0", "w1", "w2", "w3"};

Poly P(const std::string& s, const VarTable& t = W) { return parse(s, t); }

}  // namespace

TEST(Rational, LowestTerms) {
    Rational r(6, -4);
    r.canonicalize();
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(Poly::constant(W, Rational(0)).str(), "0");
}

TEST(Arith, Examples) {
    EXPECT_EQ(P("(w0 + w1) * (w0 - w1)"), P("w0^2 - w1^2"));
    EXPECT_TRUE((P("w0*w1 + 3") * Poly(W)).is_zero());
    EXPECT_EQ(P("w1^2 - 4*w0*w2") + P("4*w0*w2"), P("w1^2"));
}

TEST(Arith, TableMismatchThrows) {
    VarTable other{"w0", "w1"};
    EXPECT_THROW(P("w0") + parse("w0", other), VarTableMismatch);
    EXPECT_THROW(P("w0") * parse("w0", other), VarTableMismatch);
}

TEST(Arith, RingLaws) {
    std::mt19937 rng(7);
    VarTable t = testsupport::table(6);
    for (int it = 0; it < 150; ++it) {
        Poly a = random_poly(rng, t, 4, 5), b = random_poly(rng, t, 4, 5), c = random_poly(rng, t, 4, 5);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * Poly::constant(t, 1), a);
    }
}

// Construction order does not leak into the canonical form.
TEST(Arith, CanonicalForm) {
    std::mt19937 rng(11);
    VarTable t = testsupport::table(4);
    for (int it = 0; it < 100; ++it) {
        std::vector<Poly> parts;
        for (int i = 0; i < 5; ++i) parts.push_back(random_poly(rng, t, 3, 2));
        Poly fwd(t), bwd(t);
        for (const auto& p : parts) fwd += p;
        for (auto i = parts.rbegin(); i != parts.rend(); ++i) bwd = *i + bwd;
        EXPECT_EQ(fwd, bwd);
        EXPECT_EQ(fwd.str(), bwd.str());
        for (const auto& [m, c] : fwd.terms()) EXPECT_NE(c, 0);
    }
}

// Evaluation at a rational point is a ring homomorphism; a second,
// arithmetic-free oracle for products.
TEST(Arith, EvaluationOracle) {
    std::mt19937 rng(3);
    VarTable t = testsupport::table(5);
    for (int it = 0; it < 100; ++it) {
        Poly a = random_poly(rng, t, 4, 6), b = random_poly(rng, t, 4, 6);
        std::vector<Rational> x;
        for (std::size_t i = 0; i < t.size(); ++i) x.push_back(testsupport::small_rational(rng));
        EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
        EXPECT_EQ((a - b).evaluate(x), a.evaluate(x) - b.evaluate(x));
        EXPECT_EQ(a.pow(3).evaluate(x), a.evaluate(x) * a.evaluate(x) * a.evaluate(x));
    }
}

TEST(Substitute, Examples) {
    VarTable z{"z1", "z2", "z3", "z4", "z5"};
    VarTable w{"w0"};
    Poly img = parse("1 + z2*z5 - z3*z4", z);
    EXPECT_EQ(parse("w0", w).substitute({{"w0", img}}), img);

    EXPECT_EQ(P("w0*w1").substitute({{"w0", P("w0")}, {"w1", P("w1")}, {"w2", P("w2")}, {"w3", P("w3")}}),
              P("w0*w1"));

    VarTable wt{"w0", "w1", "t"};
    Poly sq = parse("w1^2", wt);
    Poly r = sq.substitute({{"w0", parse("w0", wt)}, {"w1", parse("w1 + t*w0", wt)}, {"t", parse("t", wt)}});
    EXPECT_EQ(r, parse("w1^2 + 2*t*w0*w1 + t^2*w0^2", wt));
}

TEST(Substitute, MissingAssignmentThrows) {
    EXPECT_THROW(P("w0*w1").substitute({{"w0", P("w1")}}), Error);
}

TEST(Substitute, RingHomomorphism) {
    std::mt19937 rng(5);
    VarTable src = testsupport::table(4, "x"), dst = testsupport::table(3, "y");
    for (int it = 0; it < 60; ++it) {
        std::map<std::string, Poly> m;
        for (const auto& n : src.names()) m.emplace(n, random_poly(rng, dst, 2, 3));
        Poly p = random_poly(rng, src, 3, 4), q = random_poly(rng, src, 3, 4);
        EXPECT_EQ((p + q).substitute(m), p.substitute(m) + q.substitute(m));
        EXPECT_EQ((p * q).substitute(m), p.substitute(m) * q.substitute(m));
    }
}

TEST(Parse, Examples) {
    Poly f = P("1 - w0*w3 + w1*w2");
    EXPECT_EQ(f.constant_term(), 1);
    EXPECT_EQ(f.coefficient({1, 0, 0, 1}), -1);
    EXPECT_EQ(f.coefficient({0, 1, 1, 0}), 1);
    EXPECT_EQ(f.term_count(), 3u);

    Poly g = P("w1^2 - 4*w0*w2");
    EXPECT_EQ(g.coefficient({0, 2, 0, 0}), 1);
    EXPECT_EQ(g.coefficient({1, 0, 1, 0}), -4);

    try {
        P("w0 +");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
        EXPECT_NE(std::string(e.what()).find("end of input"), std::string::npos);
    }
}

TEST(Parse, Precedence) {
    EXPECT_EQ(P("-w0^2"), -P("w0*w0"));
    EXPECT_EQ(P("2*w0^2*w1"), P("w1*w0*w0*2"));
    EXPECT_EQ(P("(w0 + 1)^2"), P("w0^2 + 2*w0 + 1"));
    EXPECT_EQ(P("w0 - w1 - w2"), P("w0 - (w1 + w2)"));
    EXPECT_EQ(P("3/6*w0"), P("1/2*w0"));
    EXPECT_EQ(P("  w0\t*\nw1 "), P("w0*w1"));
    EXPECT_EQ(P("--w0"), P("w0"));
}

TEST(Parse, DeclareOnUse) {
    Poly p = parse("b*a + c");
    EXPECT_EQ(p.vars(), (VarTable{"b", "a", "c"}));
    EXPECT_THROW(parse("w9", W), ParseError);
}

class MalformedCorpus : public ::testing::TestWithParam<testsupport::Malformed> {};

TEST_P(MalformedCorpus, RejectedWithPosition) {
    const auto& c = GetParam();
    try {
        parse(c.text, testsupport::corpus_table());
        FAIL() << "accepted: " << c.text;
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), c.position) << c.text << ": " << e.what();
    }
}

INSTANTIATE_TEST_SUITE_P(Parser, MalformedCorpus, ::testing::ValuesIn(testsupport::malformed_corpus()));

TEST(Parse, RoundTripRandom) {
    std::mt19937 rng(17);
    VarTable t = testsupport::table(5, "w");
    for (int it = 0; it < 200; ++it) {
        Poly p = random_poly(rng, t, 5, 6);
        EXPECT_EQ(parse(p.str(), t), p) << p.str();
    }
}

TEST(ConstantTerm, Examples) {
    EXPECT_EQ(P("1 - w0*w3 + w1*w2").constant_term(), 1);
    EXPECT_EQ(P("w0").constant_term(), 0);
    EXPECT_EQ(P("7/3").constant_term(), Rational(7, 3));
}

TEST(RootCount, Examples) {
    auto a = squarefree_distinct_root_count(parse("t"));
    EXPECT_EQ(a.distinct_roots, 1u);
    EXPECT_TRUE(a.squarefree);
    auto b = squarefree_distinct_root_count(parse("t^2 - 1"));
    EXPECT_EQ(b.distinct_roots, 2u);
    EXPECT_TRUE(b.squarefree);
    auto c = squarefree_distinct_root_count(parse("t^2"));
    EXPECT_EQ(c.distinct_roots, 1u);
    EXPECT_FALSE(c.squarefree);
}

TEST(RootCount, Errors) {
    EXPECT_THROW(squarefree_distinct_root_count(parse("3")), Error);
    EXPECT_THROW(squarefree_distinct_root_count(parse("s*t")), Error);
}

// Products of distinct linear factors with multiplicities: the count is the
// number of distinct factors.
TEST(RootCount, KnownFactorizations) {
    std::mt19937 rng(23);
    VarTable t{"t"};
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<int> nroots(1, 4), mult(1, 3), root(-20, 20);
        int n = nroots(rng);
        std::set<int> roots;
        while (int(roots.size()) < n) roots.insert(root(rng));
        Poly phi = Poly::constant(t, 1);
        bool repeated = false;
        for (int r : roots) {
            int m = mult(rng);
            repeated = repeated || m > 1;
            phi = phi * parse("t - (" + std::to_string(r) + ")", t).pow(unsigned(m));
        }
        auto rc = squarefree_distinct_root_count(phi);
        EXPECT_EQ(rc.distinct_roots, roots.size());
        EXPECT_EQ(rc.squarefree, !repeated);
    }
}

TEST(ExactDivide, Examples) {
    VarTable t{"v", "w0", "w1"};
    EXPECT_EQ(*exact_divide(parse("v^2*w0", t), parse("v^2", t)), parse("w0", t));
    EXPECT_EQ(*exact_divide(parse("w0^2 - w1^2", t), parse("w0 - w1", t)), parse("w0 + w1", t));
    EXPECT_FALSE(exact_divide(parse("w0 + v", t), parse("v", t)).has_value());
}

TEST(ExactDivide, RandomProducts) {
    std::mt19937 rng(29);
    VarTable t = testsupport::table(4);
    for (int it = 0; it < 100; ++it) {
        Poly p = random_poly(rng, t, 3, 4), q = random_poly(rng, t, 3, 3);
        if (q.is_zero()) continue;
        auto r = exact_divide(p * q, q);
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(*r, p);
    }
}

TEST(Linalg, NullspaceAndSolve) {
    Matrix a(2, 3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
    EXPECT_EQ(rank(a), 1u);
    auto ns = nullspace(a);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& x : ns) EXPECT_EQ(x[0] + 2 * x[1] + 3 * x[2], 0);
    EXPECT_TRUE(solve(a, {6, 12}).has_value());
    EXPECT_FALSE(solve(a, {6, 13}).has_value());
}

TEST(Linalg, PolynomialDeterminant) {
    VarTable t{"a", "b", "c", "d"};
    std::vector<std::vector<Poly>> m{{parse("a", t), parse("b", t)}, {parse("c", t), parse("d", t)}};
    EXPECT_EQ(determinant(m, t), parse("a*d - b*c", t));
    // Vandermonde
    VarTable x{"x", "y", "z"};
    std::vector<std::vector<Poly>> v;
    for (const char* s : {"x", "y", "z"}) {
        Poly p = parse(s, x);
        v.push_back({Poly::constant(x, 1), p, p * p});
    }
    EXPECT_EQ(determinant(v, x), parse("(y - x)*(z - x)*(z - y)", x));
}
