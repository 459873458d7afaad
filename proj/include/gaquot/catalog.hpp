#ifndef GAQUOT_CATALOG_HPP
#define GAQUOT_CATALOG_HPP

// Named example varieties with their expected verdicts.

#include <optional>
#include <string>
#include <vector>

#include "gaquot/classify.hpp"

namespace gaquot {

struct Fixture {
    Fixture(std::string name, RepSpec spec, std::vector<Poly> equations)
        : name(std::move(name)), spec(std::move(spec)), equations(std::move(equations)) {}

    std::string name;
    RepSpec spec;
    std::vector<Poly> equations;  // a single entry for hypersurfaces
    std::optional<Graph> graph;
    std::optional<FamilyMember> family;
    std::optional<std::string> relation;  // over x1..x5, see verify_winkelmann_relation

    Verdict expected = Verdict::Unknown;
    std::optional<unsigned> expected_slice_degree;
    std::vector<std::string> expected_witness_subspace;
    std::vector<Poly> expected_low_invariants;  // degree-1 kernel, when pinned down

    std::vector<std::string> citations;

    bool hypersurface() const { return equations.size() == 1; }
};

class UnknownFixture : public Error {
public:
    using Error::Error;
};

// winkelmann, sl2-in-v2, affine-slice, deveney-finston, quadric-relation,
// family-phi(<univariate polynomial>).
Fixture fixture(const std::string& name);

// Every fixed name, with family-phi instantiated at phi = t and t^2 - 1.
std::vector<std::string> fixture_names();

ClassificationReport classify_fixture(const Fixture& fx, const Bounds& bounds = {});

// Pulls a relation among x1..x5 back along the last five degree <= 2
// invariants of Sym^1 + V + V, optionally imposing w0 = 1 + x5. Returns the
// reduced residue; zero means the relation holds on X.
Poly winkelmann_relation_residue(const std::string& relation, bool impose_hypersurface = true);

bool verify_winkelmann_relation();

struct FixtureCheck {
    std::string name;
    bool pass = false;
    std::vector<std::string> failures;
    std::optional<ClassificationReport> report;
};

// Re-derives the expected data of one fixture from scratch.
FixtureCheck check_fixture(const std::string& name, const Bounds& bounds = {});

}  // namespace gaquot

#endif
