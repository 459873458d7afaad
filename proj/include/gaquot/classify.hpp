#ifndef GAQUOT_CLASSIFY_HPP
#define GAQUOT_CLASSIFY_HPP

// Decides whether the quotient of a G_a-invariant hypersurface X in W is
// affine, strictly quasi-affine, or whether X fails to be everywhere
// stable, and cross-checks the independent characterizations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaquot/derivation.hpp"
#include "gaquot/poly.hpp"
#include "gaquot/sl2rep.hpp"
#include "gaquot/transfer.hpp"

namespace gaquot {

enum class Verdict { Affine, StrictlyQuasiAffine, NotEverywhereStable, Unknown };

std::string to_string(Verdict v);
std::optional<Verdict> verdict_from_string(const std::string& s);

struct Bounds {
    unsigned kmax = 3;
    unsigned slice_degree = 3;
    unsigned invariant_degree = 2;
    unsigned witness_box = 3;        // integer search box [-B, B]
    unsigned sample_budget = 2000;   // Jacobian samples
};

// Restriction of the defining equations to the linear subspace where all
// positive-weight coordinates vanish.
struct StabilityCertificate {
    std::vector<std::string> nonstable;  // coordinates set to zero
    std::vector<Poly> restrictions;
    bool certified = false;              // some restriction is a non-zero constant
};

StabilityCertificate certify_everywhere_stable(const RepSpec& spec, const Poly& f);
StabilityCertificate certify_everywhere_stable(const RepSpec& spec, const std::vector<Poly>& equations);

// Exact evidence that X meets the non-stable subspace.
struct UnstableWitness {
    // Coordinates whose vanishing cuts out a linear subspace of X inside the
    // non-stable locus (graph case); empty when only a point is known.
    std::vector<std::string> subspace;
    int subspace_dimension = -1;
    std::map<std::string, Rational> point;  // a point of X, in w-coordinates
};

struct SliceOutcome {
    unsigned bound;
    std::optional<Slice> slice;
};

enum class SmoothnessKind { Proved, OnSamples, SingularWitness };

struct SmoothnessResult {
    SmoothnessKind kind;
    std::map<std::string, Rational> point;  // for SingularWitness
    unsigned samples = 0;
};

struct Crosscheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct ClassificationReport {
    Verdict verdict = Verdict::Unknown;
    Bounds bounds;
    StabilityCertificate certificate;
    std::optional<UnstableWitness> witness;
    std::optional<TransferResult> transfer;
    std::optional<SliceOutcome> slice;
    std::optional<PowerInImage> localized;  // power of f - c(f) in Im(D)
    std::optional<SmoothnessResult> boundary_smoothness;
    std::vector<Poly> invariants;           // graded kernel generators
    std::vector<Crosscheck> crosschecks;
    std::vector<std::string> notes;

    bool crosschecks_pass() const;
};

class NonInvariantInput : public Error {
public:
    using Error::Error;
};

class InternalInconsistency : public Error {
public:
    using Error::Error;
};

// Hypersurface f = 0. Throws NonInvariantInput when D(f) != 0 and
// InternalInconsistency when two characterizations disagree.
ClassificationReport classify(const RepSpec& spec, const Poly& f, const std::optional<Graph>& graph = {},
                              const Bounds& bounds = {});

// Higher-codimension subvariety given by equations and a graph; G_a-stability
// of X is checked through the graph. The boundary trichotomy is only
// available for hypersurfaces, so certified inputs resolve through the
// slice search or stay Unknown.
ClassificationReport classify_subvariety(const RepSpec& spec, const std::vector<Poly>& equations,
                                         const Graph& graph, const Bounds& bounds = {});

// Affine verdict <=> f - c(f) contains the boundary.
Crosscheck crosscheck_geomchar2(const RepSpec& spec, const Poly& f, Verdict verdict);

struct LocalizedQuotient {
    std::optional<PowerInImage> trivial_bundle;  // nullopt: none up to kmax
    unsigned kmax;
};

LocalizedQuotient localized_quotient_affine(const RepSpec& spec, const Poly& h, unsigned kmax);

SmoothnessResult jacobian_boundary_smoothness(const Poly& F00, unsigned sample_budget, unsigned box = 3);

// Member of the family f = 1 + phi(Delta) - w0.
struct FamilyMember {
    Poly phi;               // univariate
    RepSpec spec;
    std::size_t delta = 0;  // index into catalog_invariants(spec)
};

struct FamilyHypersurface {
    Poly f;
    Graph graph;
    Poly delta;
};

FamilyHypersurface build_family_member(const FamilyMember& member);

struct FamilyComparison {
    bool non_isomorphic;    // false: inconclusive
    unsigned count1, count2;  // boundary component counts
};

// Compares distinct-root counts of the two phi; throws on repeated roots.
// Members are not rebuilt here, so the caller owns the stability check.
FamilyComparison compare_family(const FamilyMember& m1, const FamilyMember& m2);

}  // namespace gaquot

#endif
