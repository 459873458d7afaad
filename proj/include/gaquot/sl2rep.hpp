#ifndef GAQUOT_SL2REP_HPP
#define GAQUOT_SL2REP_HPP

// Linear G_a-representations W = (+)_j Sym^{k_j} V, written in a weight
// basis, together with the SL_2 structure they extend to.

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaquot/derivation.hpp"
#include "gaquot/poly.hpp"

namespace gaquot {

enum class Normalization {
    Section5,  // D(w_{i+1}) = (k - i) w_i
    Unit       // D(w_{i+1}) = w_i
};

struct Block {
    enum class Kind { Sym, VBlock } kind;
    unsigned value;  // k for Sym^k, number of copies for a V-block

    static Block sym(unsigned k) { return {Kind::Sym, k}; }
    static Block vblock(unsigned count) { return {Kind::VBlock, count}; }
    bool operator==(const Block&) const = default;
};

class RepSpec {
public:
    // Coordinates are named prefix + (first_index + position).
    explicit RepSpec(std::vector<Block> blocks, Normalization norm = Normalization::Section5,
                     unsigned first_index = 0, std::string prefix = "w");
    // Explicit coordinate names, one per coordinate.
    RepSpec(std::vector<Block> blocks, Normalization norm, std::vector<std::string> names);

    const std::vector<Block>& blocks() const { return blocks_; }
    Normalization normalization() const { return norm_; }
    const std::vector<unsigned>& summands() const { return summands_; }
    const VarTable& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }

    // Per-coordinate data, indexed like coords().
    int weight(std::size_t i) const { return weights_[i]; }
    const std::vector<int>& weights() const { return weights_; }
    std::size_t summand_of(std::size_t i) const { return summand_of_[i]; }
    unsigned inner_index(std::size_t i) const { return inner_[i]; }
    std::size_t summand_offset(std::size_t j) const { return offsets_[j]; }

    // Sym^1 (+) this, with the new coordinates named `u`, `v`.
    RepSpec with_standard_prepended(const std::string& u = "u", const std::string& v = "v") const;

    bool operator==(const RepSpec& o) const {
        return blocks_ == o.blocks_ && norm_ == o.norm_ && coords_ == o.coords_;
    }

private:
    void init(std::vector<std::string> names);

    std::vector<Block> blocks_;
    Normalization norm_;
    std::vector<unsigned> summands_;
    VarTable coords_;
    std::vector<int> weights_;
    std::vector<std::size_t> summand_of_;
    std::vector<unsigned> inner_;
    std::vector<std::size_t> offsets_;
};

// The locally nilpotent derivation of the G_a-action, with torus weights
// attached.
Derivation build_derivation(const RepSpec& spec);

// D acts on coordinate functions as the raising element of sl_2: with
// h = weight operator, [h, e] = 2e, [h, f] = -2f, [e, f] = h, and e = D.
// f is solved from the brackets; all three relations are checked.
struct Sl2Triple {
    Derivation e;
    Derivation f;
    Derivation h;

    bool annihilates(const Poly& p) const;
    bool brackets_hold() const;
};

Sl2Triple sl2_triple(const RepSpec& spec);

// 2x2 matrix [[a, b], [c, d]] / denom^power, entries over a parameter table.
struct SL2Element {
    Poly a, b, c, d;
    std::string denom_var;  // empty when power == 0
    unsigned power = 0;

    const VarTable& params() const { return a.vars(); }
    static SL2Element identity(const VarTable& params);
};

// Images of the coordinates under the substitution p(w) -> p(m w), taken
// as the symmetric power of m on each summand: coordinate i maps to
// numerators[i] / denom_var^denominator_powers[i]. Images live over
// params (+) coords.
struct GroupSubstitution {
    VarTable vars;
    std::vector<Poly> numerators;
    std::vector<unsigned> denominator_powers;
    std::string denom_var;

    // p o rho(m) with all denominators cleared; nullopt when they do not
    // cancel.
    std::optional<Poly> apply(const Poly& p) const;
};

class NotUnimodular : public Error {
public:
    using Error::Error;
};

GroupSubstitution group_substitution(const RepSpec& spec, const SL2Element& m);

// Coordinates of strictly positive torus weight.
std::vector<std::string> nonstable_coordinates(const RepSpec& spec);

struct CatalogInvariant {
    Poly poly;
    bool stable;
    std::string origin;  // e.g. "minor(0,2)" or "disc(Sym^3 #1)"
};

class UnsupportedBlock : public Error {
public:
    using Error::Error;
};

// Quadratic minors for every pair of Sym^1 summands and discriminants of
// odd-degree (3, 5) summands.
std::vector<CatalogInvariant> catalog_invariants(const RepSpec& spec);

}  // namespace gaquot

#endif
