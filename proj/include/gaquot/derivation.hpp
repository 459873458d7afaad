#ifndef GAQUOT_DERIVATION_HPP
#define GAQUOT_DERIVATION_HPP

// Derivations of a polynomial ring, locally nilpotent ones in particular:
// application, the exponential action, graded image/kernel solvers, slice
// search and restriction to graph subvarieties.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaquot/poly.hpp"

namespace gaquot {

class Derivation {
public:
    Derivation() = default;
    // images[i] is the value on variable i; all images live over `vars`.
    Derivation(VarTable vars, std::vector<Poly> images);
    // Unlisted variables are sent to zero.
    static Derivation from_map(const VarTable& vars, const std::map<std::string, Poly>& images);

    const VarTable& vars() const { return vars_; }
    const Poly& image(std::size_t i) const { return images_[i]; }
    const Poly& image(std::string_view name) const { return images_[vars_.index(name)]; }
    const std::vector<Poly>& images() const { return images_; }

    // Every image is a homogeneous linear form, so D preserves degree.
    bool graded_linear() const { return graded_linear_; }

    // Torus weights with D shifting weight by +2; validated on attach.
    Derivation with_weights(std::vector<int> weights) const;
    const std::optional<std::vector<int>>& weights() const { return weights_; }

    Poly apply(const Poly& p) const;
    Poly operator()(const Poly& p) const { return apply(p); }

    // [this, other] evaluated on generators.
    Derivation commutator(const Derivation& other) const;
    bool operator==(const Derivation& other) const;

    // Groups of variables that D never mixes (connected components of the
    // "occurs in the image of" relation).
    const std::vector<std::size_t>& blocks() const { return block_; }
    std::size_t block_count() const { return block_count_; }

private:
    VarTable vars_;
    std::vector<Poly> images_;
    bool graded_linear_ = true;
    std::optional<std::vector<int>> weights_;
    std::vector<std::size_t> block_;
    std::size_t block_count_ = 0;
};

class NotNilpotent : public Error {
public:
    using Error::Error;
};

// sum_m t^m D^m(p) / m!, over p's table with `t` appended.
Poly exp_action(const Derivation& d, const Poly& p, const std::string& t = "t",
                unsigned iteration_bound = 512);

// Preimage s with D(s) = p, solved per graded piece; nullopt means p is not
// in the image (a definitive answer). Requires a graded-linear D.
std::optional<Poly> graded_image_membership(const Derivation& d, const Poly& p);

struct PowerInImage {
    unsigned k;
    Poly preimage;  // D(preimage) = h^k
};

// Smallest k <= kmax with h^k in Im(D); nullopt is the bounded verdict
// "none up to kmax".
std::optional<PowerInImage> power_in_image(const Derivation& d, const Poly& h, unsigned kmax);

// Homogeneous kernel elements of degree 1..maxdeg not generated by
// products of earlier ones. Sorted by degree, then leading monomial.
std::vector<Poly> graded_kernel_generators(const Derivation& d, unsigned maxdeg);

// Basis of the kernel of D on homogeneous polynomials of degree `deg`.
std::vector<Poly> graded_kernel_basis(const Derivation& d, unsigned deg);

// X presented as the image of w_i = h_i(z). Each z-variable must be the
// image of exactly one w-coordinate (its free coordinate).
struct Graph {
    VarTable z;
    std::map<std::string, Poly> images;  // w-name -> polynomial over z

    // w-name paired with each z-variable.
    std::map<std::string, std::string> free_coordinates() const;
};

class InconsistentGraph : public Error {
public:
    using Error::Error;
};

// Derivation D_X on the z-variables with graph o D = D_X o graph. Throws
// InconsistentGraph when the chain-rule identity fails.
Derivation restrict_to_graph(const Derivation& d, const Graph& graph);

struct Slice {
    Poly s;            // D(s) = 1
    unsigned degree;   // smallest bound at which it was found
};

// Searches polynomials of degree <= bound for s with D(s) = 1.
std::optional<Slice> slice_search(const Derivation& d, unsigned degree_bound);

// All exponent vectors of total degree `deg` over the given variable
// subset of an n-variable table, in grlex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t n, const std::vector<std::size_t>& vars,
                                          unsigned deg);

}  // namespace gaquot

#endif
