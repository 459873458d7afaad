#ifndef GAQUOT_TRANSFER_HPP
#define GAQUOT_TRANSFER_HPP

// Transfer of G_a-invariants on W to SL_2-invariants on V x W, and the
// boundary trichotomy read off from the u^0 v^0 coefficient.

#include <string>

#include "gaquot/poly.hpp"
#include "gaquot/sl2rep.hpp"

namespace gaquot {

enum class Boundary { Misses, Intersects, Contains };

std::string to_string(Boundary b);

struct TransferResult {
    Poly F;    // over {u, v} + coords
    Poly F00;  // over coords
    Poly g;    // f - F00
    Boundary boundary;
};

class NotInvariant : public Error {
public:
    using Error::Error;
};

// Names of the coordinates on V; must not clash with the coordinates of W.
inline constexpr const char* kU = "u";
inline constexpr const char* kV = "v";

// F = f o rho(g_{u,v}^{-1}) with g_{u,v} = [[1/v, u], [0, v]]. The identity
// coset is (u, v) = (0, 1), so F|_{u=0,v=1} = f.
TransferResult extend(const RepSpec& spec, const Poly& f);

// Same computation through the section [[0, u], [-1/u, v]], which has the
// same second column; the result must agree with extend().
Poly extend_via_alternate_section(const RepSpec& spec, const Poly& f);

// F restricted to u = 0, v = 1, as a polynomial over the coordinates.
Poly restrict_to_identity_coset(const RepSpec& spec, const Poly& F);

// True when the sl_2 triple of Sym^1(u, v) (+) W kills F.
bool verify_invariance(const RepSpec& spec, const Poly& F);

Boundary classify_boundary(const Poly& F00);

}  // namespace gaquot

#endif
