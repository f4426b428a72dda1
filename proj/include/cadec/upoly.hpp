#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cadec/numeric.hpp"
#include "cadec/poly.hpp"

// Dense univariate polynomials with integer coefficients: the kernel behind
// real root isolation and interval refinement.  Coefficients little-endian,
// no trailing zeros; the zero polynomial is the empty vector.
namespace cadec::up {

using Poly = std::vector<Int>;

Poly trim(Poly p);
inline int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const Poly& p) { return p.empty(); }

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly neg(Poly a);
Poly scale(Poly a, const Int& c);
Poly derivative(const Poly& p);

Int content(const Poly& p);                    // nonnegative; 0 only for zero
Poly primitive_part(const Poly& p);            // keeps the leading sign
Poly normalized(const Poly& p);                // primitive, positive leading coeff

// Exact rational evaluation and exact sign at a rational point.
Rat eval(const Poly& p, const Rat& x);
int sign_at(const Poly& p, const Rat& x);

// gcd via primitive pseudo-remainder sequence; normalized output.
Poly gcd(Poly a, Poly b);
Poly squarefree_part(const Poly& p);
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Power-of-two bound B with every real root in (-B, B).
Rat root_bound(const Poly& p);

// Descartes bound on the number of roots in the open interval (a, b).
int descartes_bound(const Poly& p, const Rat& a, const Rat& b);

// Isolating intervals for the distinct real roots of a squarefree polynomial,
// ascending.  lo == hi encodes an exact rational root; otherwise the open
// interval contains exactly one root, endpoints are not roots, and the sign
// of p changes across it.
struct RootInterval {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
};
std::vector<RootInterval> isolate_roots(const Poly& squarefree);

// One bisection step; maintains the sign-change invariant and detects exact
// rational midpoints (returns an exact interval when the root is hit).
RootInterval bisect_once(const Poly& p, const RootInterval& iv);

// Conversion from a univariate MultiPoly (positive scaling clears denominators).
Poly from_multipoly(const MultiPoly& p, std::size_t var);
MultiPoly to_multipoly(const Poly& p, const VarOrderPtr& order, std::size_t var);

}  // namespace cadec::up
