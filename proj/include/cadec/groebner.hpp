#pragma once

#include <map>
#include <vector>

#include "cadec/poly.hpp"

namespace cadec {

// Pure lexicographic monomial order over a VarOrder (highest variable most
// significant); the tie-break slot exists for future block orders.
struct MonomialOrder {
  enum class Kind { kLex } kind = Kind::kLex;
  VarOrderPtr vars;

  bool greater(const ExpVec& a, const ExpVec& b) const {
    return MonoLexGreater{}(a, b);
  }
};

struct GroebnerBasis {
  std::vector<MultiPoly> gens;  // sorted canonically, normalized
  MonomialOrder order;
  bool reduced = false;

  bool is_unit_ideal() const {
    return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
  }
};

// Normal form of p modulo the basis: no term divisible by any leading term.
MultiPoly reduce(const MultiPoly& p, const GroebnerBasis& G);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

// Reduced Groebner basis via Buchberger's algorithm with normal pair
// selection and the coprimality / chain pair-elimination criteria.
GroebnerBasis buchberger(const PolySet& F, const MonomialOrder& order);

// Basis elements bucketed by main variable (every variable keyed, possibly
// with an empty bucket).
std::map<std::size_t, PolySet> elimination_split(const GroebnerBasis& G);

}  // namespace cadec
