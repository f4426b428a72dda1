#pragma once

#include <string>
#include <vector>

#include "cadec/poly.hpp"

namespace cadec {

// Record of one elimination step, with the degree data the complexity
// comparisons are based on.
struct ElimStep {
  std::string op;           // "res", "drop-constant", "drop-zero"
  std::string detail;       // human-readable inputs
  MultiPoly output;
  std::vector<int> degrees; // per-variable degree of the output
  int total_degree = 0;
};

struct ElimTrace {
  std::vector<ElimStep> steps;
  void record(std::string op, std::string detail, const MultiPoly& out);
};

// Sylvester resultant with respect to var via the subresultant polynomial
// remainder sequence; sign matches the Sylvester determinant with f's
// coefficient rows first.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

// disc_v(f) = (-1)^(d(d-1)/2) res(f, df/dv, v) / lc_v(f); degree-one inputs
// give the unit (dropped from projection sets).
MultiPoly discriminant(const MultiPoly& f, std::size_t var);

// Coefficients of the powers of var as polynomials in the remaining
// variables; constants dropped after normalization.
PolySet coeff_set(const MultiPoly& f, std::size_t var);

struct ChainResult {
  // levels[i] = new candidates after eliminating vars[i] (exact values,
  // deduplicated, constants and zeros dropped but logged in the trace)
  std::vector<std::vector<MultiPoly>> levels;
  ElimTrace trace;
  bool saw_nonzero_constant = false;  // witnesses an inconsistent EC set
};

// Pairwise-resultant cascade: eliminate vars[0], then vars[1] from the
// results, and so on.  Elements of a level that do not involve the variable
// being eliminated pass through to the next level.
ChainResult iterated_chain(const std::vector<MultiPoly>& F,
                           const std::vector<std::size_t>& vars);

}  // namespace cadec
