#pragma once

#include <string>
#include <vector>

#include "cadec/numeric.hpp"
#include "cadec/projection.hpp"

namespace cadec {

// (M, D)-pair: a set partitionable into M subsets of combined degree at most
// D has at most M*D real roots.
struct MDPair {
  Int number;  // M
  Int degree;  // D
};

enum class TableVariant { kIteratedResultant, kGb };

struct BoundRow {
  int vars_remaining = 0;  // the "Variables" column
  // factored forms: number = 2^num_exp2 * m^num_expm, degree = 2^deg_exp2 * d^deg_expd
  Int num_exp2, num_expm;
  Int deg_exp2, deg_expd;
  // gb variant: exponents of d for the constraint and for the rest
  Int ec_expd, others_expd;
  bool has_ec_column = false;

  Int number(const Int& m) const;
  Int degree(const Int& d) const;
  std::string number_str() const;
  std::string degree_str() const;
};

struct BoundTable {
  int n = 0, ell = 0;
  Int m, d;
  TableVariant variant = TableVariant::kIteratedResultant;
  std::vector<BoundRow> rows;  // rows[0] is level n, rows.back() level 1

  const BoundRow& row_for_level(int vars_remaining) const;
};

// Symbolic growth table: the iterated-resultant variant doubles the count and
// squares-with-factor-two the degree during the constraint phase, then
// squares the count; the gb variant tracks degree exponents only, with the
// constraint column s+1 and the Lazy Caterer sequence for the rest, squaring
// below the constraint phase.
BoundTable table_growth(int n, const Int& m, const Int& d, int ell,
                        TableVariant variant);

// Closed forms for the printed general rows, used to cross-check the
// recurrences.  level_offset r means the row for n-(ell+r).
BoundRow printed_row_iterated(int n, int ell, int vars_remaining);
BoundRow printed_row_gb(int n, int ell, int vars_remaining);

// prod_i [2 m_i d_i + 1]
Int cell_bound_product(const BoundTable& table);
// 2 d_n ... d_(n-ell) * prod_(i=1)^(n-(ell+1)) [2 m_i d_i + 1]
Int cell_bound_ec_lifting(const BoundTable& table);

// Dominant-term closed forms of the headline bounds.  The constraint-aware
// form can carry negative exponents for extreme (n, ell), hence the rational.
Int dominant_sign_invariant(int n, const Int& m, const Int& d);          // (2d)^(2^n-1) m^(2^n-1) 2^(2^(n-1)-1)
Rat dominant_ec(int n, const Int& m, const Int& d, int ell);             // (2d)^(2^n-1) m^(2^(n-l)-2) 2^(l 2^(n-l)-3l)
Int degree_exponent_printed(int n, int ell);   // 2^(n-l)(l^2+l+2)/2 - (l^2+l)/2 - 2
Int degree_exponent_direct(int n, int ell);    // sum over the gb table's degree exponents

struct ObservedRow {
  std::size_t level = 0;
  std::size_t count = 0;
  std::vector<int> max_degree;
  int max_degree_any = 0;
  int max_total_degree = 0;
};

// Per-level observed (count, degree) data from a completed projection run,
// for side-by-side comparison with table_growth.
std::vector<ObservedRow> measure_run(const ProjectionRun& run);

// Paper-layout rendering (Variables | Number | Degree / EC | Others).
std::string render_table(const BoundTable& table);

}  // namespace cadec
