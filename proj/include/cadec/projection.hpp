#pragma once

#include <string>
#include <vector>

#include "cadec/ecpipe.hpp"
#include "cadec/poly.hpp"

namespace cadec {

// P(B) = coeff(B) u disc(B) u res(B): the sign-invariant projection of a
// squarefree basis whose elements all have main variable var.
PolySet proj_full(const PolySet& B, std::size_t var);

// P_F(B) = P(F) u { res(f, g) : f in F, g in B \ F }, F a basis of the
// designated constraint, F subset of B.
PolySet proj_ec(const PolySet& B, const PolySet& F, std::size_t var);

// P*_F(B) = P_F(B) u disc(B \ F).
PolySet proj_ec_star(const PolySet& B, const PolySet& F, std::size_t var);

enum class ProjOp { kNone, kFull, kEcStar };
std::string proj_op_name(ProjOp op);

struct LevelStats {
  std::size_t level = 0;              // 1-based; level k lives in variables x1..xk
  std::size_t count_A = 0;            // |A_k|
  std::size_t count_B = 0;            // |B_k|
  std::vector<int> max_degree;        // per variable over A_k
  int max_total_degree = 0;
  ProjOp op = ProjOp::kNone;
};

// Output of the projection phase: per level the working set A_k, its finest
// squarefree basis B_k, and the designated-constraint basis F_k (subset of
// B_k, possibly empty).
struct ProjectionRun {
  VarOrderPtr order;
  std::vector<PolySet> A;  // A[k-1] = A_k
  std::vector<PolySet> B;
  std::vector<PolySet> F;
  std::vector<ProjOp> op_used;  // per level, kNone at level 1
  std::vector<LevelStats> stats;
  Designation designation;

  std::size_t levels() const { return A.size(); }
};

struct ProjectionOptions {
  int max_degree = 0;  // 0 = unlimited; guards doubly-exponential blowup
};

// The full projection phase: from the defining polynomials of the formula and
// a designation down to A_1, applying P*_F where a constraint is designated
// and P elsewhere.
ProjectionRun project_all(const QFFPtr& formula, const Designation& designation,
                          const VarOrderPtr& order,
                          const ProjectionOptions& opts = {});

ProjectionRun project_all(const PolySet& input, const Designation& designation,
                          const VarOrderPtr& order,
                          const ProjectionOptions& opts = {});

}  // namespace cadec
