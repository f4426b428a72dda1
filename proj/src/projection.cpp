#include "cadec/projection.hpp"

#include <algorithm>

#include "cadec/elim.hpp"
#include "cadec/errors.hpp"

namespace cadec {

std::string proj_op_name(ProjOp op) {
  switch (op) {
    case ProjOp::kNone: return "-";
    case ProjOp::kFull: return "P";
    case ProjOp::kEcStar: return "P*_F";
  }
  return "?";
}

namespace {

void add_coeffs_disc(PolySet& out, const MultiPoly& b, std::size_t var) {
  out.insert_all(coeff_set(b, var));
  if (b.degree(var) >= 2) out.insert(discriminant(b, var));
}

}  // namespace

PolySet proj_full(const PolySet& B, std::size_t var) {
  PolySet out(B.order());
  std::vector<MultiPoly> elems = B.to_vector();
  for (const auto& b : elems) {
    if (b.mvar() != static_cast<int>(var))
      throw PreconditionError("proj_full: basis element main variable mismatch");
    add_coeffs_disc(out, b, var);
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      out.insert(resultant(elems[i], elems[j], var));
  return out;
}

PolySet proj_ec(const PolySet& B, const PolySet& F, std::size_t var) {
  for (const auto& f : F)
    if (!B.contains(f)) throw PreconditionError("proj_ec: F is not a subset of B");
  if (F.empty()) throw PreconditionError("proj_ec: F must be nonempty");
  PolySet out(B.order());
  std::vector<MultiPoly> fs = F.to_vector();
  for (const auto& f : fs) add_coeffs_disc(out, f, var);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      out.insert(resultant(fs[i], fs[j], var));
  for (const auto& f : fs)
    for (const auto& g : B)
      if (!F.contains(g)) out.insert(resultant(f, g, var));
  return out;
}

PolySet proj_ec_star(const PolySet& B, const PolySet& F, std::size_t var) {
  PolySet out = proj_ec(B, F, var);
  for (const auto& g : B)
    if (!F.contains(g) && g.degree(var) >= 2) out.insert(discriminant(g, var));
  return out;
}

ProjectionRun project_all(const QFFPtr& formula, const Designation& designation,
                          const VarOrderPtr& order, const ProjectionOptions& opts) {
  return project_all(defining_polynomials(formula), designation, order, opts);
}

ProjectionRun project_all(const PolySet& input, const Designation& designation,
                          const VarOrderPtr& order, const ProjectionOptions& opts) {
  std::size_t n = order->size();
  ProjectionRun run;
  run.order = order;
  run.designation = designation;
  run.A.assign(n, PolySet(order));
  run.B.assign(n, PolySet(order));
  run.F.assign(n, PolySet(order));
  run.op_used.assign(n, ProjOp::kNone);

  PolySet current(order);
  current.insert_all(input);
  for (const auto& c : designation.stripped_contents) current.insert(c);

  for (std::size_t k = n; k >= 1; --k) {
    std::size_t var = k - 1;
    if (designation.has(var)) current.insert(designation.entries.at(var));
    run.A[var] = current;

    // split off polynomials below this level (their content w.r.t. var is
    // themselves); content of the rest joins them
    PolySet lower(order);
    PolySet prims(order);
    for (const auto& p : current) {
      if (p.mvar() < static_cast<int>(var)) {
        lower.insert(p);
        continue;
      }
      auto [content, prim] = content_prim(p, var);
      if (!content.is_constant()) lower.insert(content);
      prims.insert(prim);
    }
    run.B[var] = squarefree_basis(prims, var);

    if (designation.has(var)) {
      const MultiPoly& e = designation.entries.at(var);
      PolySet fset(order);
      for (const auto& b : run.B[var])
        if (divides(b, e)) fset.insert(b);
      run.F[var] = fset;
    }

    if (k == 1) break;
    PolySet projected = run.F[var].empty()
                            ? proj_full(run.B[var], var)
                            : proj_ec_star(run.B[var], run.F[var], var);
    run.op_used[var] = run.F[var].empty() ? ProjOp::kFull : ProjOp::kEcStar;
    PolySet next(order);
    next.insert_all(lower);
    next.insert_all(projected);
    current = std::move(next);

    if (opts.max_degree > 0) {
      for (const auto& p : current)
        for (int d : p.degrees_per_var())
          if (d > opts.max_degree)
            throw ResourceLimitError("projection degree guard exceeded (--max-degree)");
    }
  }

  run.stats.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    LevelStats& st = run.stats[k - 1];
    st.level = k;
    st.count_A = run.A[k - 1].size();
    st.count_B = run.B[k - 1].size();
    st.op = run.op_used[k - 1];
    st.max_degree.assign(n, 0);
    for (const auto& p : run.A[k - 1]) {
      auto degs = p.degrees_per_var();
      for (std::size_t v = 0; v < n; ++v) st.max_degree[v] = std::max(st.max_degree[v], degs[v]);
      st.max_total_degree = std::max(st.max_total_degree, p.total_degree());
    }
  }
  return run;
}

}  // namespace cadec
