#include "cadec/elim.hpp"

#include <algorithm>

#include "cadec/errors.hpp"

namespace cadec {

void ElimTrace::record(std::string op, std::string detail, const MultiPoly& out) {
  ElimStep s;
  s.op = std::move(op);
  s.detail = std::move(detail);
  s.output = out;
  s.degrees = out.degrees_per_var();
  s.total_degree = out.total_degree();
  steps.push_back(std::move(s));
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  require_same_order(f.order(), g.order());
  if (f.is_zero() || g.is_zero())
    throw PreconditionError("resultant of the zero polynomial");
  int df = f.degree(var), dg = g.degree(var);
  if (df == 0 && dg == 0)
    throw PreconditionError("resultant: both inputs constant in the variable");
  if (df == 0) return f.pow(static_cast<unsigned long>(dg));
  if (dg == 0) return g.pow(static_cast<unsigned long>(df));

  MultiPoly A = f, B = g;
  int s = 1;
  if (df < dg) {
    std::swap(A, B);
    if ((df & 1) && (dg & 1)) s = -s;
  }
  const VarOrderPtr& ord = f.order();
  MultiPoly one = MultiPoly::constant(ord, Rat(1));
  MultiPoly gq = one, h = one;
  while (true) {
    int dA = A.degree(var), dB = B.degree(var);
    int delta = dA - dB;
    if ((dA & 1) && (dB & 1)) s = -s;
    MultiPoly R = pseudo_rem(A, B, var);
    A = B;
    {
      MultiPoly div = gq * h.pow(static_cast<unsigned long>(delta));
      auto q = divide_exact(R, div);
      if (!q) throw Error("subresultant sequence: inexact division");
      B = *q;
    }
    if (B.is_zero()) return MultiPoly::zero(ord);
    gq = A.lc_wrt(var);
    if (delta > 0) {
      // h = g^delta / h^(delta-1)
      auto q = divide_exact(gq.pow(static_cast<unsigned long>(delta)),
                            h.pow(static_cast<unsigned long>(delta - 1)));
      if (!q) throw Error("subresultant sequence: inexact h update");
      h = *q;
    }
    if (B.degree(var) == 0) break;
  }
  int dA = A.degree(var);
  auto res = divide_exact(B.pow(static_cast<unsigned long>(dA)),
                          h.pow(static_cast<unsigned long>(dA - 1)));
  if (!res) throw Error("subresultant sequence: inexact final division");
  return s < 0 ? -*res : *res;
}

MultiPoly discriminant(const MultiPoly& f, std::size_t var) {
  int d = f.degree(var);
  if (d <= 0) throw PreconditionError("discriminant needs positive degree in the variable");
  if (d == 1) return MultiPoly::constant(f.order(), Rat(1));
  MultiPoly r = resultant(f, f.derivative(var), var);
  auto q = divide_exact(r, f.lc_wrt(var));
  if (!q) throw Error("discriminant: leading coefficient does not divide the resultant");
  return ((d * (d - 1) / 2) % 2 == 1) ? -*q : *q;
}

PolySet coeff_set(const MultiPoly& f, std::size_t var) {
  PolySet out(f.order());
  for (const auto& c : f.coeffs_wrt(var)) out.insert(c);  // constants dropped by insert
  return out;
}

ChainResult iterated_chain(const std::vector<MultiPoly>& F,
                           const std::vector<std::size_t>& vars) {
  ChainResult res;
  std::vector<MultiPoly> level = F;
  for (std::size_t var : vars) {
    std::vector<MultiPoly> active, passthrough;
    for (const auto& p : level)
      (p.degree(var) > 0 ? active : passthrough).push_back(p);
    std::vector<MultiPoly> next = passthrough;
    std::vector<MultiPoly> produced;
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        MultiPoly r = resultant(active[i], active[j], var);
        std::string detail = "res(" + active[i].to_string() + ", " +
                             active[j].to_string() + ", " +
                             active[i].order()->name(var) + ")";
        if (r.is_zero()) {
          res.trace.record("drop-zero", detail, r);
          continue;
        }
        if (r.is_constant()) {
          res.trace.record("drop-constant", detail, r);
          res.saw_nonzero_constant = true;
          continue;
        }
        res.trace.record("res", detail, r);
        if (std::find(next.begin(), next.end(), r) == next.end()) {
          next.push_back(r);
          produced.push_back(r);
        }
      }
    }
    res.levels.push_back(std::move(produced));
    level = std::move(next);
  }
  return res;
}

}  // namespace cadec
