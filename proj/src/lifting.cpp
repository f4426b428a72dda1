#include "cadec/lifting.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cadec/errors.hpp"

namespace cadec {

int Cell::dimension() const {
  int d = 0;
  for (int i : index)
    if (i % 2 == 1) ++d;
  return d;
}

const Cell* CAD::find(const std::vector<int>& index) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), index,
                             [](const Cell& c, const std::vector<int>& key) {
                               return c.index < key;
                             });
  if (it != cells.end() && it->index == index) return &*it;
  return nullptr;
}

namespace {

std::vector<RealAlgebraic> merge_roots(std::vector<std::vector<RealAlgebraic>> groups) {
  std::vector<RealAlgebraic> all;
  for (auto& g : groups)
    for (auto& r : g) all.push_back(std::move(r));
  std::sort(all.begin(), all.end(),
            [](const RealAlgebraic& a, const RealAlgebraic& b) {
              return RealAlgebraic::compare(a, b) < 0;
            });
  std::vector<RealAlgebraic> out;
  for (auto& r : all) {
    if (!out.empty() && RealAlgebraic::compare(out.back(), r) == 0) {
      if (r.is_exact() && !out.back().is_exact()) out.back() = r;  // prefer exact
      continue;
    }
    out.push_back(std::move(r));
  }
  return out;
}

Stack stack_from_roots(std::vector<RealAlgebraic> roots) {
  Stack st;
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) separate(roots[i], roots[i + 1]);
  if (roots.empty()) {
    st.sector_samples.push_back(Rat(0));
    return st;
  }
  st.sector_samples.push_back(Rat(rat_floor(roots.front().lo()) - 1));
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    st.sector_samples.push_back((roots[i].hi() + roots[i + 1].lo()) / 2);
  st.sector_samples.push_back(Rat(rat_ceil(roots.back().hi()) + 1));
  st.sections = std::move(roots);
  return st;
}

void append_stack_cells(std::vector<Cell>& out, const Cell& base, const Stack& st) {
  for (std::size_t i = 0; i <= st.sections.size(); ++i) {
    Cell sector;
    sector.index = base.index;
    sector.index.push_back(static_cast<int>(2 * i + 1));
    sector.sample = base.sample.extended(RealAlgebraic::from_rational(st.sector_samples[i]));
    out.push_back(std::move(sector));
    if (i < st.sections.size()) {
      Cell section;
      section.index = base.index;
      section.index.push_back(static_cast<int>(2 * (i + 1)));
      section.sample = base.sample.extended(st.sections[i]);
      out.push_back(std::move(section));
    }
  }
}

}  // namespace

Stack gen_stack(const Cell& base, const std::vector<MultiPoly>& L, std::size_t var) {
  std::vector<std::vector<RealAlgebraic>> groups;
  for (const auto& l : L) groups.push_back(roots_at(l, base.sample, var));
  return stack_from_roots(merge_roots(std::move(groups)));
}

CAD base_phase(const ProjectionRun& run) {
  CAD cad;
  cad.order = run.order;
  cad.level = 1;
  const PolySet& polys = run.F[0].empty() ? run.B[0] : run.F[0];
  std::vector<std::vector<RealAlgebraic>> groups;
  for (const auto& p : polys) groups.push_back(isolate_real_roots(p));
  Stack st = stack_from_roots(merge_roots(std::move(groups)));
  Cell origin;  // zero-length prefix
  append_stack_cells(cad.cells, origin, st);
  cad.counts_per_level = {cad.cells.size()};
  return cad;
}

LiftResult lift_all(std::shared_ptr<const ProjectionRun> run, const QFFPtr& formula,
                    const LiftOptions& opts) {
  const std::size_t n = run->order->size();
  LiftResult result;
  CAD cad = base_phase(*run);
  cad.provenance = run;

  for (std::size_t k = 2; k <= n; ++k) {
    std::size_t var = k - 1;
    const PolySet& Lset = run->F[var].empty() ? run->B[var] : run->F[var];
    std::vector<MultiPoly> L = Lset.to_vector();
    bool prev_ec = !run->F[var - 1].empty();
    std::vector<Cell> next;
    for (const Cell& c : cad.cells) {
      bool lift_here = !prev_ec || c.index.back() % 2 == 0;
      if (!lift_here) {
        // cylinder over a cell where the previous constraint is nonzero
        Cell cyl;
        cyl.index = c.index;
        cyl.index.push_back(1);
        cyl.sample = c.sample.extended(RealAlgebraic::from_rational(Rat(0)));
        next.push_back(std::move(cyl));
        continue;
      }
      std::vector<MultiPoly> active;
      for (const auto& l : L) {
        if (nullified_at(l, c.sample, var)) {
          if (opts.nullified == NullifiedPolicy::kStrictFail || c.dimension() > 0) {
            result.fail = FailInfo{k, c.index, l.to_string()};
            return result;
          }
          ++cad.nullified_skips;
          continue;
        }
        active.push_back(l);
      }
      Stack st;
      try {
        st = gen_stack(c, active, var);
      } catch (const NullifiedError& e) {
        result.fail = FailInfo{k, c.index, e.poly_text};
        return result;
      }
      append_stack_cells(next, c, st);
      if (opts.max_cells > 0 && next.size() > opts.max_cells)
        throw ResourceLimitError("cell guard exceeded (--max-cells)");
    }
    cad.cells = std::move(next);
    cad.counts_per_level.push_back(cad.cells.size());
    cad.level = k;
  }

  for (Cell& c : cad.cells) c.truth = eval_truth(formula, c.sample);
  result.cad = std::move(cad);
  return result;
}

std::optional<std::vector<int>> locate_index(const std::vector<Rat>& point,
                                             const CAD& cad) {
  const ProjectionRun& run = *cad.provenance;
  const std::size_t n = cad.level;
  if (point.size() != n) throw PreconditionError("locate: point dimension mismatch");
  std::vector<int> idx;
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t var = k - 1;
    if (k > 1 && !run.F[var - 1].empty() && idx.back() % 2 == 1) {
      idx.push_back(1);
      continue;
    }
    const PolySet& Lset = run.F[var].empty() ? run.B[var] : run.F[var];
    std::map<std::size_t, Rat> bind;
    for (std::size_t v = 0; v < var; ++v) bind[v] = point[v];
    std::vector<std::vector<RealAlgebraic>> groups;
    for (const auto& l : Lset) {
      MultiPoly sub = var == 0 ? l : l.eval_partial(bind);
      if (sub.is_zero()) return std::nullopt;  // nullified at the point: undecidable here
      if (sub.is_constant()) continue;
      groups.push_back(isolate_real_roots(sub));
    }
    std::vector<RealAlgebraic> roots = merge_roots(std::move(groups));
    int entry = 0;
    bool on_section = false;
    int below = 0;
    for (const auto& r : roots) {
      int c = r.compare_to_rational(point[var]);
      if (c == 0) {
        on_section = true;
        break;
      }
      if (c < 0) ++below;
    }
    entry = on_section ? 2 * (below + 1) : 2 * below + 1;
    idx.push_back(entry);
  }
  return idx;
}

const Cell* locate(const std::vector<Rat>& point, const CAD& cad) {
  auto idx = locate_index(point, cad);
  if (!idx) return nullptr;
  return cad.find(*idx);
}

VerifyReport verify_truth_invariance(const CAD& cad, const QFFPtr& formula,
                                     std::size_t trials, std::uint64_t seed) {
  VerifyReport rep;
  rep.trials = trials;
  const std::size_t n = cad.level;
  // box covering all section roots, padded by one
  std::vector<Int> lo(n, Int(0)), hi(n, Int(0));
  for (const Cell& c : cad.cells)
    for (std::size_t v = 0; v < n; ++v) {
      Int l = rat_floor(c.sample.coord(v).lo());
      Int h = rat_ceil(c.sample.coord(v).hi());
      if (l < lo[v]) lo[v] = l;
      if (h > hi[v]) hi[v] = h;
    }
  for (std::size_t v = 0; v < n; ++v) {
    lo[v] -= 1;
    hi[v] += 1;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rat> point(n);
    for (std::size_t v = 0; v < n; ++v) {
      unsigned long den = 1 + static_cast<unsigned long>(rng() % 64);
      Int lo_n = lo[v] * static_cast<long>(den);
      Int hi_n = hi[v] * static_cast<long>(den);
      Int span = hi_n - lo_n + 1;
      Int num = lo_n + Int(static_cast<unsigned long>(rng() % span.get_ui()));
      point[v] = Rat(num, Int(static_cast<long>(den)));
      point[v].canonicalize();
    }
    const Cell* cell = locate(point, cad);
    if (cell == nullptr) {
      auto idx = locate_index(point, cad);
      if (!idx) {
        ++rep.skipped;
        continue;
      }
      ++rep.violations;
      if (rep.details.size() < 10) {
        std::string s = "no cell with the located index at point (";
        for (std::size_t v = 0; v < n; ++v)
          s += (v ? ", " : "") + rat_to_string(point[v]);
        rep.details.push_back(s + ")");
      }
      continue;
    }
    bool truth = eval_truth_rational(formula, point);
    if (truth != cell->truth) {
      ++rep.violations;
      if (rep.details.size() < 10) {
        std::string s = "truth mismatch at point (";
        for (std::size_t v = 0; v < n; ++v)
          s += (v ? ", " : "") + rat_to_string(point[v]);
        s += "): point " + std::string(truth ? "true" : "false") + ", cell " +
             (cell->truth ? "true" : "false");
        rep.details.push_back(s);
      }
    }
  }
  return rep;
}

}  // namespace cadec
