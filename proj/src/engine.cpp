#include "cadec/engine.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "cadec/errors.hpp"

namespace cadec {

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

Designation parse_manual_designations(const std::vector<std::string>& specs,
                                      const VarOrderPtr& order) {
  Designation d;
  for (const auto& spec : specs) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw ParseError("designation must look like var:poly", 0);
    std::string var = spec.substr(0, colon);
    int idx = order->index_of(var);
    if (idx < 0) throw ParseError("unknown designation variable '" + var + "'", 0);
    MultiPoly p = MultiPoly::parse(spec.substr(colon + 1), order);
    if (p.mvar() != idx)
      throw PreconditionError("designated polynomial's main variable is not " + var);
    auto [content, prim] = content_prim(p, static_cast<std::size_t>(idx));
    if (!content.is_constant()) d.stripped_contents.push_back(content);
    d.entries.emplace(static_cast<std::size_t>(idx),
                      squarefree_part(prim, static_cast<std::size_t>(idx)));
    d.sources.emplace(static_cast<std::size_t>(idx), EcSource::kExplicit);
  }
  return d;
}

}  // namespace

bool PipelineResult::any_fail() const {
  for (const auto& r : runs)
    if (r.lift.fail) return true;
  return false;
}

std::optional<std::size_t> PipelineResult::min_cells() const {
  std::optional<std::size_t> best;
  for (const auto& r : runs)
    if (r.lift.cad && (!best || r.cell_count() < *best)) best = r.cell_count();
  return best;
}

RunOutcome build_one(const QFFPtr& formula, const VarOrderPtr& order,
                     const Designation& designation, const BuildOptions& opts) {
  RunOutcome out;
  out.designation = designation;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ProjectionOptions popts;
    popts.max_degree = opts.max_degree;
    auto run = std::make_shared<ProjectionRun>(
        project_all(formula, designation, order, popts));
    out.run = run;
    out.project_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    LiftOptions lopts;
    lopts.nullified = opts.nullified;
    lopts.max_cells = opts.max_cells;
    out.lift = lift_all(run, formula, lopts);
    out.lift_ms = ms_since(t0);

    if (out.lift.cad && opts.verify_trials > 0) {
      t0 = std::chrono::steady_clock::now();
      out.verify = verify_truth_invariance(*out.lift.cad, formula, opts.verify_trials,
                                           opts.seed);
      out.verify_ms = ms_since(t0);
    }
  } catch (const ResourceLimitError& e) {
    out.error = e.what();
  }
  return out;
}

PipelineResult run_pipeline(const std::string& formula_text, const BuildOptions& opts,
                            VarOrderPtr order_override) {
  PipelineResult result;
  ParsedFormula parsed = parse_formula(formula_text, std::move(order_override));
  result.formula = parsed.formula;
  result.order = parsed.order;
  result.strategy = opts.strategy;

  if (!opts.manual_designations.empty()) {
    Designation d = parse_manual_designations(opts.manual_designations, parsed.order);
    result.plan.designations = {d};
    result.plan.buckets.order = parsed.order;
  } else {
    result.plan = plan_designations(parsed.formula, parsed.order, opts.strategy);
    if (result.plan.inconsistent) {
      result.inconsistent = true;
      return result;
    }
  }

  std::vector<Designation> to_build = result.plan.designations;
  if (!opts.enumerate && to_build.size() > 1) to_build.resize(1);

  result.runs.resize(to_build.size());
  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || to_build.size() <= 1) {
    for (std::size_t i = 0; i < to_build.size(); ++i) {
      result.runs[i] = build_one(parsed.formula, parsed.order, to_build[i], opts);
      result.runs[i].designation_index = i;
    }
  } else {
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= to_build.size()) return;
        result.runs[i] = build_one(parsed.formula, parsed.order, to_build[i], opts);
        result.runs[i].designation_index = i;
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, to_build.size()); ++t)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return result;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("CADEC_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace cadec
