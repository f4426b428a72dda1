#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cadec/ecpipe.hpp"
#include "cadec/formula.hpp"
#include "cadec/lifting.hpp"
#include "cadec/projection.hpp"

namespace cadec {

struct BuildOptions {
  EcStrategy strategy = EcStrategy::kGbReplace;
  bool enumerate = false;
  // manual designations "var:poly"; when present they override the strategy
  std::vector<std::string> manual_designations;
  std::size_t verify_trials = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  int max_degree = 0;
  std::uint64_t max_cells = 0;
  NullifiedPolicy nullified = NullifiedPolicy::kWellOriented;
};

struct RunOutcome {
  std::size_t designation_index = 0;
  Designation designation;
  std::shared_ptr<const ProjectionRun> run;
  LiftResult lift;
  std::optional<VerifyReport> verify;
  double project_ms = 0, lift_ms = 0, verify_ms = 0;
  std::string error;  // resource-guard message, empty otherwise

  std::size_t cell_count() const { return lift.cad ? lift.cad->cells.size() : 0; }
};

struct PipelineResult {
  QFFPtr formula;
  VarOrderPtr order;
  EcStrategy strategy = EcStrategy::kGbReplace;
  DesignationPlan plan;
  std::vector<RunOutcome> runs;  // one per designation (or just the first)
  bool inconsistent = false;

  bool any_fail() const;
  std::optional<std::size_t> min_cells() const;
};

// Parse, plan designations, project, lift, verify.  With enumerate, one run
// per designation (built concurrently up to opts.jobs, reported in
// designation order); otherwise only the first designation is built.
PipelineResult run_pipeline(const std::string& formula_text, const BuildOptions& opts,
                            VarOrderPtr order_override = nullptr);

// One complete build for a fixed designation.
RunOutcome build_one(const QFFPtr& formula, const VarOrderPtr& order,
                     const Designation& designation, const BuildOptions& opts);

unsigned default_jobs();  // CADEC_JOBS or hardware concurrency

}  // namespace cadec
