#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cadec/algnum.hpp"
#include "cadec/formula.hpp"
#include "cadec/projection.hpp"

namespace cadec {

// One cylindrical cell: index entry 2i marks the section over the i-th root
// at that level, odd entries the sectors between/beyond.
struct Cell {
  std::vector<int> index;
  SamplePoint sample;
  bool truth = false;

  // number of odd index entries
  int dimension() const;
  bool section_at(std::size_t level) const { return index[level] % 2 == 0; }
};

struct FailInfo {
  std::size_t level = 0;           // 1-based level of the offending lift
  std::vector<int> cell_index;
  std::string poly;
};

struct CAD {
  VarOrderPtr order;
  std::size_t level = 0;
  std::vector<Cell> cells;        // ordered lexicographically by index
  std::shared_ptr<const ProjectionRun> provenance;
  std::vector<std::size_t> counts_per_level;
  std::size_t nullified_skips = 0;  // zero-dimensional nullifications tolerated

  const Cell* find(const std::vector<int>& index) const;
};

struct Stack {
  std::vector<RealAlgebraic> sections;  // ascending
  std::vector<Rat> sector_samples;      // sections.size() + 1 entries
};

enum class NullifiedPolicy {
  kWellOriented,  // FAIL only over positive-dimensional cells
  kStrictFail,    // any nullification fails
};

struct LiftOptions {
  NullifiedPolicy nullified = NullifiedPolicy::kWellOriented;
  std::uint64_t max_cells = 0;  // 0 = unlimited
};

struct LiftResult {
  std::optional<CAD> cad;
  std::optional<FailInfo> fail;
  bool ok() const { return cad.has_value(); }
};

// Stack over a cell with respect to the polynomials in L; sections are the
// merged ordered roots at the sample, sector samples rational.
// Throws NullifiedError when an element of L vanishes identically at the
// sample (the caller decides FAIL).
Stack gen_stack(const Cell& base, const std::vector<MultiPoly>& L, std::size_t var);

// CAD of the real line from A_1 / F_1 (basis form).
CAD base_phase(const ProjectionRun& run);

// The full lifting phase; FAIL is a distinguished result, not an exception.
LiftResult lift_all(std::shared_ptr<const ProjectionRun> run, const QFFPtr& formula,
                    const LiftOptions& opts = {});

// Cell containing a rational point, located level by level against the same
// polynomials the stacks were built with.  nullopt when no cell matches
// (which the verifier reports as a violation).
std::optional<std::vector<int>> locate_index(const std::vector<Rat>& point,
                                             const CAD& cad);
const Cell* locate(const std::vector<Rat>& point, const CAD& cad);

struct VerifyReport {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;  // points where a lifting polynomial vanished identically
  std::vector<std::string> details;  // first few violations, human-readable
};

// Samples seeded rational points in a box covering all section roots and
// checks the formula's truth at each point against the containing cell.
VerifyReport verify_truth_invariance(const CAD& cad, const QFFPtr& formula,
                                     std::size_t trials, std::uint64_t seed);

}  // namespace cadec
