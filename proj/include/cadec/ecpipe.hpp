#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cadec/elim.hpp"
#include "cadec/formula.hpp"
#include "cadec/groebner.hpp"
#include "cadec/poly.hpp"

namespace cadec {

enum class EcSource { kExplicit, kResultant, kGroebner };
std::string ec_source_name(EcSource s);

// Per-variable choice of at most one primitive squarefree polynomial used as
// the designated equational constraint; contents stripped while normalizing
// are kept so that no sign information is lost downstream.
struct Designation {
  std::map<std::size_t, MultiPoly> entries;  // var -> designated polynomial
  std::map<std::size_t, EcSource> sources;
  std::vector<MultiPoly> stripped_contents;

  bool has(std::size_t var) const { return entries.count(var) > 0; }
  std::string to_string(const VarOrderPtr& order) const;
};

struct CandidateBuckets {
  VarOrderPtr order;
  std::map<std::size_t, std::vector<MultiPoly>> by_var;  // exact candidate values
  std::map<std::size_t, std::vector<EcSource>> tags;
  bool inconsistent = false;  // nonzero constant resultant or unit ideal
  ElimTrace trace;
  std::optional<GroebnerBasis> basis;
};

// Resultant propagation: pairwise resultants cascade down the variable order,
// candidates bucketed by main variable.
CandidateBuckets propagate_resultants(const PolySet& E, const VarOrderPtr& order);

enum class GbMode { kReplace, kAugment };

// Groebner preconditioning under the lex order: replace swaps the EC set for
// the reduced basis split by main variable; augment keeps the original ECs
// and fills only variables lacking a candidate.
CandidateBuckets gb_precondition(const PolySet& E, const VarOrderPtr& order, GbMode mode);

// Cartesian product over the nonempty buckets, each choice primitivized and
// squarefree-normalized; empty candidates give one all-empty designation.
std::vector<Designation> enumerate_designations(const CandidateBuckets& buckets);

enum class EcStrategy { kNone, kExplicit, kResultants, kGbReplace, kGbAugment };
std::string ec_strategy_name(EcStrategy s);

struct DesignationPlan {
  CandidateBuckets buckets;
  std::vector<Designation> designations;
  bool inconsistent = false;
};

// Explicit ECs of the formula fed through the selected strategy.
DesignationPlan plan_designations(const QFFPtr& formula, const VarOrderPtr& order,
                                  EcStrategy strategy);

}  // namespace cadec
