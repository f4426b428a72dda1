#include "cadec/ecpipe.hpp"

#include <algorithm>

#include "cadec/errors.hpp"

namespace cadec {

std::string ec_source_name(EcSource s) {
  switch (s) {
    case EcSource::kExplicit: return "explicit";
    case EcSource::kResultant: return "resultant";
    case EcSource::kGroebner: return "groebner";
  }
  return "?";
}

std::string ec_strategy_name(EcStrategy s) {
  switch (s) {
    case EcStrategy::kNone: return "none";
    case EcStrategy::kExplicit: return "explicit";
    case EcStrategy::kResultants: return "resultants";
    case EcStrategy::kGbReplace: return "gb-replace";
    case EcStrategy::kGbAugment: return "gb-augment";
  }
  return "?";
}

std::string Designation::to_string(const VarOrderPtr& order) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t v = order->size(); v-- > 0;) {
    auto it = entries.find(v);
    if (it == entries.end()) continue;
    if (!first) out += ", ";
    first = false;
    out += order->name(v) + ": " + it->second.to_string();
  }
  return out + "}";
}

namespace {

void bucket_insert(CandidateBuckets& b, const MultiPoly& p, EcSource src) {
  int mv = p.mvar();
  if (mv < 0) return;
  auto& vec = b.by_var[static_cast<std::size_t>(mv)];
  if (std::find(vec.begin(), vec.end(), p) != vec.end()) return;
  vec.push_back(p);
  b.tags[static_cast<std::size_t>(mv)].push_back(src);
}

}  // namespace

CandidateBuckets propagate_resultants(const PolySet& E, const VarOrderPtr& order) {
  CandidateBuckets out;
  out.order = order;
  for (const auto& e : E) bucket_insert(out, e, EcSource::kExplicit);
  if (!E.empty()) {
    std::vector<std::size_t> vars;  // eliminate from the top variable down
    for (std::size_t v = order->size(); v-- > 1;) vars.push_back(v);
    ChainResult chain = iterated_chain(E.to_vector(), vars);
    out.trace = std::move(chain.trace);
    out.inconsistent = chain.saw_nonzero_constant;
    for (const auto& level : chain.levels)
      for (const auto& p : level) bucket_insert(out, p, EcSource::kResultant);
  }
  return out;
}

CandidateBuckets gb_precondition(const PolySet& E, const VarOrderPtr& order, GbMode mode) {
  if (E.empty()) throw PreconditionError("gb_precondition: no equational constraints");
  CandidateBuckets out;
  out.order = order;
  GroebnerBasis G = buchberger(E, MonomialOrder{MonomialOrder::Kind::kLex, order});
  out.basis = G;
  if (G.is_unit_ideal()) {
    out.inconsistent = true;
    return out;
  }
  if (mode == GbMode::kReplace) {
    for (const auto& [v, bucket] : elimination_split(G))
      for (const auto& g : bucket) bucket_insert(out, g, EcSource::kGroebner);
  } else {
    for (const auto& e : E) bucket_insert(out, e, EcSource::kExplicit);
    for (const auto& [v, bucket] : elimination_split(G)) {
      if (out.by_var.count(v) && !out.by_var.at(v).empty()) continue;
      for (const auto& g : bucket) bucket_insert(out, g, EcSource::kGroebner);
    }
  }
  return out;
}

std::vector<Designation> enumerate_designations(const CandidateBuckets& buckets) {
  std::vector<std::size_t> vars;  // highest variable varies slowest
  for (auto it = buckets.by_var.rbegin(); it != buckets.by_var.rend(); ++it)
    if (!it->second.empty()) vars.push_back(it->first);

  std::vector<Designation> out;
  if (vars.empty()) {
    out.emplace_back();  // plain sign-invariant fallback
    return out;
  }
  std::vector<std::size_t> choice(vars.size(), 0);
  while (true) {
    Designation d;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      std::size_t v = vars[k];
      const MultiPoly& raw = buckets.by_var.at(v)[choice[k]];
      auto [content, prim] = content_prim(raw, v);
      if (!content.is_constant()) d.stripped_contents.push_back(content);
      MultiPoly sf = squarefree_part(prim, v).normalized_primitive();
      d.entries.emplace(v, sf);
      d.sources.emplace(v, buckets.tags.at(v)[choice[k]]);
    }
    out.push_back(std::move(d));
    std::size_t k = vars.size();
    bool carried_out = true;
    while (k > 0) {
      --k;
      if (++choice[k] < buckets.by_var.at(vars[k]).size()) {
        carried_out = false;
        break;
      }
      choice[k] = 0;
    }
    if (carried_out) return out;
  }
}

DesignationPlan plan_designations(const QFFPtr& formula, const VarOrderPtr& order,
                                  EcStrategy strategy) {
  DesignationPlan plan;
  plan.buckets.order = order;
  PolySet ecs = explicit_ecs(formula);
  switch (strategy) {
    case EcStrategy::kNone:
      break;
    case EcStrategy::kExplicit:
      for (const auto& e : ecs) bucket_insert(plan.buckets, e, EcSource::kExplicit);
      break;
    case EcStrategy::kResultants:
      if (!ecs.empty()) plan.buckets = propagate_resultants(ecs, order);
      break;
    case EcStrategy::kGbReplace:
      if (!ecs.empty()) plan.buckets = gb_precondition(ecs, order, GbMode::kReplace);
      break;
    case EcStrategy::kGbAugment:
      if (!ecs.empty()) plan.buckets = gb_precondition(ecs, order, GbMode::kAugment);
      break;
  }
  plan.inconsistent = plan.buckets.inconsistent;
  if (!plan.inconsistent) plan.designations = enumerate_designations(plan.buckets);
  return plan;
}

}  // namespace cadec
