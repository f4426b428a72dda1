#include "cadec/jsonio.hpp"

namespace cadec {

json to_json(const RealAlgebraic& a) {
  if (a.is_exact()) return json{{"rational", rat_to_string(a.value())}};
  std::string def;
  const up::Poly& p = a.defpoly();
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    if (!def.empty() && p[i] > 0) def += "+";
    if (i == 0) {
      def += p[i].get_str();
    } else {
      if (p[i] == -1) def += "-";
      else if (p[i] != 1) def += p[i].get_str() + "*";
      def += "t";
      if (i > 1) def += "^" + std::to_string(i);
    }
  }
  return json{{"defpoly", def},
              {"lo", rat_to_string(a.lo())},
              {"hi", rat_to_string(a.hi())}};
}

json to_json(const SamplePoint& s) {
  json arr = json::array();
  for (const auto& c : s.coords()) arr.push_back(to_json(c));
  return arr;
}

json to_json(const Cell& c) {
  return json{{"index", c.index}, {"sample", to_json(c.sample)}, {"truth", c.truth}};
}

json to_json(const CAD& cad) {
  json cells = json::array();
  for (const auto& c : cad.cells) cells.push_back(to_json(c));
  return json{{"cells", std::move(cells)},
              {"stats",
               {{"counts_per_level", cad.counts_per_level},
                {"cell_count", cad.cells.size()},
                {"fail", false},
                {"nullified_skips", cad.nullified_skips}}}};
}

json to_json(const VerifyReport& rep) {
  return json{{"trials", rep.trials},
              {"violations", rep.violations},
              {"skipped", rep.skipped},
              {"details", rep.details}};
}

json to_json(const Designation& d, const VarOrderPtr& order) {
  json entries = json::object();
  for (const auto& [v, p] : d.entries) {
    json e{{"poly", p.to_string()},
           {"source", ec_source_name(d.sources.at(v))}};
    entries[order->name(v)] = std::move(e);
  }
  return entries;
}

json to_json(const RunOutcome& run, const VarOrderPtr& order, bool with_timing,
             bool with_cells) {
  json j;
  j["designation"] = to_json(run.designation, order);
  if (!run.error.empty()) {
    j["error"] = run.error;
    return j;
  }
  if (run.lift.fail) {
    j["fail"] = {{"level", run.lift.fail->level},
                 {"cell", run.lift.fail->cell_index},
                 {"poly", run.lift.fail->poly}};
  } else if (run.lift.cad) {
    j["cell_count"] = run.lift.cad->cells.size();
    j["counts_per_level"] = run.lift.cad->counts_per_level;
    j["fail"] = false;
    if (with_cells) j["cad"] = to_json(*run.lift.cad);
  }
  if (run.run) {
    json lvls = json::array();
    for (const auto& st : run.run->stats) {
      lvls.push_back({{"level", st.level},
                      {"polys", st.count_A},
                      {"basis", st.count_B},
                      {"max_degree", st.max_degree},
                      {"max_total_degree", st.max_total_degree},
                      {"operator", proj_op_name(st.op)}});
    }
    j["projection"] = std::move(lvls);
  }
  if (run.verify) j["verify"] = to_json(*run.verify);
  if (with_timing) {
    j["timing_ms"] = {{"project", run.project_ms},
                      {"lift", run.lift_ms},
                      {"verify", run.verify_ms}};
  }
  return j;
}

json pipeline_report(const std::string& input_echo, const PipelineResult& result,
                     bool with_timing, bool with_cells) {
  json j;
  j["input"] = input_echo;
  j["order"] = result.order ? json(result.order->names()) : json(nullptr);
  j["strategy"] = ec_strategy_name(result.strategy);
  if (result.inconsistent) {
    j["inconsistent_ecs"] = true;
    return j;
  }
  json desigs = json::array();
  for (const auto& d : result.plan.designations)
    desigs.push_back(to_json(d, result.order));
  j["designations"] = std::move(desigs);
  json runs = json::array();
  for (const auto& r : result.runs)
    runs.push_back(to_json(r, result.order, with_timing, with_cells));
  j["runs"] = std::move(runs);
  return j;
}

}  // namespace cadec
