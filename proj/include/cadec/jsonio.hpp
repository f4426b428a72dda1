#pragma once

#include <json.hpp>

#include "cadec/engine.hpp"

namespace cadec {

using nlohmann::json;

json to_json(const RealAlgebraic& a);
json to_json(const SamplePoint& s);
json to_json(const Cell& c);
json to_json(const CAD& cad);
json to_json(const VerifyReport& rep);
json to_json(const Designation& d, const VarOrderPtr& order);
json to_json(const RunOutcome& run, const VarOrderPtr& order, bool with_timing,
             bool with_cells);

// Full pipeline report: input echo, designations, per-run data.
json pipeline_report(const std::string& input_echo, const PipelineResult& result,
                     bool with_timing, bool with_cells);

}  // namespace cadec
