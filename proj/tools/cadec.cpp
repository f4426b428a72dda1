#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cadec/bounds.hpp"
#include "cadec/engine.hpp"
#include "cadec/errors.hpp"
#include "cadec/jsonio.hpp"

namespace {

using namespace cadec;

constexpr int kExitParse = 2;
constexpr int kExitFail = 3;
constexpr int kExitInconsistent = 4;
constexpr int kExitResource = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonArgs {
  std::string file;
  std::string order_spec;
  std::string strategy = "gb-replace";
  std::vector<std::string> designate;
  bool enumerate = false;
  std::string json_out;
  std::size_t verify_trials = 0;
  std::uint64_t seed = 1;
  int max_degree = 0;
  std::uint64_t max_cells = 0;
  unsigned jobs = 0;
  std::string nullified = "well-oriented";
  bool no_timing = false;
  bool with_cells = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_strategy = true) {
  cmd->add_option("file", args.file, "formula file")->required();
  cmd->add_option("--order", args.order_spec,
                  "variable order, highest first (overrides the file header)");
  if (with_strategy)
    cmd->add_option("--ec-strategy", args.strategy,
                    "none | explicit | resultants | gb-replace | gb-augment");
  cmd->add_option("--designate", args.designate,
                  "manual designation var:poly (repeatable)");
  cmd->add_flag("--enumerate", args.enumerate, "build one CAD per designation");
  cmd->add_option("--json", args.json_out, "write a JSON report ('-' for stdout)");
  cmd->add_option("--verify", args.verify_trials,
                  "sample N points per build and check truth invariance");
  cmd->add_option("--seed", args.seed, "seed for the verifier's point sampler");
  cmd->add_option("--max-degree", args.max_degree, "projection degree guard");
  cmd->add_option("--max-cells", args.max_cells, "lifting cell-count guard");
  cmd->add_option("--jobs", args.jobs, "concurrent builds with --enumerate");
  cmd->add_option("--nullified", args.nullified,
                  "well-oriented (default) or fail: nullification handling");
  cmd->add_flag("--no-timing", args.no_timing, "omit timings (byte-stable reports)");
  cmd->add_flag("--cells", args.with_cells, "include full cell lists in JSON output");
}

EcStrategy parse_strategy(const std::string& s) {
  if (s == "none") return EcStrategy::kNone;
  if (s == "explicit") return EcStrategy::kExplicit;
  if (s == "resultants") return EcStrategy::kResultants;
  if (s == "gb-replace") return EcStrategy::kGbReplace;
  if (s == "gb-augment") return EcStrategy::kGbAugment;
  throw Error("unknown --ec-strategy: " + s);
}

BuildOptions to_build_options(const CommonArgs& a) {
  BuildOptions o;
  o.strategy = parse_strategy(a.strategy);
  o.enumerate = a.enumerate;
  o.manual_designations = a.designate;
  o.verify_trials = a.verify_trials;
  o.seed = a.seed;
  o.jobs = a.jobs == 0 ? default_jobs() : a.jobs;
  o.max_degree = a.max_degree;
  o.max_cells = a.max_cells;
  if (a.nullified == "fail") o.nullified = NullifiedPolicy::kStrictFail;
  else if (a.nullified == "well-oriented") o.nullified = NullifiedPolicy::kWellOriented;
  else throw Error("unknown --nullified mode: " + a.nullified);
  return o;
}

VarOrderPtr order_override(const CommonArgs& a) {
  return a.order_spec.empty() ? nullptr : parse_order_spec(a.order_spec);
}

void maybe_write_json(const CommonArgs& args, const std::string& input,
                      const PipelineResult& result) {
  if (args.json_out.empty()) return;
  json j = pipeline_report(input, result, !args.no_timing, args.with_cells);
  if (args.json_out == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(args.json_out);
    out << j.dump(2) << "\n";
  }
}

int report_outcome(const PipelineResult& result) {
  if (result.inconsistent) {
    std::cout << "inconsistent ECs: formula unsatisfiable\n";
    return kExitInconsistent;
  }
  for (const auto& r : result.runs) {
    if (!r.error.empty()) {
      std::cout << "aborted: " << r.error << "\n";
      return kExitResource;
    }
    if (r.lift.fail) {
      std::cout << "FAIL (not well-oriented) at level " << r.lift.fail->level
                << ", cell [";
      for (std::size_t i = 0; i < r.lift.fail->cell_index.size(); ++i)
        std::cout << (i ? "," : "") << r.lift.fail->cell_index[i];
      std::cout << "], polynomial " << r.lift.fail->poly << "\n";
      return kExitFail;
    }
  }
  return 0;
}

void print_run_summary(const PipelineResult& result, bool timing) {
  std::cout << "order:";
  for (std::size_t v = result.order->size(); v-- > 0;)
    std::cout << " " << result.order->name(v);
  std::cout << "\nstrategy: " << ec_strategy_name(result.strategy) << "\n";
  std::cout << "designations: " << result.plan.designations.size() << "\n";
  for (const auto& r : result.runs) {
    std::cout << "[" << r.designation_index << "] "
              << r.designation.to_string(result.order) << " -> ";
    if (!r.error.empty()) {
      std::cout << "aborted (" << r.error << ")";
    } else if (r.lift.fail) {
      std::cout << "FAIL";
    } else {
      std::cout << r.cell_count() << " cells";
      if (r.verify)
        std::cout << ", verify " << r.verify->violations << "/" << r.verify->trials
                  << " violations";
    }
    if (timing)
      std::cout << "  (project " << r.project_ms << " ms, lift " << r.lift_ms << " ms)";
    std::cout << "\n";
  }
  if (result.runs.size() > 1) {
    std::size_t mn = SIZE_MAX, mx = 0, sum = 0, ok = 0;
    for (const auto& r : result.runs) {
      if (!r.lift.cad) continue;
      ++ok;
      mn = std::min(mn, r.cell_count());
      mx = std::max(mx, r.cell_count());
      sum += r.cell_count();
    }
    if (ok > 0)
      std::cout << "cell counts: min " << mn << ", max " << mx << ", avg "
                << (sum + ok / 2) / ok << " over " << ok << " builds\n";
  }
}

int cmd_cad(const CommonArgs& args) {
  std::string input = read_file(args.file);
  PipelineResult result = run_pipeline(input, to_build_options(args), order_override(args));
  print_run_summary(result, !args.no_timing);
  maybe_write_json(args, input, result);
  return report_outcome(result);
}

int cmd_compare(const CommonArgs& args) {
  std::string input = read_file(args.file);
  BuildOptions opts = to_build_options(args);
  opts.enumerate = true;
  CommonArgs a2 = args;

  opts.strategy = EcStrategy::kResultants;
  PipelineResult res = run_pipeline(input, opts, order_override(args));
  opts.strategy = EcStrategy::kGbReplace;
  PipelineResult gb = run_pipeline(input, opts, order_override(args));

  std::cout << "strategy comparison\n";
  for (const PipelineResult* r : {&res, &gb}) {
    std::cout << "== " << ec_strategy_name(r->strategy) << " ==\n";
    if (r->inconsistent) {
      std::cout << "inconsistent ECs: formula unsatisfiable\n";
      continue;
    }
    print_run_summary(*r, !args.no_timing);
    // per-level degree table of the first run
    if (!r->runs.empty() && r->runs.front().run) {
      std::cout << "level | polys | basis | max degree per variable | op\n";
      for (const auto& st : r->runs.front().run->stats) {
        std::cout << st.level << " | " << st.count_A << " | " << st.count_B << " | ";
        for (std::size_t v = 0; v < st.max_degree.size(); ++v)
          std::cout << (v ? "," : "") << st.max_degree[v];
        std::cout << " | " << proj_op_name(st.op) << "\n";
      }
    }
  }
  if (res.inconsistent && gb.inconsistent) {
    std::cout << "both strategies report unsatisfiable ECs\n";
    return kExitInconsistent;
  }
  if (!args.json_out.empty()) {
    json j;
    j["input"] = input;
    j["resultants"] = pipeline_report(input, res, !args.no_timing, args.with_cells);
    j["gb"] = pipeline_report(input, gb, !args.no_timing, args.with_cells);
    if (args.json_out == "-") std::cout << j.dump(2) << "\n";
    else std::ofstream(args.json_out) << j.dump(2) << "\n";
  }
  int rc1 = report_outcome(res), rc2 = report_outcome(gb);
  return rc1 != 0 ? rc1 : rc2;
}

int cmd_project(const CommonArgs& args) {
  std::string input = read_file(args.file);
  BuildOptions opts = to_build_options(args);
  opts.enumerate = false;
  opts.verify_trials = 0;
  PipelineResult result = run_pipeline(input, opts, order_override(args));
  if (result.inconsistent) {
    std::cout << "inconsistent ECs: formula unsatisfiable\n";
    return kExitInconsistent;
  }
  for (const auto& r : result.runs) {
    std::cout << "designation " << r.designation.to_string(result.order) << "\n";
    std::cout << "level | polys | basis | max degree per variable | op\n";
    for (const auto& st : r.run->stats) {
      std::cout << st.level << " | " << st.count_A << " | " << st.count_B << " | ";
      for (std::size_t v = 0; v < st.max_degree.size(); ++v)
        std::cout << (v ? "," : "") << st.max_degree[v];
      std::cout << " | " << proj_op_name(st.op) << "\n";
    }
  }
  maybe_write_json(args, input, result);
  return 0;
}

int cmd_ecs(const CommonArgs& args) {
  std::string input = read_file(args.file);
  ParsedFormula parsed = parse_formula(input, order_override(args));
  DesignationPlan plan =
      plan_designations(parsed.formula, parsed.order, parse_strategy(args.strategy));
  if (plan.inconsistent) {
    std::cout << "inconsistent ECs: formula unsatisfiable\n";
    return kExitInconsistent;
  }
  std::cout << "candidate buckets (strategy " << args.strategy << "):\n";
  for (std::size_t v = parsed.order->size(); v-- > 0;) {
    std::cout << parsed.order->name(v) << ":";
    auto it = plan.buckets.by_var.find(v);
    if (it == plan.buckets.by_var.end() || it->second.empty()) {
      std::cout << " (none)\n";
      continue;
    }
    std::cout << "\n";
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      const MultiPoly& p = it->second[i];
      std::cout << "  [" << ec_source_name(plan.buckets.tags.at(v)[i]) << "] "
                << p.to_string() << "   degrees:";
      for (int d : p.degrees_per_var()) std::cout << " " << d;
      std::cout << ", total " << p.total_degree() << "\n";
    }
  }
  std::cout << "designations: " << plan.designations.size() << "\n";
  return 0;
}

int cmd_verify(const CommonArgs& args) {
  CommonArgs a = args;
  if (a.verify_trials == 0) a.verify_trials = 1000;
  std::string input = read_file(a.file);
  PipelineResult result = run_pipeline(input, to_build_options(a), order_override(a));
  print_run_summary(result, !a.no_timing);
  int rc = report_outcome(result);
  if (rc != 0) return rc;
  for (const auto& r : result.runs) {
    if (!r.verify) continue;
    for (const auto& d : r.verify->details) std::cout << "  " << d << "\n";
    if (r.verify->violations > 0) rc = 1;
  }
  maybe_write_json(a, input, result);
  return rc;
}

struct GbArgs {
  std::vector<std::string> polys;
  std::string order_spec;
  std::string file;
};

int cmd_gb(const GbArgs& args) {
  VarOrderPtr order;
  PolySet F;
  if (!args.file.empty()) {
    ParsedFormula parsed = parse_formula(
        read_file(args.file),
        args.order_spec.empty() ? nullptr : parse_order_spec(args.order_spec));
    order = parsed.order;
    F = explicit_ecs(parsed.formula);
  } else {
    if (args.order_spec.empty()) throw Error("--order is required with --poly");
    order = parse_order_spec(args.order_spec);
    F = PolySet(order);
    for (const auto& s : args.polys) F.insert(MultiPoly::parse(s, order));
  }
  GroebnerBasis G = buchberger(F, MonomialOrder{MonomialOrder::Kind::kLex, order});
  std::cout << "reduced basis (" << G.gens.size() << " elements):\n";
  std::cout << "poly | mvar | max degree per variable | total\n";
  for (const auto& g : G.gens) {
    std::cout << g.to_string() << " | "
              << (g.mvar() < 0 ? "-" : order->name(g.mvar())) << " | ";
    auto degs = g.degrees_per_var();
    for (std::size_t v = 0; v < degs.size(); ++v) std::cout << (v ? "," : "") << degs[v];
    std::cout << " | " << g.total_degree() << "\n";
  }
  if (G.is_unit_ideal()) {
    std::cout << "unit ideal: the constraints are inconsistent\n";
    return kExitInconsistent;
  }
  return 0;
}

struct ResArgs {
  std::vector<std::string> polys;
  std::string order_spec;
  std::string var;
  std::string chain_file;
};

int cmd_resultant(const ResArgs& args) {
  if (!args.chain_file.empty()) {
    ParsedFormula parsed = parse_formula(
        read_file(args.chain_file),
        args.order_spec.empty() ? nullptr : parse_order_spec(args.order_spec));
    PolySet ecs = explicit_ecs(parsed.formula);
    CandidateBuckets buckets = propagate_resultants(ecs, parsed.order);
    std::cout << "step | eliminated | output | max degree per variable | total\n";
    for (const auto& st : buckets.trace.steps) {
      std::cout << st.op << " | " << st.detail << " | " << st.output.to_string()
                << " | ";
      for (std::size_t v = 0; v < st.degrees.size(); ++v)
        std::cout << (v ? "," : "") << st.degrees[v];
      std::cout << " | " << st.total_degree << "\n";
    }
    if (buckets.inconsistent) {
      std::cout << "constant resultant: the constraints are inconsistent\n";
      return kExitInconsistent;
    }
    return 0;
  }
  if (args.polys.size() != 2 || args.var.empty() || args.order_spec.empty())
    throw Error("resultant needs --order, --var and exactly two --poly");
  VarOrderPtr order = parse_order_spec(args.order_spec);
  int v = order->index_of(args.var);
  if (v < 0) throw Error("unknown variable: " + args.var);
  MultiPoly f = MultiPoly::parse(args.polys[0], order);
  MultiPoly g = MultiPoly::parse(args.polys[1], order);
  std::cout << resultant(f, g, static_cast<std::size_t>(v)).to_string() << "\n";
  return 0;
}

struct BoundsArgs {
  int table = 0;
  int eq = 0;
  int cells = 0;
  int n = 3;
  long m = 1, d = 1;
  int l = 0;
};

int cmd_bounds(const BoundsArgs& args) {
  if (args.table == 1 || args.table == 2) {
    BoundTable t = table_growth(args.n, Int(args.m), Int(args.d), args.l,
                                args.table == 1 ? TableVariant::kIteratedResultant
                                                : TableVariant::kGb);
    std::cout << render_table(t);
    return 0;
  }
  if (args.eq == 1) {
    std::cout << dominant_sign_invariant(args.n, Int(args.m), Int(args.d)).get_str()
              << "\n";
    return 0;
  }
  if (args.eq == 2) {
    std::cout << rat_to_string(dominant_ec(args.n, Int(args.m), Int(args.d), args.l))
              << "\n";
    return 0;
  }
  if (args.eq == 8) {
    Int printed = degree_exponent_printed(args.n, args.l);
    Int direct = degree_exponent_direct(args.n, args.l);
    Int diff = direct - printed;
    std::cout << "degree exponent, printed closed form: " << printed.get_str() << "\n";
    std::cout << "degree exponent, table-derived sum:   " << direct.get_str() << "\n";
    std::cout << "difference (derived - printed):       " << diff.get_str() << "\n";
    return 0;
  }
  if (args.cells == 6 || args.cells == 7) {
    BoundTable t = table_growth(args.n, Int(args.m), Int(args.d), args.l,
                                TableVariant::kIteratedResultant);
    Int b = args.cells == 6 ? cell_bound_product(t) : cell_bound_ec_lifting(t);
    std::cout << b.get_str() << "\n";
    return 0;
  }
  throw Error("bounds: pass --table 1|2, --eq 1|2|8, or --cells 6|7");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truth-invariant CAD construction with equational constraints"};
  app.require_subcommand(1);

  CommonArgs cad_args, compare_args, project_args, ecs_args, verify_args;
  GbArgs gb_args;
  ResArgs res_args;
  BoundsArgs bounds_args;

  add_common(app.add_subcommand("cad", "build truth-invariant CADs"), cad_args);
  add_common(app.add_subcommand("compare", "resultants vs gb-replace side by side"),
             compare_args, false);
  add_common(app.add_subcommand("project", "projection phase only"), project_args);
  add_common(app.add_subcommand("ecs", "show designation candidate buckets"), ecs_args);
  add_common(app.add_subcommand("verify", "build and verify truth invariance"),
             verify_args);

  CLI::App* gb = app.add_subcommand("gb", "reduced lex Groebner basis");
  gb->add_option("--poly", gb_args.polys, "input polynomial (repeatable)");
  gb->add_option("--order", gb_args.order_spec, "variable order, highest first");
  gb->add_option("--file", gb_args.file, "take the explicit ECs of a formula file");

  CLI::App* res = app.add_subcommand("resultant", "resultants and cascades");
  res->add_option("--poly", res_args.polys, "input polynomial (repeatable, two)");
  res->add_option("--order", res_args.order_spec, "variable order, highest first");
  res->add_option("--var", res_args.var, "variable to eliminate");
  res->add_option("--chain", res_args.chain_file,
                  "formula file: print the full propagation cascade");

  CLI::App* bounds = app.add_subcommand("bounds", "growth tables and bounds");
  bounds->add_option("--table", bounds_args.table, "print growth table 1 or 2");
  bounds->add_option("--eq", bounds_args.eq, "evaluate bound 1, 2 or 8");
  bounds->add_option("--cells", bounds_args.cells, "cell-count bound 6 or 7");
  bounds->add_option("-n", bounds_args.n, "number of variables");
  bounds->add_option("-m", bounds_args.m, "number of polynomials");
  bounds->add_option("-d", bounds_args.d, "maximum degree");
  bounds->add_option("-l", bounds_args.l, "number of designated constraints");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (app.got_subcommand("cad")) return cmd_cad(cad_args);
    if (app.got_subcommand("compare")) return cmd_compare(compare_args);
    if (app.got_subcommand("project")) return cmd_project(project_args);
    if (app.got_subcommand("ecs")) return cmd_ecs(ecs_args);
    if (app.got_subcommand("verify")) return cmd_verify(verify_args);
    if (app.got_subcommand("gb")) return cmd_gb(gb_args);
    if (app.got_subcommand("resultant")) return cmd_resultant(res_args);
    if (app.got_subcommand("bounds")) return cmd_bounds(bounds_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceLimitError& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
