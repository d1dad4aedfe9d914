#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "explore/adversary.hpp"
#include "explore/analysis.hpp"
#include "explore/engine.hpp"
#include "explore/params.hpp"
#include "explore/rational.hpp"

namespace explore {

struct RunSpec {
  Params params;
  std::string algorithm;
  bool lift = false;
  bool verify_opt = false;

  std::string stem() const;  // file name stem for per-run outputs
};

struct RunReport {
  RunSpec spec;
  Weight alg_cost;
  Weight opt_surrogate;
  Weight opt_formula;
  Weight analytic_lb;
  Rational ratio;           // alg_cost / opt_surrogate
  Rational analytic;        // analytic_lb / opt_formula
  Rational limit;
  bool lower_bound_ok = false;
  bool opt_matches = false;
  bool replay_ok = false;
  std::string replay_reason;
  std::optional<bool> oracle_ok;
  std::string oracle_detail;
  std::size_t distinct_weights = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t steps = 0;
  std::uint64_t transcript_hash = 0;
  double seconds = 0;
  std::string error;
  bool pass = false;

  // Signed difference opt_surrogate - opt_formula.
  std::string opt_delta() const;
};

// Heavy per-run products, kept only when asked for.
struct RunArtifacts {
  Trace trace;
  FinalWorld world;
  std::string resolution_log;
};

RunReport execute(const RunSpec& spec, RunArtifacts* keep = nullptr);

struct ExperimentConfig {
  std::vector<Topology> topologies{Topology::Rec};
  std::vector<std::uint32_t> xs{4};
  std::vector<std::optional<std::uint32_t>> ys{std::nullopt};  // nullopt: topology default
  std::vector<std::uint32_t> levels{0};
  std::vector<std::string> algorithms{"nearest_neighbor", "dfs"};
  std::string out_dir = "results";
  std::string dot_dir;  // empty: no DOT export
  bool verify_opt = false;
  bool lift = false;
  unsigned workers = 0;  // 0: hardware concurrency
  std::size_t dot_max_vertices = 5000;
  std::size_t trace_max_moves = 2'000'000;
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig config_from_json_text(const std::string& text);

// Cartesian product of the config, skipping combinations a topology does not
// admit (levels for simple, odd x for chain, y above x/2).
std::vector<RunSpec> expand(const ExperimentConfig& config);

// Runs everything on a worker pool, writes outputs under out_dir and returns
// reports in expansion order.
std::vector<RunReport> run_experiments(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "topology,x,y,N,algorithm,alg_cost,opt_surrogate,opt_formula,analytic_lb,ratio_num,ratio_den,ratio_float,limit_float,pass";

std::string emit_csv(const std::vector<RunReport>& reports);
std::string report_json(const RunReport& report);
std::string trace_json(const Trace& trace);
std::string formula_table_json(const FormulaTable& table);
std::string formula_table_csv(const FormulaTable& table);

// Analytic ratio against its limit for x = 2^k, k in [min_exp, max_exp].
std::string emit_limit_curve(Topology topology, std::uint32_t min_exp, std::uint32_t max_exp,
                             const std::vector<std::uint32_t>& levels);

std::string format_ratio(const Rational& r);  // fixed, 6 decimals

}  // namespace explore
