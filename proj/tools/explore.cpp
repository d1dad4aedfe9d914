#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "explore/error.hpp"
#include "explore/harness.hpp"
#include "explore/log.hpp"

using namespace explore;

namespace {

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const std::string& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      std::size_t end = item.find(',', start);
      if (end == std::string::npos) end = item.size();
      if (end > start) out.push_back(item.substr(start, end - start));
      start = end + 1;
    }
  }
  return out;
}

template <class T>
std::vector<T> parse_numbers(const std::vector<std::string>& items) {
  std::vector<T> out;
  for (const std::string& s : split_commas(items)) {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    out.push_back(static_cast<T>(v));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online graph exploration lower-bound harness"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Run adversary experiments");
  std::string config_path, out_dir, dot_dir;
  std::vector<std::string> topologies, xs, ys, levels, algorithms;
  bool verify_opt = false, lift = false;
  std::optional<unsigned> workers;
  std::optional<std::size_t> dot_max, trace_max;
  run_cmd->add_option("--config", config_path, "JSON config file");
  run_cmd->add_option("--topology", topologies, "simple, rec or chain (comma list allowed)");
  run_cmd->add_option("--x", xs, "x values (comma list allowed)");
  run_cmd->add_option("--y", ys, "y values or 'default'");
  run_cmd->add_option("--levels", levels, "recursion depth N (comma list allowed)");
  run_cmd->add_option("--algorithm", algorithms, "nearest_neighbor, dfs (comma list allowed)");
  run_cmd->add_option("--export-dot", dot_dir, "write DOT files into this directory");
  run_cmd->add_flag("--verify-opt", verify_opt, "check one finalized block against the exact oracle");
  run_cmd->add_flag("--lift", lift, "replace zero weights by 1 before running");
  run_cmd->add_option("--out", out_dir, "output directory");
  run_cmd->add_option("--workers", workers, "worker threads (default: logical cores)");
  run_cmd->add_option("--dot-max-vertices", dot_max, "largest graph exported in full");
  run_cmd->add_option("--trace-max-moves", trace_max, "largest trace written to disk");

  auto* limits_cmd = app.add_subcommand("limits", "Write analytic ratio against its limit as CSV");
  std::string limit_topology = "rec", limit_out;
  unsigned min_exp = 4, max_exp = 12;
  std::vector<std::uint32_t> limit_levels{0, 1, 2, 3};
  limits_cmd->add_option("--topology", limit_topology, "simple, rec or chain");
  limits_cmd->add_option("--min-exp", min_exp, "smallest x = 2^k");
  limits_cmd->add_option("--max-exp", max_exp, "largest x = 2^k");
  limits_cmd->add_option("--levels", limit_levels, "N values")->delimiter(',');
  limits_cmd->add_option("--out", limit_out, "CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (limits_cmd->parsed()) {
      if (min_exp > max_exp || max_exp > 12 || min_exp < 1)
        throw ExploreError(ErrorCode::ConfigError, "exponent range must satisfy 1 <= min <= max <= 12");
      std::string csv = emit_limit_curve(parse_topology(limit_topology), min_exp, max_exp, limit_levels);
      if (limit_out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream f(limit_out, std::ios::binary);
        if (!f) throw ExploreError(ErrorCode::IoError, "cannot write " + limit_out);
        f << csv;
      }
      return 0;
    }

    ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
    if (config_path.empty() && (topologies.empty() || xs.empty() || algorithms.empty()))
      throw ExploreError(ErrorCode::ConfigError, "give --config or at least --topology, --x and --algorithm");
    try {
      if (!topologies.empty()) {
        config.topologies.clear();
        for (const auto& t : split_commas(topologies)) config.topologies.push_back(parse_topology(t));
      }
      if (!xs.empty()) config.xs = parse_numbers<std::uint32_t>(xs);
      if (!ys.empty()) {
        config.ys.clear();
        for (const auto& y : split_commas(ys)) {
          if (y == "default")
            config.ys.push_back(std::nullopt);
          else
            config.ys.push_back(parse_numbers<std::uint32_t>({y}).front());
        }
      }
      if (!levels.empty()) config.levels = parse_numbers<std::uint32_t>(levels);
    } catch (const std::logic_error& e) {
      throw ExploreError(ErrorCode::ConfigError, std::string("bad numeric flag value: ") + e.what());
    }
    if (!algorithms.empty()) config.algorithms = split_commas(algorithms);
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (!dot_dir.empty()) config.dot_dir = dot_dir;
    if (verify_opt) config.verify_opt = true;
    if (lift) config.lift = true;
    if (workers) config.workers = *workers;
    if (dot_max) config.dot_max_vertices = *dot_max;
    if (trace_max) config.trace_max_moves = *trace_max;

    std::vector<RunReport> reports = run_experiments(config);
    int failures = 0;
    for (const RunReport& r : reports) {
      std::cout << r.spec.stem() << ": " << (r.pass ? "pass" : "FAIL");
      if (r.error.empty())
        std::cout << "  ratio " << format_ratio(r.ratio) << " (analytic " << format_ratio(r.analytic) << ", limit "
                  << format_ratio(r.limit) << ")";
      else
        std::cout << "  " << r.error;
      std::cout << '\n';
      if (!r.pass) ++failures;
    }
    std::cout << reports.size() << " runs, " << failures << " failed; results in " << config.out_dir << "/results.csv\n";
    return failures == 0 ? 0 : 1;
  } catch (const ExploreError& e) {
    std::cerr << "explore: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "explore: " << e.what() << '\n';
    return 2;
  }
}
