#include "explore/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "explore/algorithms.hpp"
#include "explore/error.hpp"
#include "explore/log.hpp"

namespace explore {

namespace fs = std::filesystem;
using nlohmann::json;

std::string RunSpec::stem() const {
  std::string s = std::string(to_string(params.topology)) + "_x" + std::to_string(params.x) + "_y" +
                  std::to_string(params.y) + "_N" + std::to_string(params.levels) + "_" + algorithm;
  if (lift) s += "_lift";
  return s;
}

std::string RunReport::opt_delta() const {
  if (opt_surrogate >= opt_formula) return "+" + (opt_surrogate - opt_formula).to_string();
  return "-" + (opt_formula - opt_surrogate).to_string();
}

std::string format_ratio(const Rational& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << r.to_double();
  return os.str();
}

namespace {

void check_block_oracle(const FinalWorld& world, RunReport& r) {
  const Params& p = world.params;
  for (const BlockSummary& b : world.blocks) {
    if (b.level != 0 || b.kind != BlockKind::Normal || b.tail == kNoVertex) continue;
    std::vector<VertexId> old_ids;
    std::vector<VertexId> members = world.block_vertices(b.id);
    if (members.size() > kOracleMaxVertices) {
      r.oracle_detail = "skipped: block has " + std::to_string(members.size()) + " vertices";
      return;
    }
    WeightedGraph sub = induced_subgraph(world.graph, members, &old_ids);
    VertexId start = kNoVertex;
    for (VertexId i = 0; i < old_ids.size(); ++i)
      if (old_ids[i] == b.tail) start = i;
    Weight got = exact_exploration_opt(sub, start, false);
    Weight want(p.topology == Topology::Simple ? p.x : p.x + 2);
    r.oracle_ok = got == want;
    r.oracle_detail = "block " + std::to_string(b.id) + ": oracle " + got.to_string() + ", expected " + want.to_string();
    return;
  }
  r.oracle_ok = false;
  r.oracle_detail = "no normal level-0 block found";
}

}  // namespace

RunReport execute(const RunSpec& spec, RunArtifacts* keep) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  r.spec = spec;
  const Params& p = spec.params;
  try {
    r.opt_formula = opt_formula(p);
    r.analytic_lb = analytic_alg_lower_bound(p);
    r.analytic = analytic_ratio(p);
    r.limit = spec.lift && p.topology == Topology::Chain ? lifted_chain_limit(p.levels) : limit_ratio(p.topology, p.levels);

    AdversaryWorld world(p, spec.lift);
    auto algorithm = make_algorithm(spec.algorithm);
    RunResult result = run(*algorithm, world);
    FinalWorld final_world = world.finalize();
    Tour tour = explicit_opt_tour(final_world);

    r.alg_cost = result.trace.total;
    r.opt_surrogate = tour.cost;
    r.ratio = Rational(r.alg_cost, r.opt_surrogate);
    r.lower_bound_ok = r.alg_cost >= r.analytic_lb;
    r.opt_matches = r.opt_surrogate == r.opt_formula;
    r.steps = result.trace.moves.size();
    r.vertices = final_world.graph.vertex_count();
    r.edges = final_world.graph.edge_count();
    r.transcript_hash = world.transcript_hash();
    r.distinct_weights = distinct_weight_count(final_world.graph);

    ReplayVerdict verdict = replay_validate(result.trace, final_world.graph, final_world.origin);
    ReplayVerdict tour_verdict = replay_validate(tour_as_trace(tour, final_world.graph), final_world.graph, final_world.origin);
    r.replay_ok = verdict.ok && tour_verdict.ok;
    r.replay_reason = !verdict.ok ? verdict.reason : (!tour_verdict.ok ? "opt tour: " + tour_verdict.reason : "");

    if (spec.verify_opt) check_block_oracle(final_world, r);

    bool opt_required = p.topology != Topology::Chain && !spec.lift;
    r.pass = r.lower_bound_ok && r.replay_ok && (r.opt_matches || !opt_required) && r.oracle_ok.value_or(true);
    if (keep != nullptr) {
      keep->trace = std::move(result.trace);
      keep->resolution_log = world.log().to_jsonl();
      keep->world = std::move(final_world);
    }
  } catch (const ExploreError& e) {
    r.error = e.what();
    r.pass = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---- config ---------------------------------------------------------------

namespace {

template <class T>
std::vector<T> as_list(const json& v) {
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

}  // namespace

ExperimentConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ExploreError(ErrorCode::ConfigError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ExploreError(ErrorCode::ConfigError, "config must be a JSON object");
  static const std::set<std::string> known{"topologies", "topology", "x", "y", "levels", "algorithms", "algorithm",
                                           "out", "export_dot", "verify_opt", "lift", "workers",
                                           "dot_max_vertices", "trace_max_moves"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw ExploreError(ErrorCode::ConfigError, "unknown config key '" + it.key() + "'");
  ExperimentConfig c;
  try {
    if (j.contains("topologies") || j.contains("topology")) {
      c.topologies.clear();
      for (const auto& t : as_list<std::string>(j.contains("topologies") ? j["topologies"] : j["topology"]))
        c.topologies.push_back(parse_topology(t));
    }
    if (j.contains("x")) c.xs = as_list<std::uint32_t>(j["x"]);
    if (j.contains("y")) {
      c.ys.clear();
      const json& y = j["y"];
      for (const json& item : y.is_array() ? y : json::array({y})) {
        if (item.is_string() && item.get<std::string>() == "default")
          c.ys.push_back(std::nullopt);
        else
          c.ys.push_back(item.get<std::uint32_t>());
      }
    }
    if (j.contains("levels")) c.levels = as_list<std::uint32_t>(j["levels"]);
    if (j.contains("algorithms") || j.contains("algorithm"))
      c.algorithms = as_list<std::string>(j.contains("algorithms") ? j["algorithms"] : j["algorithm"]);
    if (j.contains("out")) c.out_dir = j["out"].get<std::string>();
    if (j.contains("export_dot")) {
      if (j["export_dot"].is_boolean())
        c.dot_dir = j["export_dot"].get<bool>() ? "dot" : "";
      else
        c.dot_dir = j["export_dot"].get<std::string>();
    }
    if (j.contains("verify_opt")) c.verify_opt = j["verify_opt"].get<bool>();
    if (j.contains("lift")) c.lift = j["lift"].get<bool>();
    if (j.contains("workers")) c.workers = j["workers"].get<unsigned>();
    if (j.contains("dot_max_vertices")) c.dot_max_vertices = j["dot_max_vertices"].get<std::size_t>();
    if (j.contains("trace_max_moves")) c.trace_max_moves = j["trace_max_moves"].get<std::size_t>();
  } catch (const json::exception& e) {
    throw ExploreError(ErrorCode::ConfigError, std::string("bad config value: ") + e.what());
  }
  for (const auto& a : c.algorithms) make_algorithm(a);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExploreError(ErrorCode::ConfigError, "cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json_text(ss.str());
}

std::vector<RunSpec> expand(const ExperimentConfig& config) {
  std::vector<RunSpec> out;
  std::set<std::tuple<int, std::uint32_t, std::uint32_t, std::uint32_t, std::string>> seen;
  for (Topology t : config.topologies)
    for (std::uint32_t x : config.xs)
      for (const auto& y : config.ys)
        for (std::uint32_t n : config.levels)
          for (const auto& a : config.algorithms) {
            std::string why;
            if (t == Topology::Simple && n != 0) why = "simple worlds have no levels";
            else if (t == Topology::Chain && x % 2 != 0) why = "chain needs even x";
            else if (y && *y > x / 2) why = "y above x/2";
            else if (x < 2) why = "x below 2";
            if (!why.empty()) {
              log_info("skipping " + std::string(to_string(t)) + " x=" + std::to_string(x) + " N=" + std::to_string(n) + ": " + why);
              continue;
            }
            RunSpec s;
            s.params = make_params(t, x, t == Topology::Simple ? std::nullopt : y, n);
            s.algorithm = make_algorithm(a)->name();
            s.lift = config.lift;
            s.verify_opt = config.verify_opt;
            if (!seen.insert({static_cast<int>(t), x, s.params.y, n, s.algorithm}).second) continue;
            out.push_back(s);
          }
  return out;
}

// ---- output ---------------------------------------------------------------

std::string emit_csv(const std::vector<RunReport>& reports) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const RunReport& r : reports) {
    const Params& p = r.spec.params;
    os << to_string(p.topology) << ',' << p.x << ',' << p.y << ',' << p.levels << ',' << r.spec.algorithm
       << (r.spec.lift ? "+lift" : "") << ',';
    if (r.error.empty())
      os << r.alg_cost.to_string() << ',' << r.opt_surrogate.to_string() << ',';
    else
      os << ",,";
    os << r.opt_formula.to_string() << ',' << r.analytic_lb.to_string() << ',';
    if (r.error.empty())
      os << r.ratio.num().to_string() << ',' << r.ratio.den().to_string() << ',' << format_ratio(r.ratio) << ',';
    else
      os << ",,,";
    os << format_ratio(r.limit) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

namespace {
json ratio_json(const Rational& r) {
  return json{{"numerator", r.num().to_string()}, {"denominator", r.den().to_string()}, {"float", r.to_double()}};
}
}  // namespace

std::string report_json(const RunReport& r) {
  const Params& p = r.spec.params;
  json j;
  j["topology"] = std::string(to_string(p.topology));
  j["x"] = p.x;
  j["y"] = p.y;
  j["N"] = p.levels;
  j["algorithm"] = r.spec.algorithm;
  j["lifted"] = r.spec.lift;
  j["opt_formula"] = r.opt_formula.to_string();
  j["analytic_lb"] = r.analytic_lb.to_string();
  j["analytic_ratio"] = ratio_json(r.analytic);
  j["limit"] = ratio_json(r.limit);
  if (!r.error.empty()) {
    j["error"] = r.error;
  } else {
    j["alg_cost"] = r.alg_cost.to_string();
    j["opt_surrogate"] = r.opt_surrogate.to_string();
    j["opt_delta"] = r.opt_delta();
    j["ratio"] = ratio_json(r.ratio);
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["steps"] = r.steps;
    j["distinct_weights"] = r.distinct_weights;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(r.transcript_hash));
    j["transcript_hash"] = hex;
    j["checks"] = {{"lower_bound", r.lower_bound_ok}, {"opt_matches_formula", r.opt_matches}, {"replay", r.replay_ok}};
    if (!r.replay_reason.empty()) j["checks"]["replay_reason"] = r.replay_reason;
    if (r.oracle_ok) {
      j["checks"]["block_oracle"] = *r.oracle_ok;
      j["checks"]["block_oracle_detail"] = r.oracle_detail;
    }
  }
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

std::string trace_json(const Trace& trace) {
  std::string out;
  out.reserve(trace.moves.size() * 40 + 64);
  out += "{\"moves\":[";
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& m = trace.moves[i];
    if (i) out += ',';
    out += "\n{\"from\":" + std::to_string(m.from) + ",\"to\":" + std::to_string(m.to) + ",\"weight\":" + m.weight.to_string() + "}";
  }
  out += "\n],\"total_cost\":" + trace.total.to_string() + "}\n";
  return out;
}

std::string formula_table_json(const FormulaTable& f) {
  json rows = json::array();
  for (int i = -1; i <= static_cast<int>(f.levels); ++i)
    rows.push_back({{"i", i}, {"e", f.e_at(i).to_string()}, {"t", f.t_at(i).to_string()}, {"u", f.u_at(i).to_string()}, {"v", f.v_at(i).to_string()}});
  json j{{"x", f.x}, {"y", f.y}, {"N", f.levels}, {"rows", rows}, {"u_closing", f.u_closing.to_string()}};
  return j.dump(2) + "\n";
}

std::string formula_table_csv(const FormulaTable& f) {
  std::ostringstream os;
  os << "i,e,t,u,v\n";
  for (int i = -1; i <= static_cast<int>(f.levels); ++i)
    os << i << ',' << f.e_at(i).to_string() << ',' << f.t_at(i).to_string() << ',' << f.u_at(i).to_string() << ','
       << f.v_at(i).to_string() << '\n';
  return os.str();
}

std::string emit_limit_curve(Topology topology, std::uint32_t min_exp, std::uint32_t max_exp,
                             const std::vector<std::uint32_t>& levels) {
  std::ostringstream os;
  os << "topology,x,N,ratio_num,ratio_den,ratio_float,limit_num,limit_den,limit_float,relative_gap\n";
  for (std::uint32_t n : levels) {
    Rational limit = limit_ratio(topology, n);
    for (std::uint32_t k = min_exp; k <= max_exp; ++k) {
      Params p = make_params(topology, 1u << k, std::nullopt, topology == Topology::Simple ? 0 : n);
      Rational r = analytic_ratio(p);
      double gap = (limit.to_double() - r.to_double()) / limit.to_double();
      os << to_string(topology) << ',' << p.x << ',' << n << ',' << r.num().to_string() << ',' << r.den().to_string() << ','
         << format_ratio(r) << ',' << limit.num().to_string() << ',' << limit.den().to_string() << ','
         << format_ratio(limit) << ',' << std::setprecision(6) << std::fixed << gap << '\n';
    }
    if (topology == Topology::Simple) break;
  }
  return os.str();
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ExploreError(ErrorCode::IoError, "cannot write " + path.string());
  out << content;
}

}  // namespace

std::vector<RunReport> run_experiments(const ExperimentConfig& config) {
  std::vector<RunSpec> specs = expand(config);
  const fs::path out(config.out_dir);
  std::error_code ec;
  fs::create_directories(out / "runs", ec);
  fs::create_directories(out / "formulas", ec);
  if (ec) throw ExploreError(ErrorCode::IoError, "cannot create " + out.string() + ": " + ec.message());
  fs::path dot_dir;
  if (!config.dot_dir.empty()) {
    dot_dir = fs::path(config.dot_dir).is_absolute() ? fs::path(config.dot_dir) : out / config.dot_dir;
    fs::create_directories(dot_dir, ec);
    if (ec) throw ExploreError(ErrorCode::IoError, "cannot create " + dot_dir.string());
  }

  std::vector<RunReport> reports(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      RunArtifacts art;
      RunReport r = execute(specs[i], &art);
      const std::string stem = specs[i].stem();
      log_info(stem + (r.pass ? " pass" : " FAIL") + (r.error.empty() ? "" : ": " + r.error));
      write_file(out / "runs" / (stem + ".report.json"), report_json(r));
      if (r.error.empty()) {
        if (art.trace.moves.size() <= config.trace_max_moves)
          write_file(out / "runs" / (stem + ".trace.json"), trace_json(art.trace));
        write_file(out / "runs" / (stem + ".log.jsonl"), art.resolution_log);
        if (!dot_dir.empty()) {
          DotOptions opts;
          opts.max_vertices = config.dot_max_vertices;
          write_file(dot_dir / (stem + ".dot"), export_dot(art.world.graph, art.world.annotations(), opts));
        }
      }
      reports[i] = std::move(r);
    }
  };
  unsigned n = config.workers != 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, specs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  write_file(out / "results.csv", emit_csv(reports));
  std::ostringstream timings;
  timings << "run,seconds\n";
  for (const RunReport& r : reports) timings << r.spec.stem() << ',' << std::setprecision(3) << std::fixed << r.seconds << '\n';
  write_file(out / "timings.csv", timings.str());
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> tables;
  for (const RunSpec& s : specs) tables.insert({s.params.x, s.params.y, s.params.top_level()});
  for (const auto& [x, y, n_levels] : tables) {
    FormulaTable f;
    try {
      f = formulas(x, y, n_levels);
    } catch (const ExploreError& e) {
      log_info("formula table x=" + std::to_string(x) + " N=" + std::to_string(n_levels) + " skipped: " + e.what());
      continue;
    }
    std::string name = "x" + std::to_string(x) + "_y" + std::to_string(y) + "_N" + std::to_string(n_levels);
    write_file(out / "formulas" / (name + ".json"), formula_table_json(f));
    write_file(out / "formulas" / (name + ".csv"), formula_table_csv(f));
  }
  return reports;
}

}  // namespace explore
