// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "explore/algorithms.hpp"
#include "explore/analysis.hpp"
#include "explore/error.hpp"
#include "explore/harness.hpp"

using namespace explore;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

std::vector<RunReport> all_reports;

RunReport run_one(const Params& p, const std::string& alg, bool lift = false, bool verify = false) {
  RunReport r = execute(RunSpec{p, alg, lift, verify});
  all_reports.push_back(r);
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational frac(std::uint64_t n, std::uint64_t d) { return Rational(Weight(n), Weight(d)); }

std::string secs(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

Verdict simple_formulas() {
  Verdict v;
  double worst = 0;
  for (std::uint32_t x : {10u, 20u, 50u, 100u})
    for (const auto& alg : algorithm_names()) {
      RunReport r = run_one(make_params(Topology::Simple, x), alg);
      std::string at = r.spec.stem();
      worst = std::max(worst, r.seconds);
      if (!r.error.empty()) v.fail(at + ": " + r.error);
      else if (!r.lower_bound_ok) v.fail(at + ": ALG below 4x^2-x");
      else if (r.opt_surrogate != Weight(2ull * x * x + 6ull * x)) v.fail(at + ": tour " + r.opt_surrogate.to_string());
      else if (r.seconds >= 1.0) v.fail(at + ": took " + secs(r.seconds));
      if (x == 100 && r.error.empty()) {
        if (r.alg_cost < Weight(39900)) v.fail(at + ": ALG " + r.alg_cost.to_string() + " < 39900");
        if (r.opt_surrogate != Weight(20600)) v.fail(at + ": OPT surrogate " + r.opt_surrogate.to_string());
        if (r.ratio < frac(1937, 1000)) v.fail(at + ": ratio " + r.ratio.to_string() + " < 1.937");
      }
    }
  if (v.ok) v.note = "max run " + secs(worst);
  return v;
}

Verdict rec_bounds() {
  Verdict v;
  double worst = 0;
  for (std::uint32_t x : {6u, 10u, 16u})
    for (std::uint32_t n : {1u, 2u, 3u})
      for (const auto& alg : algorithm_names()) {
        RunReport r = run_one(make_params(Topology::Rec, x, 0u, n), alg);
        std::string at = r.spec.stem();
        worst = std::max(worst, r.seconds);
        if (!r.error.empty()) v.fail(at + ": " + r.error);
        else if (!r.lower_bound_ok) v.fail(at + ": ALG below x*U_N");
        else if (!r.opt_matches) v.fail(at + ": tour differs from (x+3)V_N by " + r.opt_delta());
        else if (r.seconds >= 30.0) v.fail(at + ": took " + secs(r.seconds));
      }
  if (v.ok) v.note = "max run " + secs(worst);
  return v;
}

Verdict chain_bounds() {
  Verdict v;
  double worst = 0;
  std::string deltas;
  for (std::uint32_t x : {4u, 8u, 12u})
    for (std::uint32_t n : {0u, 1u, 2u})
      for (const auto& alg : algorithm_names()) {
        RunReport r = run_one(make_params(Topology::Chain, x, x / 2, n), alg);
        std::string at = r.spec.stem();
        worst = std::max(worst, r.seconds);
        if (!r.error.empty()) v.fail(at + ": " + r.error);
        else if (!r.lower_bound_ok) v.fail(at + ": ALG below x^2(U°_N + 2e_N)");
        else if (r.seconds >= 60.0) v.fail(at + ": took " + secs(r.seconds));
        if (r.error.empty() && alg == algorithm_names().front())
          deltas += (deltas.empty() ? "" : " ") + ("x" + std::to_string(x) + "N" + std::to_string(n) + ":" + r.opt_delta());
      }
  if (v.ok) v.note = "max run " + secs(worst) + "; tour minus formula " + deltas;
  return v;
}

Verdict identities() {
  Verdict v;
  std::size_t checks = 0;
  for (std::uint32_t x = 2; x <= 32; ++x)
    for (std::uint32_t y = 0; y <= x / 2; ++y) {
      FormulaTable f = formulas(x, y, 5);
      for (int i = 1; i <= 5; ++i, ++checks)
        if (f.e_at(i) != Weight(x + y) * f.e_at(i - 1)) v.fail("e recursion at x=" + std::to_string(x));
      for (std::uint32_t i = 0; i <= 5; ++i, ++checks)
        if (closed_form_u(x, y, i) != f.u_at(static_cast<int>(i))) v.fail("U closed form at x=" + std::to_string(x));
      if (x % 2 == 0 && y == x / 2)
        for (std::uint32_t n = 0; n <= 5; ++n, ++checks) {
          FormulaTable g = formulas(x, y, n);
          if (closing_sum_unrolled(x, n) != g.u_closing + Weight(2) * g.e_at(static_cast<int>(n)))
            v.fail("closing form at x=" + std::to_string(x) + " N=" + std::to_string(n));
        }
    }
  if (v.ok) v.note = std::to_string(checks) + " exact comparisons";
  return v;
}

Verdict convergence() {
  Verdict v;
  for (Topology t : {Topology::Rec, Topology::Chain})
    for (std::uint32_t n = 0; n <= 3; ++n) {
      Rational prev;
      for (std::uint32_t k = 4; k <= 12; ++k) {
        std::uint32_t x = 1u << k;
        Rational r = analytic_ratio(make_params(t, x, t == Topology::Rec ? 0u : x / 2, n));
        if (k > 4 && !(prev < r)) v.fail(std::string(to_string(t)) + " not increasing at x=" + std::to_string(x));
        prev = r;
      }
      Rational lim = limit_ratio(t, n);
      Rational floor98(lim.num() * Weight(98), lim.den() * Weight(100));
      if (prev < floor98) v.fail(std::string(to_string(t)) + " N=" + std::to_string(n) + " gap above 2%");
    }
  if (v.ok) v.note = "rec and chain, N 0..3";
  return v;
}

Verdict block_oracle() {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (std::uint32_t x = 2; x <= 8; ++x) {
    for (Topology t : {Topology::Simple, Topology::Rec}) {
      Params p = t == Topology::Simple ? make_params(t, x) : make_params(t, x, 0u, 0u);
      RunReport r = execute(RunSpec{p, "nearest_neighbor", false, true});
      if (!r.error.empty()) v.fail(r.spec.stem() + ": " + r.error);
      else if (r.oracle_ok != true) v.fail(r.spec.stem() + ": " + r.oracle_detail);
      else ++checked;
    }
    if (x % 2 == 0) {
      RunReport r = execute(RunSpec{make_params(Topology::Chain, x, x / 2, 0u), "dfs", false, true});
      if (!r.error.empty()) v.fail(r.spec.stem() + ": " + r.error);
      else if (r.oracle_ok != true) v.fail(r.spec.stem() + ": " + r.oracle_detail);
      else ++checked;
    }
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s >= 5.0) v.fail("took " + secs(s));
  if (v.ok) v.note = std::to_string(checked) + " blocks in " + secs(s);
  return v;
}

Verdict consistency() {
  Verdict v;
  for (const RunReport& r : all_reports)
    if (!r.error.empty() || !r.replay_ok) v.fail(r.spec.stem() + ": replay " + r.replay_reason + r.error);

  ExperimentConfig c;
  c.topologies = {Topology::Simple, Topology::Rec, Topology::Chain};
  c.xs = {4, 10};
  c.levels = {0, 1};
  c.dot_dir = "dot";
  fs::path base = fs::temp_directory_path() / "explore_acceptance";
  fs::remove_all(base);
  std::size_t compared = 0;
  try {
    c.out_dir = (base / "a").string();
    c.workers = 1;
    run_experiments(c);
    c.out_dir = (base / "b").string();
    c.workers = 4;
    run_experiments(c);
    for (const auto& entry : fs::recursive_directory_iterator(base / "a")) {
      if (!entry.is_regular_file() || entry.path().filename() == "timings.csv") continue;
      fs::path rel = fs::relative(entry.path(), base / "a");
      if (slurp(entry.path()) != slurp(base / "b" / rel)) v.fail(rel.string() + " differs between reruns");
      ++compared;
    }
  } catch (const std::exception& e) {
    v.fail(e.what());
  }
  fs::remove_all(base);
  if (compared == 0) v.fail("rerun produced no files");
  if (v.ok) v.note = std::to_string(all_reports.size()) + " runs replayed; " + std::to_string(compared) + " files identical";
  return v;
}

Verdict lifted_chain() {
  Verdict v;
  const std::uint32_t n = 2;
  const std::uint64_t k = n + 2;
  // 10/3 - 2/(3k) - 1/2 over the common denominator 6k
  Rational threshold = frac(20 * k - 4 - 3 * k, 6 * k);
  std::string seen;
  for (const auto& alg : algorithm_names()) {
    RunReport r = run_one(make_params(Topology::Chain, 12, 6u, n), alg, true);
    std::string at = r.spec.stem();
    if (!r.error.empty()) {
      v.fail(at + ": " + r.error);
      continue;
    }
    if (r.distinct_weights != k) v.fail(at + ": " + std::to_string(r.distinct_weights) + " distinct weights");
    if (!(r.ratio > threshold)) v.fail(at + ": ratio " + format_ratio(r.ratio) + " <= " + format_ratio(threshold));
    seen += " " + alg + "=" + format_ratio(r.ratio);
  }
  if (v.ok) v.note = "threshold " + format_ratio(threshold) + ";" + seen;
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Verdict (*check)();
  };
  const Criterion criteria[] = {
      {"simple exact formulas", simple_formulas},
      {"rec bounds", rec_bounds},
      {"chain bounds", chain_bounds},
      {"recursion identities", identities},
      {"asymptotic convergence", convergence},
      {"block optimum oracle", block_oracle},
      {"adversary consistency", consistency},
      {"lifted chain ratio", lifted_chain},
  };
  int failed = 0, index = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.fail(e.what());
    }
    std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << ++index << " (" << c.name << "): " << v.note << std::endl;
    if (!v.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
