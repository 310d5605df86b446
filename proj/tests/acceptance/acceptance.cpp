// Copyright 2026 The dnsga Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Usage: dnsga_acceptance [criterion...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "dnsga/dataset.hpp"
#include "dnsga/evaluator.hpp"
#include "dnsga/experiment.hpp"
#include "dnsga/initialization.hpp"
#include "dnsga/knn.hpp"
#include "dnsga/metrics.hpp"
#include "dnsga/optimizer.hpp"
#include "dnsga/pareto.hpp"
#include "dnsga/random.hpp"
#include "dnsga/stats.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using dnsga::Variant;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// ---------------------------------------------------------------- 1

Outcome nds_oracle() {
  dnsga::Rng rng(1001);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.index(64);
    std::vector<dnsga::ObjectiveVector> objs(n);
    std::vector<oracle::Point> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
      objs[i] = {rng.uniform01(), rng.uniform01()};
      pts[i] = {objs[i].error, objs[i].ratio};
    }
    if (dnsga::non_dominated_sort(objs) != oracle::naive_sort(pts)) ++mismatches;
  }
  return {mismatches == 0, fmt("500 populations, %.0f mismatches", static_cast<double>(mismatches))};
}

// ---------------------------------------------------------------- 2

Outcome hypervolume() {
  using V = std::vector<dnsga::ObjectiveVector>;
  bool ok = dnsga::hypervolume_2d(V{{0, 0}}) == 1.0 && dnsga::hypervolume_2d(V{{0.5, 0.5}}) == 0.25;
  dnsga::Rng rng(2002);
  double worst_grid = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    V f(1 + rng.index(20));
    std::vector<oracle::Point> pts;
    for (auto& p : f) {
      p = {rng.uniform01(), rng.uniform01()};
      pts.push_back({p.error, p.ratio});
    }
    worst_grid = std::max(worst_grid, std::abs(dnsga::hypervolume_2d(f) - oracle::grid_hv(pts)));
  }
  double worst_ie = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    V f(3);
    for (auto& p : f) p = {rng.uniform01(), rng.uniform01()};
    const double ie = oracle::inclusion_exclusion({f[0].error, f[0].ratio}, {f[1].error, f[1].ratio},
                                                  {f[2].error, f[2].ratio});
    worst_ie = std::max(worst_ie, std::abs(dnsga::hypervolume_2d(f) - ie));
  }
  std::size_t non_monotone = 0;
  for (int trial = 0; trial < 100; ++trial) {
    V f(1 + rng.index(15));
    for (auto& p : f) p = {rng.uniform01(), rng.uniform01()};
    const double before = dnsga::hypervolume_2d(f);
    f.push_back({rng.uniform01(), rng.uniform01()});
    if (dnsga::hypervolume_2d(f) < before) ++non_monotone;
  }
  ok = ok && worst_grid <= 2e-3 && worst_ie <= 1e-12 && non_monotone == 0;
  return {ok, fmt("grid max err %.2e, incl-excl max err %.2e, monotone violations %.0f", worst_grid, worst_ie,
                  static_cast<double>(non_monotone))};
}

// ---------------------------------------------------------------- 3

Outcome initializers() {
  dnsga::Rng rng(3003);
  const auto uc = dnsga::initialize({10000, 100, 1, 100, dnsga::InitMethod::kUniformCovering}, rng);
  std::vector<double> bucket(101, 0.0);
  for (const auto& g : uc) bucket[g.popcount()] += 1.0;
  double chi = bucket[0] > 0 ? 1e9 : 0.0;
  for (int c = 1; c <= 100; ++c) chi += (bucket[c] - 100.0) * (bucket[c] - 100.0) / 100.0;

  const auto bu = dnsga::initialize({10000, 100, 1, 100, dnsga::InitMethod::kBitStringUniform}, rng);
  std::vector<double> counts;
  for (const auto& g : bu) counts.push_back(static_cast<double>(g.popcount()));
  const double mean = dnsga::stats::mean(counts);
  const double sd = std::sqrt(dnsga::stats::variance(counts));
  const bool ok = chi < oracle::kChiSquare99At01 && std::abs(mean - 50.0) <= 0.5 && std::abs(sd - 5.0) <= 0.5;
  return {ok, fmt("UC chi2 %.1f (crit 134.6), BU mean %.2f sd %.2f", chi, mean, sd)};
}

// ---------------------------------------------------------------- 4

Outcome knn_oracle() {
  dnsga::Rng rng(4004);
  std::size_t mismatches = 0, ties = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const bool coarse = trial % 2 == 0;
    const std::size_t n = 1 + rng.index(200);
    const std::size_t d = 1 + rng.index(50);
    dnsga::Matrix m{n, d, {}};
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    auto draw = [&] { return coarse ? static_cast<double>(rng.index(2)) : rng.normal(); };
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<double> row(d);
      for (double& v : row) v = draw();
      m.data.insert(m.data.end(), row.begin(), row.end());
      rows.push_back(row);
      labels.push_back(static_cast<int>(rng.index(3)));
    }
    std::vector<double> q(d);
    for (double& v : q) v = draw();
    if (coarse) ++ties;
    if (dnsga::knn_predict(m, labels, q, 5) != oracle::knn(rows, labels, q, 5)) ++mismatches;
  }
  return {mismatches == 0,
          fmt("200 instances (%.0f with tied distances), %.0f mismatches", static_cast<double>(ties),
              static_cast<double>(mismatches))};
}

// ---------------------------------------------------------------- 5-8

struct ToyRun {
  Variant variant;
  std::uint64_t seed;
  dnsga::RunResult result;
  std::vector<std::string> violations;
};

const dnsga::Dataset& toy() {
  static const dnsga::Dataset ds = dnsga::make_toy_dataset({}, 7);
  return ds;
}

constexpr std::size_t kPop = 50;
constexpr std::size_t kNfc = 3000;
constexpr std::uint64_t kSeeds = 5;

// Runs one toy experiment and checks per-generation invariants on the fly.
ToyRun toy_run(Variant v, std::uint64_t seed) {
  ToyRun out{v, seed, {}, {}};
  auto cfg = dnsga::make_config(v, dnsga::optimizer_seed(seed));
  cfg.population_size = kPop;
  cfg.max_nfc = kNfc;
  const auto split = dnsga::split_dataset(toy(), dnsga::split_seed(seed));
  dnsga::Evaluator ev(toy(), split, {}, kNfc);

  std::map<std::size_t, std::size_t> replacement_sizes;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> windows;
  double last_hv = -1.0;
  std::size_t last_nfc = 0;
  auto fail = [&](const std::string& what, std::size_t g) {
    out.violations.push_back(what + " at generation " + std::to_string(g));
  };
  dnsga::RunObserver obs;
  obs.on_replacement = [&](const dnsga::ReplacementEvent& e) {
    replacement_sizes[e.generation] = e.genomes.size();
    windows[e.generation] = {e.alpha, e.beta};
    for (const auto& g : e.genomes) {
      if (g.popcount() < e.alpha || g.popcount() > e.beta) fail("replacement popcount outside window", e.generation);
    }
  };
  obs.on_generation = [&](const dnsga::GenerationRecord& r, std::span<const dnsga::Individual> pop) {
    // Front HV recomputed from the population itself.
    std::vector<dnsga::ObjectiveVector> objs;
    for (const auto& ind : pop) objs.push_back(ind.train);
    std::vector<dnsga::ObjectiveVector> f1;
    for (std::size_t i : dnsga::non_dominated_indices(objs)) f1.push_back(objs[i]);
    const double hv = dnsga::hypervolume_2d(f1);
    if (hv != r.hv_train) fail("recorded HV differs from front HV", r.generation);
    if (hv < last_hv) fail("train-front HV decreased", r.generation);
    last_hv = hv;
    if (pop.size() != kPop) fail("population size changed", r.generation);
    // Exact accounting: initial batch, then children plus replacements.
    const std::size_t expected = r.generation == 0 ? kPop : last_nfc + r.offspring + r.replaced_count;
    if (r.nfc != expected || r.nfc != ev.nfc() || r.nfc > kNfc) fail("NFC accounting mismatch", r.generation);
    last_nfc = r.nfc;
    const auto it = replacement_sizes.find(r.generation);
    const std::size_t fired = it == replacement_sizes.end() ? 0 : it->second;
    if (fired != r.replaced_count) fail("replaced_count differs from replacement event", r.generation);
    if (r.front_count == 1 && r.replaced_count != 0) fail("replacement in a single-front generation", r.generation);
    if (fired > 0 && windows[r.generation] != std::pair{r.alpha, r.beta}) fail("window mismatch", r.generation);
  };
  out.result = dnsga::run(cfg, ev, obs);
  if (out.result.total_nfc != ev.nfc() || out.result.total_nfc > kNfc) fail("total NFC over budget", 0);
  return out;
}

std::map<Variant, std::vector<ToyRun>>& toy_runs() {
  static std::map<Variant, std::vector<ToyRun>> runs = [] {
    std::map<Variant, std::vector<ToyRun>> r;
    for (Variant v : {Variant::kNsga2, Variant::kNsga2Genuine, Variant::kDiverseNsga2, Variant::kNsga2Replace}) {
      for (std::uint64_t s = 1; s <= kSeeds; ++s) r[v].push_back(toy_run(v, s));
    }
    return r;
  }();
  return runs;
}

double final_hv(const ToyRun& r) {
  std::vector<dnsga::ObjectiveVector> objs;
  for (const auto& m : r.result.front) objs.push_back(m.train);
  return dnsga::hypervolume_2d(objs);
}

double mean_final_hv(Variant v) {
  double s = 0.0;
  for (const auto& r : toy_runs()[v]) s += final_hv(r);
  return s / static_cast<double>(kSeeds);
}

Outcome optimizer_invariants() {
  std::size_t violations = 0;
  std::string first;
  for (const auto& r : toy_runs()[Variant::kDiverseNsga2]) {
    violations += r.violations.size();
    if (first.empty() && !r.violations.empty()) first = r.violations.front();
  }
  // Same-seed reruns must be bit-identical.
  std::size_t divergent = 0;
  for (std::uint64_t s = 1; s <= kSeeds; ++s) {
    const auto again = toy_run(Variant::kDiverseNsga2, s);
    const auto& orig = toy_runs()[Variant::kDiverseNsga2][s - 1].result;
    bool same = again.result.total_nfc == orig.total_nfc && again.result.history.size() == orig.history.size() &&
                again.result.population.size() == orig.population.size();
    for (std::size_t i = 0; same && i < orig.population.size(); ++i) {
      same = again.result.population[i].genome == orig.population[i].genome &&
             again.result.population[i].train == orig.population[i].train;
    }
    for (std::size_t g = 0; same && g < orig.history.size(); ++g) {
      same = again.result.history[g].hv_train == orig.history[g].hv_train &&
             again.result.history[g].avg_hamming == orig.history[g].avg_hamming;
    }
    divergent += !same;
  }
  std::string detail = fmt("5 seeds, %.0f invariant violations, %.0f divergent reruns", static_cast<double>(violations),
                           static_cast<double>(divergent));
  if (!first.empty()) detail += "; first: " + first;
  return {violations == 0 && divergent == 0, detail};
}

Outcome table_direction() {
  const double plain = mean_final_hv(Variant::kNsga2);
  const double genuine = mean_final_hv(Variant::kNsga2Genuine);
  const double diverse = mean_final_hv(Variant::kDiverseNsga2);
  const bool ok = diverse - plain >= 0.05 && genuine > plain && diverse >= genuine;
  return {ok, fmt("mean train HV: nsga2 %.4f, nsga2_genuine %.4f, diverse_nsga2 %.4f", plain, genuine, diverse)};
}

// Mean over seeds of avg pairwise Hamming at each generation present in every run.
std::vector<double> hamming_curve(Variant v) {
  std::size_t gens = SIZE_MAX;
  for (const auto& r : toy_runs()[v]) gens = std::min(gens, r.result.history.size());
  std::vector<double> curve(gens, 0.0);
  for (const auto& r : toy_runs()[v]) {
    for (std::size_t g = 0; g < gens; ++g) curve[g] += r.result.history[g].avg_hamming / kSeeds;
  }
  return curve;
}

Outcome hamming_direction() {
  const auto base = hamming_curve(Variant::kNsga2);
  const auto repl = hamming_curve(Variant::kNsga2Replace);
  const std::size_t matched = std::min(base.size(), repl.size());
  std::size_t ahead = 0;
  for (std::size_t g = 0; g < matched; ++g) ahead += repl[g] >= base[g];
  const double frac = matched == 0 ? 0.0 : static_cast<double>(ahead) / static_cast<double>(matched);
  return {frac >= 0.8, fmt("BU+replacement >= BU at %.1f%% of %.0f matched generations", 100.0 * frac,
                           static_cast<double>(matched))};
}

Outcome replaced_ratio() {
  double sum = 0.0;
  std::size_t gens = 0, bypassed = 0, bad_bypass = 0;
  for (const auto& r : toy_runs()[Variant::kDiverseNsga2]) {
    for (const auto& g : r.result.history) {
      if (g.generation == 0) continue;
      sum += static_cast<double>(g.replaced_count) / static_cast<double>(kPop);
      ++gens;
      if (g.front_count == 1) {
        ++bypassed;
        bad_bypass += g.replaced_count != 0;
      }
    }
  }
  const double pct = 100.0 * sum / static_cast<double>(gens);
  // The toy runs rarely collapse to one front; tiny runs do.
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const auto ds = dnsga::make_toy_dataset({60, 4, 2, 1, 3.0}, s);
    auto cfg = dnsga::make_config(Variant::kDiverseNsga2, s);
    cfg.population_size = 4;
    cfg.max_nfc = 200;
    for (const auto& g : dnsga::run(cfg, ds, dnsga::split_dataset(ds, s)).history) {
      if (g.front_count == 1) {
        ++bypassed;
        bad_bypass += g.replaced_count != 0;
      }
    }
  }
  return {pct > 2.0 && pct < 35.0 && bypassed > 0 && bad_bypass == 0,
          fmt("toy mean replaced %.2f%%; %.0f bypassed generations (toy + d=4 probes), %.0f non-zero", pct,
              static_cast<double>(bypassed), static_cast<double>(bad_bypass))};
}

// ---------------------------------------------------------------- 9

Outcome statistics() {
  const std::vector<double> xs{1, 2, 3};
  const auto ci = dnsga::stats::mean_ci95(xs);
  const double half = ci.hi - ci.mean;
  dnsga::Rng rng(9009);
  int rejections = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> a(31), b(31);
    for (double& x : a) x = rng.normal();
    for (double& x : b) x = rng.normal();
    rejections += dnsga::stats::welch_t_test(a, b, dnsga::stats::Direction::kHigherIsBetter).verdict !=
                  dnsga::stats::Verdict::kTie;
  }
  const double size = rejections / 1000.0;
  return {std::abs(half - 2.484) <= 1e-3 && std::abs(size - 0.05) <= 0.02,
          fmt("CI{1,2,3} half-width %.4f, t(0.975,2) %.4f, Welch size %.3f", half,
              dnsga::stats::student_t_quantile(0.975, 2), size)};
}

// ---------------------------------------------------------------- 10

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int shell(const std::string& cmd) {
  const int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome end_to_end() {
  const fs::path dir = fs::temp_directory_path() / "dnsga_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::copy_file(DNSGA_TOY_CONFIG, dir / "toy.conf");
  const std::string cli = std::string("\"") + DNSGA_CLI + "\"";
  const std::string d = "\"" + dir.string() + "\"";
  std::vector<std::pair<std::string, int>> steps;
  steps.emplace_back("toy", shell(cli + " toy --output " + d + "/toy.csv"));
  steps.emplace_back("run", shell(cli + " run --config " + d + "/toy.conf --out " + d + "/out"));
  steps.emplace_back("summarize", shell(cli + " summarize --out " + d + "/out"));
  for (const char* kind : {"hv", "hamming", "replaced_ratio"}) {
    steps.emplace_back(std::string("curves ") + kind, shell(cli + " curves --out " + d + "/out --kind " + kind));
  }
  std::string failed;
  for (const auto& [name, rc] : steps) {
    if (rc != 0) failed += " " + name + "=" + std::to_string(rc);
  }
  const fs::path report = dir / "out" / "report.txt";
  const std::string first = slurp(report);
  fs::remove(report);
  const int rc = shell(cli + " summarize --out " + d + "/out");
  const std::string second = slurp(report);
  const bool identical = !first.empty() && first == second;
  const std::size_t run_files = dnsga::list_run_files(dir / "out").size();
  const bool curves = fs::exists(dir / "out" / "curves_hv.csv") && fs::exists(dir / "out" / "curves_hamming.csv") &&
                      fs::exists(dir / "out" / "curves_replaced_ratio.csv");
  const bool ok = failed.empty() && rc == 0 && identical && run_files == 15 && curves;
  std::string detail = fmt("%.0f run files, report ", static_cast<double>(run_files)) +
                       (identical ? "byte-identical" : "DIFFERENT") + " after re-summarize";
  if (!failed.empty()) detail += "; non-zero exits:" + failed;
  if (ok) fs::remove_all(dir);
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "NDS oracle equivalence", nds_oracle},
      {2, "hypervolume exactness and oracles", hypervolume},
      {3, "initializer distributions", initializers},
      {4, "k-NN oracle equivalence", knn_oracle},
      {5, "optimizer invariants on toy data", optimizer_invariants},
      {6, "train HV ordering diverse >= genuine > plain", table_direction},
      {7, "Hamming diversity with replacement", hamming_direction},
      {8, "replaced-solution ratio", replaced_ratio},
      {9, "statistics module", statistics},
      {10, "end-to-end CLI", end_to_end},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.contains(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s  #%-2d %-45s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%s: %d failure(s)\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
