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

#include "dnsga/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dnsga/error.hpp"
#include "dnsga/metrics.hpp"
#include "dnsga/random.hpp"
#include "dnsga/stats.hpp"

namespace dnsga {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw ConfigError("invalid boolean '" + std::string(value) + "' for " + std::string(key));
}

Variant parse_variant_setting(std::string_view value) {
  try {
    return parse_variant(value);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string num(double v) { return fmt("%.10g", v); }

// Fixed-width plain-text table.
std::string render(const std::string& title, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  os << title << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      if (c > 0) os << " | ";
      os << rows[i][c] << std::string(width[c] - rows[i][c].size(), ' ');
    }
    os << '\n';
    if (i == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c > 0 ? 3 : 0);
      os << std::string(total, '-') << '\n';
    }
  }
  os << '\n';
  return os.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

json generation_json(const GenerationRecord& r) {
  return json{{"type", "generation"},
              {"generation", r.generation},
              {"nfc", r.nfc},
              {"hv_train", r.hv_train},
              {"avg_hamming", r.avg_hamming},
              {"last_front_size", r.last_front_size},
              {"replaced", r.replaced_count},
              {"front_count", r.front_count},
              {"alpha", r.alpha},
              {"beta", r.beta},
              {"offspring", r.offspring}};
}

struct Cell {
  std::vector<std::uint64_t> seeds;
  std::vector<RunOutcome> runs;
};

struct Tally {
  std::size_t win = 0, tie = 0, loss = 0;
  void add(stats::Verdict v) {
    (v == stats::Verdict::kWin ? win : v == stats::Verdict::kTie ? tie : loss) += 1;
  }
  std::string str() const { return std::to_string(win) + "/" + std::to_string(tie) + "/" + std::to_string(loss); }
};

std::vector<double> column(const std::vector<RunOutcome>& runs, double RunOutcome::*field) {
  std::vector<double> out;
  for (const auto& r : runs) out.push_back(r.*field);
  return out;
}

std::vector<double> pooled_counts(const std::vector<RunOutcome>& runs) {
  std::vector<double> out;
  for (const auto& r : runs) {
    for (auto c : r.front_feature_counts) out.push_back(static_cast<double>(c));
  }
  return out;
}

std::vector<double> features_at_max(const std::vector<RunOutcome>& runs) {
  std::vector<double> out;
  for (const auto& r : runs) out.push_back(static_cast<double>(r.features_at_max));
  return out;
}

std::string ci_cell(const std::vector<double>& xs, const char* spec) {
  if (xs.size() < 2) return "n/a";
  const auto ci = stats::mean_ci95(xs);
  return fmt(spec, ci.mean) + " [" + fmt(spec, ci.lo) + ", " + fmt(spec, ci.hi) + "]";
}

std::string mean_cell(const std::vector<double>& xs, const char* spec, std::size_t runs) {
  if (runs < 2 || xs.empty()) return "n/a";
  return fmt(spec, stats::mean(xs));
}

// CSV fields: mean, lo, hi (empty when undefined).
std::string ci_csv(const std::vector<double>& xs) {
  if (xs.size() < 2) return ",,";
  const auto ci = stats::mean_ci95(xs);
  return num(ci.mean) + "," + num(ci.lo) + "," + num(ci.hi);
}

struct Comparison {
  bool defined = false;
  stats::TestResult result;
};

Comparison compare(const std::vector<double>& a, const std::vector<double>& b, stats::Direction dir) {
  if (a.size() < 2 || b.size() < 2) return {};
  return {true, stats::welch_t_test(a, b, dir)};
}

std::string verdict_csv(const Comparison& c) {
  if (!c.defined) return ",";
  return std::string(stats::to_string(c.result.verdict)) + "," + num(c.result.p_value);
}

}  // namespace

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "dataset") {
    config.datasets.clear();
    for (auto item : split_list(value)) config.datasets.emplace_back(std::string(item));
  } else if (key == "variant") {
    config.variants.clear();
    for (auto item : split_list(value)) config.variants.push_back(parse_variant_setting(item));
  } else if (key == "runs") {
    config.runs = parse_number<std::size_t>(key, value);
  } else if (key == "seed") {
    config.seed_base = parse_number<std::uint64_t>(key, value);
  } else if (key == "nfc") {
    config.max_nfc = parse_number<std::size_t>(key, value);
  } else if (key == "pop") {
    config.population_size = parse_number<std::size_t>(key, value);
  } else if (key == "k") {
    config.k = parse_number<std::size_t>(key, value);
  } else if (key == "test_fraction") {
    config.test_fraction = parse_number<double>(key, value);
  } else if (key == "mutation_prob") {
    config.mutation_prob = parse_number<double>(key, value);
  } else if (key == "crossover_prob") {
    config.crossover_prob = parse_number<double>(key, value);
  } else if (key == "stratify") {
    config.stratify = parse_bool(key, value);
  } else if (key == "normalize") {
    config.normalize = parse_bool(key, value);
  } else if (key == "threads") {
    config.threads = parse_number<std::size_t>(key, value);
  } else if (key == "baseline") {
    config.baseline = parse_variant_setting(value);
  } else if (key == "out") {
    config.out_dir = std::string(value);
  } else {
    throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  }
}

void load_config(ExperimentConfig& config, std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(config, s.substr(0, eq), s.substr(eq + 1));
  }
}

void load_config_file(ExperimentConfig& config, const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  const auto before = config.datasets;
  load_config(config, in);
  // Dataset paths in a file are relative to the file itself.
  if (config.datasets != before) {
    for (auto& p : config.datasets) {
      if (p.is_relative()) p = path.parent_path() / p;
    }
  }
}

void validate(const ExperimentConfig& config) {
  if (config.runs < 1) throw ConfigError("runs must be at least 1");
  if (!(config.test_fraction > 0.0 && config.test_fraction <= 0.5)) throw ConfigError("test_fraction must lie in (0, 0.5]");
  if (config.variants.empty()) throw ConfigError("no variants selected");
  if (config.k < 1) throw ConfigError("k must be at least 1");
  OptimizerConfig probe = make_config(Variant::kNsga2, 0);
  probe.population_size = config.population_size;
  probe.max_nfc = config.max_nfc;
  probe.variation.mutation_prob = config.mutation_prob;
  probe.variation.crossover_prob = config.crossover_prob;
  validate(probe);
}

std::uint64_t split_seed(std::uint64_t run_seed) { return derive_seed(run_seed, 1); }
std::uint64_t optimizer_seed(std::uint64_t run_seed) { return derive_seed(run_seed, 2); }

std::string run_file_name(const RunHeader& header) {
  return header.dataset + "__" + std::string(to_string(header.variant)) + "__seed" + std::to_string(header.seed) +
         ".jsonl";
}

void write_run_record(std::ostream& out, const RunRecord& record) {
  const auto& h = record.header;
  out << json{{"type", "run"},
              {"dataset", h.dataset},
              {"variant", to_string(h.variant)},
              {"seed", h.seed},
              {"population_size", h.population_size},
              {"max_nfc", h.max_nfc},
              {"dimension", h.dimension},
              {"k", h.k},
              {"test_indices", h.test_indices}}
             .dump()
      << '\n';
  for (const auto& g : record.history) out << generation_json(g).dump() << '\n';
  for (const auto& m : record.front) {
    out << json{{"type", "front"},
                {"genome", m.genome.to_hex()},
                {"popcount", m.genome.popcount()},
                {"train_error", m.train.error},
                {"train_ratio", m.train.ratio},
                {"test_error", m.test.error},
                {"test_ratio", m.test.ratio}}
               .dump()
        << '\n';
  }
  out << json{{"type", "end"}, {"total_nfc", record.total_nfc}, {"generations", record.history.size()}}.dump()
      << '\n';
}

RunRecord read_run_record(std::istream& in, const std::string& source) {
  RunRecord rec;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  bool have_end = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::string where = source + ": line " + std::to_string(line_no) + ": ";
    try {
      const json j = json::parse(line);
      const auto type = j.at("type").get<std::string>();
      if (type == "run") {
        auto& h = rec.header;
        h.dataset = j.at("dataset").get<std::string>();
        h.variant = parse_variant(j.at("variant").get<std::string>());
        h.seed = j.at("seed").get<std::uint64_t>();
        h.population_size = j.at("population_size").get<std::size_t>();
        h.max_nfc = j.at("max_nfc").get<std::size_t>();
        h.dimension = j.at("dimension").get<std::size_t>();
        h.k = j.at("k").get<std::size_t>();
        h.test_indices = j.at("test_indices").get<std::vector<std::size_t>>();
        have_header = true;
      } else if (type == "generation") {
        GenerationRecord g;
        g.generation = j.at("generation").get<std::size_t>();
        g.nfc = j.at("nfc").get<std::size_t>();
        g.hv_train = j.at("hv_train").get<double>();
        g.avg_hamming = j.at("avg_hamming").get<double>();
        g.last_front_size = j.at("last_front_size").get<std::size_t>();
        g.replaced_count = j.at("replaced").get<std::size_t>();
        g.front_count = j.at("front_count").get<std::size_t>();
        g.alpha = j.at("alpha").get<std::size_t>();
        g.beta = j.at("beta").get<std::size_t>();
        g.offspring = j.at("offspring").get<std::size_t>();
        rec.history.push_back(g);
      } else if (type == "front") {
        if (!have_header) throw ParseError(where + "front record before run header", line_no);
        FrontMember m;
        m.genome = Genome::from_hex(j.at("genome").get<std::string>(), rec.header.dimension);
        m.train = {j.at("train_error").get<double>(), j.at("train_ratio").get<double>()};
        m.test = {j.at("test_error").get<double>(), j.at("test_ratio").get<double>()};
        rec.front.push_back(std::move(m));
      } else if (type == "end") {
        rec.total_nfc = j.at("total_nfc").get<std::size_t>();
        have_end = true;
      } else {
        throw ParseError(where + "unknown record type '" + type + "'", line_no);
      }
    } catch (const json::exception& e) {
      throw ParseError(where + e.what(), line_no);
    } catch (const InvalidArgument& e) {
      throw ParseError(where + e.what(), line_no);
    } catch (const DimensionError& e) {
      throw ParseError(where + e.what(), line_no);
    }
  }
  if (!have_header) throw ParseError(source + ": missing run header", line_no);
  if (!have_end) throw ParseError(source + ": truncated run file (no end record)", line_no);
  return rec;
}

RunRecord read_run_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open run file " + path.string());
  return read_run_record(in, path.string());
}

RunOutcome outcome_of(const RunRecord& record) {
  RunOutcome o;
  std::vector<ObjectiveVector> train, test;
  std::vector<double> test_errors;
  for (const auto& m : record.front) {
    train.push_back(m.train);
    test.push_back(m.test);
    test_errors.push_back(m.test.error);
    o.front_feature_counts.push_back(m.genome.popcount());
  }
  o.hv_train = hypervolume_2d(train);
  std::vector<ObjectiveVector> test_front;
  for (std::size_t i : non_dominated_indices(test)) test_front.push_back(test[i]);
  o.hv_test = hypervolume_2d(test_front);
  if (!record.front.empty()) {
    const auto best = max_accuracy(test_errors, o.front_feature_counts);
    o.max_accuracy = best.accuracy;
    o.features_at_max = best.feature_count;
  }
  double sum = 0.0;
  std::size_t gens = 0;
  for (const auto& g : record.history) {
    if (g.generation == 0) continue;
    sum += static_cast<double>(g.replaced_count) / static_cast<double>(record.header.population_size);
    ++gens;
  }
  o.replaced_percent = gens > 0 ? 100.0 * sum / static_cast<double>(gens) : 0.0;
  return o;
}

std::vector<fs::path> list_run_files(const fs::path& out_dir) {
  std::vector<fs::path> files;
  const fs::path dir = out_dir / "runs";
  if (!fs::exists(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

Summary summarize(const fs::path& out_dir, Variant baseline) {
  // (dataset, variant) -> runs, ordered by seed.
  std::map<std::string, std::map<Variant, Cell>> cells;
  std::set<Variant> variants;
  for (const auto& path : list_run_files(out_dir)) {
    const RunRecord rec = read_run_file(path);
    Cell& cell = cells[rec.header.dataset][rec.header.variant];
    cell.seeds.push_back(rec.header.seed);
    cell.runs.push_back(outcome_of(rec));
    variants.insert(rec.header.variant);
  }
  for (auto& [ds, by_variant] : cells) {
    for (auto& [v, cell] : by_variant) {
      std::vector<std::size_t> order(cell.seeds.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cell.seeds[a] < cell.seeds[b]; });
      Cell sorted;
      for (std::size_t i : order) {
        sorted.seeds.push_back(cell.seeds[i]);
        sorted.runs.push_back(std::move(cell.runs[i]));
      }
      cell = std::move(sorted);
    }
  }
  std::vector<std::string> failures;
  if (fs::exists(out_dir / "runs")) {
    std::vector<fs::path> failed;
    for (const auto& entry : fs::directory_iterator(out_dir / "runs")) {
      if (entry.path().extension() == ".failed") failed.push_back(entry.path());
    }
    std::sort(failed.begin(), failed.end());
    for (const auto& p : failed) {
      std::ifstream in(p);
      std::string msg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      failures.push_back(p.stem().string() + ": " + std::string(trim(msg)));
    }
  }

  const std::vector<Variant> vs(variants.begin(), variants.end());
  const bool have_baseline = variants.contains(baseline);
  const std::string base_name(to_string(baseline));
  auto lookup = [&](const std::string& ds, Variant v) -> const Cell* {
    auto it = cells[ds].find(v);
    return it == cells[ds].end() ? nullptr : &it->second;
  };
  static const Cell kEmpty;
  auto cell_of = [&](const std::string& ds, Variant v) -> const Cell& {
    const Cell* c = lookup(ds, v);
    return c ? *c : kEmpty;
  };

  std::ostringstream report;
  report << "Experiment summary: " << cells.size() << " dataset(s), " << vs.size() << " variant(s), baseline "
         << base_name << (have_baseline ? "" : " (absent)") << "\n\n";

  // Hypervolume.
  std::vector<std::vector<std::string>> hv_rows;
  std::ostringstream hv_csv;
  hv_csv << "dataset,variant,runs,hv_train_mean,hv_train_lo,hv_train_hi,hv_test_mean,hv_test_lo,hv_test_hi,"
            "train_verdict,train_p,test_verdict,test_p\n";
  {
    std::vector<std::string> head{"dataset"};
    for (auto v : vs) head.push_back(std::string(to_string(v)) + " train");
    for (auto v : vs) head.push_back(std::string(to_string(v)) + " test");
    hv_rows.push_back(head);
    std::map<Variant, Tally> train_tally, test_tally;
    for (const auto& [ds, by_variant] : cells) {
      std::vector<std::string> row{ds};
      const auto& base = cell_of(ds, baseline);
      for (auto v : vs) row.push_back(ci_cell(column(cell_of(ds, v).runs, &RunOutcome::hv_train), "%.4f"));
      for (auto v : vs) row.push_back(ci_cell(column(cell_of(ds, v).runs, &RunOutcome::hv_test), "%.4f"));
      hv_rows.push_back(row);
      for (auto v : vs) {
        const auto& c = cell_of(ds, v);
        const auto tr = column(c.runs, &RunOutcome::hv_train);
        const auto te = column(c.runs, &RunOutcome::hv_test);
        Comparison ctr, cte;
        if (have_baseline && v != baseline) {
          ctr = compare(tr, column(base.runs, &RunOutcome::hv_train), stats::Direction::kHigherIsBetter);
          cte = compare(te, column(base.runs, &RunOutcome::hv_test), stats::Direction::kHigherIsBetter);
          if (ctr.defined) train_tally[v].add(ctr.result.verdict);
          if (cte.defined) test_tally[v].add(cte.result.verdict);
        }
        hv_csv << ds << ',' << to_string(v) << ',' << c.runs.size() << ',' << ci_csv(tr) << ',' << ci_csv(te) << ','
               << verdict_csv(ctr) << ',' << verdict_csv(cte) << '\n';
      }
    }
    std::vector<std::string> wtl{"w/t/l vs " + base_name};
    for (auto v : vs) wtl.push_back(v == baseline || !have_baseline ? "-" : train_tally[v].str());
    for (auto v : vs) wtl.push_back(v == baseline || !have_baseline ? "-" : test_tally[v].str());
    hv_rows.push_back(wtl);
  }
  report << render("Final hypervolume, mean [95% CI], reference (1, 1)", hv_rows);

  // Maximum test accuracy on the final front.
  std::vector<std::vector<std::string>> acc_rows;
  std::ostringstream acc_csv;
  acc_csv << "dataset,variant,runs,max_accuracy_mean,features_at_max_mean,accuracy_verdict,accuracy_p,"
             "features_verdict,features_p\n";
  {
    std::vector<std::string> head{"dataset"};
    for (auto v : vs) head.push_back(std::string(to_string(v)) + " acc");
    for (auto v : vs) head.push_back(std::string(to_string(v)) + " #features");
    acc_rows.push_back(head);
    std::map<Variant, Tally> acc_tally, feat_tally;
    for (const auto& [ds, by_variant] : cells) {
      std::vector<std::string> row{ds};
      const auto& base = cell_of(ds, baseline);
      for (auto v : vs) {
        const auto& c = cell_of(ds, v);
        row.push_back(mean_cell(column(c.runs, &RunOutcome::max_accuracy), "%.4f", c.runs.size()));
      }
      for (auto v : vs) {
        const auto& c = cell_of(ds, v);
        row.push_back(mean_cell(features_at_max(c.runs), "%.1f", c.runs.size()));
      }
      acc_rows.push_back(row);
      for (auto v : vs) {
        const auto& c = cell_of(ds, v);
        const auto acc = column(c.runs, &RunOutcome::max_accuracy);
        const auto feat = features_at_max(c.runs);
        Comparison ca, cf;
        if (have_baseline && v != baseline) {
          ca = compare(acc, column(base.runs, &RunOutcome::max_accuracy), stats::Direction::kHigherIsBetter);
          cf = compare(feat, features_at_max(base.runs), stats::Direction::kLowerIsBetter);
          if (ca.defined) acc_tally[v].add(ca.result.verdict);
          if (cf.defined) feat_tally[v].add(cf.result.verdict);
        }
        acc_csv << ds << ',' << to_string(v) << ',' << c.runs.size() << ','
                << (acc.size() < 2 ? std::string() : num(stats::mean(acc))) << ','
                << (feat.size() < 2 ? std::string() : num(stats::mean(feat))) << ',' << verdict_csv(ca) << ','
                << verdict_csv(cf) << '\n';
      }
    }
    std::vector<std::string> wtl{"w/t/l vs " + base_name};
    for (auto v : vs) wtl.push_back(v == baseline || !have_baseline ? "-" : acc_tally[v].str());
    for (auto v : vs) wtl.push_back(v == baseline || !have_baseline ? "-" : feat_tally[v].str());
    acc_rows.push_back(wtl);
  }
  report << render("Maximum test accuracy on the final front and its feature count (means)", acc_rows);

  // Feature counts of all final-front members, pooled over runs.
  std::vector<std::vector<std::string>> feat_rows;
  std::ostringstream feat_csv;
  feat_csv << "dataset,variant,runs,members,features_mean,features_lo,features_hi,verdict,p\n";
  {
    std::vector<std::string> head{"dataset"};
    for (auto v : vs) head.emplace_back(to_string(v));
    feat_rows.push_back(head);
    std::map<Variant, Tally> tally;
    for (const auto& [ds, by_variant] : cells) {
      std::vector<std::string> row{ds};
      const auto base = pooled_counts(cell_of(ds, baseline).runs);
      for (auto v : vs) {
        const auto& c = cell_of(ds, v);
        const auto counts = pooled_counts(c.runs);
        if (c.runs.size() < 2 || counts.size() < 2) {
          row.emplace_back("n/a");
        } else {
          const auto ci = stats::mean_ci95(counts);
          row.push_back("(" + fmt("%.2f", ci.lo) + ", " + fmt("%.2f", ci.hi) + ")");
        }
        Comparison cmp;
        if (have_baseline && v != baseline && c.runs.size() >= 2) {
          cmp = compare(counts, base, stats::Direction::kLowerIsBetter);
          if (cmp.defined) tally[v].add(cmp.result.verdict);
        }
        feat_csv << ds << ',' << to_string(v) << ',' << c.runs.size() << ',' << counts.size() << ','
                 << (c.runs.size() < 2 ? ",," : ci_csv(counts)) << ',' << verdict_csv(cmp) << '\n';
      }
      feat_rows.push_back(row);
    }
    std::vector<std::string> wtl{"w/t/l vs " + base_name};
    for (auto v : vs) wtl.push_back(v == baseline || !have_baseline ? "-" : tally[v].str());
    feat_rows.push_back(wtl);
  }
  report << render("95% CI of the feature count over final-front members", feat_rows);

  // Replaced-solution ratio for the replacement variants.
  std::vector<std::vector<std::string>> rep_rows;
  std::ostringstream rep_csv;
  rep_csv << "dataset,variant,runs,replaced_percent_mean\n";
  {
    std::vector<Variant> rvs;
    for (auto v : vs) {
      if (make_config(v, 0).replacement_enabled) rvs.push_back(v);
    }
    std::vector<std::string> head{"dataset"};
    for (auto v : rvs) head.push_back(std::string(to_string(v)) + " replaced %");
    rep_rows.push_back(head);
    std::map<Variant, std::vector<double>> per_dataset;
    for (const auto& [ds, by_variant] : cells) {
      std::vector<std::string> row{ds};
      for (auto v : rvs) {
        const auto& c = cell_of(ds, v);
        const auto pct = column(c.runs, &RunOutcome::replaced_percent);
        row.push_back(mean_cell(pct, "%.2f", c.runs.size()));
        if (c.runs.size() >= 2) per_dataset[v].push_back(stats::mean(pct));
        rep_csv << ds << ',' << to_string(v) << ',' << c.runs.size() << ','
                << (c.runs.size() < 2 ? std::string() : num(stats::mean(pct))) << '\n';
      }
      rep_rows.push_back(row);
    }
    std::vector<std::string> avg{"average"};
    for (auto v : rvs) avg.push_back(per_dataset[v].empty() ? "n/a" : fmt("%.2f", stats::mean(per_dataset[v])));
    rep_rows.push_back(avg);
  }
  report << render("Average ratio of replaced solutions per generation (%)", rep_rows);

  if (!failures.empty()) {
    report << "Failed datasets\n";
    for (const auto& f : failures) report << "  " << f << '\n';
    report << '\n';
  }

  Summary s;
  s.text = report.str();
  const std::vector<std::pair<std::string, std::string>> outputs{{"report.txt", s.text},
                                                                 {"table_hv.csv", hv_csv.str()},
                                                                 {"table_accuracy.csv", acc_csv.str()},
                                                                 {"table_feature_ci.csv", feat_csv.str()},
                                                                 {"table_replaced.csv", rep_csv.str()}};
  fs::create_directories(out_dir);
  for (const auto& [name, text] : outputs) {
    write_text(out_dir / name, text);
    s.files.push_back(out_dir / name);
  }
  return s;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  validate(config);
  if (config.datasets.empty()) throw ConfigError("no datasets given");
  const fs::path runs_dir = config.out_dir / "runs";
  fs::create_directories(runs_dir);

  ExperimentReport report;
  std::vector<Dataset> datasets;
  for (const auto& path : config.datasets) {
    const fs::path marker = runs_dir / (path.stem().string() + ".failed");
    try {
      datasets.push_back(load_dataset(path));
      validate(datasets.back());
      fs::remove(marker);
    } catch (const Error& e) {
      report.failures.push_back(path.string() + ": " + e.what());
      write_text(marker, std::string(e.what()) + "\n");
    }
  }

  struct Job {
    const Dataset* dataset;
    Variant variant;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& ds : datasets) {
    for (auto v : config.variants) {
      for (std::size_t i = 0; i < config.runs; ++i) jobs.push_back({&ds, v, config.seed_base + i});
    }
  }

  std::vector<fs::path> written(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        const Job& job = jobs[j];
        const Split split = split_dataset(*job.dataset, split_seed(job.seed), config.test_fraction, config.stratify);
        OptimizerConfig oc = make_config(job.variant, optimizer_seed(job.seed));
        oc.population_size = config.population_size;
        oc.max_nfc = config.max_nfc;
        oc.variation.mutation_prob = config.mutation_prob;
        oc.variation.crossover_prob = config.crossover_prob;
        EvaluatorOptions eo;
        eo.k = config.k;
        eo.normalize = config.normalize;
        RunResult result = run(oc, *job.dataset, split, eo);

        RunRecord rec;
        rec.header = {job.dataset->name, job.variant,         job.seed, oc.population_size,
                      oc.max_nfc,        job.dataset->n_features, eo.k,  split.test};
        rec.history = std::move(result.history);
        rec.front = std::move(result.front);
        rec.total_nfc = result.total_nfc;
        const fs::path path = runs_dir / run_file_name(rec.header);
        const fs::path tmp = path.string() + ".tmp";
        {
          std::ofstream out(tmp, std::ios::binary);
          if (!out) throw IoError("cannot write " + tmp.string());
          write_run_record(out, rec);
          if (!out) throw IoError("failed writing " + tmp.string());
        }
        fs::rename(tmp, path);
        written[j] = path;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    const std::size_t workers = std::max<std::size_t>(1, std::min(config.threads, jobs.size()));
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  report.run_files = std::move(written);
  report.summary = summarize(config.out_dir, config.baseline);
  return report;
}

CurveKind parse_curve_kind(std::string_view name) {
  if (name == "hv") return CurveKind::kHv;
  if (name == "hamming") return CurveKind::kHamming;
  if (name == "replaced_ratio") return CurveKind::kReplacedRatio;
  throw InvalidArgument("unknown curve kind '" + std::string(name) + "' (expected hv, hamming or replaced_ratio)");
}

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::kHv:
      return "hv";
    case CurveKind::kHamming:
      return "hamming";
    case CurveKind::kReplacedRatio:
      return "replaced_ratio";
  }
  return "?";
}

CurveResult emit_curves(const std::vector<fs::path>& run_files, CurveKind kind, const fs::path& output) {
  struct Row {
    std::string dataset;
    Variant variant;
    std::uint64_t seed;
    std::size_t generation;
    std::size_t nfc;
    double value;
  };
  CurveResult result;
  std::vector<Row> rows;
  for (const auto& path : run_files) {
    if (!fs::exists(path)) {
      result.missing.push_back(path);
      continue;
    }
    const RunRecord rec = read_run_file(path);
    for (const auto& g : rec.history) {
      double value = 0.0;
      switch (kind) {
        case CurveKind::kHv:
          value = g.hv_train;
          break;
        case CurveKind::kHamming:
          value = g.avg_hamming;
          break;
        case CurveKind::kReplacedRatio:
          value = static_cast<double>(g.replaced_count) / static_cast<double>(rec.header.population_size);
          break;
      }
      rows.push_back({rec.header.dataset, rec.header.variant, rec.header.seed, g.generation, g.nfc, value});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.dataset, a.variant, a.seed, a.generation) < std::tie(b.dataset, b.variant, b.seed, b.generation);
  });
  std::map<std::tuple<std::string, Variant, std::size_t>, std::pair<double, std::size_t>> sums;
  for (const auto& r : rows) {
    auto& s = sums[{r.dataset, r.variant, r.generation}];
    s.first += r.value;
    ++s.second;
  }
  std::ostringstream csv;
  csv << "dataset,variant,seed,generation,nfc,value,mean_over_seeds\n";
  for (const auto& r : rows) {
    const auto& s = sums[{r.dataset, r.variant, r.generation}];
    csv << r.dataset << ',' << to_string(r.variant) << ',' << r.seed << ',' << r.generation << ',' << r.nfc << ','
        << num(r.value) << ',' << num(s.first / static_cast<double>(s.second)) << '\n';
  }
  if (output.has_parent_path()) fs::create_directories(output.parent_path());
  write_text(output, csv.str());
  result.rows = rows.size();
  return result;
}

}  // namespace dnsga
