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

#include "dnsga/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include "dnsga/error.hpp"
#include "dnsga/random.hpp"

namespace dnsga {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

bool parse_integer(std::string_view s, long long& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Maps raw label strings to dense class indices. Integer labels sort
// numerically, anything else lexicographically.
void assign_labels(Dataset& ds, const std::vector<std::string>& raw) {
  bool all_int = true;
  for (const auto& s : raw) {
    long long v = 0;
    if (!parse_integer(s, v)) {
      all_int = false;
      break;
    }
  }
  std::vector<std::string> names(raw.begin(), raw.end());
  std::sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
    if (all_int) {
      long long va = 0, vb = 0;
      parse_integer(a, va);
      parse_integer(b, vb);
      return va < vb;
    }
    return a < b;
  });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  ds.labels.clear();
  ds.labels.reserve(raw.size());
  for (const auto& s : raw) ds.labels.push_back(index.at(s));
  ds.class_names = std::move(names);
}

std::vector<std::size_t> shuffled_indices(std::vector<std::size_t> idx, Rng& rng) {
  for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.index(i)]);
  return idx;
}

}  // namespace

void validate(const Dataset& ds) {
  if (ds.n_features == 0) throw InvalidArgument("dataset has no feature columns");
  if (ds.values.size() != ds.n_samples * ds.n_features) throw InvalidArgument("dataset matrix has the wrong size");
  if (ds.labels.size() != ds.n_samples) throw InvalidArgument("dataset label count differs from sample count");
  if (ds.n_classes() < 2) throw InvalidArgument("dataset needs at least two classes");
  for (int y : ds.labels) {
    if (y < 0 || static_cast<std::size_t>(y) >= ds.n_classes()) throw InvalidArgument("dataset label out of range");
  }
  for (double v : ds.values) {
    if (!std::isfinite(v)) throw InvalidArgument("dataset contains a non-finite value");
  }
}

Dataset parse_dataset(std::istream& in, const std::string& name) {
  Dataset ds;
  ds.name = name;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(name + ": empty file", 0);
  ++line_no;
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  const auto header = split_fields(line);
  if (header.size() < 2 || header.back() != "class") {
    throw ParseError(name + ": line 1: last header column must be named \"class\"", 1);
  }
  ds.n_features = header.size() - 1;
  for (std::size_t j = 0; j < ds.n_features; ++j) ds.feature_names.emplace_back(header[j]);

  std::vector<std::string> raw_labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    const std::string where = name + ": line " + std::to_string(line_no) + ": ";
    if (fields.size() != header.size()) {
      throw ParseError(where + "expected " + std::to_string(header.size()) + " cells, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    for (std::size_t j = 0; j < ds.n_features; ++j) {
      if (fields[j].empty()) throw ParseError(where + "missing value in column " + std::to_string(j + 1), line_no);
      double v = 0.0;
      if (!parse_double(fields[j], v)) {
        throw ParseError(where + "non-numeric value '" + std::string(fields[j]) + "' in column " +
                             std::to_string(j + 1),
                         line_no);
      }
      ds.values.push_back(v);
    }
    if (fields.back().empty()) throw ParseError(where + "missing class label", line_no);
    raw_labels.emplace_back(fields.back());
  }
  ds.n_samples = raw_labels.size();
  if (ds.n_samples == 0) throw ParseError(name + ": no data rows", line_no);
  assign_labels(ds, raw_labels);
  if (ds.n_classes() < 2) throw ParseError(name + ": dataset needs at least two classes", line_no);
  return ds;
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset " + path.string());
  return parse_dataset(in, path.stem().string());
}

void write_dataset(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write dataset " + path.string());
  for (std::size_t j = 0; j < ds.n_features; ++j) {
    out << (ds.feature_names.size() == ds.n_features ? ds.feature_names[j] : "f" + std::to_string(j + 1)) << ',';
  }
  out << "class\n";
  char buf[32];
  for (std::size_t i = 0; i < ds.n_samples; ++i) {
    for (std::size_t j = 0; j < ds.n_features; ++j) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), ds.at(i, j));
      out.write(buf, ptr - buf);
      out << ',';
    }
    out << ds.class_names[static_cast<std::size_t>(ds.labels[i])] << '\n';
  }
  if (!out) throw IoError("failed writing dataset " + path.string());
}

Split split_dataset(const Dataset& ds, std::uint64_t seed, double test_fraction, bool stratify) {
  if (ds.n_samples < 5) throw InvalidArgument("split: need at least 5 samples");
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) throw InvalidArgument("split: test fraction outside (0, 1)");
  Rng rng(seed);
  Split s;
  s.seed = seed;
  std::vector<bool> is_test(ds.n_samples, false);
  if (!stratify) {
    std::vector<std::size_t> idx(ds.n_samples);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    idx = shuffled_indices(std::move(idx), rng);
    const auto n_test = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(ds.n_samples)));
    for (std::size_t i = 0; i < n_test; ++i) is_test[idx[i]] = true;
  } else {
    for (std::size_t c = 0; c < ds.n_classes(); ++c) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < ds.n_samples; ++i) {
        if (static_cast<std::size_t>(ds.labels[i]) == c) idx.push_back(i);
      }
      idx = shuffled_indices(std::move(idx), rng);
      const auto n_test = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(idx.size())));
      for (std::size_t i = 0; i < n_test; ++i) is_test[idx[i]] = true;
    }
  }
  for (std::size_t i = 0; i < ds.n_samples; ++i) (is_test[i] ? s.test : s.train).push_back(i);
  if (s.train.empty() || s.test.empty()) throw InvalidArgument("split: empty train or test partition");
  return s;
}

Dataset make_toy_dataset(const ToySpec& spec, std::uint64_t seed) {
  if (spec.classes < 2 || spec.samples < spec.classes) throw InvalidArgument("toy dataset: need >= 2 classes and enough samples");
  if (spec.informative == 0 || spec.informative > spec.features) throw InvalidArgument("toy dataset: bad informative count");
  Rng rng(seed);
  std::vector<std::size_t> cols(spec.features);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  cols = shuffled_indices(std::move(cols), rng);
  cols.resize(spec.informative);

  Dataset ds;
  ds.name = "toy";
  ds.n_samples = spec.samples;
  ds.n_features = spec.features;
  ds.values.resize(spec.samples * spec.features);
  for (std::size_t c = 0; c < spec.classes; ++c) ds.class_names.push_back(std::to_string(c));
  for (std::size_t j = 0; j < spec.features; ++j) ds.feature_names.push_back("f" + std::to_string(j + 1));
  for (std::size_t i = 0; i < spec.samples; ++i) {
    const std::size_t c = i % spec.classes;
    ds.labels.push_back(static_cast<int>(c));
    for (std::size_t j = 0; j < spec.features; ++j) ds.values[i * spec.features + j] = rng.normal();
    // Class means on informative column k are a cyclic shift of 0, s, 2s, ...
    for (std::size_t k = 0; k < cols.size(); ++k) {
      ds.values[i * spec.features + cols[k]] += spec.separation * static_cast<double>((c + k) % spec.classes);
    }
  }
  return ds;
}

Dataset convert_matrix(const std::filesystem::path& matrix, const std::filesystem::path& labels,
                       const std::filesystem::path& output) {
  std::ifstream in(matrix);
  if (!in) throw IoError("cannot open matrix " + matrix.string());
  std::vector<std::vector<double>> rows;
  std::vector<std::string> raw_labels;
  std::string line;
  std::size_t line_no = 0;
  const bool labels_inline = labels.empty();
  while (std::getline(in, line)) {
    ++line_no;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (labels_inline) {
      raw_labels.push_back(tokens.back());
      tokens.pop_back();
    }
    std::vector<double> row;
    for (const auto& t : tokens) {
      double v = 0.0;
      if (!parse_double(t, v)) throw ParseError(matrix.string() + ": line " + std::to_string(line_no) + ": non-numeric value '" + t + "'", line_no);
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(matrix.string() + ": line " + std::to_string(line_no) + ": ragged row", line_no);
    }
    rows.push_back(std::move(row));
  }
  if (!labels_inline) {
    std::ifstream lin(labels);
    if (!lin) throw IoError("cannot open labels " + labels.string());
    for (std::string t; lin >> t;) raw_labels.push_back(t);
  }
  if (rows.empty()) throw ParseError(matrix.string() + ": no rows", line_no);
  if (raw_labels.size() != rows.size()) throw ParseError("label count differs from matrix row count", 0);

  Dataset ds;
  ds.name = output.stem().string();
  ds.n_samples = rows.size();
  ds.n_features = rows.front().size();
  for (const auto& r : rows) ds.values.insert(ds.values.end(), r.begin(), r.end());
  for (std::size_t j = 0; j < ds.n_features; ++j) ds.feature_names.push_back("f" + std::to_string(j + 1));
  assign_labels(ds, raw_labels);
  validate(ds);
  write_dataset(ds, output);
  return ds;
}

}  // namespace dnsga
