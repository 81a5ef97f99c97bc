// Copyright 2026 The Infoprop Authors.
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

#include "infoprop/feature_matrix.h"

#include <algorithm>
#include <stdexcept>

#include "infoprop/csv.h"
#include "spdlog/spdlog.h"

namespace infoprop {

FeatureMatrix FeatureMatrix::WithNodeFeatureColumns() {
  FeatureMatrix m;
  for (auto name : NodeFeatures::kNames) m.columns.emplace_back(name);
  return m;
}

void FeatureMatrix::AddRow(int label, const NodeFeatures &f,
                           std::string book_id, int entity_id, int event_id) {
  const auto values = f.AsArray();
  rows.push_back({label, std::vector<double>(values.begin(), values.end()),
                  std::move(book_id), entity_id, event_id});
}

ScaledMatrix MinMaxScale(const FeatureMatrix &m) {
  ScaledMatrix out;
  const size_t cols = m.columns.size();
  std::vector<size_t> kept;
  for (size_t c = 0; c < cols; ++c) {
    double lo = 0;
    double hi = 0;
    bool first = true;
    for (const auto &r : m.rows) {
      if (first) {
        lo = hi = r.values[c];
        first = false;
      }
      lo = std::min(lo, r.values[c]);
      hi = std::max(hi, r.values[c]);
    }
    if (first || hi == lo) {
      spdlog::debug("constant column '{}' dropped", m.columns[c]);
      out.constant_columns.push_back(m.columns[c]);
      continue;
    }
    kept.push_back(c);
    out.ranges.emplace_back(lo, hi);
    out.matrix.columns.push_back(m.columns[c]);
  }
  for (const auto &r : m.rows) {
    FeatureRow row = r;
    row.values.clear();
    for (size_t k = 0; k < kept.size(); ++k) {
      const auto [lo, hi] = out.ranges[k];
      row.values.push_back((r.values[kept[k]] - lo) / (hi - lo));
    }
    out.matrix.rows.push_back(std::move(row));
  }
  return out;
}

std::string FeatureMatrixToCsv(const FeatureMatrix &m) {
  std::vector<std::string> header = {"book_id", "entity_id", "event_id",
                                     "label"};
  header.insert(header.end(), m.columns.begin(), m.columns.end());
  std::string out = CsvRow(header);
  for (const auto &r : m.rows) {
    std::vector<std::string> fields = {r.book_id, std::to_string(r.entity_id),
                                       std::to_string(r.event_id),
                                       std::to_string(r.label)};
    for (double v : r.values) fields.push_back(CsvNumber(v));
    out += CsvRow(fields);
  }
  return out;
}

FeatureMatrix FeatureMatrixFromCsv(const std::string &csv) {
  const auto rows = ParseCsv(csv);
  if (rows.empty() || rows[0].size() < 4) {
    throw std::runtime_error("feature CSV lacks a header");
  }
  FeatureMatrix m;
  m.columns.assign(rows[0].begin() + 4, rows[0].end());
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto &f = rows[i];
    if (f.size() != rows[0].size()) {
      throw std::runtime_error("feature CSV row " + std::to_string(i) +
                               " has the wrong width");
    }
    FeatureRow r;
    r.book_id = f[0];
    r.entity_id = std::stoi(f[1]);
    r.event_id = std::stoi(f[2]);
    r.label = std::stoi(f[3]);
    for (size_t c = 4; c < f.size(); ++c) r.values.push_back(std::stod(f[c]));
    m.rows.push_back(std::move(r));
  }
  return m;
}

}  // namespace infoprop
