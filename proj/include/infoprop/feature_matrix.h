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

// Labeled observations of propagating (B) and non-propagating (B') nodes
// described by their six structural measures.

#ifndef INFOPROP_FEATURE_MATRIX_H_
#define INFOPROP_FEATURE_MATRIX_H_

#include <string>
#include <utility>
#include <vector>

#include "infoprop/netmetrics.h"

namespace infoprop {

struct FeatureRow {
  int label = 0;  // 1 = propagating B, 0 = non-propagating B'
  std::vector<double> values;
  std::string book_id;
  int entity_id = 0;
  int event_id = 0;

  bool operator==(const FeatureRow &) const = default;
};

struct FeatureMatrix {
  std::vector<std::string> columns;
  std::vector<FeatureRow> rows;

  // Empty matrix with the six NodeFeatures columns.
  static FeatureMatrix WithNodeFeatureColumns();
  void AddRow(int label, const NodeFeatures &f, std::string book_id,
              int entity_id, int event_id);

  bool operator==(const FeatureMatrix &) const = default;
};

struct ScaledMatrix {
  FeatureMatrix matrix;
  // Columns that held a single value and were removed.
  std::vector<std::string> constant_columns;
  // (min, max) of each kept column before scaling.
  std::vector<std::pair<double, double>> ranges;
};

// x' = (x - min) / (max - min) per column over all rows.
ScaledMatrix MinMaxScale(const FeatureMatrix &m);

std::string FeatureMatrixToCsv(const FeatureMatrix &m);
FeatureMatrix FeatureMatrixFromCsv(const std::string &csv);

}  // namespace infoprop

#endif  // INFOPROP_FEATURE_MATRIX_H_
