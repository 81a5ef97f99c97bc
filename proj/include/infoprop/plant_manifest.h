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

// Comparison of detected triads with the manifest of a synthetic corpus
// whose propagation events were planted.

#ifndef INFOPROP_PLANT_MANIFEST_H_
#define INFOPROP_PLANT_MANIFEST_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "infoprop/propagation.h"

namespace infoprop {

// (book, a, b, c, tuple key)
using ImplicitTriad = std::tuple<std::string, int, int, int, std::string>;
// (book, quote_id, a, b, c)
using ExplicitTriad = std::tuple<std::string, int, int, int, int>;

struct PlantManifest {
  std::vector<std::string> books;
  std::set<ImplicitTriad> implicit;
  std::set<ExplicitTriad> explicit_triads;

  static PlantManifest Load(const std::filesystem::path &path);
  std::string ToJson() const;
};

struct Recovery {
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;

  double precision() const;
  double recall() const;
};

std::set<ImplicitTriad> ImplicitTriads(const std::string &book,
                                       std::span<const ImplicitEvent> events);
std::set<ExplicitTriad> ExplicitTriads(const std::string &book,
                                       std::span<const ExplicitEvent> events);

template <typename T>
Recovery CompareTriads(const std::set<T> &detected, const std::set<T> &planted) {
  Recovery r;
  for (const auto &t : detected) {
    if (planted.contains(t)) {
      ++r.true_positives;
    } else {
      ++r.false_positives;
    }
  }
  r.false_negatives = static_cast<int>(planted.size()) - r.true_positives;
  return r;
}

}  // namespace infoprop

#endif  // INFOPROP_PLANT_MANIFEST_H_
