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

// Expected-degree (Chung-Lu) random graphs and the randomization test
// that compares observed regression coefficients against coefficients
// fitted on degree-matched null networks.

#ifndef INFOPROP_NULL_MODEL_H_
#define INFOPROP_NULL_MODEL_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infoprop/character_network.h"
#include "infoprop/logistic.h"
#include "infoprop/netmetrics.h"

namespace infoprop {

// splitmix64 finalizer over (seed, tag, index); all stochastic stages
// derive their seeds through this.
uint64_t DeriveSeed(uint64_t seed, std::string_view tag, uint64_t index = 0);

// Chung-Lu graph on nodes 0..n-1: each pair i<j is joined independently
// with probability min(1, w_i w_j / sum(w)).
CharacterNetwork ExpectedDegreeGraph(std::span<const double> weights,
                                     uint64_t seed);

// One observed network with its (B, B') node pairs.
struct NetworkPairs {
  std::string book_id;
  CharacterNetwork network;
  std::vector<std::pair<int, int>> pairs;  // (propagating, non-propagating)
};

// Produces one null network for `observed`; node ids must be preserved.
using NullGenerator =
    std::function<CharacterNetwork(const CharacterNetwork &observed, uint64_t seed)>;

// Default null: expected-degree graph on the observed degree sequence.
CharacterNetwork DegreeMatchedNull(const CharacterNetwork &observed,
                                   uint64_t seed);

struct RandomizationOptions {
  int trials = 10000;
  int graphs_per_network = 10;
  uint64_t seed = 0;
  int jobs = 1;
  int max_redraws = 100;  // per trial, on perfect separation
  ClosenessKind closeness = ClosenessKind::kHarmonic;
  NullGenerator generator = DegreeMatchedNull;
};

struct NullDistribution {
  std::vector<std::string> names;
  RegressionResult observed;
  // coefficients[feature][trial] over completed trials.
  std::vector<std::vector<double>> coefficients;
  std::vector<double> p_values;
  int completed_trials = 0;
  int failed_trials = 0;   // gave up after max_redraws
  int redraws = 0;         // separated resamples that were redrawn
};

// Min-max scales `raw`, fits, and reports coefficients on every original
// column. Dropped constant columns get coefficient 0 and NaN inference.
RegressionResult FitScaledLogistic(const FeatureMatrix &raw);

// Fraction of null values at least as large in magnitude as `observed`.
double EmpiricalPValue(double observed, std::span<const double> null_values);

// Observed design: min-max scaled B/B' features of the original networks.
FeatureMatrix ObservedFeatures(std::span<const NetworkPairs> networks,
                               ClosenessKind closeness = ClosenessKind::kHarmonic);

NullDistribution RandomizationTest(std::span<const NetworkPairs> networks,
                                   const RandomizationOptions &options);

}  // namespace infoprop

#endif  // INFOPROP_NULL_MODEL_H_
