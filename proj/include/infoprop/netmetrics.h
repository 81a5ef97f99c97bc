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

// Structural measures of a character's position in its network. All
// measures treat the network as an unweighted simple graph.

#ifndef INFOPROP_NETMETRICS_H_
#define INFOPROP_NETMETRICS_H_

#include <array>
#include <map>
#include <stdexcept>
#include <string_view>

#include "infoprop/character_network.h"

namespace infoprop {

struct NodeFeatures {
  double closeness = 0;
  double betweenness = 0;  // normalized by (n-1)(n-2)/2
  double avg_neighbor_degree = 0;
  double effective_size = 0;
  double efficiency = 0;
  double triangles = 0;
  int degree = 0;

  static constexpr int kCount = 6;
  // Column order used by feature matrices and reports.
  static constexpr std::array<std::string_view, kCount> kNames = {
      "closeness",      "betweenness", "avg_neighbor_degree",
      "effective_size", "efficiency",  "triangles"};
  std::array<double, kCount> AsArray() const {
    return {closeness,      betweenness, avg_neighbor_degree,
            effective_size, efficiency,  triangles};
  }
};

enum class ClosenessKind {
  kHarmonic,   // mean of 1/d over the other n-1 nodes
  kClassical,  // (r/(n-1)) * r / sum(d) over the r reachable nodes
};

class UnknownNode : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

NodeFeatures ComputeNodeFeatures(const CharacterNetwork &graph, int node,
                                 ClosenessKind closeness = ClosenessKind::kHarmonic);

// Features of every node; betweenness is accumulated in a single Brandes
// pass over all sources.
std::map<int, NodeFeatures> AllFeatures(
    const CharacterNetwork &graph,
    ClosenessKind closeness = ClosenessKind::kHarmonic);

}  // namespace infoprop

#endif  // INFOPROP_NETMETRICS_H_
