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

#ifndef INFOPROP_CHARACTER_NETWORK_H_
#define INFOPROP_CHARACTER_NETWORK_H_

#include <map>
#include <vector>

namespace infoprop {

struct WeightedEdge {
  int a = 0;  // a < b
  int b = 0;
  int weight = 0;

  bool operator==(const WeightedEdge &) const = default;
};

// Undirected, integer-weighted simple graph keyed by entity id.
class CharacterNetwork {
 public:
  void AddNode(int node);
  // Adds `weight` to edge {a, b}, creating both nodes as needed. Self-loops
  // and non-positive weights are rejected.
  void AddEdge(int a, int b, int weight = 1);

  bool HasNode(int node) const { return adjacency_.contains(node); }
  int Weight(int a, int b) const;
  int Degree(int node) const;
  std::vector<int> Nodes() const;
  std::vector<int> Neighbors(int node) const;
  // Edges with a < b in lexicographic order.
  std::vector<WeightedEdge> Edges() const;

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const;
  long TotalWeight() const;

  bool operator==(const CharacterNetwork &) const = default;

 private:
  std::map<int, std::map<int, int>> adjacency_;
};

}  // namespace infoprop

#endif  // INFOPROP_CHARACTER_NETWORK_H_
