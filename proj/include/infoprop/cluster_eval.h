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

// Cluster-overlap metrics (MUC, B-cubed, CEAF-phi4) for comparing two
// partitions of the same set of quotations, one cluster per speaker.

#ifndef INFOPROP_CLUSTER_EVAL_H_
#define INFOPROP_CLUSTER_EVAL_H_

#include <span>
#include <vector>

namespace infoprop {

// A partition of item ids. Clusters must be disjoint; the order of
// clusters and of items inside a cluster is irrelevant.
using Clustering = std::vector<std::vector<int>>;

struct Prf {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  // Set when a denominator was zero (MUC over all-singleton clusterings);
  // the affected side is reported as 0.
  bool undefined = false;
};

struct ClusterScore {
  Prf muc;
  Prf b3;
  Prf ceaf;
  double average_f = 0;
};

double HarmonicF(double precision, double recall);

// Link-based MUC (Vilain et al.).
Prf Muc(const Clustering &gold, const Clustering &pred);
// Per-item precision and recall averaged over all items.
Prf BCubed(const Clustering &gold, const Clustering &pred);
// Entity-based CEAF with phi4 similarity under the optimal one-to-one
// cluster alignment.
Prf CeafPhi4(const Clustering &gold, const Clustering &pred);

ClusterScore ScoreClusters(const Clustering &gold, const Clustering &pred);

// Maximum-weight assignment of rows to columns (Hungarian method) on a
// dense, possibly rectangular, non-negative weight matrix. Returns the
// assigned column per row, -1 for rows left unmatched.
std::vector<int> MaxWeightAssignment(
    const std::vector<std::vector<double>> &weights);

}  // namespace infoprop

#endif  // INFOPROP_CLUSTER_EVAL_H_
