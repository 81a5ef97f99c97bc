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

// Tabular and JSON-lines renderings of every pipeline stage. All CSV is
// RFC 4180 with CRLF record terminators.

#ifndef INFOPROP_OUTPUTS_H_
#define INFOPROP_OUTPUTS_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "infoprop/attribution.h"
#include "infoprop/cluster_eval.h"
#include "infoprop/conversation_graph.h"
#include "infoprop/feature_matrix.h"
#include "infoprop/gender.h"
#include "infoprop/info_extract.h"
#include "infoprop/logistic.h"
#include "infoprop/netmetrics.h"
#include "infoprop/null_model.h"
#include "infoprop/propagation.h"
#include "infoprop/quotation.h"

namespace infoprop {

// Same schema as gold quotes, without the speaker field.
std::string QuotesJsonl(std::span<const QuotationSpan> quotes);
std::string AttributionJsonl(std::span<const QuotationSpan> quotes,
                             const QuoteAttribution &attribution);
std::string SpanScoreCsv(const SpanScore &score);

std::string ClusterScoreHeader();
std::string ClusterScoreCsvRow(const std::string &label, const ClusterScore &s);
std::string AblationCsv(std::span<const AblationRow> rows);

std::string EdgesCsv(const CharacterNetwork &network);
std::string BlocksCsv(std::span<const DialogueBlock> blocks);
std::string TuplesCsv(std::span<const PropTuple> tuples,
                      const TopicLexicon &lexicon);
std::string ImplicitEventsCsv(const std::string &book_id,
                              std::span<const ImplicitEvent> events);
std::string ExplicitEventsCsv(const std::string &book_id,
                              std::span<const ExplicitEvent> events);
std::string CounterfactualsCsv(const std::string &book_id,
                               std::span<const ImplicitEvent> events,
                               std::span<const CounterfactualPair> pairs);

// Per-node features with degree. `labels` maps entity -> "propagating" or
// "non_propagating"; other nodes are left blank.
std::string NodeFeaturesCsv(const std::map<int, NodeFeatures> &features,
                            const std::map<int, std::string> &labels = {});

// One row per feature: coefficient, standard error, Wald p-value, and a
// star at alpha = 0.01.
std::string RegressionCsv(const RegressionResult &r);
std::string RandomizationCsv(const NullDistribution &d);
std::string NullCoefficientsCsv(const NullDistribution &d);

}  // namespace infoprop

#endif  // INFOPROP_OUTPUTS_H_
