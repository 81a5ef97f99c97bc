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

// Propagation triads A -> B -> C.
//
// Implicit: a topic tuple first voiced by A with B co-present, then
// repeated by B in a later block where C is present and C was absent from
// the origin block.
//
// Explicit: a quotation whose speaker B reports what character A said
// ("Bob told me that ..."), heard by the other characters C co-present in
// the block.

#ifndef INFOPROP_PROPAGATION_H_
#define INFOPROP_PROPAGATION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "infoprop/attribution.h"
#include "infoprop/book_index.h"
#include "infoprop/conversation_graph.h"
#include "infoprop/info_extract.h"
#include "infoprop/lexicons.h"
#include "infoprop/quotation.h"

namespace infoprop {

struct ImplicitEvent {
  int a_entity = 0;
  int b_entity = 0;
  int c_entity = 0;
  PropTuple tuple;  // the origin voicing
  int origin_block_id = 0;
  int repeat_block_id = 0;

  bool operator==(const ImplicitEvent &) const = default;
};

struct ExplicitEvent {
  int a_entity = 0;                // reported source
  int b_entity = 0;                // speaker of the quote
  std::vector<int> c_entities;     // listeners, sorted
  int quote_id = 0;
  std::string verb;                // report verb lemma

  bool operator==(const ExplicitEvent &) const = default;
};

struct CounterfactualPair {
  int b_entity = 0;        // propagating
  int b_prime_entity = 0;  // non-propagating
  int event_index = 0;     // into the implicit event list
  bool from_fallback = false;

  bool operator==(const CounterfactualPair &) const = default;
};

std::vector<ImplicitEvent> DetectImplicit(std::span<const DialogueBlock> blocks,
                                          std::span<const PropTuple> tuples);

std::vector<ExplicitEvent> DetectExplicit(const BookIndex &index,
                                          std::span<const QuotationSpan> quotes,
                                          const QuoteAttribution &attribution,
                                          std::span<const DialogueBlock> blocks,
                                          const Lexicons &lexicons);

struct CounterfactualSample {
  std::vector<CounterfactualPair> pairs;
  std::vector<int> skipped_events;  // events with no eligible B'
};

// Samples one B' per implicit event. B' is drawn uniformly from the
// characters co-present in the origin block who never voice the tuple and
// speak at least once in the book. When an event has none, B' is drawn
// from the candidates of the other events that do.
CounterfactualSample SampleCounterfactuals(
    std::span<const ImplicitEvent> events, std::span<const PropTuple> tuples,
    std::span<const DialogueBlock> blocks, const QuoteAttribution &attribution,
    uint64_t seed);

}  // namespace infoprop

#endif  // INFOPROP_PROPAGATION_H_
