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

// Propositional (subject, verb, object) tuples read off the dependency
// parse of quoted speech, and the topic filter applied before
// propagation detection.

#ifndef INFOPROP_INFO_EXTRACT_H_
#define INFOPROP_INFO_EXTRACT_H_

#include <compare>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "infoprop/attribution.h"
#include "infoprop/book_index.h"
#include "infoprop/conversation_graph.h"
#include "infoprop/lexicons.h"
#include "infoprop/quotation.h"

namespace infoprop {

// One argument slot: empty, a character entity, or a nominal lemma.
struct Slot {
  enum class Kind { kNull, kEntity, kNominal };

  Kind kind = Kind::kNull;
  int entity = -1;
  std::string lemma;

  static Slot Null() { return {}; }
  static Slot Entity(int id) { return {Kind::kEntity, id, {}}; }
  static Slot Nominal(std::string lemma) {
    return {Kind::kNominal, -1, std::move(lemma)};
  }

  // "_" for null, "E<id>" for entities, the lemma otherwise.
  std::string ToString() const;

  auto operator<=>(const Slot &) const = default;
  bool operator==(const Slot &) const = default;
};

// Identity of a proposition for matching across quotes.
struct TupleKey {
  Slot subject;
  std::string verb;
  Slot object;

  std::string ToString() const;
  auto operator<=>(const TupleKey &) const = default;
  bool operator==(const TupleKey &) const = default;
};

struct PropTuple {
  Slot subject;
  std::string verb;  // lemma of the predicate head
  Slot object;
  int source_quote_id = 0;
  int source_block_id = 0;
  int speaker_entity_id = kUnattributed;
  int source_token = 0;  // predicate head token

  TupleKey Key() const { return {subject, verb, object}; }
  bool operator==(const PropTuple &) const = default;
};

// Pronouns that disqualify a tuple when they head either argument.
bool IsBlockedPronoun(std::string_view surface);

// One tuple per predicate inside a quotation that governs an nsubj and/or
// obj dependent. Passive subjects fill the object slot and by-agents the
// subject slot. Tuples with first- or second-person arguments are dropped.
std::vector<PropTuple> ExtractTuples(const BookIndex &index,
                                     std::span<const QuotationSpan> quotes,
                                     const QuoteAttribution &attribution,
                                     std::span<const DialogueBlock> blocks);

// Keeps tuples whose verb or nominal argument belongs to a topic category.
std::vector<PropTuple> FilterTopic(std::span<const PropTuple> tuples,
                                   const TopicLexicon &lexicon);

}  // namespace infoprop

#endif  // INFOPROP_INFO_EXTRACT_H_
