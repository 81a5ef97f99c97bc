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

// Speaker attribution for quotations: a cascade of deterministic sieves
// over narration mentions and coreference chains. Each sieve only fills
// quotes left open by the sieves before it.

#ifndef INFOPROP_ATTRIBUTION_H_
#define INFOPROP_ATTRIBUTION_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infoprop/book_index.h"
#include "infoprop/cluster_eval.h"
#include "infoprop/lexicons.h"
#include "infoprop/quotation.h"

namespace infoprop {

// Sieves in application order.
enum class Sieve {
  kTrigram,
  kDependency,
  kVocative,
  kParagraphFinal,
  kSingleton,
  kConversational,
  kMajority,
};

inline constexpr std::array<Sieve, 7> kSieveOrder = {
    Sieve::kTrigram,   Sieve::kDependency,     Sieve::kVocative,
    Sieve::kParagraphFinal, Sieve::kSingleton, Sieve::kConversational,
    Sieve::kMajority};

// Config names: trigram_matching, dependency_parses, vocatives,
// paragraph_final_mention_linking, singleton_mention_detection,
// conversational_pattern, fallback_majority.
std::string_view SieveName(Sieve sieve);
std::optional<Sieve> ParseSieve(std::string_view name);

struct SieveConfig {
  bool trigram_matching = true;
  bool dependency_parses = true;
  bool singleton_mention_detection = true;
  bool paragraph_final_mention_linking = true;
  bool vocatives = true;
  bool conversational_pattern = true;
  bool fallback_majority = true;

  bool Enabled(Sieve sieve) const;
  void Set(Sieve sieve, bool enabled);
  // A configuration must leave at least one sieve switched on.
  bool Valid() const;
};

inline constexpr int kUnattributed = -1;

struct SpeakerAssignment {
  int speaker = kUnattributed;
  std::optional<Sieve> sieve;  // sieve that fired, if any

  bool operator==(const SpeakerAssignment &) const = default;
};

// quote_id -> assignment; holds every input quote exactly once.
using QuoteAttribution = std::map<int, SpeakerAssignment>;

QuoteAttribution AttributeSpeakers(const BookIndex &index,
                                   std::span<const QuotationSpan> quotes,
                                   const SieveConfig &config,
                                   const WordSet &communication_verbs);

// Number of quotes assigned by each sieve; unattributed quotes are
// counted under nullopt.
std::map<std::optional<Sieve>, int> SieveCounts(const QuoteAttribution &a);

class MissingGold : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gold speaker clusters over gold quote ids.
Clustering GoldSpeakerClustering(const AnnotatedBook &book);
// Predicted clusters; unattributed quotes become singletons.
Clustering PredictedSpeakerClustering(const QuoteAttribution &attribution);

struct AblationRow {
  std::string label;  // "full" or "-<sieve name>"
  ClusterScore score;
};

// Attributes the gold quotation spans with the base configuration and
// with each sieve switched off in turn. Throws MissingGold when the book
// has no gold speakers.
std::vector<AblationRow> Ablate(const BookIndex &index,
                                const SieveConfig &base_config,
                                const WordSet &communication_verbs);

}  // namespace infoprop

#endif  // INFOPROP_ATTRIBUTION_H_
