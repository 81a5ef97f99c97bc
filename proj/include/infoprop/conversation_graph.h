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

// Dialogue blocks and the co-presence character network built from them.

#ifndef INFOPROP_CONVERSATION_GRAPH_H_
#define INFOPROP_CONVERSATION_GRAPH_H_

#include <map>
#include <set>
#include <span>
#include <vector>

#include "infoprop/attribution.h"
#include "infoprop/book_index.h"
#include "infoprop/character_network.h"
#include "infoprop/quotation.h"

namespace infoprop {

// Sentences without quoted dialogue that terminate a block.
inline constexpr int kBlockBreakSentences = 3;

struct DialogueBlock {
  int block_id = 0;
  int first_sentence = 0;  // first and last quote-bearing sentences
  int last_sentence = 0;
  std::vector<int> quote_ids;
  // Characters mentioned outside quotations in the block, plus the
  // attributed speakers of its quotes.
  std::set<int> co_present;

  bool operator==(const DialogueBlock &) const = default;
};

// Groups quote-bearing sentences into blocks, splitting wherever
// kBlockBreakSentences or more narration sentences intervene. Speakers are
// added to co-presence only when an attribution is supplied.
std::vector<DialogueBlock> SegmentDialogueBlocks(
    const BookIndex &index, std::span<const QuotationSpan> quotes,
    const QuoteAttribution *attribution = nullptr);

// One clique per block over its co-present characters; edge weight counts
// the blocks a pair shares.
CharacterNetwork BuildNetwork(std::span<const DialogueBlock> blocks);

// quote_id -> block_id.
std::map<int, int> BlockOfQuote(std::span<const DialogueBlock> blocks);

}  // namespace infoprop

#endif  // INFOPROP_CONVERSATION_GRAPH_H_
