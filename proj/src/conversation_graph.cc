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

#include "infoprop/conversation_graph.h"

#include <algorithm>

namespace infoprop {

std::vector<DialogueBlock> SegmentDialogueBlocks(
    const BookIndex &index, std::span<const QuotationSpan> quotes,
    const QuoteAttribution *attribution) {
  std::vector<DialogueBlock> blocks;
  if (quotes.empty()) return blocks;
  const AnnotatedBook &book = index.book();

  // Sentence of each quote's opening delimiter, and every sentence any
  // quote touches.
  std::vector<std::pair<int, int>> quote_starts;  // (sentence, quote idx)
  std::set<int> bearing;
  for (size_t q = 0; q < quotes.size(); ++q) {
    const int s0 = book.tokens[quotes[q].start_token].sentence_id;
    const int s1 = book.tokens[quotes[q].end_token].sentence_id;
    for (int s = s0; s <= s1; ++s) bearing.insert(s);
    quote_starts.emplace_back(s0, static_cast<int>(q));
  }

  int prev = -1;
  for (int s : bearing) {
    if (blocks.empty() || s - prev - 1 >= kBlockBreakSentences) {
      DialogueBlock b;
      b.block_id = static_cast<int>(blocks.size());
      b.first_sentence = s;
      blocks.push_back(b);
    }
    blocks.back().last_sentence = s;
    prev = s;
  }

  std::sort(quote_starts.begin(), quote_starts.end());
  size_t bi = 0;
  for (const auto &[sentence, q] : quote_starts) {
    while (blocks[bi].last_sentence < sentence) ++bi;
    blocks[bi].quote_ids.push_back(quotes[q].quote_id);
    if (attribution) {
      auto it = attribution->find(quotes[q].quote_id);
      if (it != attribution->end() && it->second.speaker != kUnattributed) {
        blocks[bi].co_present.insert(it->second.speaker);
      }
    }
  }

  const auto owner = QuoteMembership(index.num_tokens(), quotes);
  for (size_t m = 0; m < book.mentions.size(); ++m) {
    const int head = index.MentionHead(static_cast<int>(m));
    const int entity = book.mentions[m].entity_id;
    if (owner[head] >= 0 || !index.IsCharacter(entity)) continue;
    const int sentence = book.tokens[head].sentence_id;
    auto it = std::lower_bound(blocks.begin(), blocks.end(), sentence,
                               [](const DialogueBlock &b, int s) {
                                 return b.last_sentence < s;
                               });
    if (it != blocks.end() && it->first_sentence <= sentence) {
      it->co_present.insert(entity);
    }
  }
  return blocks;
}

CharacterNetwork BuildNetwork(std::span<const DialogueBlock> blocks) {
  CharacterNetwork network;
  for (const DialogueBlock &b : blocks) {
    for (auto i = b.co_present.begin(); i != b.co_present.end(); ++i) {
      network.AddNode(*i);
      for (auto j = std::next(i); j != b.co_present.end(); ++j) {
        network.AddEdge(*i, *j);
      }
    }
  }
  return network;
}

std::map<int, int> BlockOfQuote(std::span<const DialogueBlock> blocks) {
  std::map<int, int> out;
  for (const DialogueBlock &b : blocks) {
    for (int q : b.quote_ids) out[q] = b.block_id;
  }
  return out;
}

}  // namespace infoprop
