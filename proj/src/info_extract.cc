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

#include "infoprop/info_extract.h"

#include <algorithm>

namespace infoprop {
namespace {

const WordSet &BlockedPronouns() {
  static const WordSet *const kWords = new WordSet{
      "i", "me", "my", "mine", "myself", "we", "us", "our", "ours",
      "ourselves", "you", "your", "yours", "yourself", "yourselves"};
  return *kWords;
}

bool IsAgent(const BookIndex &index, int token) {
  const Token &t = index.token(token);
  if (t.dep_rel == "obl:agent") return true;
  if (t.dep_rel != "obl") return false;
  for (int c : index.ChildrenWithRelation(token, "case")) {
    if (AsciiLower(index.token(c).lemma) == "by") return true;
  }
  return false;
}

}  // namespace

std::string Slot::ToString() const {
  switch (kind) {
    case Kind::kNull: return "_";
    case Kind::kEntity: return "E" + std::to_string(entity);
    case Kind::kNominal: return lemma;
  }
  return "_";
}

std::string TupleKey::ToString() const {
  return subject.ToString() + "|" + verb + "|" + object.ToString();
}

bool IsBlockedPronoun(std::string_view surface) {
  return BlockedPronouns().contains(AsciiLower(surface));
}

std::vector<PropTuple> ExtractTuples(const BookIndex &index,
                                     std::span<const QuotationSpan> quotes,
                                     const QuoteAttribution &attribution,
                                     std::span<const DialogueBlock> blocks) {
  const auto block_of = BlockOfQuote(blocks);
  std::vector<PropTuple> out;

  for (const QuotationSpan &q : quotes) {
    auto inside = [&](int t) { return t > q.start_token && t < q.end_token; };
    int speaker = kUnattributed;
    if (auto it = attribution.find(q.quote_id); it != attribution.end()) {
      speaker = it->second.speaker;
    }
    const auto bit = block_of.find(q.quote_id);
    const int block = bit == block_of.end() ? -1 : bit->second;

    // Returns false when the argument disqualifies the tuple.
    auto fill = [&](int arg, Slot *slot) {
      if (IsBlockedPronoun(index.token(arg).surface)) return false;
      const int entity = index.CharacterAt(arg);
      *slot = entity >= 0 ? Slot::Entity(entity)
                          : Slot::Nominal(AsciiLower(index.token(arg).lemma));
      return true;
    };

    for (int t = q.start_token + 1; t < q.end_token; ++t) {
      int subject = -1;
      int object = -1;
      for (int c : index.Children(t)) {
        if (!inside(c)) continue;
        const std::string &rel = index.token(c).dep_rel;
        if (rel == "nsubj" && subject < 0) {
          subject = c;
        } else if ((rel == "obj" || rel == "nsubj:pass") && object < 0) {
          object = c;
        }
      }
      bool passive = false;
      for (int c : index.Children(t)) {
        passive |= inside(c) && index.token(c).dep_rel == "nsubj:pass";
      }
      if (passive && subject < 0) {
        for (int c : index.Children(t)) {
          if (inside(c) && IsAgent(index, c)) {
            subject = c;
            break;
          }
        }
      }
      if (subject < 0 && object < 0) continue;

      PropTuple tuple;
      tuple.verb = AsciiLower(index.token(t).lemma);
      if (tuple.verb.empty()) continue;
      if (subject >= 0 && !fill(subject, &tuple.subject)) continue;
      if (object >= 0 && !fill(object, &tuple.object)) continue;
      tuple.source_quote_id = q.quote_id;
      tuple.source_block_id = block;
      tuple.speaker_entity_id = speaker;
      tuple.source_token = t;
      out.push_back(std::move(tuple));
    }
  }
  std::sort(out.begin(), out.end(), [](const PropTuple &a, const PropTuple &b) {
    return a.source_token < b.source_token;
  });
  return out;
}

std::vector<PropTuple> FilterTopic(std::span<const PropTuple> tuples,
                                   const TopicLexicon &lexicon) {
  std::vector<PropTuple> out;
  auto nominal_hit = [&](const Slot &s) {
    return s.kind == Slot::Kind::kNominal && lexicon.Contains(s.lemma);
  };
  for (const PropTuple &t : tuples) {
    if (lexicon.Contains(t.verb) || nominal_hit(t.subject) ||
        nominal_hit(t.object)) {
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace infoprop
