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

#include "infoprop/propagation.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "spdlog/spdlog.h"

namespace infoprop {
namespace {

const DialogueBlock *FindBlock(std::span<const DialogueBlock> blocks, int id) {
  for (const auto &b : blocks) {
    if (b.block_id == id) return &b;
  }
  return nullptr;
}

}  // namespace

std::vector<ImplicitEvent> DetectImplicit(std::span<const DialogueBlock> blocks,
                                          std::span<const PropTuple> tuples) {
  std::map<TupleKey, std::vector<const PropTuple *>> voicings;
  for (const PropTuple &t : tuples) {
    if (t.speaker_entity_id == kUnattributed || t.source_block_id < 0) continue;
    voicings[t.Key()].push_back(&t);
  }

  std::vector<ImplicitEvent> events;
  std::set<std::tuple<int, int, int, TupleKey>> seen;
  for (auto &[key, list] : voicings) {
    std::sort(list.begin(), list.end(),
              [](const PropTuple *x, const PropTuple *y) {
                return std::tie(x->source_block_id, x->source_token) <
                       std::tie(y->source_block_id, y->source_token);
              });
    const PropTuple &origin = *list.front();
    const DialogueBlock *origin_block = FindBlock(blocks, origin.source_block_id);
    if (!origin_block) continue;
    const int a = origin.speaker_entity_id;
    for (const PropTuple *repeat : list) {
      const int b = repeat->speaker_entity_id;
      if (repeat->source_block_id <= origin.source_block_id || b == a) continue;
      if (!origin_block->co_present.contains(a) ||
          !origin_block->co_present.contains(b)) {
        continue;
      }
      const DialogueBlock *repeat_block =
          FindBlock(blocks, repeat->source_block_id);
      if (!repeat_block || !repeat_block->co_present.contains(b)) continue;
      for (int c : repeat_block->co_present) {
        if (c == b || origin_block->co_present.contains(c)) continue;
        if (!seen.emplace(a, b, c, key).second) continue;
        events.push_back({a, b, c, origin, origin.source_block_id,
                          repeat->source_block_id});
      }
    }
  }
  std::sort(events.begin(), events.end(),
            [](const ImplicitEvent &x, const ImplicitEvent &y) {
              return std::tie(x.origin_block_id, x.tuple.source_token,
                              x.repeat_block_id, x.b_entity, x.c_entity) <
                     std::tie(y.origin_block_id, y.tuple.source_token,
                              y.repeat_block_id, y.b_entity, y.c_entity);
            });
  return events;
}

std::vector<ExplicitEvent> DetectExplicit(const BookIndex &index,
                                          std::span<const QuotationSpan> quotes,
                                          const QuoteAttribution &attribution,
                                          std::span<const DialogueBlock> blocks,
                                          const Lexicons &lexicons) {
  const auto block_of = BlockOfQuote(blocks);
  std::vector<ExplicitEvent> events;

  for (const QuotationSpan &q : quotes) {
    auto ait = attribution.find(q.quote_id);
    if (ait == attribution.end() || ait->second.speaker == kUnattributed) {
      continue;
    }
    const int speaker = ait->second.speaker;
    auto bit = block_of.find(q.quote_id);
    if (bit == block_of.end()) continue;
    const DialogueBlock *block = FindBlock(blocks, bit->second);
    if (!block) continue;

    auto inside = [&](int t) { return t > q.start_token && t < q.end_token; };
    // Character source for a report verb: its nsubj, or the noun the
    // verb modifies as a relative clause.
    auto source_of = [&](int verb) {
      for (int c : index.ChildrenWithRelation(verb, "nsubj")) {
        if (inside(c) && !IsBlockedPronoun(index.token(c).surface)) {
          return index.CharacterAt(c);
        }
      }
      const Token &v = index.token(verb);
      if (v.head && inside(*v.head) &&
          (v.dep_rel == "acl" || v.dep_rel == "acl:relcl")) {
        return index.CharacterAt(*v.head);
      }
      return -1;
    };

    for (int t = q.start_token + 1; t < q.end_token; ++t) {
      const Token &tok = index.token(t);
      const std::string lemma = AsciiLower(tok.lemma);
      if (tok.upos != "VERB" || !lexicons.report_verbs.contains(lemma)) continue;
      bool has_complement = false;
      for (int c : index.Children(t)) {
        has_complement |=
            inside(c) && lexicons.report_complements.contains(index.token(c).dep_rel);
      }
      if (!has_complement) continue;
      const int source = source_of(t);
      if (source < 0 || source == speaker) continue;

      ExplicitEvent e;
      e.a_entity = source;
      e.b_entity = speaker;
      e.quote_id = q.quote_id;
      e.verb = lemma;
      for (int c : block->co_present) {
        if (c != speaker && c != source) e.c_entities.push_back(c);
      }
      if (e.c_entities.empty()) continue;
      events.push_back(std::move(e));
    }
  }
  return events;
}

CounterfactualSample SampleCounterfactuals(
    std::span<const ImplicitEvent> events, std::span<const PropTuple> tuples,
    std::span<const DialogueBlock> blocks, const QuoteAttribution &attribution,
    uint64_t seed) {
  std::set<int> speakers;
  for (const auto &[_, a] : attribution) {
    if (a.speaker != kUnattributed) speakers.insert(a.speaker);
  }
  std::map<TupleKey, std::set<int>> voicers;
  for (const PropTuple &t : tuples) voicers[t.Key()].insert(t.speaker_entity_id);

  std::vector<std::vector<int>> candidates(events.size());
  for (size_t i = 0; i < events.size(); ++i) {
    const ImplicitEvent &e = events[i];
    const DialogueBlock *origin = FindBlock(blocks, e.origin_block_id);
    if (!origin) continue;
    const auto &voiced = voicers[e.tuple.Key()];
    for (int c : origin->co_present) {
      if (c == e.a_entity || c == e.b_entity || voiced.contains(c)) continue;
      if (!speakers.contains(c)) continue;
      candidates[i].push_back(c);
    }
  }

  std::mt19937_64 rng(seed);
  auto draw = [&](const std::vector<int> &pool) {
    if (pool.size() == 1) return pool.front();
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
  };

  CounterfactualSample out;
  for (size_t i = 0; i < events.size(); ++i) {
    const ImplicitEvent &e = events[i];
    if (!candidates[i].empty()) {
      out.pairs.push_back({e.b_entity, draw(candidates[i]),
                           static_cast<int>(i), false});
      continue;
    }
    std::set<int> fallback;
    const auto &voiced = voicers[e.tuple.Key()];
    for (size_t j = 0; j < events.size(); ++j) {
      if (j == i) continue;
      for (int c : candidates[j]) {
        if (c != e.a_entity && c != e.b_entity && !voiced.contains(c)) {
          fallback.insert(c);
        }
      }
    }
    if (fallback.empty()) {
      spdlog::info("no counterfactual candidate for event {} ({}->{}->{})", i,
                   e.a_entity, e.b_entity, e.c_entity);
      out.skipped_events.push_back(static_cast<int>(i));
      continue;
    }
    out.pairs.push_back({e.b_entity,
                         draw(std::vector<int>(fallback.begin(), fallback.end())),
                         static_cast<int>(i), true});
  }
  return out;
}

}  // namespace infoprop
