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

#include "infoprop/attribution.h"

#include <algorithm>
#include <limits>
#include <set>

#include "infoprop/conversation_graph.h"

namespace infoprop {
namespace {

bool IsPunct(const Token &t) { return t.upos == "PUNCT"; }

bool IsTerminalOrComma(std::string_view s) {
  return s == "," || s == "." || s == "!" || s == "?" || s == ";" ||
         s == "..." || s == "—" || s == "--";
}

// Shared state for one attribution run.
class SieveRunner {
 public:
  SieveRunner(const BookIndex &index, std::span<const QuotationSpan> quotes,
              const WordSet &verbs)
      : index_(index),
        book_(index.book()),
        verbs_(verbs),
        owner_(QuoteMembership(index.num_tokens(), quotes)),
        starts_at_(index.num_tokens(), -1),
        ends_at_(index.num_tokens(), -1) {
    // Quotes in document order.
    for (const auto &q : quotes) quotes_.push_back(q);
    std::sort(quotes_.begin(), quotes_.end(),
              [](const QuotationSpan &a, const QuotationSpan &b) {
                return a.start_token < b.start_token;
              });
    owner_ = QuoteMembership(index.num_tokens(), quotes_);
    assigned_.assign(quotes_.size(), SpeakerAssignment{});

    for (int m : index.MentionsByStart()) {
      const Mention &mention = book_.mentions[m];
      if (!index.IsCharacter(mention.entity_id)) continue;
      const int head = index.MentionHead(m);
      if (owner_[head] >= 0) {
        quoted_mentions_.push_back(m);
        continue;
      }
      narration_.push_back(m);
      // Prefer the longest mention at a boundary ("Mrs. Bennet" over
      // "Bennet").
      int &s = starts_at_[mention.start_token];
      if (s < 0 || Length(m) > Length(s)) s = m;
      int &e = ends_at_[mention.end_token];
      if (e < 0 || Length(m) > Length(e)) e = m;
    }

    const auto blocks = SegmentDialogueBlocks(index, quotes_);
    const auto block_of = BlockOfQuote(blocks);
    block_.resize(quotes_.size());
    for (size_t i = 0; i < quotes_.size(); ++i) {
      block_[i] = block_of.at(quotes_[i].quote_id);
    }
  }

  void Run(const SieveConfig &config) {
    for (Sieve sieve : kSieveOrder) {
      if (!config.Enabled(sieve)) continue;
      switch (sieve) {
        case Sieve::kTrigram:
          ForEachOpen(sieve, [&](size_t i) { return Trigram(i); });
          break;
        case Sieve::kDependency:
          ForEachOpen(sieve, [&](size_t i) { return Dependency(i); });
          break;
        case Sieve::kVocative:
          ForEachOpen(sieve, [&](size_t i) { return Vocative(i); });
          break;
        case Sieve::kParagraphFinal:
          ParagraphFinal();
          break;
        case Sieve::kSingleton:
          ForEachOpen(sieve, [&](size_t i) { return Singleton(i); });
          break;
        case Sieve::kConversational:
          Conversational();
          break;
        case Sieve::kMajority:
          Majority();
          break;
      }
    }
  }

  QuoteAttribution Result() const {
    QuoteAttribution out;
    for (size_t i = 0; i < quotes_.size(); ++i) {
      out[quotes_[i].quote_id] = assigned_[i];
    }
    return out;
  }

 private:
  int Length(int m) const {
    return book_.mentions[m].end_token - book_.mentions[m].start_token;
  }
  int Entity(int m) const { return book_.mentions[m].entity_id; }
  int Paragraph(int token) const { return book_.tokens[token].paragraph_id; }
  bool Open(size_t i) const { return assigned_[i].speaker == kUnattributed; }

  bool IsCommVerb(int t) const {
    const Token &tok = book_.tokens[t];
    return (tok.upos == "VERB" || tok.upos == "AUX") &&
           verbs_.contains(AsciiLower(tok.lemma));
  }
  bool Narration(int t) const {
    return t >= 0 && t < index_.num_tokens() && owner_[t] < 0;
  }

  // Applies `fn` to every still-open quote in document order. Results are
  // written as they are found, so later quotes see earlier assignments.
  template <typename Fn>
  void ForEachOpen(Sieve sieve, Fn &&fn) {
    for (size_t i = 0; i < quotes_.size(); ++i) {
      if (!Open(i)) continue;
      const int speaker = fn(i);
      if (speaker != kUnattributed) assigned_[i] = {speaker, sieve};
    }
  }

  // Nearest of several (token position, entity) candidates; ties break
  // toward the candidate after the quote.
  int Nearest(size_t i, const std::vector<std::pair<int, int>> &cands) const {
    const QuotationSpan &q = quotes_[i];
    int best = kUnattributed;
    int best_dist = std::numeric_limits<int>::max();
    bool best_after = false;
    for (const auto &[pos, entity] : cands) {
      const bool after = pos > q.end_token;
      const int dist = after ? pos - q.end_token : q.start_token - pos;
      if (dist < best_dist || (dist == best_dist && after && !best_after)) {
        best = entity;
        best_dist = dist;
        best_after = after;
      }
    }
    return best;
  }

  // Narration token window around quote i: its own paragraph(s), bounded
  // by neighbouring quotes.
  std::pair<int, int> Window(size_t i) const {
    const QuotationSpan &q = quotes_[i];
    int lo = index_.ParagraphRange(Paragraph(q.start_token)).first;
    int hi = index_.ParagraphRange(Paragraph(q.end_token)).second;
    if (i > 0) lo = std::max(lo, quotes_[i - 1].end_token + 1);
    if (i + 1 < quotes_.size()) hi = std::min(hi, quotes_[i + 1].start_token - 1);
    return {lo, hi};
  }

  // "..., " said Jane / "..., " Jane said / Jane said, "..." /
  // said Jane, "..."
  int Trigram(size_t i) const {
    const QuotationSpan &q = quotes_[i];
    const int para_after = Paragraph(q.end_token);
    const int para_before = Paragraph(q.start_token);
    const int n = index_.num_tokens();

    int p = q.end_token + 1;
    if (Narration(p) && IsPunct(book_.tokens[p]) && p + 1 < n) ++p;
    if (Narration(p) && Paragraph(p) == para_after) {
      if (IsCommVerb(p) && Narration(p + 1) && starts_at_[p + 1] >= 0 &&
          Paragraph(p + 1) == para_after) {
        return Entity(starts_at_[p + 1]);
      }
      if (const int m = starts_at_[p]; m >= 0) {
        const int v = book_.mentions[m].end_token + 1;
        if (Narration(v) && Paragraph(v) == para_after && IsCommVerb(v)) {
          return Entity(m);
        }
      }
    }

    p = q.start_token - 1;
    if (Narration(p) && IsPunct(book_.tokens[p]) && p > 0) --p;
    if (Narration(p) && Paragraph(p) == para_before) {
      if (IsCommVerb(p) && Narration(p - 1) && ends_at_[p - 1] >= 0 &&
          Paragraph(p - 1) == para_before) {
        return Entity(ends_at_[p - 1]);
      }
      if (const int m = ends_at_[p]; m >= 0) {
        const int v = book_.mentions[m].start_token - 1;
        if (Narration(v) && Paragraph(v) == para_before && IsCommVerb(v)) {
          return Entity(m);
        }
      }
    }
    return kUnattributed;
  }

  // Character mention in an nsubj relation to a communication verb in the
  // surrounding narration.
  int Dependency(size_t i) const {
    const auto [lo, hi] = Window(i);
    std::vector<std::pair<int, int>> cands;
    for (int t = lo; t <= hi; ++t) {
      if (!Narration(t) || !IsCommVerb(t)) continue;
      for (int c : index_.ChildrenWithRelation(t, "nsubj")) {
        if (!Narration(c)) continue;
        const int entity = index_.CharacterAt(c);
        if (entity >= 0) cands.emplace_back(c, entity);
      }
    }
    return Nearest(i, cands);
  }

  // The reply to a quote that addresses someone by name is spoken by the
  // addressee.
  int Vocative(size_t i) const {
    if (i == 0) return kUnattributed;
    const QuotationSpan &prev = quotes_[i - 1];
    const QuotationSpan &cur = quotes_[i];
    if (block_[i] != block_[i - 1]) return kUnattributed;
    if (Paragraph(cur.start_token) <= Paragraph(prev.end_token)) {
      return kUnattributed;
    }
    int found = kUnattributed;
    for (int m : quoted_mentions_) {
      const Mention &mention = book_.mentions[m];
      if (mention.start_token <= prev.start_token ||
          mention.end_token >= prev.end_token) {
        continue;
      }
      const int before = mention.start_token - 1;
      const int after = mention.end_token + 1;
      const bool left = before == prev.start_token ||
                        book_.tokens[before].surface == ",";
      const bool right = after == prev.end_token ||
                         IsTerminalOrComma(book_.tokens[after].surface);
      if (left && right) found = mention.entity_id;
    }
    if (found != kUnattributed && found == assigned_[i - 1].speaker) {
      return kUnattributed;
    }
    return found;
  }

  // The last character mentioned after a paragraph's final quote speaks
  // that paragraph's open quotes.
  void ParagraphFinal() {
    std::map<int, std::vector<size_t>> by_paragraph;
    for (size_t i = 0; i < quotes_.size(); ++i) {
      by_paragraph[Paragraph(quotes_[i].start_token)].push_back(i);
    }
    for (const auto &[para, members] : by_paragraph) {
      const int last_end = quotes_[members.back()].end_token;
      const int para_end = index_.ParagraphRange(para).second;
      int speaker = kUnattributed;
      for (int m : narration_) {
        const Mention &mention = book_.mentions[m];
        if (mention.start_token > last_end && mention.end_token <= para_end) {
          speaker = mention.entity_id;
        }
      }
      if (speaker == kUnattributed) continue;
      for (size_t i : members) {
        if (Open(i)) assigned_[i] = {speaker, Sieve::kParagraphFinal};
      }
    }
  }

  // Exactly one character mentioned in the narration around the quote.
  int Singleton(size_t i) const {
    const auto [lo, hi] = Window(i);
    std::set<int> entities;
    for (int m : narration_) {
      const Mention &mention = book_.mentions[m];
      if (mention.start_token >= lo && mention.end_token <= hi) {
        entities.insert(mention.entity_id);
      }
    }
    return entities.size() == 1 ? *entities.begin() : kUnattributed;
  }

  // Two-party alternation inside a block: consecutive quotes in new
  // paragraphs switch speaker, quotes sharing a paragraph keep it.
  void Conversational() {
    std::map<int, std::vector<size_t>> by_block;
    for (size_t i = 0; i < quotes_.size(); ++i) by_block[block_[i]].push_back(i);
    for (const auto &[block, members] : by_block) {
      std::set<int> speakers;
      for (size_t i : members) {
        if (!Open(i)) speakers.insert(assigned_[i].speaker);
      }
      if (speakers.size() != 2) continue;
      const int x = *speakers.begin();
      const int y = *speakers.rbegin();
      auto infer = [&](size_t from, size_t to) {
        const int s = assigned_[from].speaker;
        const bool same_para =
            Paragraph(quotes_[from].start_token) ==
                Paragraph(quotes_[to].start_token) ||
            Paragraph(quotes_[from].end_token) ==
                Paragraph(quotes_[to].start_token);
        return same_para ? s : (s == x ? y : x);
      };
      bool changed = true;
      while (changed) {
        changed = false;
        for (size_t k = 1; k < members.size(); ++k) {
          const size_t cur = members[k];
          const size_t prev = members[k - 1];
          if (Open(cur) && !Open(prev)) {
            assigned_[cur] = {infer(prev, cur), Sieve::kConversational};
            changed = true;
          }
        }
        for (size_t k = members.size() - 1; k > 0; --k) {
          const size_t cur = members[k - 1];
          const size_t next = members[k];
          if (Open(cur) && !Open(next)) {
            assigned_[cur] = {infer(next, cur), Sieve::kConversational};
            changed = true;
          }
        }
      }
    }
  }

  // Majority speaker of the enclosing block, then of the book; ties go to
  // the speaker heard most recently before the quote.
  void Majority() {
    const std::vector<SpeakerAssignment> before = assigned_;
    auto pick = [&](size_t i, const std::vector<size_t> &pool) {
      std::map<int, int> counts;
      for (size_t j : pool) {
        if (before[j].speaker != kUnattributed) ++counts[before[j].speaker];
      }
      if (counts.empty()) return kUnattributed;
      int top = 0;
      for (const auto &[_, c] : counts) top = std::max(top, c);
      // Recency key: latest quote before i, else earliest quote after i.
      int best = kUnattributed;
      long best_key = std::numeric_limits<long>::min();
      for (const auto &[speaker, c] : counts) {
        if (c != top) continue;
        long key = std::numeric_limits<long>::min() + 1;
        for (size_t j : pool) {
          if (before[j].speaker != speaker) continue;
          const long k = j < i ? static_cast<long>(j)
                               : -static_cast<long>(j) - 1 -
                                     static_cast<long>(quotes_.size());
          key = std::max(key, k);
        }
        if (key > best_key) {
          best_key = key;
          best = speaker;
        }
      }
      return best;
    };

    std::map<int, std::vector<size_t>> by_block;
    std::vector<size_t> all;
    for (size_t i = 0; i < quotes_.size(); ++i) {
      by_block[block_[i]].push_back(i);
      all.push_back(i);
    }
    for (size_t i = 0; i < quotes_.size(); ++i) {
      if (!Open(i)) continue;
      int speaker = pick(i, by_block[block_[i]]);
      if (speaker == kUnattributed) speaker = pick(i, all);
      if (speaker == kUnattributed) {
        std::vector<std::pair<int, int>> cands;
        for (int m : narration_) {
          cands.emplace_back(index_.MentionHead(m), Entity(m));
        }
        if (cands.empty()) {
          for (int m : quoted_mentions_) {
            cands.emplace_back(index_.MentionHead(m), Entity(m));
          }
        }
        speaker = Nearest(i, cands);
      }
      if (speaker != kUnattributed) assigned_[i] = {speaker, Sieve::kMajority};
    }
  }

  const BookIndex &index_;
  const AnnotatedBook &book_;
  const WordSet &verbs_;
  std::vector<QuotationSpan> quotes_;
  std::vector<int> owner_;
  std::vector<int> starts_at_;  // narration character mention starting here
  std::vector<int> ends_at_;
  std::vector<int> narration_;        // mention indices, by start
  std::vector<int> quoted_mentions_;  // character mentions inside quotes
  std::vector<int> block_;
  std::vector<SpeakerAssignment> assigned_;
};

}  // namespace

std::string_view SieveName(Sieve sieve) {
  switch (sieve) {
    case Sieve::kTrigram: return "trigram_matching";
    case Sieve::kDependency: return "dependency_parses";
    case Sieve::kVocative: return "vocatives";
    case Sieve::kParagraphFinal: return "paragraph_final_mention_linking";
    case Sieve::kSingleton: return "singleton_mention_detection";
    case Sieve::kConversational: return "conversational_pattern";
    case Sieve::kMajority: return "fallback_majority";
  }
  return "unknown";
}

std::optional<Sieve> ParseSieve(std::string_view name) {
  for (Sieve s : kSieveOrder) {
    if (SieveName(s) == name) return s;
  }
  // Short aliases for the command line.
  static const std::map<std::string_view, Sieve> kAliases = {
      {"trigram", Sieve::kTrigram},       {"dependency", Sieve::kDependency},
      {"vocative", Sieve::kVocative},     {"paragraph_final", Sieve::kParagraphFinal},
      {"singleton", Sieve::kSingleton},   {"conversational", Sieve::kConversational},
      {"majority", Sieve::kMajority},     {"fallback", Sieve::kMajority},
  };
  auto it = kAliases.find(name);
  if (it != kAliases.end()) return it->second;
  return std::nullopt;
}

bool SieveConfig::Enabled(Sieve sieve) const {
  switch (sieve) {
    case Sieve::kTrigram: return trigram_matching;
    case Sieve::kDependency: return dependency_parses;
    case Sieve::kVocative: return vocatives;
    case Sieve::kParagraphFinal: return paragraph_final_mention_linking;
    case Sieve::kSingleton: return singleton_mention_detection;
    case Sieve::kConversational: return conversational_pattern;
    case Sieve::kMajority: return fallback_majority;
  }
  return false;
}

void SieveConfig::Set(Sieve sieve, bool enabled) {
  switch (sieve) {
    case Sieve::kTrigram: trigram_matching = enabled; break;
    case Sieve::kDependency: dependency_parses = enabled; break;
    case Sieve::kVocative: vocatives = enabled; break;
    case Sieve::kParagraphFinal: paragraph_final_mention_linking = enabled; break;
    case Sieve::kSingleton: singleton_mention_detection = enabled; break;
    case Sieve::kConversational: conversational_pattern = enabled; break;
    case Sieve::kMajority: fallback_majority = enabled; break;
  }
}

bool SieveConfig::Valid() const {
  return std::any_of(kSieveOrder.begin(), kSieveOrder.end(),
                     [this](Sieve s) { return Enabled(s); });
}

QuoteAttribution AttributeSpeakers(const BookIndex &index,
                                   std::span<const QuotationSpan> quotes,
                                   const SieveConfig &config,
                                   const WordSet &communication_verbs) {
  if (!config.Valid()) {
    throw std::invalid_argument("sieve configuration disables every sieve");
  }
  SieveRunner runner(index, quotes, communication_verbs);
  runner.Run(config);
  return runner.Result();
}

std::map<std::optional<Sieve>, int> SieveCounts(const QuoteAttribution &a) {
  std::map<std::optional<Sieve>, int> counts;
  for (const auto &[_, assignment] : a) ++counts[assignment.sieve];
  return counts;
}

Clustering GoldSpeakerClustering(const AnnotatedBook &book) {
  if (!book.gold_quotes) {
    throw MissingGold(book.book_id + ": no gold quotations");
  }
  std::map<int, std::vector<int>> by_speaker;
  for (const GoldQuote &q : *book.gold_quotes) {
    by_speaker[q.speaker_entity_id].push_back(q.quote_id);
  }
  Clustering out;
  for (auto &[_, ids] : by_speaker) out.push_back(std::move(ids));
  return out;
}

Clustering PredictedSpeakerClustering(const QuoteAttribution &attribution) {
  std::map<int, std::vector<int>> by_speaker;
  Clustering out;
  for (const auto &[quote, a] : attribution) {
    if (a.speaker == kUnattributed) {
      out.push_back({quote});
    } else {
      by_speaker[a.speaker].push_back(quote);
    }
  }
  for (auto &[_, ids] : by_speaker) out.push_back(std::move(ids));
  return out;
}

std::vector<AblationRow> Ablate(const BookIndex &index,
                                const SieveConfig &base_config,
                                const WordSet &communication_verbs) {
  const AnnotatedBook &book = index.book();
  if (!book.gold_quotes || book.gold_quotes->empty()) {
    throw MissingGold(book.book_id + ": ablation needs gold speakers");
  }
  const Clustering gold = GoldSpeakerClustering(book);
  const auto spans = GoldSpans(book);

  auto score = [&](const SieveConfig &config) {
    if (!config.Valid()) return ClusterScore{};
    const auto attribution =
        AttributeSpeakers(index, spans, config, communication_verbs);
    return ScoreClusters(gold, PredictedSpeakerClustering(attribution));
  };

  std::vector<AblationRow> rows;
  rows.push_back({"full", score(base_config)});
  for (Sieve s : kSieveOrder) {
    if (s == Sieve::kMajority) continue;
    SieveConfig config = base_config;
    config.Set(s, false);
    rows.push_back({"-" + std::string(SieveName(s)), score(config)});
  }
  return rows;
}

}  // namespace infoprop
