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

#include <gtest/gtest.h>

#include "fixtures.h"

namespace infoprop {
namespace {

using testing::BookBuilder;

const Lexicons &Lex() {
  static const Lexicons lexicons = Lexicons::LoadDefault();
  return lexicons;
}

QuoteAttribution Attribute(const AnnotatedBook &book,
                           const SieveConfig &config = {}) {
  const BookIndex index(book, Lex().gender);
  return AttributeSpeakers(index, IdentifyQuotations(book), config,
                           Lex().communication_verbs);
}

TEST(Attribution, TrigramAfterQuote) {
  BookBuilder b;
  b.Sentence("\" I am here , \" said|VERB|-1|root|say Jane|PROPN|6|nsubj .");
  b.Mention(7, 7, 7);
  const auto a = Attribute(b.book());
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.at(0), (SpeakerAssignment{7, Sieve::kTrigram}));
}

TEST(Attribution, TrigramBeforeQuote) {
  BookBuilder b;
  b.Sentence("Jane|PROPN|1|nsubj said|VERB|-1|root|say , \" Hello . \"");
  b.Mention(0, 0, 7);
  EXPECT_EQ(Attribute(b.book()).at(0), (SpeakerAssignment{7, Sieve::kTrigram}));
}

TEST(Attribution, TrigramPrefersLongestMention) {
  BookBuilder b;
  b.Sentence("\" Hello , \" said|VERB|-1|root|say Mrs.|PROPN|6|compound Bennet|PROPN|4|nsubj .");
  b.Mention(5, 6, 3).Mention(6, 6, 4);
  EXPECT_EQ(Attribute(b.book()).at(0).speaker, 3);
}

TEST(Attribution, DependencySubject) {
  BookBuilder b;
  b.Sentence("\" Hello . \" Jane|PROPN|8|nsubj , smiling|VERB|8|advcl , replied|VERB|-1|root|reply .");
  b.Mention(4, 4, 2);
  EXPECT_EQ(Attribute(b.book()).at(0), (SpeakerAssignment{2, Sieve::kDependency}));
}

TEST(Attribution, VocativeReply) {
  BookBuilder b;
  b.Sentence("\" Come here , Pip|PROPN|-1|root . \" said|VERB|-1|root|say Joe|PROPN|7|nsubj .");
  b.Mention(4, 4, 1).Mention(8, 8, 2);
  b.Paragraph().Sentence("\" Yes . \"");
  const auto a = Attribute(b.book());
  EXPECT_EQ(a.at(0), (SpeakerAssignment{2, Sieve::kTrigram}));
  EXPECT_EQ(a.at(1), (SpeakerAssignment{1, Sieve::kVocative}));
}

TEST(Attribution, ParagraphFinalMention) {
  BookBuilder b;
  b.Sentence("\" Hello . \" The words came from Joe|PROPN|-1|root .");
  b.Mention(8, 8, 2);
  EXPECT_EQ(Attribute(b.book()).at(0),
            (SpeakerAssignment{2, Sieve::kParagraphFinal}));
}

TEST(Attribution, SingletonMention) {
  BookBuilder b;
  b.Sentence("Joe|PROPN|1|nsubj looked|VERB|-1|root|look up .");
  b.Mention(0, 0, 2);
  b.Sentence("\" Hello . \"");
  EXPECT_EQ(Attribute(b.book()).at(0), (SpeakerAssignment{2, Sieve::kSingleton}));
}

// Three quotes in separate paragraphs; the last has no cue.
AnnotatedBook TwoSpeakers() {
  BookBuilder b;
  b.Sentence("\" One , \" said|VERB|-1|root|say Joe|PROPN|4|nsubj .");
  b.Mention(5, 5, 2);
  int s = b.Paragraph().Sentence("\" Two , \" said|VERB|-1|root|say Pip|PROPN|4|nsubj .");
  b.Mention(s + 5, s + 5, 1);
  b.Paragraph().Sentence("\" Three . \"");
  return b.book();
}

TEST(Attribution, ConversationalAlternation) {
  const auto a = Attribute(TwoSpeakers());
  EXPECT_EQ(a.at(2), (SpeakerAssignment{2, Sieve::kConversational}));
}

TEST(Attribution, MajorityFallbackBreaksTiesByRecency) {
  SieveConfig config;
  config.conversational_pattern = false;
  const auto a = Attribute(TwoSpeakers(), config);
  EXPECT_EQ(a.at(2), (SpeakerAssignment{1, Sieve::kMajority}));
}

TEST(Attribution, MajorityFallbackPicksBlockMajority) {
  BookBuilder b;
  for (int i = 0; i < 2; ++i) {
    const int s = b.Paragraph().Sentence("\" Yes , \" said|VERB|-1|root|say Joe|PROPN|4|nsubj .");
    b.Mention(s + 5, s + 5, 2);
  }
  const int s = b.Paragraph().Sentence("\" No , \" said|VERB|-1|root|say Pip|PROPN|4|nsubj .");
  b.Mention(s + 5, s + 5, 1);
  b.Paragraph().Sentence("\" Maybe . \"");
  SieveConfig config;
  config.conversational_pattern = false;
  EXPECT_EQ(Attribute(b.book(), config).at(3), (SpeakerAssignment{2, Sieve::kMajority}));
}

TEST(Attribution, NoCandidatesLeavesQuoteUnattributed) {
  BookBuilder b;
  b.Sentence("\" Hello . \"");
  const auto a = Attribute(b.book());
  EXPECT_EQ(a.at(0), SpeakerAssignment{});
  EXPECT_EQ(SieveCounts(a).at(std::nullopt), 1);
}

TEST(Attribution, DisabledSieveDoesNotFire) {
  BookBuilder b;
  b.Sentence("\" I am here , \" said|VERB|-1|root|say Jane|PROPN|6|nsubj .");
  b.Mention(7, 7, 7);
  SieveConfig config;
  config.trigram_matching = false;
  EXPECT_EQ(Attribute(b.book(), config).at(0),
            (SpeakerAssignment{7, Sieve::kDependency}));
}

TEST(Attribution, EverySieveDisabledThrows) {
  SieveConfig config;
  for (Sieve s : kSieveOrder) config.Set(s, false);
  EXPECT_FALSE(config.Valid());
  BookBuilder b;
  b.Sentence("\" Hello . \"");
  EXPECT_THROW(Attribute(b.book(), config), std::invalid_argument);
}

TEST(SieveNames, RoundTripAndAliases) {
  for (Sieve s : kSieveOrder) EXPECT_EQ(ParseSieve(SieveName(s)), s);
  EXPECT_EQ(ParseSieve("vocative"), Sieve::kVocative);
  EXPECT_EQ(ParseSieve("fallback"), Sieve::kMajority);
  EXPECT_EQ(ParseSieve("nonsense"), std::nullopt);
}

TEST(SpeakerClustering, UnattributedQuotesAreSingletons) {
  QuoteAttribution a;
  a[0] = {5, Sieve::kTrigram};
  a[1] = {};
  a[2] = {5, Sieve::kMajority};
  a[3] = {};
  EXPECT_EQ(PredictedSpeakerClustering(a), (Clustering{{1}, {3}, {0, 2}}));
}

TEST(Ablation, OneRowPerRemovableSieve) {
  BookBuilder b;
  b.Sentence("\" One , \" said|VERB|-1|root|say Joe|PROPN|4|nsubj .");
  b.Mention(5, 5, 2).Gold(0, 3, 2);
  const int s = b.Paragraph().Sentence("\" Two . \"");
  b.Gold(s, s + 3, 1);
  const BookIndex index(b.book(), Lex().gender);
  const auto rows = Ablate(index, {}, Lex().communication_verbs);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0].label, "full");
  EXPECT_EQ(rows[1].label, "-trigram_matching");
  for (const auto &row : rows) EXPECT_EQ(row.label.find("fallback"), std::string::npos);
}

TEST(Ablation, NeedsGold) {
  BookBuilder b;
  b.Sentence("\" Hello . \"");
  const BookIndex index(b.book(), Lex().gender);
  EXPECT_THROW(Ablate(index, {}, Lex().communication_verbs), MissingGold);
}

}  // namespace
}  // namespace infoprop
