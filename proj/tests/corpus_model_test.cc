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

#include "infoprop/corpus_model.h"

#include <gtest/gtest.h>

#include "fixtures.h"

namespace infoprop {
namespace {

using testing::BookBuilder;
using testing::TempDir;
using testing::WriteText;

constexpr char kHeader[] =
    "token_id\tsentence_id\tparagraph_id\tsurface\tlemma\tupos\thead\tdep_rel\n";

// Two sentences, one mention of entity 4.
AnnotatedBook TwoSentences() {
  BookBuilder b("two");
  b.Sentence("Pip|PROPN|1|nsubj ran|VERB|-1|root|run .|PUNCT|1|punct");
  b.Paragraph().Sentence("It|PRON|1|nsubj rained|VERB|-1|root|rain .|PUNCT|1|punct");
  b.Mention(0, 0, 4);
  return b.book();
}

TEST(LoadBook, HandFixtureHasOneEntity) {
  TempDir dir("load_fixture");
  WriteText(dir / "two.tokens.tsv",
            std::string(kHeader) +
                "0\t0\t0\tPip\tPip\tPROPN\t1\tnsubj\n"
                "1\t0\t0\tran\trun\tVERB\t-1\troot\n"
                "2\t0\t0\t.\t.\tPUNCT\t1\tpunct\n"
                "3\t1\t1\tIt\tit\tPRON\t4\tnsubj\n"
                "4\t1\t1\trained\train\tVERB\t-1\troot\n");
  WriteText(dir / "two.mentions.jsonl",
            R"({"mention_id": 0, "start_token": 0, "end_token": 0, "entity_id": 4, "text": "Pip"})"
            "\n");
  const AnnotatedBook book =
      LoadBook(dir / "two.tokens.tsv", dir / "two.mentions.jsonl");
  EXPECT_EQ(book.book_id, "two");
  EXPECT_EQ(book.tokens.size(), 5u);
  EXPECT_EQ(book.num_sentences(), 2);
  ASSERT_EQ(book.mentions.size(), 1u);
  EXPECT_EQ(book.mentions[0].entity_id, 4);
  EXPECT_EQ(book.mentions[0].text, "Pip");
  EXPECT_FALSE(book.tokens[1].head.has_value());
  EXPECT_EQ(book.tokens[0].head, 1);
  EXPECT_FALSE(book.gold_quotes.has_value());
  EXPECT_TRUE(Validate(book).empty());
}

TEST(LoadBook, EmptyTokensFileIsEmptyBook) {
  TempDir dir("load_empty");
  WriteText(dir / "e.tokens.tsv", kHeader);
  WriteText(dir / "e.mentions.jsonl", "");
  try {
    LoadBook(dir / "e.tokens.tsv", dir / "e.mentions.jsonl");
    FAIL() << "expected EmptyBook";
  } catch (const AnnotationError &e) {
    EXPECT_EQ(e.kind(), AnnotationError::Kind::kEmptyBook);
  }
}

TEST(LoadBook, MentionPastLastTokenIsDangling) {
  TempDir dir("load_dangling");
  WriteText(dir / "d.tokens.tsv",
            std::string(kHeader) + "0\t0\t0\tPip\tPip\tPROPN\t-1\troot\n");
  WriteText(dir / "d.mentions.jsonl",
            R"({"mention_id": 0, "start_token": 0, "end_token": 3, "entity_id": 1})"
            "\n");
  try {
    LoadBook(dir / "d.tokens.tsv", dir / "d.mentions.jsonl");
    FAIL() << "expected DanglingReference";
  } catch (const AnnotationError &e) {
    EXPECT_EQ(e.kind(), AnnotationError::Kind::kDanglingReference);
  }
}

TEST(LoadBook, MalformedRowReportsLineAndColumn) {
  TempDir dir("load_malformed");
  WriteText(dir / "m.tokens.tsv",
            std::string(kHeader) + "0\t0\t0\tPip\tPip\tPROPN\t-1\troot\n"
                                   "1\tx\t0\tran\trun\tVERB\t0\troot\n");
  WriteText(dir / "m.mentions.jsonl", "");
  try {
    LoadBook(dir / "m.tokens.tsv", dir / "m.mentions.jsonl");
    FAIL() << "expected MalformedRecord";
  } catch (const AnnotationError &e) {
    EXPECT_EQ(e.kind(), AnnotationError::Kind::kMalformedRecord);
    EXPECT_NE(std::string(e.what()).find(":3:2:"), std::string::npos) << e.what();
  }
}

TEST(LoadBook, WrongHeaderIsMalformed) {
  TempDir dir("load_header");
  WriteText(dir / "h.tokens.tsv", "id\tsurface\n0\tPip\n");
  WriteText(dir / "h.mentions.jsonl", "");
  EXPECT_THROW(LoadBook(dir / "h.tokens.tsv", dir / "h.mentions.jsonl"),
               AnnotationError);
}

TEST(LoadBook, MissingFileIsIoError) {
  try {
    LoadBook("/nonexistent/x.tokens.tsv", "/nonexistent/x.mentions.jsonl");
    FAIL();
  } catch (const AnnotationError &e) {
    EXPECT_EQ(e.kind(), AnnotationError::Kind::kIo);
  }
}

TEST(LoadBook, SpeakerWithoutMentionIsDangling) {
  TempDir dir("load_speaker");
  AnnotatedBook book = TwoSentences();
  book.book_id = "s";
  book.gold_quotes = std::vector<GoldQuote>{{0, 0, 2, 9}};
  BookPaths paths = BookPaths::FromPrefix(dir / "s");
  paths.quotes = dir / "s.quotes.jsonl";
  WriteBook(book, paths);
  try {
    LoadBook(paths);
    FAIL();
  } catch (const AnnotationError &e) {
    EXPECT_EQ(e.kind(), AnnotationError::Kind::kDanglingReference);
  }
}

TEST(Validate, CrossSentenceHeadIsOneViolation) {
  AnnotatedBook book = TwoSentences();
  book.tokens[3].head = 1;
  EXPECT_EQ(Validate(book).size(), 1u);
}

TEST(Validate, NonContiguousTokenIdsIsOneViolation) {
  AnnotatedBook book = TwoSentences();
  book.tokens.back().token_id = 9;
  EXPECT_EQ(Validate(book).size(), 1u);
}

TEST(Validate, OverlappingGoldQuotes) {
  AnnotatedBook book = TwoSentences();
  book.gold_quotes = std::vector<GoldQuote>{{0, 0, 2, 4}, {1, 2, 4, 4}};
  const auto v = Validate(book);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("overlaps"), std::string::npos);
}

TEST(Validate, SelfHeadAndBadSpan) {
  AnnotatedBook book = TwoSentences();
  book.tokens[2].head = 2;
  book.mentions.push_back({1, 3, 2, 0, ""});
  EXPECT_EQ(Validate(book).size(), 2u);
}

TEST(RoundTrip, WriteThenLoadIsIdentity) {
  TempDir dir("roundtrip");
  AnnotatedBook book = TwoSentences();
  book.book_id = "rt";
  book.gold_quotes = std::vector<GoldQuote>{{0, 0, 1, 4}};
  BookPaths paths = BookPaths::FromPrefix(dir / "rt");
  paths.quotes = dir / "rt.quotes.jsonl";
  WriteBook(book, paths);
  EXPECT_EQ(LoadBook(BookPaths::FromPrefix(dir / "rt")), book);
}

TEST(DiscoverBooks, SortedAndQuotesOptional) {
  TempDir dir("discover");
  for (const char *id : {"b", "a"}) {
    AnnotatedBook book = TwoSentences();
    book.book_id = id;
    WriteBook(book, BookPaths::FromPrefix(dir / id));
  }
  WriteText(dir / "notes.txt", "ignored");
  const auto found = DiscoverBooks(dir.path());
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0].BookId(), "a");
  EXPECT_EQ(found[1].BookId(), "b");
  EXPECT_FALSE(found[0].quotes.has_value());
  EXPECT_TRUE(DiscoverBooks(dir / "missing").empty());
}

}  // namespace
}  // namespace infoprop
