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

// Annotation data model for one book: tokens with dependency arcs,
// coreference mentions, and optional gold quotations. Books are loaded
// from a stand-off bundle:
//
//   <book>.tokens.tsv     token_id sentence_id paragraph_id surface lemma
//                         upos head dep_rel   (head = -1 for the root)
//   <book>.mentions.jsonl {mention_id, start_token, end_token, entity_id, text}
//   <book>.quotes.jsonl   {quote_id, start_token, end_token, speaker_entity_id}
//
// All spans are inclusive token ranges.

#ifndef INFOPROP_CORPUS_MODEL_H_
#define INFOPROP_CORPUS_MODEL_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace infoprop {

struct Token {
  int token_id = 0;
  int sentence_id = 0;
  int paragraph_id = 0;
  std::string surface;
  std::string lemma;
  std::string upos;
  std::optional<int> head;  // nullopt for the syntactic root
  std::string dep_rel;

  bool operator==(const Token &) const = default;
};

struct Mention {
  int mention_id = 0;
  int start_token = 0;
  int end_token = 0;
  int entity_id = 0;
  std::string text;

  bool operator==(const Mention &) const = default;
};

struct GoldQuote {
  int quote_id = 0;
  int start_token = 0;
  int end_token = 0;
  int speaker_entity_id = 0;

  bool operator==(const GoldQuote &) const = default;
};

struct AnnotatedBook {
  std::string book_id;
  std::vector<Token> tokens;
  std::vector<Mention> mentions;
  std::optional<std::vector<GoldQuote>> gold_quotes;

  int num_sentences() const {
    return tokens.empty() ? 0 : tokens.back().sentence_id + 1;
  }

  bool operator==(const AnnotatedBook &) const = default;
};

// Raised by LoadBook. Validation problems found after parsing are
// reported through Validate() instead.
class AnnotationError : public std::runtime_error {
 public:
  enum class Kind { kIo, kMalformedRecord, kDanglingReference, kEmptyBook };

  AnnotationError(Kind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// File locations of one annotation bundle.
struct BookPaths {
  std::filesystem::path tokens;
  std::filesystem::path mentions;
  std::optional<std::filesystem::path> quotes;

  // Resolves <prefix>.tokens.tsv etc. The quotes file is only set when it
  // exists on disk.
  static BookPaths FromPrefix(const std::filesystem::path &prefix);

  // Book id derived from the tokens file name.
  std::string BookId() const;
};

AnnotatedBook LoadBook(const std::filesystem::path &tokens_path,
                       const std::filesystem::path &mentions_path,
                       const std::optional<std::filesystem::path>
                           &gold_quotes_path = std::nullopt);
AnnotatedBook LoadBook(const BookPaths &paths);

// Returns one human-readable description per violated invariant; empty
// iff the book is well formed.
std::vector<std::string> Validate(const AnnotatedBook &book);

// Serialization back into the bundle formats.
std::string TokensToTsv(const AnnotatedBook &book);
std::string MentionsToJsonl(const AnnotatedBook &book);
std::string GoldQuotesToJsonl(const std::vector<GoldQuote> &quotes);
void WriteBook(const AnnotatedBook &book, const BookPaths &paths);

// Finds every bundle (*.tokens.tsv) in a directory, sorted by book id.
std::vector<BookPaths> DiscoverBooks(const std::filesystem::path &dir);

}  // namespace infoprop

#endif  // INFOPROP_CORPUS_MODEL_H_
