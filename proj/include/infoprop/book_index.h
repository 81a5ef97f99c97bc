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

// Read-only lookup tables over a validated AnnotatedBook: dependency
// children, mention heads, sentence and paragraph extents, and the set of
// character entities.

#ifndef INFOPROP_BOOK_INDEX_H_
#define INFOPROP_BOOK_INDEX_H_

#include <set>
#include <utility>
#include <vector>

#include "infoprop/corpus_model.h"
#include "infoprop/lexicons.h"

namespace infoprop {

class BookIndex {
 public:
  // `book` must outlive the index.
  BookIndex(const AnnotatedBook &book, const GenderLexicon &gender);

  const AnnotatedBook &book() const { return *book_; }
  int num_tokens() const { return static_cast<int>(book_->tokens.size()); }
  int num_sentences() const { return static_cast<int>(sentences_.size()); }
  const Token &token(int id) const { return book_->tokens[id]; }

  const std::vector<int> &Children(int token) const {
    return children_[token];
  }
  // Children of `token` carrying exactly this relation label.
  std::vector<int> ChildrenWithRelation(int token, std::string_view rel) const;

  // Syntactic head of a mention span: the token whose head lies outside
  // the span (the last such token if several).
  int MentionHead(int mention_index) const { return mention_heads_[mention_index]; }

  // Index into book().mentions of the shortest mention headed by `token`,
  // or -1.
  int MentionHeadedBy(int token) const { return headed_by_[token]; }

  // Indices of mentions sorted by start token.
  const std::vector<int> &MentionsByStart() const { return by_start_; }

  std::pair<int, int> SentenceRange(int sentence) const {
    return sentences_[sentence];
  }
  std::pair<int, int> ParagraphRange(int paragraph_id) const;

  // Entities whose chain holds at least one person-like mention: a
  // proper-noun head, or a head word from the gender lexicon.
  bool IsCharacter(int entity) const { return characters_.contains(entity); }
  const std::set<int> &characters() const { return characters_; }

  // Character entity of the mention headed by `token`, or -1.
  int CharacterAt(int token) const;

  const GenderLexicon &gender() const { return *gender_; }

 private:
  const AnnotatedBook *book_;
  const GenderLexicon *gender_;
  std::vector<std::vector<int>> children_;
  std::vector<int> mention_heads_;
  std::vector<int> headed_by_;
  std::vector<int> by_start_;
  std::vector<std::pair<int, int>> sentences_;
  std::vector<std::pair<int, int>> paragraphs_;
  std::vector<int> paragraph_ids_;
  std::set<int> characters_;
};

}  // namespace infoprop

#endif  // INFOPROP_BOOK_INDEX_H_
