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

#include "infoprop/book_index.h"

#include <algorithm>
#include <stdexcept>

namespace infoprop {

BookIndex::BookIndex(const AnnotatedBook &book, const GenderLexicon &gender)
    : book_(&book), gender_(&gender) {
  const int n = num_tokens();
  children_.resize(n);
  for (const Token &t : book.tokens) {
    if (t.head) children_[*t.head].push_back(t.token_id);
  }

  for (const Token &t : book.tokens) {
    if (sentences_.size() <= static_cast<size_t>(t.sentence_id)) {
      sentences_.emplace_back(t.token_id, t.token_id);
    }
    sentences_.back().second = t.token_id;
    if (paragraph_ids_.empty() || paragraph_ids_.back() != t.paragraph_id) {
      paragraph_ids_.push_back(t.paragraph_id);
      paragraphs_.emplace_back(t.token_id, t.token_id);
    }
    paragraphs_.back().second = t.token_id;
  }

  const auto &mentions = book.mentions;
  mention_heads_.resize(mentions.size());
  headed_by_.assign(n, -1);
  for (size_t i = 0; i < mentions.size(); ++i) {
    const Mention &m = mentions[i];
    int head = m.end_token;
    for (int t = m.start_token; t <= m.end_token; ++t) {
      const auto &h = book.tokens[t].head;
      if (!h || *h < m.start_token || *h > m.end_token) head = t;
    }
    mention_heads_[i] = head;
    int &slot = headed_by_[head];
    if (slot < 0 || (m.end_token - m.start_token) <
                        (mentions[slot].end_token - mentions[slot].start_token)) {
      slot = static_cast<int>(i);
    }

    const Token &head_token = book.tokens[head];
    if (head_token.upos == "PROPN" ||
        gender.female.contains(AsciiLower(head_token.surface)) ||
        gender.male.contains(AsciiLower(head_token.surface))) {
      characters_.insert(m.entity_id);
    }
  }

  by_start_.resize(mentions.size());
  for (size_t i = 0; i < mentions.size(); ++i) by_start_[i] = static_cast<int>(i);
  std::stable_sort(by_start_.begin(), by_start_.end(), [&](int a, int b) {
    return mentions[a].start_token < mentions[b].start_token;
  });
}

std::vector<int> BookIndex::ChildrenWithRelation(int token,
                                                 std::string_view rel) const {
  std::vector<int> out;
  for (int c : children_[token]) {
    if (book_->tokens[c].dep_rel == rel) out.push_back(c);
  }
  return out;
}

std::pair<int, int> BookIndex::ParagraphRange(int paragraph_id) const {
  auto it = std::lower_bound(paragraph_ids_.begin(), paragraph_ids_.end(),
                             paragraph_id);
  if (it == paragraph_ids_.end() || *it != paragraph_id) {
    throw std::out_of_range("unknown paragraph");
  }
  return paragraphs_[it - paragraph_ids_.begin()];
}

int BookIndex::CharacterAt(int token) const {
  const int m = headed_by_[token];
  if (m < 0) return -1;
  const int entity = book_->mentions[m].entity_id;
  return IsCharacter(entity) ? entity : -1;
}

}  // namespace infoprop
