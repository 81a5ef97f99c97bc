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

// Hand-built annotated books for unit tests.

#ifndef INFOPROP_TESTS_FIXTURES_H_
#define INFOPROP_TESTS_FIXTURES_H_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "infoprop/corpus_model.h"
#include "infoprop/lexicons.h"

namespace infoprop::testing {

// Builds a book sentence by sentence. A sentence is written as
// whitespace-separated tokens of the form
//   surface|UPOS|head|dep[|lemma]
// where head is the sentence-local index (-1 for the root). A bare
// surface is a root token whose UPOS is PUNCT for punctuation and X
// otherwise. Lemmas default to the lowercased surface.
class BookBuilder {
 public:
  explicit BookBuilder(std::string id = "fixture") { book_.book_id = std::move(id); }

  // The next sentence opens a new paragraph.
  BookBuilder &Paragraph() {
    new_paragraph_ = true;
    return *this;
  }

  // Appends a sentence and returns the global id of its first token.
  int Sentence(std::string_view spec) {
    if (!book_.tokens.empty()) {
      ++sentence_;
      if (new_paragraph_) ++paragraph_;
    }
    new_paragraph_ = false;
    const int base = static_cast<int>(book_.tokens.size());
    std::istringstream in{std::string(spec)};
    std::string item;
    while (in >> item) {
      std::vector<std::string> f;
      size_t start = 0;
      for (size_t bar; (bar = item.find('|', start)) != std::string::npos; start = bar + 1) {
        f.push_back(item.substr(start, bar - start));
      }
      f.push_back(item.substr(start));
      Token t;
      t.token_id = static_cast<int>(book_.tokens.size());
      t.sentence_id = sentence_;
      t.paragraph_id = paragraph_;
      t.surface = f[0];
      t.lemma = f.size() > 4 ? f[4] : AsciiLower(f[0]);
      if (f.size() == 1) {
        const bool punct = !std::isalnum(static_cast<unsigned char>(f[0][0])) &&
                           static_cast<unsigned char>(f[0][0]) < 0x80;
        const bool curly = f[0] == "“" || f[0] == "”";
        t.upos = punct || curly ? "PUNCT" : "X";
        t.dep_rel = "root";
      } else {
        t.upos = f[1];
        const int head = std::stoi(f[2]);
        if (head >= 0) t.head = base + head;
        t.dep_rel = f[3];
      }
      book_.tokens.push_back(std::move(t));
    }
    return base;
  }

  // Sentences of plain narration words, e.g. "The rain fell ."
  BookBuilder &Narration(int sentences = 1) {
    for (int i = 0; i < sentences; ++i) Paragraph().Sentence("The rain fell .");
    return *this;
  }

  BookBuilder &Mention(int start, int end, int entity) {
    infoprop::Mention m;
    m.mention_id = static_cast<int>(book_.mentions.size());
    m.start_token = start;
    m.end_token = end;
    m.entity_id = entity;
    for (int t = start; t <= end; ++t) {
      if (t > start) m.text += ' ';
      m.text += book_.tokens[t].surface;
    }
    book_.mentions.push_back(std::move(m));
    return *this;
  }

  BookBuilder &Gold(int start, int end, int speaker) {
    if (!book_.gold_quotes) book_.gold_quotes.emplace();
    const int id = static_cast<int>(book_.gold_quotes->size());
    book_.gold_quotes->push_back({id, start, end, speaker});
    return *this;
  }

  const AnnotatedBook &book() const { return book_; }
  int size() const { return static_cast<int>(book_.tokens.size()); }

 private:
  AnnotatedBook book_;
  int sentence_ = 0;
  int paragraph_ = 0;
  bool new_paragraph_ = false;
};

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(std::string_view name) {
    path_ = std::filesystem::temp_directory_path() /
            ("infoprop_test_" + std::string(name));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(std::string_view rel) const { return path_ / rel; }

 private:
  std::filesystem::path path_;
};

inline void WriteText(const std::filesystem::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace infoprop::testing

#endif  // INFOPROP_TESTS_FIXTURES_H_
