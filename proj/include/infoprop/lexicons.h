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

// Word lists that drive the rule-based stages. Every list ships as an
// INI file under data/lexicons and can be replaced from the pipeline
// config. Values are comma-separated, matched case-insensitively.

#ifndef INFOPROP_LEXICONS_H_
#define INFOPROP_LEXICONS_H_

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace infoprop {

using WordSet = std::set<std::string, std::less<>>;

std::string AsciiLower(std::string_view s);

// Topic categories (amorous, hostile, juridical, vital) mapped to their
// seed words plus any configured synonyms.
class TopicLexicon {
 public:
  TopicLexicon() = default;
  explicit TopicLexicon(std::map<std::string, WordSet> categories);

  bool Contains(std::string_view word) const;
  std::optional<std::string> CategoryOf(std::string_view word) const;
  const std::map<std::string, WordSet> &categories() const {
    return categories_;
  }

 private:
  std::map<std::string, WordSet> categories_;
};

struct GenderLexicon {
  WordSet female;
  WordSet male;
};

struct Lexicons {
  WordSet communication_verbs;
  WordSet report_verbs;
  // Dependency relations that mark a report verb as introducing content.
  WordSet report_complements;
  TopicLexicon topics;
  GenderLexicon gender;

  // Reads the four standard files from a directory.
  static Lexicons LoadFromDir(const std::filesystem::path &dir);
  // The lexicons bundled with the source tree.
  static Lexicons LoadDefault();
};

std::filesystem::path DefaultDataDir();

WordSet LoadCommunicationVerbs(const std::filesystem::path &path);
TopicLexicon LoadTopicLexicon(const std::filesystem::path &path);
GenderLexicon LoadGenderLexicon(const std::filesystem::path &path);
void LoadReportVerbs(const std::filesystem::path &path, WordSet *verbs,
                     WordSet *complements);

}  // namespace infoprop

#endif  // INFOPROP_LEXICONS_H_
