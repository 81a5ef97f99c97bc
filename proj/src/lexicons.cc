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

#include "infoprop/lexicons.h"

#include <algorithm>
#include <stdexcept>

#include "boost/property_tree/ini_parser.hpp"
#include "boost/property_tree/ptree.hpp"
#include "fmt/format.h"

namespace infoprop {
namespace {

namespace pt = boost::property_tree;

pt::ptree ReadIni(const std::filesystem::path &path) {
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error &e) {
    throw std::runtime_error(fmt::format("lexicon {}: {}", path.string(),
                                         e.what()));
  }
  return tree;
}

WordSet SplitWords(std::string_view value) {
  WordSet words;
  size_t pos = 0;
  while (pos <= value.size()) {
    size_t comma = value.find(',', pos);
    if (comma == std::string_view::npos) comma = value.size();
    std::string_view item = value.substr(pos, comma - pos);
    const size_t b = item.find_first_not_of(" \t");
    const size_t e = item.find_last_not_of(" \t");
    if (b != std::string_view::npos) {
      words.insert(AsciiLower(item.substr(b, e - b + 1)));
    }
    pos = comma + 1;
  }
  return words;
}

WordSet RequiredList(const pt::ptree &tree, const std::string &key,
                     const std::filesystem::path &path) {
  auto value = tree.get_optional<std::string>(key);
  if (!value) {
    throw std::runtime_error(
        fmt::format("lexicon {}: missing key '{}'", path.string(), key));
  }
  WordSet words = SplitWords(*value);
  if (words.empty()) {
    throw std::runtime_error(
        fmt::format("lexicon {}: '{}' is empty", path.string(), key));
  }
  return words;
}

}  // namespace

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  });
  return out;
}

TopicLexicon::TopicLexicon(std::map<std::string, WordSet> categories)
    : categories_(std::move(categories)) {
  for (const auto &[name, words] : categories_) {
    if (words.empty()) {
      throw std::invalid_argument(
          fmt::format("topic category '{}' has no words", name));
    }
  }
}

bool TopicLexicon::Contains(std::string_view word) const {
  return CategoryOf(word).has_value();
}

std::optional<std::string> TopicLexicon::CategoryOf(
    std::string_view word) const {
  const std::string lower = AsciiLower(word);
  for (const auto &[name, words] : categories_) {
    if (words.contains(lower)) return name;
  }
  return std::nullopt;
}

std::filesystem::path DefaultDataDir() { return INFOPROP_DATA_DIR; }

WordSet LoadCommunicationVerbs(const std::filesystem::path &path) {
  return RequiredList(ReadIni(path), "communication.verbs", path);
}

void LoadReportVerbs(const std::filesystem::path &path, WordSet *verbs,
                     WordSet *complements) {
  const pt::ptree tree = ReadIni(path);
  *verbs = RequiredList(tree, "report.verbs", path);
  *complements = RequiredList(tree, "report.complement_relations", path);
}

TopicLexicon LoadTopicLexicon(const std::filesystem::path &path) {
  const pt::ptree tree = ReadIni(path);
  const auto topics = tree.get_child_optional("topics");
  if (!topics || topics->empty()) {
    throw std::runtime_error(
        fmt::format("lexicon {}: no [topics] section", path.string()));
  }
  std::map<std::string, WordSet> categories;
  for (const auto &[name, node] : *topics) {
    categories[name] = SplitWords(node.data());
  }
  // Synonym slots extend existing categories only.
  if (const auto synonyms = tree.get_child_optional("synonyms")) {
    for (const auto &[name, node] : *synonyms) {
      auto it = categories.find(name);
      if (it == categories.end()) {
        throw std::runtime_error(fmt::format(
            "lexicon {}: synonyms for unknown category '{}'", path.string(),
            name));
      }
      it->second.merge(SplitWords(node.data()));
    }
  }
  return TopicLexicon(std::move(categories));
}

GenderLexicon LoadGenderLexicon(const std::filesystem::path &path) {
  const pt::ptree tree = ReadIni(path);
  GenderLexicon lexicon;
  lexicon.female = RequiredList(tree, "gender.female", path);
  lexicon.male = RequiredList(tree, "gender.male", path);
  return lexicon;
}

Lexicons Lexicons::LoadFromDir(const std::filesystem::path &dir) {
  Lexicons lex;
  lex.communication_verbs = LoadCommunicationVerbs(dir / "communication_verbs.ini");
  LoadReportVerbs(dir / "report_verbs.ini", &lex.report_verbs,
                  &lex.report_complements);
  lex.topics = LoadTopicLexicon(dir / "topics.ini");
  lex.gender = LoadGenderLexicon(dir / "gender.ini");
  return lex;
}

Lexicons Lexicons::LoadDefault() {
  static const Lexicons *const kDefault =
      new Lexicons(LoadFromDir(DefaultDataDir() / "lexicons"));
  return *kDefault;
}

}  // namespace infoprop
