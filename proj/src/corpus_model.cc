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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string_view>

#include "fmt/format.h"
#include "json.hpp"

namespace infoprop {
namespace {

using json = nlohmann::json;
using Kind = AnnotationError::Kind;

constexpr std::string_view kTokensHeader =
    "token_id\tsentence_id\tparagraph_id\tsurface\tlemma\tupos\thead\tdep_rel";

struct Violation {
  Kind kind;
  std::string message;
};

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw AnnotationError(Kind::kIo,
                          fmt::format("cannot open {}", path.string()));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (true) {
    size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

AnnotationError Malformed(const std::filesystem::path &path, size_t line,
                          size_t column, std::string_view detail) {
  return AnnotationError(
      Kind::kMalformedRecord,
      fmt::format("{}:{}:{}: {}", path.filename().string(), line, column,
                  detail));
}

int ParseInt(std::string_view field, const std::filesystem::path &path,
             size_t line, size_t column) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Malformed(path, line, column,
                    fmt::format("expected integer, got '{}'", field));
  }
  return value;
}

std::vector<Token> ParseTokens(const std::filesystem::path &path) {
  const std::string text = ReadFile(path);
  const auto lines = SplitLines(text);
  std::vector<Token> tokens;
  bool saw_header = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    const size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != kTokensHeader) {
        throw Malformed(path, line_no, 1, "missing or wrong header row");
      }
      saw_header = true;
      continue;
    }
    const auto fields = SplitTabs(line);
    if (fields.size() != 8) {
      throw Malformed(path, line_no, std::min<size_t>(fields.size(), 8) + 1,
                      fmt::format("expected 8 fields, got {}", fields.size()));
    }
    Token t;
    t.token_id = ParseInt(fields[0], path, line_no, 1);
    t.sentence_id = ParseInt(fields[1], path, line_no, 2);
    t.paragraph_id = ParseInt(fields[2], path, line_no, 3);
    t.surface = fields[3];
    t.lemma = fields[4];
    t.upos = fields[5];
    const int head = ParseInt(fields[6], path, line_no, 7);
    if (head < -1) throw Malformed(path, line_no, 7, "head below -1");
    if (head >= 0) t.head = head;
    t.dep_rel = fields[7];
    if (t.token_id < 0 || t.sentence_id < 0 || t.paragraph_id < 0) {
      throw Malformed(path, line_no, 1, "negative id");
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

// Parses a JSON-lines file; every record must be an object holding the
// listed integer fields.
template <typename Fn>
void ParseJsonl(const std::filesystem::path &path,
                std::initializer_list<const char *> int_fields, Fn &&fn) {
  const std::string text = ReadFile(path);
  const auto lines = SplitLines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    const size_t line_no = i + 1;
    if (lines[i].find_first_not_of(" \t") == std::string_view::npos) continue;
    json record;
    try {
      record = json::parse(lines[i]);
    } catch (const json::parse_error &e) {
      throw Malformed(path, line_no, e.byte, "invalid JSON");
    }
    if (!record.is_object()) {
      throw Malformed(path, line_no, 1, "record is not an object");
    }
    for (const char *field : int_fields) {
      auto it = record.find(field);
      if (it == record.end() || !it->is_number_integer()) {
        throw Malformed(path, line_no, 1,
                        fmt::format("field '{}' missing or not an integer",
                                    field));
      }
    }
    fn(record);
  }
}

std::vector<Violation> CollectViolations(const AnnotatedBook &book) {
  std::vector<Violation> out;
  const auto &tokens = book.tokens;
  if (tokens.empty()) {
    out.push_back({Kind::kEmptyBook, "book has no tokens"});
    return out;
  }
  const int n = static_cast<int>(tokens.size());

  std::map<int, int> index_of;
  for (int i = 0; i < n; ++i) index_of.emplace(tokens[i].token_id, i);

  if (tokens[0].token_id != 0) {
    out.push_back({Kind::kMalformedRecord,
                   fmt::format("token {}: token_ids must start at 0",
                               tokens[0].token_id)});
  }
  if (tokens[0].sentence_id != 0) {
    out.push_back({Kind::kMalformedRecord,
                   "token 0: sentence_ids must start at 0"});
  }
  for (int i = 1; i < n; ++i) {
    const Token &prev = tokens[i - 1];
    const Token &cur = tokens[i];
    if (cur.token_id != prev.token_id + 1) {
      out.push_back({Kind::kMalformedRecord,
                     fmt::format("token {}: token_ids not contiguous after {}",
                                 cur.token_id, prev.token_id)});
    }
    if (cur.sentence_id < prev.sentence_id ||
        cur.sentence_id > prev.sentence_id + 1) {
      out.push_back({Kind::kMalformedRecord,
                     fmt::format("token {}: sentence_id {} does not follow {}",
                                 cur.token_id, cur.sentence_id,
                                 prev.sentence_id)});
    }
    if (cur.paragraph_id < prev.paragraph_id) {
      out.push_back({Kind::kMalformedRecord,
                     fmt::format("token {}: paragraph_id decreases",
                                 cur.token_id)});
    }
  }
  for (const Token &t : tokens) {
    if (!t.head) continue;
    auto it = index_of.find(*t.head);
    if (it == index_of.end()) {
      out.push_back({Kind::kDanglingReference,
                     fmt::format("token {}: head {} does not exist",
                                 t.token_id, *t.head)});
    } else if (*t.head == t.token_id) {
      out.push_back({Kind::kMalformedRecord,
                     fmt::format("token {}: head points to itself",
                                 t.token_id)});
    } else if (tokens[it->second].sentence_id != t.sentence_id) {
      out.push_back({Kind::kMalformedRecord,
                     fmt::format("token {}: head {} lies in another sentence",
                                 t.token_id, *t.head)});
    }
  }

  const int first_id = tokens.front().token_id;
  const int last_id = tokens.back().token_id;
  std::set<int> mention_ids;
  std::set<int> entities;
  for (const Mention &m : book.mentions) {
    if (!mention_ids.insert(m.mention_id).second) {
      out.push_back({Kind::kMalformedRecord,
                     fmt::format("mention {}: duplicate mention_id",
                                 m.mention_id)});
    }
    if (m.start_token > m.end_token) {
      out.push_back({Kind::kMalformedRecord,
                     fmt::format("mention {}: start_token > end_token",
                                 m.mention_id)});
    }
    if (m.start_token < first_id || m.end_token > last_id) {
      out.push_back({Kind::kDanglingReference,
                     fmt::format("mention {}: span [{}, {}] outside the book",
                                 m.mention_id, m.start_token, m.end_token)});
    }
    if (m.entity_id < 0) {
      out.push_back({Kind::kMalformedRecord,
                     fmt::format("mention {}: negative entity_id",
                                 m.mention_id)});
    }
    entities.insert(m.entity_id);
  }

  if (book.gold_quotes) {
    std::set<int> quote_ids;
    std::vector<const GoldQuote *> sorted;
    for (const GoldQuote &q : *book.gold_quotes) {
      sorted.push_back(&q);
      if (!quote_ids.insert(q.quote_id).second) {
        out.push_back({Kind::kMalformedRecord,
                       fmt::format("quote {}: duplicate quote_id", q.quote_id)});
      }
      if (q.start_token > q.end_token) {
        out.push_back({Kind::kMalformedRecord,
                       fmt::format("quote {}: start_token > end_token",
                                   q.quote_id)});
      }
      if (q.start_token < first_id || q.end_token > last_id) {
        out.push_back({Kind::kDanglingReference,
                       fmt::format("quote {}: span outside the book",
                                   q.quote_id)});
      }
      if (!entities.contains(q.speaker_entity_id)) {
        out.push_back({Kind::kDanglingReference,
                       fmt::format("quote {}: speaker entity {} has no mention",
                                   q.quote_id, q.speaker_entity_id)});
      }
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const GoldQuote *a, const GoldQuote *b) {
                return a->start_token < b->start_token;
              });
    for (size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i]->start_token <= sorted[i - 1]->end_token) {
        out.push_back({Kind::kMalformedRecord,
                       fmt::format("quote {}: overlaps quote {}",
                                   sorted[i]->quote_id,
                                   sorted[i - 1]->quote_id)});
      }
    }
  }
  return out;
}

void WriteFile(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw AnnotationError(Kind::kIo,
                          fmt::format("cannot write {}", path.string()));
  }
  out << text;
}

constexpr std::string_view kTokensSuffix = ".tokens.tsv";

}  // namespace

BookPaths BookPaths::FromPrefix(const std::filesystem::path &prefix) {
  BookPaths paths;
  const std::string p = prefix.string();
  paths.tokens = p + ".tokens.tsv";
  paths.mentions = p + ".mentions.jsonl";
  std::filesystem::path quotes = p + ".quotes.jsonl";
  if (std::filesystem::exists(quotes)) paths.quotes = quotes;
  return paths;
}

std::string BookPaths::BookId() const {
  std::string name = tokens.filename().string();
  if (name.ends_with(kTokensSuffix)) {
    name.resize(name.size() - kTokensSuffix.size());
  }
  return name;
}

AnnotatedBook LoadBook(const std::filesystem::path &tokens_path,
                       const std::filesystem::path &mentions_path,
                       const std::optional<std::filesystem::path>
                           &gold_quotes_path) {
  AnnotatedBook book;
  book.book_id = BookPaths{tokens_path, mentions_path, {}}.BookId();
  book.tokens = ParseTokens(tokens_path);
  if (book.tokens.empty()) {
    throw AnnotationError(
        Kind::kEmptyBook,
        fmt::format("{}: no tokens", tokens_path.filename().string()));
  }

  ParseJsonl(mentions_path,
             {"mention_id", "start_token", "end_token", "entity_id"},
             [&](const json &r) {
               Mention m;
               m.mention_id = r["mention_id"].get<int>();
               m.start_token = r["start_token"].get<int>();
               m.end_token = r["end_token"].get<int>();
               m.entity_id = r["entity_id"].get<int>();
               if (auto it = r.find("text"); it != r.end() && it->is_string()) {
                 m.text = it->get<std::string>();
               }
               book.mentions.push_back(std::move(m));
             });

  if (gold_quotes_path) {
    book.gold_quotes.emplace();
    ParseJsonl(*gold_quotes_path,
               {"quote_id", "start_token", "end_token", "speaker_entity_id"},
               [&](const json &r) {
                 GoldQuote q;
                 q.quote_id = r["quote_id"].get<int>();
                 q.start_token = r["start_token"].get<int>();
                 q.end_token = r["end_token"].get<int>();
                 q.speaker_entity_id = r["speaker_entity_id"].get<int>();
                 book.gold_quotes->push_back(q);
               });
  }

  const auto violations = CollectViolations(book);
  if (!violations.empty()) {
    // Reference failures take precedence so callers can tell a broken
    // cross-file link from a local formatting problem.
    auto it = std::find_if(violations.begin(), violations.end(),
                           [](const Violation &v) {
                             return v.kind == Kind::kDanglingReference;
                           });
    const Violation &v = it != violations.end() ? *it : violations.front();
    throw AnnotationError(v.kind, fmt::format("{}: {}", book.book_id,
                                              v.message));
  }
  return book;
}

AnnotatedBook LoadBook(const BookPaths &paths) {
  return LoadBook(paths.tokens, paths.mentions, paths.quotes);
}

std::vector<std::string> Validate(const AnnotatedBook &book) {
  std::vector<std::string> out;
  for (auto &v : CollectViolations(book)) out.push_back(std::move(v.message));
  return out;
}

std::string TokensToTsv(const AnnotatedBook &book) {
  std::string out(kTokensHeader);
  out += '\n';
  for (const Token &t : book.tokens) {
    out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", t.token_id,
                       t.sentence_id, t.paragraph_id, t.surface, t.lemma,
                       t.upos, t.head ? *t.head : -1, t.dep_rel);
  }
  return out;
}

std::string MentionsToJsonl(const AnnotatedBook &book) {
  std::string out;
  for (const Mention &m : book.mentions) {
    json r = {{"mention_id", m.mention_id},
              {"start_token", m.start_token},
              {"end_token", m.end_token},
              {"entity_id", m.entity_id},
              {"text", m.text}};
    out += r.dump();
    out += '\n';
  }
  return out;
}

std::string GoldQuotesToJsonl(const std::vector<GoldQuote> &quotes) {
  std::string out;
  for (const GoldQuote &q : quotes) {
    json r = {{"quote_id", q.quote_id},
              {"start_token", q.start_token},
              {"end_token", q.end_token},
              {"speaker_entity_id", q.speaker_entity_id}};
    out += r.dump();
    out += '\n';
  }
  return out;
}

void WriteBook(const AnnotatedBook &book, const BookPaths &paths) {
  WriteFile(paths.tokens, TokensToTsv(book));
  WriteFile(paths.mentions, MentionsToJsonl(book));
  if (book.gold_quotes && paths.quotes) {
    WriteFile(*paths.quotes, GoldQuotesToJsonl(*book.gold_quotes));
  }
}

std::vector<BookPaths> DiscoverBooks(const std::filesystem::path &dir) {
  std::vector<BookPaths> books;
  if (!std::filesystem::is_directory(dir)) return books;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || !name.ends_with(kTokensSuffix)) continue;
    const std::string stem = name.substr(0, name.size() - kTokensSuffix.size());
    books.push_back(BookPaths::FromPrefix(dir / stem));
  }
  std::sort(books.begin(), books.end(),
            [](const BookPaths &a, const BookPaths &b) {
              return a.BookId() < b.BookId();
            });
  return books;
}

}  // namespace infoprop
