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

#include "infoprop/quotation.h"

#include <algorithm>
#include <set>
#include <string_view>

#include "spdlog/spdlog.h"

namespace infoprop {
namespace {

enum class Delim { kNone, kOpen, kClose, kEither };

Delim Classify(std::string_view s, bool single_quotes) {
  if (s == "\"" || s == "``" || s == "''") {
    if (s == "``") return Delim::kOpen;
    if (s == "''") return Delim::kClose;
    return Delim::kEither;
  }
  if (s == "“") return Delim::kOpen;
  if (s == "”") return Delim::kClose;
  if (single_quotes) {
    if (s == "'") return Delim::kEither;
    if (s == "‘") return Delim::kOpen;
    if (s == "’") return Delim::kClose;
  }
  return Delim::kNone;
}

bool StartsWithDash(std::string_view s) {
  return s == "-" || s == "--" || s == "—" || s == "–";
}

}  // namespace

std::vector<QuotationSpan> IdentifyQuotations(const AnnotatedBook &book,
                                              const QuoteOptions &options) {
  const auto &tokens = book.tokens;
  const int n = static_cast<int>(tokens.size());
  std::vector<QuotationSpan> spans;
  int open = -1;  // token id of the pending opening delimiter
  bool saw_delimiter = false;

  for (int i = 0; i < n; ++i) {
    const Token &t = tokens[i];
    const bool new_paragraph = i > 0 && t.paragraph_id != tokens[i - 1].paragraph_id;
    const Delim d = Classify(t.surface, options.single_quotes);
    if (d != Delim::kNone) saw_delimiter = true;

    if (new_paragraph && open >= 0) {
      if (d == Delim::kOpen || d == Delim::kEither) {
        continue;  // continued quotation; keep the original opener
      }
      spdlog::debug("{}: quote opened at token {} abandoned at paragraph end",
                    book.book_id, open);
      open = -1;
    }

    switch (d) {
      case Delim::kNone:
        break;
      case Delim::kOpen:
        if (open >= 0) {
          spdlog::debug("{}: stray opening delimiter at token {}",
                        book.book_id, open);
        }
        open = i;
        break;
      case Delim::kEither:
        if (open < 0) {
          open = i;
          break;
        }
        [[fallthrough]];
      case Delim::kClose:
        if (open < 0) break;  // stray closer
        if (i - open + 1 > options.max_length) {
          spdlog::warn("{}: rejecting {}-token quote at token {}",
                       book.book_id, i - open + 1, open);
        } else {
          spans.push_back({static_cast<int>(spans.size()), open, i, {}});
        }
        open = -1;
        break;
    }
  }
  if (open >= 0) {
    spdlog::warn("{}: unbalanced quotation delimiter at token {}",
                 book.book_id, open);
  }

  if (!saw_delimiter) {
    int dash_paragraphs = 0;
    for (int i = 0; i < n; ++i) {
      if ((i == 0 || tokens[i].paragraph_id != tokens[i - 1].paragraph_id) &&
          StartsWithDash(tokens[i].surface)) {
        ++dash_paragraphs;
      }
    }
    if (dash_paragraphs > 0) {
      spdlog::warn("{}: dash-delimited dialogue is unsupported", book.book_id);
    }
  }
  return spans;
}

std::vector<QuotationSpan> GoldSpans(const AnnotatedBook &book) {
  std::vector<QuotationSpan> spans;
  if (!book.gold_quotes) return spans;
  for (const GoldQuote &q : *book.gold_quotes) {
    spans.push_back({q.quote_id, q.start_token, q.end_token, {}});
  }
  std::sort(spans.begin(), spans.end(),
            [](const QuotationSpan &a, const QuotationSpan &b) {
              return a.start_token < b.start_token;
            });
  return spans;
}

SpanScore ScoreQuotations(std::span<const QuotationSpan> pred,
                          std::span<const QuotationSpan> gold) {
  std::set<std::pair<int, int>> gold_set;
  for (const auto &g : gold) gold_set.emplace(g.start_token, g.end_token);
  SpanScore score;
  for (const auto &p : pred) {
    if (gold_set.contains({p.start_token, p.end_token})) {
      ++score.true_positives;
    } else {
      ++score.false_positives;
    }
  }
  score.false_negatives = static_cast<int>(gold.size()) - score.true_positives;
  const bool both_empty = pred.empty() && gold.empty();
  score.precision = pred.empty() ? (both_empty ? 1.0 : 0.0)
                                 : static_cast<double>(score.true_positives) /
                                       static_cast<double>(pred.size());
  score.recall = gold.empty() ? (both_empty ? 1.0 : 0.0)
                              : static_cast<double>(score.true_positives) /
                                    static_cast<double>(gold.size());
  const double sum = score.precision + score.recall;
  score.f1 = sum > 0 ? 2 * score.precision * score.recall / sum : 0.0;
  return score;
}

std::vector<int> QuoteMembership(int num_tokens,
                                 std::span<const QuotationSpan> quotes) {
  std::vector<int> owner(num_tokens, -1);
  for (size_t q = 0; q < quotes.size(); ++q) {
    for (int t = std::max(0, quotes[q].start_token);
         t <= quotes[q].end_token && t < num_tokens; ++t) {
      owner[t] = static_cast<int>(q);
    }
  }
  return owner;
}

}  // namespace infoprop
