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

// Quotation identification by delimiter pairing, and exact-span scoring
// of predicted quotations against gold.

#ifndef INFOPROP_QUOTATION_H_
#define INFOPROP_QUOTATION_H_

#include <optional>
#include <span>
#include <vector>

#include "infoprop/corpus_model.h"

namespace infoprop {

struct QuotationSpan {
  int quote_id = 0;
  int start_token = 0;  // opening delimiter
  int end_token = 0;    // closing delimiter
  std::optional<int> dialogue_block_hint;

  bool Contains(int token) const {
    return token >= start_token && token <= end_token;
  }
  bool operator==(const QuotationSpan &) const = default;
};

struct QuoteOptions {
  // Pair ' ‘ ’ tokens as well as double quotes.
  bool single_quotes = false;
  // Balanced spans longer than this are treated as delimiter inversions.
  int max_length = 500;
};

// Maximal non-overlapping delimiter-balanced spans in document order.
// A quote still open at the end of a paragraph carries over when the next
// paragraph opens with a delimiter; otherwise it is dropped.
std::vector<QuotationSpan> IdentifyQuotations(const AnnotatedBook &book,
                                              const QuoteOptions &options = {});

// Gold quotations as spans, sorted by start token.
std::vector<QuotationSpan> GoldSpans(const AnnotatedBook &book);

struct SpanScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;
};

// Exact boundary match. An empty prediction (or gold) list scores 1 on
// its side only when the other list is empty too.
SpanScore ScoreQuotations(std::span<const QuotationSpan> pred,
                          std::span<const QuotationSpan> gold);

// Maps each token to the index (into `quotes`) of the quotation holding
// it, or -1 for narration.
std::vector<int> QuoteMembership(int num_tokens,
                                 std::span<const QuotationSpan> quotes);

}  // namespace infoprop

#endif  // INFOPROP_QUOTATION_H_
