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

#include "infoprop/outputs.h"

#include <cmath>

#include "infoprop/csv.h"
#include "json.hpp"

namespace infoprop {
namespace {

using json = nlohmann::json;

std::string JoinInts(std::span<const int> values, char sep = ' ') {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string Str(int v) { return std::to_string(v); }

}  // namespace

std::string QuotesJsonl(std::span<const QuotationSpan> quotes) {
  std::string out;
  for (const auto &q : quotes) {
    out += json{{"quote_id", q.quote_id},
                {"start_token", q.start_token},
                {"end_token", q.end_token}}
               .dump();
    out += '\n';
  }
  return out;
}

std::string AttributionJsonl(std::span<const QuotationSpan> quotes,
                             const QuoteAttribution &attribution) {
  std::string out;
  for (const auto &q : quotes) {
    json r = {{"quote_id", q.quote_id},
              {"start_token", q.start_token},
              {"end_token", q.end_token}};
    auto it = attribution.find(q.quote_id);
    if (it != attribution.end() && it->second.speaker != kUnattributed) {
      r["speaker_entity_id"] = it->second.speaker;
      r["sieve"] = std::string(SieveName(*it->second.sieve));
    } else {
      r["speaker_entity_id"] = nullptr;
      r["sieve"] = nullptr;
    }
    out += r.dump();
    out += '\n';
  }
  return out;
}

std::string SpanScoreCsv(const SpanScore &s) {
  return CsvRow({"precision", "recall", "f1", "true_positives",
                 "false_positives", "false_negatives"}) +
         CsvRow({CsvNumber(s.precision), CsvNumber(s.recall), CsvNumber(s.f1),
                 Str(s.true_positives), Str(s.false_positives),
                 Str(s.false_negatives)});
}

std::string ClusterScoreHeader() {
  return CsvRow({"label", "b3_p", "b3_r", "b3_f", "muc_p", "muc_r", "muc_f",
                 "ceaf_p", "ceaf_r", "ceaf_f", "average_f", "muc_undefined"});
}

std::string ClusterScoreCsvRow(const std::string &label, const ClusterScore &s) {
  return CsvRow({label, CsvNumber(s.b3.precision), CsvNumber(s.b3.recall),
                 CsvNumber(s.b3.f1), CsvNumber(s.muc.precision),
                 CsvNumber(s.muc.recall), CsvNumber(s.muc.f1),
                 CsvNumber(s.ceaf.precision), CsvNumber(s.ceaf.recall),
                 CsvNumber(s.ceaf.f1), CsvNumber(s.average_f),
                 s.muc.undefined ? "1" : "0"});
}

std::string AblationCsv(std::span<const AblationRow> rows) {
  std::string out = CsvRow({"configuration", "b3_f", "muc_f", "ceaf_f",
                            "average_f", "delta"});
  const double base = rows.empty() ? 0.0 : rows.front().score.average_f;
  for (const auto &r : rows) {
    out += CsvRow({r.label, CsvNumber(r.score.b3.f1), CsvNumber(r.score.muc.f1),
                   CsvNumber(r.score.ceaf.f1), CsvNumber(r.score.average_f),
                   CsvNumber(r.score.average_f - base)});
  }
  return out;
}

std::string EdgesCsv(const CharacterNetwork &network) {
  std::string out = CsvRow({"entity_a", "entity_b", "weight"});
  for (const auto &e : network.Edges()) {
    out += CsvRow({Str(e.a), Str(e.b), Str(e.weight)});
  }
  return out;
}

std::string BlocksCsv(std::span<const DialogueBlock> blocks) {
  std::string out = CsvRow({"block_id", "first_sentence", "last_sentence",
                            "quote_ids", "co_present"});
  for (const auto &b : blocks) {
    const std::vector<int> present(b.co_present.begin(), b.co_present.end());
    out += CsvRow({Str(b.block_id), Str(b.first_sentence), Str(b.last_sentence),
                   JoinInts(b.quote_ids), JoinInts(present)});
  }
  return out;
}

std::string TuplesCsv(std::span<const PropTuple> tuples,
                      const TopicLexicon &lexicon) {
  std::string out = CsvRow({"quote_id", "block_id", "speaker", "token",
                            "subject", "verb", "object", "topic"});
  for (const auto &t : tuples) {
    std::string topic;
    if (auto c = lexicon.CategoryOf(t.verb)) {
      topic = *c;
    } else if (t.subject.kind == Slot::Kind::kNominal &&
               lexicon.CategoryOf(t.subject.lemma)) {
      topic = *lexicon.CategoryOf(t.subject.lemma);
    } else if (t.object.kind == Slot::Kind::kNominal &&
               lexicon.CategoryOf(t.object.lemma)) {
      topic = *lexicon.CategoryOf(t.object.lemma);
    }
    out += CsvRow({Str(t.source_quote_id), Str(t.source_block_id),
                   Str(t.speaker_entity_id), Str(t.source_token),
                   t.subject.ToString(), t.verb, t.object.ToString(), topic});
  }
  return out;
}

std::string ImplicitEventsCsv(const std::string &book_id,
                              std::span<const ImplicitEvent> events) {
  std::string out = CsvRow({"book_id", "a", "b", "c", "tuple", "origin_block",
                            "repeat_block", "origin_quote"});
  for (const auto &e : events) {
    out += CsvRow({book_id, Str(e.a_entity), Str(e.b_entity), Str(e.c_entity),
                   e.tuple.Key().ToString(), Str(e.origin_block_id),
                   Str(e.repeat_block_id), Str(e.tuple.source_quote_id)});
  }
  return out;
}

std::string ExplicitEventsCsv(const std::string &book_id,
                              std::span<const ExplicitEvent> events) {
  std::string out =
      CsvRow({"book_id", "quote_id", "a", "b", "listeners", "verb"});
  for (const auto &e : events) {
    out += CsvRow({book_id, Str(e.quote_id), Str(e.a_entity), Str(e.b_entity),
                   JoinInts(e.c_entities), e.verb});
  }
  return out;
}

std::string CounterfactualsCsv(const std::string &book_id,
                               std::span<const ImplicitEvent> events,
                               std::span<const CounterfactualPair> pairs) {
  std::string out = CsvRow({"book_id", "event", "b", "b_prime", "fallback",
                            "tuple"});
  for (const auto &p : pairs) {
    out += CsvRow({book_id, Str(p.event_index), Str(p.b_entity),
                   Str(p.b_prime_entity), p.from_fallback ? "1" : "0",
                   events[p.event_index].tuple.Key().ToString()});
  }
  return out;
}

std::string NodeFeaturesCsv(const std::map<int, NodeFeatures> &features,
                            const std::map<int, std::string> &labels) {
  std::vector<std::string> header = {"entity_id"};
  for (auto n : NodeFeatures::kNames) header.emplace_back(n);
  header.push_back("degree");
  header.push_back("label");
  std::string out = CsvRow(header);
  for (const auto &[entity, f] : features) {
    std::vector<std::string> row = {Str(entity)};
    for (double v : f.AsArray()) row.push_back(CsvNumber(v));
    row.push_back(Str(f.degree));
    auto it = labels.find(entity);
    row.push_back(it == labels.end() ? "" : it->second);
    out += CsvRow(row);
  }
  return out;
}

std::string RegressionCsv(const RegressionResult &r) {
  std::string out = CsvRow({"feature", "coefficient", "std_error", "p_value",
                            "significant"});
  for (size_t j = 0; j < r.names.size(); ++j) {
    const bool has_p = j < r.p_values.size() && !std::isnan(r.p_values[j]);
    out += CsvRow({r.names[j], CsvNumber(r.coefficients[j]),
                   has_p ? CsvNumber(r.std_errors[j]) : "",
                   has_p ? CsvNumber(r.p_values[j]) : "",
                   r.Significant(j) ? "*" : ""});
  }
  out += CsvRow({"(intercept)", CsvNumber(r.intercept), "", "", ""});
  out += CsvRow({"(status)",
                 r.separated ? "separated"
                             : (r.converged ? "converged" : "not_converged"),
                 Str(r.iterations), CsvNumber(r.log_likelihood), ""});
  return out;
}

std::string RandomizationCsv(const NullDistribution &d) {
  std::string out = CsvRow({"feature", "observed", "empirical_p",
                            "completed_trials", "failed_trials"});
  for (size_t j = 0; j < d.names.size(); ++j) {
    out += CsvRow({d.names[j], CsvNumber(d.observed.coefficients[j]),
                   CsvNumber(d.p_values[j]), Str(d.completed_trials),
                   Str(d.failed_trials)});
  }
  return out;
}

std::string NullCoefficientsCsv(const NullDistribution &d) {
  std::vector<std::string> header = {"trial"};
  header.insert(header.end(), d.names.begin(), d.names.end());
  std::string out = CsvRow(header);
  for (int t = 0; t < d.completed_trials; ++t) {
    std::vector<std::string> row = {Str(t)};
    for (const auto &col : d.coefficients) row.push_back(CsvNumber(col[t]));
    out += CsvRow(row);
  }
  return out;
}

}  // namespace infoprop
