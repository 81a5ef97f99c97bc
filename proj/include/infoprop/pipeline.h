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

// End-to-end orchestration over a corpus directory.
//
// Seed derivation: every stochastic stage draws from the master seed.
//   book seed        = DeriveSeed(master, "book:" + book_id)
//   counterfactuals  = DeriveSeed(book seed, "counterfactual")
//   randomization    = DeriveSeed(master, "randomization")

#ifndef INFOPROP_PIPELINE_H_
#define INFOPROP_PIPELINE_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infoprop/attribution.h"
#include "infoprop/character_network.h"
#include "infoprop/conversation_graph.h"
#include "infoprop/corpus_model.h"
#include "infoprop/gender.h"
#include "infoprop/info_extract.h"
#include "infoprop/lexicons.h"
#include "infoprop/netmetrics.h"
#include "infoprop/propagation.h"
#include "infoprop/quotation.h"

namespace infoprop {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LexiconPaths {
  std::filesystem::path communication_verbs;
  std::filesystem::path report_verbs;
  std::filesystem::path topics;
  std::filesystem::path gender;

  // The files shipped under data/lexicons.
  static LexiconPaths Default();
};

struct PipelineConfig {
  std::filesystem::path corpus_dir;
  std::filesystem::path output_dir;
  SieveConfig sieves;
  QuoteOptions quote_options;
  // Use gold quotation spans instead of identified ones when present.
  bool gold_quotes = false;
  LexiconPaths lexicons = LexiconPaths::Default();
  std::optional<uint64_t> seed;
  int trials = 10000;
  int graphs_per_network = 10;
  int jobs = 1;
  ClosenessKind closeness = ClosenessKind::kHarmonic;

  // Sections: [corpus] dir; [output] dir; [sieves] <name> = true|false;
  // [quotes] single_quotes, max_length, gold; [lexicons] communication_verbs,
  // report_verbs, topics, gender; [random] seed, trials, graphs_per_network;
  // [run] jobs, closeness = harmonic|classical. Relative paths resolve
  // against the config file's directory.
  static PipelineConfig FromIni(const std::filesystem::path &path);

  // Throws ConfigError for unresolvable paths or bad values. The seed is
  // only checked when `needs_seed`.
  void Check(bool needs_seed) const;
  Lexicons LoadLexicons() const;
};

// Everything computed for one book.
struct BookAnalysis {
  std::string book_id;
  std::vector<QuotationSpan> quotes;
  QuoteAttribution attribution;
  std::vector<DialogueBlock> blocks;
  CharacterNetwork network;
  std::vector<PropTuple> tuples;
  std::vector<PropTuple> topic_tuples;
  std::vector<ImplicitEvent> implicit_events;
  std::vector<ExplicitEvent> explicit_events;
  CounterfactualSample counterfactuals;
  std::map<int, Gender> genders;
};

uint64_t BookSeed(uint64_t master_seed, const std::string &book_id);

BookAnalysis AnalyzeBook(const AnnotatedBook &book,
                         const PipelineConfig &config,
                         const Lexicons &lexicons, uint64_t book_seed);

// Node features with "propagating" / "non_propagating" labels from the
// book's counterfactual pairs.
std::map<int, std::string> PairLabels(const BookAnalysis &analysis);

struct RunResult {
  std::filesystem::path manifest;
  std::vector<std::string> books_ok;
  std::map<std::string, std::string> books_failed;  // id -> error
};

// Runs every stage and writes artifacts plus manifest.json under
// config.output_dir. Throws if no book succeeds.
RunResult RunPipeline(const PipelineConfig &config);

// 64-bit FNV-1a over a byte string.
uint64_t Fnv1a64(std::string_view bytes);

// Corpus-level stages recorded in a run manifest.
inline constexpr std::array<const char *, 9> kStages = {
    "quotes",   "attribution", "network",       "tuples", "events",
    "features", "regression",  "randomization", "gender"};

struct RunReport {
  std::string text;
  std::string csv;
  std::vector<std::string> missing_stages;
};

// Summarizes a run. Missing stages are listed in the report rather than
// raising; a missing or unreadable manifest throws.
RunReport Report(const std::filesystem::path &manifest);

// Writes report.txt and report.csv next to the manifest.
RunReport WriteReport(const std::filesystem::path &manifest);

// Writes `content` to `path`, creating parent directories.
void WriteFile(const std::filesystem::path &path, const std::string &content);
std::string ReadFile(const std::filesystem::path &path);

}  // namespace infoprop

#endif  // INFOPROP_PIPELINE_H_
