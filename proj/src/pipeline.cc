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

#include "infoprop/pipeline.h"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "infoprop/csv.h"
#include "infoprop/feature_matrix.h"
#include "infoprop/null_model.h"
#include "infoprop/outputs.h"
#include "json.hpp"
#include "spdlog/spdlog.h"

namespace infoprop {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

bool ParseBool(const std::string &key, const std::string &value) {
  const std::string v = AsciiLower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(fmt::format("{}: expected a boolean, got '{}'", key, value));
}

template <typename T>
T ParseNumber(const std::string &key, const std::string &value) {
  try {
    size_t used = 0;
    T out;
    if constexpr (std::is_same_v<T, uint64_t>) {
      if (!value.empty() && value[0] == '-') throw std::invalid_argument("");
      out = std::stoull(value, &used);
    } else {
      out = static_cast<T>(std::stoll(value, &used));
    }
    if (used != value.size()) throw std::invalid_argument("");
    return out;
  } catch (const std::logic_error &) {
    throw ConfigError(fmt::format("{}: expected an integer, got '{}'", key, value));
  }
}

std::string Hex64(uint64_t v) { return fmt::format("{:016x}", v); }

// Collects written files and their stage membership.
class OutputSink {
 public:
  explicit OutputSink(fs::path root) : root_(std::move(root)) {}

  void Emit(const std::string &stage, const std::string &relative,
            const std::string &content) {
    WriteFile(root_ / relative, content);
    files_[relative] = {{"fnv1a64", Hex64(Fnv1a64(content))},
                        {"bytes", content.size()}};
    if (!stage.empty()) stages_[stage].push_back(relative);
  }

  json Files() const { return files_; }
  json Stages() const { return stages_; }

 private:
  fs::path root_;
  std::map<std::string, json> files_;
  std::map<std::string, std::vector<std::string>> stages_;
};

int CountTriads(std::span<const ExplicitEvent> events) {
  int n = 0;
  for (const auto &e : events) n += static_cast<int>(e.c_entities.size());
  return n;
}

}  // namespace

LexiconPaths LexiconPaths::Default() {
  const fs::path dir = DefaultDataDir() / "lexicons";
  return {dir / "communication_verbs.ini", dir / "report_verbs.ini",
          dir / "topics.ini", dir / "gender.ini"};
}

PipelineConfig PipelineConfig::FromIni(const fs::path &path) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error &e) {
    throw ConfigError(e.what());
  }
  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string &p) {
    const fs::path q(p);
    return q.is_absolute() ? q : base / q;
  };

  PipelineConfig c;
  for (const auto &[section, body] : tree) {
    for (const auto &[key, node] : body) {
      const std::string value = node.get_value<std::string>();
      const std::string full = section + "." + key;
      if (section == "corpus" && key == "dir") {
        c.corpus_dir = resolve(value);
      } else if (section == "output" && key == "dir") {
        c.output_dir = resolve(value);
      } else if (section == "sieves") {
        const auto sieve = ParseSieve(key);
        if (!sieve) throw ConfigError("unknown sieve '" + key + "'");
        c.sieves.Set(*sieve, ParseBool(full, value));
      } else if (section == "quotes" && key == "single_quotes") {
        c.quote_options.single_quotes = ParseBool(full, value);
      } else if (section == "quotes" && key == "max_length") {
        c.quote_options.max_length = ParseNumber<int>(full, value);
      } else if (section == "quotes" && key == "gold") {
        c.gold_quotes = ParseBool(full, value);
      } else if (section == "lexicons" && key == "communication_verbs") {
        c.lexicons.communication_verbs = resolve(value);
      } else if (section == "lexicons" && key == "report_verbs") {
        c.lexicons.report_verbs = resolve(value);
      } else if (section == "lexicons" && key == "topics") {
        c.lexicons.topics = resolve(value);
      } else if (section == "lexicons" && key == "gender") {
        c.lexicons.gender = resolve(value);
      } else if (section == "random" && key == "seed") {
        c.seed = ParseNumber<uint64_t>(full, value);
      } else if (section == "random" && key == "trials") {
        c.trials = ParseNumber<int>(full, value);
      } else if (section == "random" && key == "graphs_per_network") {
        c.graphs_per_network = ParseNumber<int>(full, value);
      } else if (section == "run" && key == "jobs") {
        c.jobs = ParseNumber<int>(full, value);
      } else if (section == "run" && key == "closeness") {
        if (value == "harmonic") {
          c.closeness = ClosenessKind::kHarmonic;
        } else if (value == "classical") {
          c.closeness = ClosenessKind::kClassical;
        } else {
          throw ConfigError("run.closeness: expected harmonic or classical");
        }
      } else {
        throw ConfigError("unknown config key '" + full + "'");
      }
    }
  }
  return c;
}

void PipelineConfig::Check(bool needs_seed) const {
  if (!fs::is_directory(corpus_dir)) {
    throw ConfigError("corpus directory not found: " + corpus_dir.string());
  }
  if (output_dir.empty()) throw ConfigError("no output directory given");
  for (const fs::path *p : {&lexicons.communication_verbs,
                            &lexicons.report_verbs, &lexicons.topics,
                            &lexicons.gender}) {
    if (!fs::is_regular_file(*p)) {
      throw ConfigError("lexicon file not found: " + p->string());
    }
  }
  if (!sieves.Valid()) throw ConfigError("every sieve is disabled");
  if (quote_options.max_length < 2) throw ConfigError("quotes.max_length < 2");
  if (needs_seed && !seed) {
    throw ConfigError("a seed is required for stochastic stages");
  }
  if (trials < 0) throw ConfigError("random.trials must be >= 0");
  if (graphs_per_network < 1) {
    throw ConfigError("random.graphs_per_network must be >= 1");
  }
  if (jobs < 1) throw ConfigError("run.jobs must be >= 1");
}

Lexicons PipelineConfig::LoadLexicons() const {
  Lexicons l;
  l.communication_verbs = LoadCommunicationVerbs(lexicons.communication_verbs);
  LoadReportVerbs(lexicons.report_verbs, &l.report_verbs,
                  &l.report_complements);
  l.topics = LoadTopicLexicon(lexicons.topics);
  l.gender = LoadGenderLexicon(lexicons.gender);
  return l;
}

uint64_t BookSeed(uint64_t master_seed, const std::string &book_id) {
  return DeriveSeed(master_seed, "book:" + book_id);
}

BookAnalysis AnalyzeBook(const AnnotatedBook &book,
                         const PipelineConfig &config,
                         const Lexicons &lexicons, uint64_t book_seed) {
  BookAnalysis a;
  a.book_id = book.book_id;
  if (config.gold_quotes && book.gold_quotes) {
    a.quotes = GoldSpans(book);
  } else {
    a.quotes = IdentifyQuotations(book, config.quote_options);
  }
  const BookIndex index(book, lexicons.gender);
  a.attribution = AttributeSpeakers(index, a.quotes, config.sieves,
                                    lexicons.communication_verbs);
  a.blocks = SegmentDialogueBlocks(index, a.quotes, &a.attribution);
  a.network = BuildNetwork(a.blocks);
  a.tuples = ExtractTuples(index, a.quotes, a.attribution, a.blocks);
  a.topic_tuples = FilterTopic(a.tuples, lexicons.topics);
  a.implicit_events = DetectImplicit(a.blocks, a.topic_tuples);
  a.explicit_events =
      DetectExplicit(index, a.quotes, a.attribution, a.blocks, lexicons);
  a.counterfactuals =
      SampleCounterfactuals(a.implicit_events, a.topic_tuples, a.blocks,
                            a.attribution, DeriveSeed(book_seed, "counterfactual"));
  const auto nodes = a.network.Nodes();
  a.genders = InferGenders(book, nodes, lexicons.gender);
  return a;
}

std::map<int, std::string> PairLabels(const BookAnalysis &analysis) {
  std::map<int, std::string> labels;
  for (const auto &p : analysis.counterfactuals.pairs) {
    labels[p.b_prime_entity] = "non_propagating";
  }
  // A node that propagates anywhere is labelled as such.
  for (const auto &p : analysis.counterfactuals.pairs) {
    labels[p.b_entity] = "propagating";
  }
  return labels;
}

uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void WriteFile(const fs::path &path, const std::string &content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RunResult RunPipeline(const PipelineConfig &config) {
  config.Check(/*needs_seed=*/true);
  const uint64_t seed = *config.seed;
  const Lexicons lexicons = config.LoadLexicons();
  const auto bundles = DiscoverBooks(config.corpus_dir);
  if (bundles.empty()) {
    throw std::runtime_error("no annotation bundles in " +
                             config.corpus_dir.string());
  }

  const size_t n = bundles.size();
  std::vector<std::optional<BookAnalysis>> results(n);
  std::vector<std::string> errors(n);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < n; i = next++) {
      const std::string id = bundles[i].BookId();
      try {
        const AnnotatedBook book = LoadBook(bundles[i]);
        results[i] = AnalyzeBook(book, config, lexicons, BookSeed(seed, id));
      } catch (const std::exception &e) {
        errors[i] = e.what();
        spdlog::error("{}: {}", id, e.what());
      }
    }
  };
  {
    const int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(n)));
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  RunResult run;
  OutputSink sink(config.output_dir);
  std::string books_csv = CsvRow(
      {"book_id", "status", "quotes", "attributed_quotes", "blocks",
       "characters", "edges", "tuples", "topic_tuples", "implicit_events",
       "explicit_events", "explicit_triads", "counterfactual_pairs",
       "skipped_events", "error"});
  std::vector<NetworkPairs> networks;
  std::vector<BookTriads> triads;
  for (size_t i = 0; i < n; ++i) {
    const std::string id = bundles[i].BookId();
    if (!results[i]) {
      run.books_failed[id] = errors[i];
      books_csv += CsvRow({id, "failed", "", "", "", "", "", "", "", "", "",
                           "", "", "", errors[i]});
      continue;
    }
    run.books_ok.push_back(id);
    const BookAnalysis &a = *results[i];
    const std::string p = "books/" + id;
    sink.Emit("quotes", p + ".quotes.jsonl", QuotesJsonl(a.quotes));
    sink.Emit("attribution", p + ".quotes.attrib.jsonl",
              AttributionJsonl(a.quotes, a.attribution));
    sink.Emit("network", p + ".edges.csv", EdgesCsv(a.network));
    sink.Emit("network", p + ".blocks.csv", BlocksCsv(a.blocks));
    sink.Emit("tuples", p + ".tuples.csv", TuplesCsv(a.tuples, lexicons.topics));
    sink.Emit("events", p + ".implicit.csv", ImplicitEventsCsv(id, a.implicit_events));
    sink.Emit("events", p + ".explicit.csv", ExplicitEventsCsv(id, a.explicit_events));
    sink.Emit("events", p + ".counterfactuals.csv",
              CounterfactualsCsv(id, a.implicit_events, a.counterfactuals.pairs));
    sink.Emit("features", p + ".nodes.csv",
              NodeFeaturesCsv(AllFeatures(a.network, config.closeness),
                              PairLabels(a)));

    int attributed = 0;
    for (const auto &[q, s] : a.attribution) attributed += s.speaker != kUnattributed;
    books_csv += CsvRow(
        {id, "ok", std::to_string(a.quotes.size()), std::to_string(attributed),
         std::to_string(a.blocks.size()), std::to_string(a.network.num_nodes()),
         std::to_string(a.network.num_edges()), std::to_string(a.tuples.size()),
         std::to_string(a.topic_tuples.size()),
         std::to_string(a.implicit_events.size()),
         std::to_string(a.explicit_events.size()),
         std::to_string(CountTriads(a.explicit_events)),
         std::to_string(a.counterfactuals.pairs.size()),
         std::to_string(a.counterfactuals.skipped_events.size()), ""});

    NetworkPairs np{id, a.network, {}};
    for (const auto &pair : a.counterfactuals.pairs) {
      np.pairs.emplace_back(pair.b_entity, pair.b_prime_entity);
    }
    networks.push_back(std::move(np));
    triads.push_back({id, a.network, a.genders, a.explicit_events});
  }
  if (run.books_ok.empty()) {
    throw std::runtime_error("every book failed; nothing to report");
  }
  sink.Emit("", "books.csv", books_csv);

  const FeatureMatrix observed = ObservedFeatures(networks, config.closeness);
  sink.Emit("features", "features.csv", FeatureMatrixToCsv(observed));
  if (observed.rows.empty()) {
    spdlog::warn("no counterfactual pairs; regression and randomization skipped");
  } else {
    try {
      sink.Emit("regression", "regression.csv",
                RegressionCsv(FitScaledLogistic(observed)));
      if (config.trials > 0) {
        RandomizationOptions opts;
        opts.trials = config.trials;
        opts.graphs_per_network = config.graphs_per_network;
        opts.seed = DeriveSeed(seed, "randomization");
        opts.jobs = config.jobs;
        opts.closeness = config.closeness;
        const NullDistribution d = RandomizationTest(networks, opts);
        sink.Emit("randomization", "randomization.csv", RandomizationCsv(d));
        sink.Emit("randomization", "null_coefficients.csv",
                  NullCoefficientsCsv(d));
      }
    } catch (const LogisticError &e) {
      spdlog::warn("regression skipped: {}", e.what());
    }
  }

  const GenderReport gender = GenderTriads(triads);
  sink.Emit("gender", "gender.csv", GenderReportCsv(gender));
  sink.Emit("gender", "gender.svg", GenderReportSvg(gender));

  json manifest = {
      {"seed", seed},
      {"trials", config.trials},
      {"graphs_per_network", config.graphs_per_network},
      {"closeness",
       config.closeness == ClosenessKind::kHarmonic ? "harmonic" : "classical"},
      {"books", run.books_ok},
      {"failed_books", run.books_failed},
      {"stages", sink.Stages()},
      {"files", sink.Files()},
  };
  run.manifest = config.output_dir / "manifest.json";
  WriteFile(run.manifest, manifest.dump(2) + "\n");
  spdlog::info("{} of {} books analysed; manifest at {}", run.books_ok.size(),
               n, run.manifest.string());
  return run;
}

namespace {

// Rows of a CSV file keyed by header name.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string Get(size_t row, std::string_view column) const {
    for (size_t c = 0; c < header.size(); ++c) {
      if (header[c] == column) return c < rows[row].size() ? rows[row][c] : "";
    }
    return "";
  }
};

std::optional<Table> LoadTable(const fs::path &path) {
  if (!fs::is_regular_file(path)) return std::nullopt;
  auto records = ParseCsv(ReadFile(path));
  if (records.empty()) return std::nullopt;
  Table t;
  t.header = std::move(records.front());
  t.rows.assign(std::make_move_iterator(records.begin() + 1),
                std::make_move_iterator(records.end()));
  return t;
}

int ToInt(const std::string &s) { return s.empty() ? 0 : std::stoi(s); }

// Four decimals for the text report; blanks stay blank.
std::string Short(const std::string &s) {
  if (s.empty()) return s;
  try {
    return fmt::format("{:.4f}", std::stod(s));
  } catch (const std::logic_error &) {
    return s;
  }
}

}  // namespace

RunReport Report(const fs::path &manifest_path) {
  if (!fs::is_regular_file(manifest_path)) {
    throw std::runtime_error("manifest not found: " + manifest_path.string());
  }
  json manifest;
  try {
    manifest = json::parse(ReadFile(manifest_path));
  } catch (const json::exception &e) {
    throw std::runtime_error("unreadable manifest: " + std::string(e.what()));
  }
  const fs::path dir = manifest_path.parent_path();

  RunReport report;
  const json stages = manifest.value("stages", json::object());
  for (const char *stage : kStages) {
    bool present = stages.contains(stage) && !stages[stage].empty();
    if (present) {
      for (const auto &f : stages[stage]) {
        present = present && fs::is_regular_file(dir / f.get<std::string>());
      }
    }
    if (!present) report.missing_stages.emplace_back(stage);
  }

  std::string text;
  std::string csv = CsvRow({"section", "key", "value"});
  auto add = [&](const std::string &section, const std::string &key,
                 const std::string &value) {
    csv += CsvRow({section, key, value});
  };

  text += "Information propagation run summary\n";
  text += fmt::format("seed: {}\n", manifest.value("seed", uint64_t{0}));
  add("run", "seed", std::to_string(manifest.value("seed", uint64_t{0})));

  if (auto books = LoadTable(dir / "books.csv")) {
    int ok = 0, with_implicit = 0, implicit = 0, explicit_events = 0,
        explicit_triads = 0, failed = 0;
    for (size_t r = 0; r < books->rows.size(); ++r) {
      if (books->Get(r, "status") != "ok") {
        ++failed;
        continue;
      }
      ++ok;
      const int events = ToInt(books->Get(r, "implicit_events"));
      implicit += events;
      with_implicit += events > 0;
      explicit_events += ToInt(books->Get(r, "explicit_events"));
      explicit_triads += ToInt(books->Get(r, "explicit_triads"));
    }
    const double fraction = ok > 0 ? static_cast<double>(with_implicit) / ok : 0;
    text += fmt::format("books analysed: {} (failed: {})\n", ok, failed);
    text += fmt::format(
        "books with at least one implicit event: {} of {} ({:.4f})\n",
        with_implicit, ok, fraction);
    text += fmt::format("implicit events: {}\n", implicit);
    text += fmt::format("explicit events: {} involving {} triads\n",
                        explicit_events, explicit_triads);
    add("books", "analysed", std::to_string(ok));
    add("books", "failed", std::to_string(failed));
    add("implicit", "books_with_event", std::to_string(with_implicit));
    add("implicit", "book_fraction", CsvNumber(fraction));
    add("implicit", "events", std::to_string(implicit));
    add("explicit", "events", std::to_string(explicit_events));
    add("explicit", "triads", std::to_string(explicit_triads));
  } else {
    text += "book summary unavailable\n";
  }

  const bool have_regression =
      std::find(report.missing_stages.begin(), report.missing_stages.end(),
                "regression") == report.missing_stages.end();
  if (auto reg = have_regression ? LoadTable(dir / "regression.csv")
                                 : std::nullopt) {
    text += "\nStructural-hole regression (B vs B'), * at alpha = 0.01\n";
    text += fmt::format("{:<22}{:>14}{:>14}{:>4}\n", "feature", "coefficient",
                        "p-value", "");
    for (size_t r = 0; r < reg->rows.size(); ++r) {
      const std::string feature = reg->Get(r, "feature");
      if (feature == "(status)") {
        text += fmt::format("fit status: {}\n", reg->Get(r, "coefficient"));
        add("regression", "status", reg->Get(r, "coefficient"));
        continue;
      }
      text += fmt::format("{:<22}{:>14}{:>14}{:>4}\n", feature,
                          Short(reg->Get(r, "coefficient")),
                          Short(reg->Get(r, "p_value")),
                          reg->Get(r, "significant"));
      add("regression", feature, reg->Get(r, "coefficient"));
      add("regression_p", feature, reg->Get(r, "p_value"));
    }
  }

  const bool have_randomization =
      std::find(report.missing_stages.begin(), report.missing_stages.end(),
                "randomization") == report.missing_stages.end();
  if (auto rnd = have_randomization ? LoadTable(dir / "randomization.csv")
                                    : std::nullopt) {
    text += "\nRandomization test (degree-matched null)\n";
    for (size_t r = 0; r < rnd->rows.size(); ++r) {
      const std::string feature = rnd->Get(r, "feature");
      text += fmt::format("{:<22} empirical p = {}\n", feature,
                          Short(rnd->Get(r, "empirical_p")));
      add("randomization_p", feature, rnd->Get(r, "empirical_p"));
    }
  }

  if (auto g = LoadTable(dir / "gender.csv")) {
    text += "\nGender triad proportions (A-B-C)\n";
    text += fmt::format("{:<8}{:>20}{:>22}\n", "config", "all", "propagating");
    for (size_t r = 0; r < g->rows.size(); ++r) {
      const std::string config = g->Get(r, "configuration");
      if (config == "total") continue;
      text += fmt::format("{:<8}{:>20}{:>22}\n", config,
                          Short(g->Get(r, "all_proportion")) + " +/- " +
                              Short(g->Get(r, "all_half_width")),
                          Short(g->Get(r, "propagating_proportion")) + " +/- " +
                              Short(g->Get(r, "propagating_half_width")));
      add("gender_all", config, g->Get(r, "all_proportion"));
      add("gender_propagating", config, g->Get(r, "propagating_proportion"));
    }
  }

  if (!report.missing_stages.empty()) {
    text += "\n";
    for (const auto &s : report.missing_stages) {
      text += "MissingStage: " + s + "\n";
      add("missing_stage", s, "");
    }
  }
  report.text = std::move(text);
  report.csv = std::move(csv);
  return report;
}

RunReport WriteReport(const fs::path &manifest) {
  RunReport r = Report(manifest);
  WriteFile(manifest.parent_path() / "report.txt", r.text);
  WriteFile(manifest.parent_path() / "report.csv", r.csv);
  return r;
}

}  // namespace infoprop
