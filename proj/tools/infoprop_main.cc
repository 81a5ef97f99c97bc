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

// Command-line front end.

#include <algorithm>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infoprop/attribution.h"
#include "infoprop/book_index.h"
#include "infoprop/cluster_eval.h"
#include "infoprop/csv.h"
#include "infoprop/feature_matrix.h"
#include "infoprop/gender.h"
#include "infoprop/null_model.h"
#include "infoprop/outputs.h"
#include "infoprop/pipeline.h"
#include "infoprop/plant_manifest.h"
#include "spdlog/sinks/stdout_color_sinks.h"
#include "spdlog/spdlog.h"

namespace fs = std::filesystem;
using namespace infoprop;

namespace {

struct Globals {
  std::optional<uint64_t> seed;
  std::optional<int> jobs;
  std::string out;
  std::string config;
};

// Expands directories into their bundles; other arguments are book
// prefixes or tokens files.
std::vector<BookPaths> ResolveBooks(const std::vector<std::string> &inputs) {
  std::vector<BookPaths> books;
  for (const auto &in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      auto found = DiscoverBooks(p);
      if (found.empty()) throw std::runtime_error("no annotation bundles in " + in);
      books.insert(books.end(), found.begin(), found.end());
      continue;
    }
    std::string prefix = in;
    constexpr std::string_view kSuffix = ".tokens.tsv";
    if (prefix.ends_with(kSuffix)) prefix.resize(prefix.size() - kSuffix.size());
    books.push_back(BookPaths::FromPrefix(prefix));
  }
  return books;
}

class App {
 public:
  explicit App(const Globals &g) : g_(g) {}

  PipelineConfig Config() const {
    PipelineConfig c = g_.config.empty() ? PipelineConfig{}
                                         : PipelineConfig::FromIni(g_.config);
    if (g_.seed) c.seed = g_.seed;
    if (g_.jobs) c.jobs = *g_.jobs;
    if (!g_.out.empty()) c.output_dir = g_.out;
    if (c.output_dir.empty()) c.output_dir = "out";
    return c;
  }

  fs::path Out() const { return Config().output_dir; }

  void Write(const fs::path &name, const std::string &content) const {
    WriteFile(Out() / name, content);
    spdlog::info("wrote {}", (Out() / name).string());
  }

  // Loads and analyses each book; failures are logged and skipped.
  template <typename Fn>
  int ForEachBook(const std::vector<std::string> &inputs,
                  const PipelineConfig &config, Fn &&fn) const {
    const Lexicons lexicons = config.LoadLexicons();
    int failures = 0;
    for (const BookPaths &paths : ResolveBooks(inputs)) {
      try {
        const AnnotatedBook book = LoadBook(paths);
        const BookAnalysis a = AnalyzeBook(
            book, config, lexicons, BookSeed(config.seed.value_or(0), book.book_id));
        fn(book, a, lexicons);
      } catch (const std::exception &e) {
        spdlog::error("{}: {}", paths.BookId(), e.what());
        ++failures;
      }
    }
    return failures == 0 ? 0 : 1;
  }

 private:
  const Globals &g_;
};

SieveConfig ApplyDisable(SieveConfig config, const std::vector<std::string> &names) {
  for (const auto &n : names) {
    const auto sieve = ParseSieve(n);
    if (!sieve) throw CLI::ValidationError("--disable", "unknown sieve '" + n + "'");
    config.Set(*sieve, false);
  }
  return config;
}

}  // namespace

int main(int argc, char **argv) {
  auto logger = spdlog::stderr_color_mt("infoprop");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);

  CLI::App cli{"Information propagation in annotated literary texts"};
  cli.require_subcommand(1);
  Globals g;
  cli.add_option("--seed", g.seed, "Master seed for stochastic stages");
  cli.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cli.add_option("--out", g.out, "Output directory");
  cli.add_option("--config", g.config, "Pipeline config file")->check(CLI::ExistingFile);
  cli.add_flag_callback("-v,--verbose", [] { spdlog::set_level(spdlog::level::info); },
                        "Log progress");
  App app(g);
  int status = 0;

  // ingest-validate
  std::vector<std::string> validate_in;
  auto *validate = cli.add_subcommand("ingest-validate", "Check annotation bundles");
  validate->add_option("inputs", validate_in, "Corpus dirs or book prefixes")->required();
  validate->callback([&] {
    std::string out = CsvRow({"book_id", "status", "tokens", "mentions",
                              "gold_quotes", "message"});
    for (const BookPaths &paths : ResolveBooks(validate_in)) {
      try {
        const AnnotatedBook book = LoadBook(paths);
        const auto problems = Validate(book);
        const int quotes = book.gold_quotes ? static_cast<int>(book.gold_quotes->size()) : 0;
        out += CsvRow({book.book_id, problems.empty() ? "ok" : "invalid",
                       std::to_string(book.tokens.size()),
                       std::to_string(book.mentions.size()),
                       std::to_string(quotes),
                       problems.empty() ? "" : problems.front()});
        if (!problems.empty()) status = 1;
      } catch (const std::exception &e) {
        out += CsvRow({paths.BookId(), "error", "", "", "", e.what()});
        status = 1;
      }
    }
    std::cout << out;
  });

  // quotes
  std::vector<std::string> quotes_in;
  bool quotes_score = false;
  bool single_quotes = false;
  auto *quotes = cli.add_subcommand("quotes", "Identify quotations");
  quotes->add_option("inputs", quotes_in)->required();
  quotes->add_flag("--score", quotes_score, "Score against gold spans");
  quotes->add_flag("--single-quotes", single_quotes, "Also pair single quotes");
  quotes->callback([&] {
    QuoteOptions opts;
    opts.single_quotes = single_quotes;
    bool header = false;
    for (const BookPaths &paths : ResolveBooks(quotes_in)) {
      try {
        const AnnotatedBook book = LoadBook(paths);
        const auto spans = IdentifyQuotations(book, opts);
        app.Write(book.book_id + ".quotes.jsonl", QuotesJsonl(spans));
        if (!quotes_score) continue;
        if (!book.gold_quotes) throw std::runtime_error("no gold quotes to score against");
        const std::string csv = SpanScoreCsv(ScoreQuotations(spans, GoldSpans(book)));
        const size_t split = csv.find("\r\n") + 2;
        if (!header) std::cout << "book_id," << csv.substr(0, split);
        header = true;
        std::cout << CsvField(book.book_id) << ',' << csv.substr(split);
      } catch (const std::exception &e) {
        spdlog::error("{}: {}", paths.BookId(), e.what());
        status = 1;
      }
    }
  });

  // attribute
  std::vector<std::string> attrib_in;
  std::vector<std::string> disabled;
  bool ablate = false;
  bool gold_quotes = false;
  auto *attribute = cli.add_subcommand("attribute", "Attribute quotes to speakers");
  attribute->add_option("inputs", attrib_in)->required();
  attribute->add_option("--disable", disabled, "Sieves to switch off")->delimiter(',');
  attribute->add_flag("--ablate", ablate, "Emit the single-sieve ablation table");
  attribute->add_flag("--gold-quotes", gold_quotes, "Attribute gold spans");
  attribute->callback([&] {
    PipelineConfig config = app.Config();
    config.sieves = ApplyDisable(config.sieves, disabled);
    config.gold_quotes = config.gold_quotes || gold_quotes;
    if (!config.sieves.Valid()) throw CLI::ValidationError("--disable", "every sieve is disabled");
    status = app.ForEachBook(attrib_in, config, [&](const AnnotatedBook &book,
                                                    const BookAnalysis &a,
                                                    const Lexicons &lex) {
      app.Write(book.book_id + ".quotes.attrib.jsonl",
                AttributionJsonl(a.quotes, a.attribution));
      if (ablate) {
        const BookIndex index(book, lex.gender);
        const std::string table = AblationCsv(Ablate(index, config.sieves, lex.communication_verbs));
        app.Write(book.book_id + ".ablation.csv", table);
        std::cout << book.book_id << "\r\n" << table;
      }
    });
  });

  // score-attrib
  std::vector<std::string> score_in;
  std::vector<std::string> score_disabled;
  auto *score = cli.add_subcommand("score-attrib", "Score attribution against gold speakers");
  score->add_option("inputs", score_in)->required();
  score->add_option("--disable", score_disabled)->delimiter(',');
  score->callback([&] {
    PipelineConfig config = app.Config();
    config.sieves = ApplyDisable(config.sieves, score_disabled);
    const Lexicons lex = config.LoadLexicons();
    std::string out = ClusterScoreHeader();
    ClusterScore sum;
    int n = 0;
    for (const BookPaths &paths : ResolveBooks(score_in)) {
      try {
        const AnnotatedBook book = LoadBook(paths);
        const BookIndex index(book, lex.gender);
        const auto attribution = AttributeSpeakers(index, GoldSpans(book), config.sieves,
                                                   lex.communication_verbs);
        const ClusterScore s = ScoreClusters(GoldSpeakerClustering(book),
                                             PredictedSpeakerClustering(attribution));
        out += ClusterScoreCsvRow(book.book_id, s);
        for (auto [acc, v] : {std::pair{&sum.b3, &s.b3}, {&sum.muc, &s.muc}, {&sum.ceaf, &s.ceaf}}) {
          acc->precision += v->precision;
          acc->recall += v->recall;
          acc->f1 += v->f1;
          acc->undefined = acc->undefined || v->undefined;
        }
        sum.average_f += s.average_f;
        ++n;
      } catch (const std::exception &e) {
        spdlog::error("{}: {}", paths.BookId(), e.what());
        status = 1;
      }
    }
    if (n > 0) {
      for (Prf *p : {&sum.b3, &sum.muc, &sum.ceaf}) {
        p->precision /= n;
        p->recall /= n;
        p->f1 /= n;
      }
      sum.average_f /= n;
      out += ClusterScoreCsvRow("corpus_average", sum);
    }
    std::cout << out;
    app.Write("attribution_scores.csv", out);
  });

  // network
  std::vector<std::string> network_in;
  auto *network = cli.add_subcommand("network", "Build co-presence networks");
  network->add_option("inputs", network_in)->required();
  network->callback([&] {
    status = app.ForEachBook(network_in, app.Config(),
                             [&](const AnnotatedBook &book, const BookAnalysis &a, const Lexicons &) {
                               app.Write(book.book_id + ".edges.csv", EdgesCsv(a.network));
                               app.Write(book.book_id + ".blocks.csv", BlocksCsv(a.blocks));
                             });
  });

  // tuples
  std::vector<std::string> tuples_in;
  std::string topic_lexicon;
  auto *tuples = cli.add_subcommand("tuples", "Extract propositional tuples");
  tuples->add_option("inputs", tuples_in)->required();
  tuples->add_option("--lexicon", topic_lexicon, "Topic lexicon file")->check(CLI::ExistingFile);
  tuples->callback([&] {
    PipelineConfig config = app.Config();
    if (!topic_lexicon.empty()) config.lexicons.topics = topic_lexicon;
    status = app.ForEachBook(tuples_in, config,
                             [&](const AnnotatedBook &book, const BookAnalysis &a, const Lexicons &lex) {
                               app.Write(book.book_id + ".tuples.csv", TuplesCsv(a.tuples, lex.topics));
                             });
  });

  // propagate
  std::vector<std::string> prop_in;
  std::string mode = "implicit";
  std::string check;
  auto *propagate = cli.add_subcommand("propagate", "Detect propagation events");
  propagate->add_option("inputs", prop_in)->required();
  propagate->add_option("--mode", mode)->check(CLI::IsMember({"implicit", "explicit"}));
  propagate->add_option("--check", check, "Plant manifest to compare against")
      ->check(CLI::ExistingFile);
  propagate->callback([&] {
    std::set<ImplicitTriad> implicit;
    std::set<ExplicitTriad> explicit_triads;
    std::vector<std::string> books;
    status = app.ForEachBook(prop_in, app.Config(),
                             [&](const AnnotatedBook &book, const BookAnalysis &a, const Lexicons &) {
                               books.push_back(book.book_id);
                               if (mode == "implicit") {
                                 app.Write(book.book_id + ".implicit.csv",
                                           ImplicitEventsCsv(book.book_id, a.implicit_events));
                                 implicit.merge(ImplicitTriads(book.book_id, a.implicit_events));
                               } else {
                                 app.Write(book.book_id + ".explicit.csv",
                                           ExplicitEventsCsv(book.book_id, a.explicit_events));
                                 explicit_triads.merge(ExplicitTriads(book.book_id, a.explicit_events));
                               }
                             });
    if (check.empty()) return;
    PlantManifest planted = PlantManifest::Load(check);
    // Compare only the books that were analysed.
    std::erase_if(planted.implicit, [&](const ImplicitTriad &t) {
      return std::find(books.begin(), books.end(), std::get<0>(t)) == books.end();
    });
    std::erase_if(planted.explicit_triads, [&](const ExplicitTriad &t) {
      return std::find(books.begin(), books.end(), std::get<0>(t)) == books.end();
    });
    const Recovery r = mode == "implicit"
                           ? CompareTriads(implicit, planted.implicit)
                           : CompareTriads(explicit_triads, planted.explicit_triads);
    std::cout << CsvRow({"mode", "precision", "recall", "true_positives",
                         "false_positives", "false_negatives"})
              << CsvRow({mode, CsvNumber(r.precision()), CsvNumber(r.recall()),
                         std::to_string(r.true_positives), std::to_string(r.false_positives),
                         std::to_string(r.false_negatives)});
    if (r.false_positives > 0 || r.false_negatives > 0) status = 1;
  });

  // features
  std::vector<std::string> features_in;
  bool label = false;
  auto *features = cli.add_subcommand("features", "Per-node structural features");
  features->add_option("inputs", features_in)->required();
  features->add_flag("--label", label, "Label sampled B / B' nodes (needs --seed)");
  features->callback([&] {
    const PipelineConfig config = app.Config();
    if (label && !config.seed) throw CLI::ValidationError("--label", "needs --seed");
    std::vector<NetworkPairs> networks;
    status = app.ForEachBook(features_in, config,
                             [&](const AnnotatedBook &book, const BookAnalysis &a, const Lexicons &) {
                               app.Write(book.book_id + ".nodes.csv",
                                         NodeFeaturesCsv(AllFeatures(a.network, config.closeness),
                                                         label ? PairLabels(a) : std::map<int, std::string>{}));
                               NetworkPairs np{book.book_id, a.network, {}};
                               for (const auto &p : a.counterfactuals.pairs) {
                                 np.pairs.emplace_back(p.b_entity, p.b_prime_entity);
                               }
                               networks.push_back(std::move(np));
                             });
    if (label) app.Write("features.csv", FeatureMatrixToCsv(ObservedFeatures(networks, config.closeness)));
  });

  // regress
  std::string matrix_path;
  auto *regress = cli.add_subcommand("regress", "Fit the B vs B' logistic regression");
  regress->add_option("features", matrix_path, "Feature matrix CSV")->required()->check(CLI::ExistingFile);
  regress->callback([&] {
    const FeatureMatrix m = FeatureMatrixFromCsv(ReadFile(matrix_path));
    const std::string table = RegressionCsv(FitScaledLogistic(m));
    std::cout << table;
    app.Write("regression.csv", table);
  });

  // randomize
  std::vector<std::string> rand_in;
  int trials = -1;
  int graphs = -1;
  auto *randomize = cli.add_subcommand("randomize", "Degree-matched randomization test");
  randomize->add_option("inputs", rand_in)->required();
  randomize->add_option("--trials", trials)->check(CLI::PositiveNumber);
  randomize->add_option("--graphs-per-net", graphs)->check(CLI::PositiveNumber);
  randomize->callback([&] {
    PipelineConfig config = app.Config();
    if (!config.seed) throw CLI::ValidationError("--seed", "randomize needs a seed");
    if (trials > 0) config.trials = trials;
    if (graphs > 0) config.graphs_per_network = graphs;
    std::vector<NetworkPairs> networks;
    status = app.ForEachBook(rand_in, config,
                             [&](const AnnotatedBook &book, const BookAnalysis &a, const Lexicons &) {
                               NetworkPairs np{book.book_id, a.network, {}};
                               for (const auto &p : a.counterfactuals.pairs) {
                                 np.pairs.emplace_back(p.b_entity, p.b_prime_entity);
                               }
                               networks.push_back(std::move(np));
                             });
    RandomizationOptions opts;
    opts.trials = config.trials;
    opts.graphs_per_network = config.graphs_per_network;
    opts.seed = DeriveSeed(*config.seed, "randomization");
    opts.jobs = config.jobs;
    opts.closeness = config.closeness;
    const NullDistribution d = RandomizationTest(networks, opts);
    const std::string table = RandomizationCsv(d);
    std::cout << table;
    app.Write("randomization.csv", table);
    app.Write("null_coefficients.csv", NullCoefficientsCsv(d));
  });

  // gender
  std::vector<std::string> gender_in;
  bool plot = false;
  auto *gender = cli.add_subcommand("gender", "Gender triad proportions");
  gender->add_option("inputs", gender_in)->required();
  gender->add_flag("--plot", plot, "Also write a grouped bar chart SVG");
  gender->callback([&] {
    std::vector<BookTriads> books;
    status = app.ForEachBook(gender_in, app.Config(),
                             [&](const AnnotatedBook &book, const BookAnalysis &a, const Lexicons &) {
                               books.push_back({book.book_id, a.network, a.genders, a.explicit_events});
                             });
    const GenderReport report = GenderTriads(books);
    const std::string table = GenderReportCsv(report);
    std::cout << table;
    app.Write("gender.csv", table);
    if (plot) app.Write("gender.svg", GenderReportSvg(report));
  });

  // run-all
  std::string corpus;
  auto *run_all = cli.add_subcommand("run-all", "Run every stage over a corpus");
  run_all->add_option("corpus", corpus, "Corpus directory (overrides the config)");
  run_all->callback([&] {
    PipelineConfig config = app.Config();
    if (!corpus.empty()) config.corpus_dir = corpus;
    const RunResult r = RunPipeline(config);
    std::cout << r.manifest.string() << "\n";
    if (!r.books_failed.empty()) status = 1;
  });

  // report
  std::string manifest;
  auto *report = cli.add_subcommand("report", "Summarize a run manifest");
  report->add_option("manifest", manifest)->required();
  report->callback([&] {
    const RunReport r = WriteReport(manifest);
    std::cout << r.text;
  });

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return cli.exit(e);
  } catch (const std::exception &e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return status;
}
