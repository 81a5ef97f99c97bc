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

#include <fmt/format.h>
#include <gtest/gtest.h>

#include "fixtures.h"
#include "infoprop/csv.h"
#include "infoprop/plant_manifest.h"
#include "json.hpp"

namespace infoprop {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;
using testing::WriteText;

fs::path SyntheticDir() { return DefaultDataDir() / "synthetic"; }

PipelineConfig Config(const fs::path &corpus, const fs::path &out) {
  PipelineConfig c;
  c.corpus_dir = corpus;
  c.output_dir = out;
  c.seed = 7;
  c.trials = 40;
  c.graphs_per_network = 3;
  return c;
}

nlohmann::json Manifest(const fs::path &path) {
  return nlohmann::json::parse(ReadFile(path));
}

TEST(Fnv1a64, KnownVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(Fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(RunPipeline, ProducesEveryStage) {
  TempDir out("pipeline_all");
  const RunResult run = RunPipeline(Config(SyntheticDir(), out.path()));
  EXPECT_EQ(run.books_ok.size(), 6u);
  EXPECT_TRUE(run.books_failed.empty());
  const auto manifest = Manifest(run.manifest);
  for (const char *stage : kStages) {
    EXPECT_TRUE(manifest["stages"].contains(stage)) << stage;
  }
  // Recorded hashes match the files on disk.
  for (const auto &[file, entry] : manifest["files"].items()) {
    const std::string bytes = ReadFile(out.path() / file);
    EXPECT_EQ(entry["bytes"].get<size_t>(), bytes.size()) << file;
    EXPECT_EQ(entry["fnv1a64"].get<std::string>(), fmt::format("{:016x}", Fnv1a64(bytes)))
        << file;
  }
  const RunReport report = WriteReport(run.manifest);
  EXPECT_TRUE(report.missing_stages.empty());
  EXPECT_TRUE(fs::exists(out.path() / "report.txt"));
  EXPECT_EQ(report.text.find("MissingStage"), std::string::npos);
}

TEST(RunPipeline, ImplicitBookFractionMatchesPlants) {
  TempDir out("pipeline_fraction");
  const RunResult run = RunPipeline(Config(SyntheticDir(), out.path()));
  const PlantManifest plants = PlantManifest::Load(SyntheticDir() / "manifest.json");
  std::set<std::string> planted_books;
  for (const auto &t : plants.implicit) planted_books.insert(std::get<0>(t));
  const double expected =
      static_cast<double>(planted_books.size()) / plants.books.size();

  const RunReport report = Report(run.manifest);
  double fraction = -1;
  for (const auto &row : ParseCsv(report.csv)) {
    if (row.size() == 3 && row[0] == "implicit" && row[1] == "book_fraction") {
      fraction = std::stod(row[2]);
    }
  }
  EXPECT_NEAR(fraction, expected, 1e-9);
  EXPECT_NE(report.text.find(fmt::format("{} of {}", planted_books.size(),
                                         plants.books.size())),
            std::string::npos);
}

TEST(RunPipeline, DeterministicAcrossRunsAndJobCounts) {
  TempDir a("pipeline_det_a"), b("pipeline_det_b");
  PipelineConfig ca = Config(SyntheticDir(), a.path());
  PipelineConfig cb = Config(SyntheticDir(), b.path());
  cb.jobs = 4;
  const auto ma = Manifest(RunPipeline(ca).manifest);
  const auto mb = Manifest(RunPipeline(cb).manifest);
  EXPECT_EQ(ma["files"], mb["files"]);
}

TEST(RunPipeline, SeedChangesStochasticOutputsOnly) {
  TempDir a("pipeline_seed_a"), b("pipeline_seed_b");
  PipelineConfig ca = Config(SyntheticDir(), a.path());
  PipelineConfig cb = Config(SyntheticDir(), b.path());
  cb.seed = 8;
  const auto fa = Manifest(RunPipeline(ca).manifest)["files"];
  const auto fb = Manifest(RunPipeline(cb).manifest)["files"];
  EXPECT_EQ(fa["books/synthetic_01.edges.csv"], fb["books/synthetic_01.edges.csv"]);
  EXPECT_EQ(fa["books/synthetic_01.implicit.csv"], fb["books/synthetic_01.implicit.csv"]);
  EXPECT_NE(fa["null_coefficients.csv"], fb["null_coefficients.csv"]);
}

TEST(RunPipeline, NoTrialsMeansMissingRandomization) {
  TempDir out("pipeline_notrials");
  PipelineConfig c = Config(SyntheticDir(), out.path());
  c.trials = 0;
  const RunReport report = Report(RunPipeline(c).manifest);
  EXPECT_EQ(report.missing_stages, std::vector<std::string>{"randomization"});
  EXPECT_NE(report.text.find("MissingStage: randomization"), std::string::npos);
  EXPECT_NE(report.csv.find("missing_stage,randomization"), std::string::npos);
}

TEST(RunPipeline, DeletedOutputIsReportedMissing) {
  TempDir out("pipeline_deleted");
  const RunResult run = RunPipeline(Config(SyntheticDir(), out.path()));
  fs::remove(out.path() / "gender.svg");
  EXPECT_EQ(Report(run.manifest).missing_stages, std::vector<std::string>{"gender"});
}

TEST(RunPipeline, MalformedBookIsIsolated) {
  TempDir corpus("pipeline_bad_corpus"), out("pipeline_bad_out");
  for (const auto &entry : fs::directory_iterator(SyntheticDir())) {
    fs::copy_file(entry.path(), corpus / entry.path().filename().string());
  }
  WriteText(corpus / "synthetic_03.tokens.tsv", "not a header\n");
  const RunResult run = RunPipeline(Config(corpus.path(), out.path()));
  EXPECT_EQ(run.books_ok.size(), 5u);
  ASSERT_EQ(run.books_failed.size(), 1u);
  EXPECT_TRUE(run.books_failed.contains("synthetic_03"));
  const auto manifest = Manifest(run.manifest);
  EXPECT_TRUE(manifest["failed_books"].contains("synthetic_03"));
  EXPECT_NE(ReadFile(out / "books.csv").find("synthetic_03,failed"), std::string::npos);
  EXPECT_FALSE(fs::exists(out / "books/synthetic_03.quotes.jsonl"));
}

TEST(RunPipeline, EmptyCorpusThrows) {
  TempDir corpus("pipeline_empty"), out("pipeline_empty_out");
  EXPECT_THROW(RunPipeline(Config(corpus.path(), out.path())), std::runtime_error);
}

TEST(RunPipeline, EveryBookFailingThrows) {
  TempDir corpus("pipeline_allbad"), out("pipeline_allbad_out");
  WriteText(corpus / "x.tokens.tsv", "junk\n");
  WriteText(corpus / "x.mentions.jsonl", "");
  EXPECT_THROW(RunPipeline(Config(corpus.path(), out.path())), std::runtime_error);
}

TEST(PipelineConfig, ParsesIniWithRelativePaths) {
  TempDir dir("config_ok");
  fs::create_directories(dir / "corpus");
  WriteText(dir / "run.ini",
            "[corpus]\ndir = corpus\n[output]\ndir = out\n"
            "[sieves]\nvocatives = false\n"
            "[quotes]\nsingle_quotes = true\nmax_length = 80\n"
            "[random]\nseed = 99\ntrials = 5\ngraphs_per_network = 2\n"
            "[run]\njobs = 3\ncloseness = classical\n");
  const PipelineConfig c = PipelineConfig::FromIni(dir / "run.ini");
  EXPECT_EQ(c.corpus_dir, dir / "corpus");
  EXPECT_EQ(c.output_dir, dir / "out");
  EXPECT_FALSE(c.sieves.vocatives);
  EXPECT_TRUE(c.sieves.trigram_matching);
  EXPECT_TRUE(c.quote_options.single_quotes);
  EXPECT_EQ(c.quote_options.max_length, 80);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.trials, 5);
  EXPECT_EQ(c.graphs_per_network, 2);
  EXPECT_EQ(c.jobs, 3);
  EXPECT_EQ(c.closeness, ClosenessKind::kClassical);
  EXPECT_NO_THROW(c.Check(true));
}

TEST(PipelineConfig, RejectsBadInput) {
  TempDir dir("config_bad");
  auto parse = [&](const std::string &text) {
    WriteText(dir / "c.ini", text);
    return PipelineConfig::FromIni(dir / "c.ini");
  };
  EXPECT_THROW(parse("[random]\ncolour = red\n"), ConfigError);
  EXPECT_THROW(parse("[sieves]\nmagic = true\n"), ConfigError);
  EXPECT_THROW(parse("[sieves]\nvocatives = maybe\n"), ConfigError);
  EXPECT_THROW(parse("[random]\ntrials = many\n"), ConfigError);
  EXPECT_THROW(parse("[random]\nseed = -4\n"), ConfigError);
  EXPECT_THROW(parse("[run]\ncloseness = fast\n"), ConfigError);
  EXPECT_THROW(parse("[corpus\n"), ConfigError);

  PipelineConfig c;
  c.corpus_dir = dir.path();
  c.output_dir = dir / "out";
  EXPECT_NO_THROW(c.Check(false));
  EXPECT_THROW(c.Check(true), ConfigError);
  c.seed = 1;
  c.jobs = 0;
  EXPECT_THROW(c.Check(true), ConfigError);
  c.jobs = 1;
  for (Sieve s : kSieveOrder) c.sieves.Set(s, false);
  EXPECT_THROW(c.Check(true), ConfigError);
  c.sieves = {};
  c.corpus_dir = dir / "absent";
  EXPECT_THROW(c.Check(false), ConfigError);
}

TEST(Report, MissingManifestThrows) {
  EXPECT_THROW(Report("/nonexistent/manifest.json"), std::runtime_error);
}

TEST(PairLabels, PropagatingAndNonPropagating) {
  BookAnalysis a;
  a.counterfactuals.pairs = {{2, 5, 0, false}, {3, 5, 1, false}};
  EXPECT_EQ(PairLabels(a), (std::map<int, std::string>{
                               {2, "propagating"}, {3, "propagating"}, {5, "non_propagating"}}));
}

}  // namespace
}  // namespace infoprop
