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

#include "synthetic.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "infoprop/pipeline.h"
#include "infoprop/plant_manifest.h"

namespace infoprop {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

fs::path ShippedDir() { return DefaultDataDir() / "synthetic"; }

TEST(SyntheticCorpus, RegeneratesTheShippedFilesExactly) {
  TempDir out("synthetic_regen");
  synth::WriteCorpus(synth::GenerateCorpus(), out.path());
  int compared = 0;
  for (const auto &entry : fs::directory_iterator(ShippedDir())) {
    const fs::path regenerated = out / entry.path().filename().string();
    ASSERT_TRUE(fs::exists(regenerated)) << regenerated;
    EXPECT_EQ(ReadFile(entry.path()), ReadFile(regenerated)) << entry.path();
    ++compared;
  }
  EXPECT_EQ(compared, 19);
}

TEST(SyntheticCorpus, BooksAreValid) {
  const auto corpus = synth::GenerateCorpus();
  ASSERT_EQ(corpus.books.size(), 6u);
  for (const auto &book : corpus.books) {
    EXPECT_TRUE(Validate(book).empty()) << book.book_id;
    ASSERT_TRUE(book.gold_quotes.has_value());
    EXPECT_FALSE(book.gold_quotes->empty());
  }
}

TEST(SyntheticCorpus, LastBookHasNoImplicitPlants) {
  const auto corpus = synth::GenerateCorpus();
  for (const auto &t : corpus.manifest.implicit) {
    EXPECT_NE(std::get<0>(t), corpus.books.back().book_id);
  }
  EXPECT_FALSE(corpus.manifest.explicit_triads.empty());
}

TEST(SyntheticCorpus, SeedChangesTheText) {
  synth::SyntheticOptions other;
  other.seed = 1;
  other.books = 2;
  const auto a = synth::GenerateCorpus(other);
  const auto b = synth::GenerateCorpus(other);
  EXPECT_EQ(a.books, b.books);
  EXPECT_NE(a.books[0], synth::GenerateCorpus().books[0]);
}

// Every planted triad is found and nothing else is.
void ExpectExactRecovery(const synth::SyntheticCorpus &corpus) {
  PipelineConfig config;
  const Lexicons lexicons = Lexicons::LoadDefault();
  std::set<ImplicitTriad> implicit;
  std::set<ExplicitTriad> explicit_triads;
  for (const auto &book : corpus.books) {
    const BookAnalysis a = AnalyzeBook(book, config, lexicons, 1);
    implicit.merge(ImplicitTriads(book.book_id, a.implicit_events));
    explicit_triads.merge(ExplicitTriads(book.book_id, a.explicit_events));
  }
  const Recovery ri = CompareTriads(implicit, corpus.manifest.implicit);
  const Recovery re = CompareTriads(explicit_triads, corpus.manifest.explicit_triads);
  EXPECT_EQ(ri.false_positives, 0);
  EXPECT_EQ(ri.false_negatives, 0);
  EXPECT_EQ(re.false_positives, 0);
  EXPECT_EQ(re.false_negatives, 0);
  EXPECT_GT(ri.true_positives, 0);
  EXPECT_GT(re.true_positives, 0);
}

TEST(SyntheticCorpus, PlantsAreRecoveredExactly) {
  ExpectExactRecovery(synth::GenerateCorpus());
}

TEST(SyntheticCorpus, PlantsAreRecoveredAcrossSeeds) {
  for (uint64_t seed : {3u, 4u, 5u}) {
    synth::SyntheticOptions o;
    o.seed = seed;
    o.books = 3;
    ExpectExactRecovery(synth::GenerateCorpus(o));
  }
}

TEST(PlantManifest, JsonRoundTrip) {
  TempDir out("plant_manifest");
  const auto corpus = synth::GenerateCorpus();
  WriteFile(out / "m.json", corpus.manifest.ToJson());
  const PlantManifest loaded = PlantManifest::Load(out / "m.json");
  EXPECT_EQ(loaded.books, corpus.manifest.books);
  EXPECT_EQ(loaded.implicit, corpus.manifest.implicit);
  EXPECT_EQ(loaded.explicit_triads, corpus.manifest.explicit_triads);
}

TEST(Recovery, PrecisionAndRecall) {
  const std::set<int> planted = {1, 2, 3, 4};
  const Recovery r = CompareTriads(std::set<int>{1, 2, 9}, planted);
  EXPECT_EQ(r.true_positives, 2);
  EXPECT_DOUBLE_EQ(r.precision(), 2.0 / 3);
  EXPECT_DOUBLE_EQ(r.recall(), 0.5);
}

}  // namespace
}  // namespace infoprop
