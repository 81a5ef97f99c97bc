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

// Generator for the planted-propagation fixture corpus. Every book is a
// sequence of dialogue scenes built from a fixed plan, and the generator
// records the triads it plants from its own bookkeeping.

#ifndef INFOPROP_TOOLS_SYNTHETIC_H_
#define INFOPROP_TOOLS_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "infoprop/corpus_model.h"
#include "infoprop/plant_manifest.h"

namespace infoprop::synth {

struct SyntheticCorpus {
  std::vector<AnnotatedBook> books;
  PlantManifest manifest;
};

struct SyntheticOptions {
  int books = 6;
  // Books at the end of the list that carry no implicit plants.
  int books_without_implicit = 1;
  int implicit_plants_per_book = 4;
  int explicit_plants_per_book = 3;
  uint64_t seed = 20240601;
};

SyntheticCorpus GenerateCorpus(const SyntheticOptions &options = {});

// Writes <id>.tokens.tsv, <id>.mentions.jsonl, <id>.quotes.jsonl and
// manifest.json into `dir`.
void WriteCorpus(const SyntheticCorpus &corpus, const std::filesystem::path &dir);

}  // namespace infoprop::synth

#endif  // INFOPROP_TOOLS_SYNTHETIC_H_
