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

// Character gender from coreference chains, and the gender make-up of
// structural versus propagating triads.

#ifndef INFOPROP_GENDER_H_
#define INFOPROP_GENDER_H_

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "infoprop/character_network.h"
#include "infoprop/corpus_model.h"
#include "infoprop/lexicons.h"
#include "infoprop/propagation.h"

namespace infoprop {

enum class Gender { kFemale, kMale, kUnknown };

char GenderLetter(Gender g);  // 'F', 'M', '?'

// Majority vote of gendered words over every token of the entity's
// mentions; ties and chains without gendered words are kUnknown.
Gender InferGender(int entity, const AnnotatedBook &book,
                   const GenderLexicon &lexicon);

std::map<int, Gender> InferGenders(const AnnotatedBook &book,
                                   std::span<const int> entities,
                                   const GenderLexicon &lexicon);

struct BookTriads {
  std::string book_id;
  CharacterNetwork network;
  std::map<int, Gender> genders;
  std::vector<ExplicitEvent> explicit_events;
};

// Configuration index: A, B, C genders as bits (F = 0, M = 1), A highest.
inline constexpr std::array<const char *, 8> kTriadConfigs = {
    "F-F-F", "F-F-M", "F-M-F", "F-M-M", "M-F-F", "M-F-M", "M-M-F", "M-M-M"};

struct TriadPopulation {
  std::array<double, 8> counts{};
  double total = 0;  // triads with all three genders known
  std::array<double, 8> proportions{};
  std::array<double, 8> half_widths{};  // Wald 95%
};

struct GenderReport {
  TriadPopulation all;          // paths A-B-C in the co-presence networks
  TriadPopulation propagating;  // explicit propagation triads
};

// Structural triads are unordered paths centred on B; each contributes
// half a count to both reading directions.
GenderReport GenderTriads(std::span<const BookTriads> books);

std::string GenderReportCsv(const GenderReport &report);
// Grouped bar chart of both populations with 95% intervals.
std::string GenderReportSvg(const GenderReport &report);

}  // namespace infoprop

#endif  // INFOPROP_GENDER_H_
