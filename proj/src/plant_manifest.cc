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

#include "infoprop/plant_manifest.h"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace infoprop {

using json = nlohmann::json;

PlantManifest PlantManifest::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path.string());
  const json j = json::parse(in);
  PlantManifest m;
  for (const auto &b : j.at("books")) m.books.push_back(b.get<std::string>());
  for (const auto &r : j.at("implicit")) {
    m.implicit.emplace(r.at("book").get<std::string>(), r.at("a").get<int>(),
                       r.at("b").get<int>(), r.at("c").get<int>(),
                       r.at("tuple").get<std::string>());
  }
  for (const auto &r : j.at("explicit")) {
    m.explicit_triads.emplace(r.at("book").get<std::string>(),
                              r.at("quote_id").get<int>(), r.at("a").get<int>(),
                              r.at("b").get<int>(), r.at("c").get<int>());
  }
  return m;
}

std::string PlantManifest::ToJson() const {
  json j;
  j["books"] = books;
  j["implicit"] = json::array();
  for (const auto &[book, a, b, c, tuple] : implicit) {
    j["implicit"].push_back(
        {{"book", book}, {"a", a}, {"b", b}, {"c", c}, {"tuple", tuple}});
  }
  j["explicit"] = json::array();
  for (const auto &[book, quote, a, b, c] : explicit_triads) {
    j["explicit"].push_back(
        {{"book", book}, {"quote_id", quote}, {"a", a}, {"b", b}, {"c", c}});
  }
  return j.dump(1);
}

double Recovery::precision() const {
  const int n = true_positives + false_positives;
  return n == 0 ? (false_negatives == 0 ? 1.0 : 0.0)
                : static_cast<double>(true_positives) / n;
}

double Recovery::recall() const {
  const int n = true_positives + false_negatives;
  return n == 0 ? 1.0 : static_cast<double>(true_positives) / n;
}

std::set<ImplicitTriad> ImplicitTriads(const std::string &book,
                                       std::span<const ImplicitEvent> events) {
  std::set<ImplicitTriad> out;
  for (const auto &e : events) {
    out.emplace(book, e.a_entity, e.b_entity, e.c_entity,
                e.tuple.Key().ToString());
  }
  return out;
}

std::set<ExplicitTriad> ExplicitTriads(const std::string &book,
                                       std::span<const ExplicitEvent> events) {
  std::set<ExplicitTriad> out;
  for (const auto &e : events) {
    for (int c : e.c_entities) {
      out.emplace(book, e.quote_id, e.a_entity, e.b_entity, c);
    }
  }
  return out;
}

}  // namespace infoprop
