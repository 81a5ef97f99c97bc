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

// Minimal RFC 4180 CSV reading and writing.

#ifndef INFOPROP_CSV_H_
#define INFOPROP_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace infoprop {

// Quotes a field when it holds a comma, quote, or line break.
std::string CsvField(std::string_view field);
// Joins fields into one CRLF-terminated record.
std::string CsvRow(const std::vector<std::string> &fields);
// Shortest round-trip formatting for doubles.
std::string CsvNumber(double value);

std::vector<std::vector<std::string>> ParseCsv(std::string_view text);

}  // namespace infoprop

#endif  // INFOPROP_CSV_H_
