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

// Writes the planted-propagation fixture corpus.

#include <iostream>

#include "CLI11.hpp"
#include "synthetic.h"

int main(int argc, char **argv) {
  CLI::App cli{"Generate the planted-propagation corpus"};
  std::string out = "data/synthetic";
  infoprop::synth::SyntheticOptions opts;
  cli.add_option("out", out, "Output directory");
  cli.add_option("--seed", opts.seed);
  cli.add_option("--books", opts.books)->check(CLI::PositiveNumber);
  CLI11_PARSE(cli, argc, argv);

  const auto corpus = infoprop::synth::GenerateCorpus(opts);
  infoprop::synth::WriteCorpus(corpus, out);
  std::cout << corpus.books.size() << " books, "
            << corpus.manifest.implicit.size() << " implicit and "
            << corpus.manifest.explicit_triads.size()
            << " explicit planted triads\n";
  return 0;
}
