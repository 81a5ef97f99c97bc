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

#include "infoprop/gender.h"

#include <algorithm>
#include <cmath>

#include "fmt/format.h"
#include "infoprop/csv.h"

namespace infoprop {
namespace {

constexpr double kZ95 = 1.959963984540054;

int ConfigIndex(Gender a, Gender b, Gender c) {
  auto bit = [](Gender g) { return g == Gender::kMale ? 1 : 0; };
  return bit(a) << 2 | bit(b) << 1 | bit(c);
}

bool Known(Gender g) { return g != Gender::kUnknown; }

Gender Lookup(const std::map<int, Gender> &genders, int entity) {
  auto it = genders.find(entity);
  return it == genders.end() ? Gender::kUnknown : it->second;
}

void Finish(TriadPopulation *pop) {
  for (size_t i = 0; i < pop->counts.size(); ++i) {
    const double p = pop->total > 0 ? pop->counts[i] / pop->total : 0.0;
    pop->proportions[i] = p;
    pop->half_widths[i] =
        pop->total > 0 ? kZ95 * std::sqrt(p * (1 - p) / pop->total) : 0.0;
  }
}

}  // namespace

char GenderLetter(Gender g) {
  switch (g) {
    case Gender::kFemale: return 'F';
    case Gender::kMale: return 'M';
    case Gender::kUnknown: return '?';
  }
  return '?';
}

Gender InferGender(int entity, const AnnotatedBook &book,
                   const GenderLexicon &lexicon) {
  int female = 0;
  int male = 0;
  for (const Mention &m : book.mentions) {
    if (m.entity_id != entity) continue;
    for (int t = m.start_token; t <= m.end_token; ++t) {
      const std::string word = AsciiLower(book.tokens[t].surface);
      female += lexicon.female.contains(word);
      male += lexicon.male.contains(word);
    }
  }
  if (female > male) return Gender::kFemale;
  if (male > female) return Gender::kMale;
  return Gender::kUnknown;
}

std::map<int, Gender> InferGenders(const AnnotatedBook &book,
                                   std::span<const int> entities,
                                   const GenderLexicon &lexicon) {
  std::map<int, Gender> out;
  for (int e : entities) out[e] = InferGender(e, book, lexicon);
  return out;
}

GenderReport GenderTriads(std::span<const BookTriads> books) {
  GenderReport report;
  for (const BookTriads &book : books) {
    for (int b : book.network.Nodes()) {
      const Gender gb = Lookup(book.genders, b);
      if (!Known(gb)) continue;
      const auto nbrs = book.network.Neighbors(b);
      for (size_t i = 0; i < nbrs.size(); ++i) {
        const Gender gi = Lookup(book.genders, nbrs[i]);
        if (!Known(gi)) continue;
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
          const Gender gj = Lookup(book.genders, nbrs[j]);
          if (!Known(gj)) continue;
          report.all.counts[ConfigIndex(gi, gb, gj)] += 0.5;
          report.all.counts[ConfigIndex(gj, gb, gi)] += 0.5;
          report.all.total += 1;
        }
      }
    }
    for (const ExplicitEvent &e : book.explicit_events) {
      const Gender ga = Lookup(book.genders, e.a_entity);
      const Gender gb = Lookup(book.genders, e.b_entity);
      if (!Known(ga) || !Known(gb)) continue;
      for (int c : e.c_entities) {
        const Gender gc = Lookup(book.genders, c);
        if (!Known(gc)) continue;
        report.propagating.counts[ConfigIndex(ga, gb, gc)] += 1;
        report.propagating.total += 1;
      }
    }
  }
  Finish(&report.all);
  Finish(&report.propagating);
  return report;
}

std::string GenderReportCsv(const GenderReport &report) {
  std::string out = CsvRow({"configuration", "all_count", "all_proportion",
                            "all_half_width", "propagating_count",
                            "propagating_proportion", "propagating_half_width"});
  for (size_t i = 0; i < kTriadConfigs.size(); ++i) {
    out += CsvRow({kTriadConfigs[i], CsvNumber(report.all.counts[i]),
                   CsvNumber(report.all.proportions[i]),
                   CsvNumber(report.all.half_widths[i]),
                   CsvNumber(report.propagating.counts[i]),
                   CsvNumber(report.propagating.proportions[i]),
                   CsvNumber(report.propagating.half_widths[i])});
  }
  out += CsvRow({"total", CsvNumber(report.all.total), "1", "",
                 CsvNumber(report.propagating.total), "1", ""});
  return out;
}

std::string GenderReportSvg(const GenderReport &report) {
  constexpr double kWidth = 640, kHeight = 360;
  constexpr double kLeft = 50, kRight = 20, kTop = 30, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  double ymax = 0.05;
  for (size_t i = 0; i < 8; ++i) {
    ymax = std::max({ymax, report.all.proportions[i] + report.all.half_widths[i],
                     report.propagating.proportions[i] +
                         report.propagating.half_widths[i]});
  }
  ymax = std::ceil(ymax * 10) / 10;

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "font-family=\"sans-serif\" font-size=\"11\">\n",
      kWidth, kHeight);
  svg += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
                     kWidth, kHeight);
  auto y_of = [&](double v) { return kTop + plot_h * (1 - v / ymax); };
  for (int tick = 0; tick <= 5; ++tick) {
    const double v = ymax * tick / 5;
    svg += fmt::format(
        "<line x1=\"{}\" x2=\"{}\" y1=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#ddd\"/>"
        "<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{:.2f}</text>\n",
        kLeft, kLeft + plot_w, y_of(v), y_of(v), kLeft - 4, y_of(v) + 4, v);
  }
  const double group = plot_w / 8;
  const double bar = group * 0.35;
  const struct {
    const TriadPopulation *pop;
    const char *colour;
    double offset;
  } series[] = {{&report.all, "#9ecae1", group * 0.15},
                {&report.propagating, "#2171b5", group * 0.15 + bar}};
  for (size_t i = 0; i < 8; ++i) {
    const double x0 = kLeft + group * i;
    for (const auto &s : series) {
      const double p = s.pop->proportions[i];
      const double hw = s.pop->half_widths[i];
      const double x = x0 + s.offset;
      svg += fmt::format(
          "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
          "fill=\"{}\"/>\n",
          x, y_of(p), bar, kTop + plot_h - y_of(p), s.colour);
      svg += fmt::format(
          "<line x1=\"{0:.2f}\" x2=\"{0:.2f}\" y1=\"{1:.2f}\" y2=\"{2:.2f}\" "
          "stroke=\"black\"/>\n",
          x + bar / 2, y_of(std::max(0.0, p - hw)), y_of(p + hw));
    }
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
        x0 + group / 2, kTop + plot_h + 16, kTriadConfigs[i]);
  }
  svg += fmt::format(
      "<rect x=\"{0}\" y=\"8\" width=\"10\" height=\"10\" fill=\"#9ecae1\"/>"
      "<text x=\"{1}\" y=\"17\">All triads (n={2})</text>\n"
      "<rect x=\"{3}\" y=\"8\" width=\"10\" height=\"10\" fill=\"#2171b5\"/>"
      "<text x=\"{4}\" y=\"17\">Propagating triads (n={5})</text>\n",
      kLeft, kLeft + 14, report.all.total, kLeft + 220, kLeft + 234,
      report.propagating.total);
  svg += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">Gender "
      "configuration (A-B-C)</text>\n",
      kLeft + plot_w / 2, kHeight - 10);
  svg += "</svg>\n";
  return svg;
}

}  // namespace infoprop
