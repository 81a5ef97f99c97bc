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

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

#include <fmt/format.h>

#include "infoprop/info_extract.h"
#include "infoprop/pipeline.h"

namespace infoprop::synth {
namespace {

// splitmix64. The fixture must not depend on the standard library's
// distribution algorithms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t Next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int Below(int n) { return static_cast<int>(Next() % static_cast<uint64_t>(n)); }
  template <typename T>
  void Shuffle(std::vector<T> *v) {
    for (int i = static_cast<int>(v->size()) - 1; i > 0; --i) {
      std::swap((*v)[i], (*v)[Below(i + 1)]);
    }
  }

 private:
  uint64_t state_;
};

struct Character {
  int entity = 0;
  std::string title;
  std::string surname;
};

struct LocalToken {
  std::string surface, lemma, upos, dep;
  int head = -1;  // index within the sentence, -1 for the root
};

// One sentence under construction. Heads are sentence-local.
class Sentence {
 public:
  int Add(std::string surface, std::string lemma, std::string upos,
          std::string dep, int head = -1) {
    tokens_.push_back({std::move(surface), std::move(lemma), std::move(upos),
                       std::move(dep), head});
    return static_cast<int>(tokens_.size()) - 1;
  }
  void Attach(int token, int head, std::string dep) {
    tokens_[token].head = head;
    tokens_[token].dep = std::move(dep);
  }
  int Punct(std::string surface, int head = -1) {
    return Add(surface, surface, "PUNCT", "punct", head);
  }
  // Title + surname; returns the surname (the mention head).
  int AddCharacter(const Character &c, std::string dep, int head = -1) {
    const int title = Add(c.title, c.title, "PROPN", "compound");
    const int name = Add(c.surname, c.surname, "PROPN", std::move(dep), head);
    tokens_[title].head = name;
    mentions_.push_back({title, name, c.entity});
    return name;
  }
  void MarkQuote(int open, int close, int speaker) {
    quote_ = {open, close, speaker};
  }

  const std::vector<LocalToken> &tokens() const { return tokens_; }
  const std::vector<std::array<int, 3>> &mentions() const { return mentions_; }
  const std::optional<std::array<int, 3>> &quote() const { return quote_; }

 private:
  std::vector<LocalToken> tokens_;
  std::vector<std::array<int, 3>> mentions_;  // start, end, entity
  std::optional<std::array<int, 3>> quote_;   // open, close, speaker
};

enum class TopicKind { kTransitive, kIntransitive, kAdjective };

struct TopicSpec {
  TopicKind kind;
  std::string subject;
  std::string verb_surface;
  std::string verb_lemma;
  std::string object;

  std::string Key() const {
    return subject + "|" + verb_lemma + "|" + (object.empty() ? "_" : object);
  }
};

std::vector<TopicSpec> TopicCatalogue() {
  static const std::array<std::pair<const char *, const char *>, 6> kVerbs = {{
      {"killed", "kill"}, {"hit", "hit"}, {"shot", "shoot"},
      {"hurt", "hurt"}, {"arrested", "arrest"}, {"loved", "love"}}};
  static const std::array<const char *, 8> kSubjects = {
      "captain", "steward", "colonel", "gardener",
      "vicar",   "soldier", "banker",  "groom"};
  static const std::array<const char *, 8> kObjects = {
      "baron",  "clerk",  "constable", "farmer",
      "lawyer", "tailor", "merchant",  "pedlar"};
  static const std::array<const char *, 5> kAdjectives = {
      "guilty", "innocent", "sick", "dead", "alive"};

  std::vector<TopicSpec> out;
  for (size_t i = 0; i < kSubjects.size(); ++i) {
    const auto &[surface, lemma] = kVerbs[i % kVerbs.size()];
    out.push_back({TopicKind::kTransitive, kSubjects[i], surface, lemma,
                   kObjects[(i * 3) % kObjects.size()]});
  }
  for (size_t i = 0; i < kAdjectives.size(); ++i) {
    out.push_back({TopicKind::kAdjective, kObjects[i], kAdjectives[i],
                   kAdjectives[i], ""});
  }
  out.push_back({TopicKind::kIntransitive, "poacher", "escaped", "escape", ""});
  out.push_back({TopicKind::kIntransitive, "prisoner", "escaped", "escape", ""});
  out.push_back({TopicKind::kTransitive, "marriage", "ruined", "ruin", "miller"});
  return out;
}

struct ChatSpec {
  const char *noun;
  const char *copula;
  const char *adjective;
};

constexpr std::array<ChatSpec, 10> kChat = {{
    {"weather", "is", "fine"},     {"tea", "is", "cold"},
    {"road", "was", "long"},       {"music", "was", "pleasant"},
    {"evening", "is", "warm"},     {"room", "is", "quiet"},
    {"bread", "is", "fresh"},      {"fire", "is", "bright"},
    {"journey", "was", "tiring"},  {"sermon", "was", "dull"},
}};

struct EventSpec {
  const char *noun;
  const char *surface;
  const char *lemma;
};

constexpr std::array<EventSpec, 6> kNews = {{
    {"carriage", "arrived", "arrive"}, {"letter", "came", "come"},
    {"harvest", "ended", "end"},       {"rain", "stopped", "stop"},
    {"ship", "docked", "dock"},        {"bell", "rang", "ring"},
}};

struct FillerSpec {
  const char *noun;
  const char *surface;
  const char *lemma;
};

constexpr std::array<FillerSpec, 6> kFiller = {{
    {"clock", "ticked", "tick"},  {"wind", "rose", "rise"},
    {"fire", "crackled", "crackle"}, {"rain", "fell", "fall"},
    {"night", "deepened", "deepen"}, {"candle", "flickered", "flicker"},
}};

constexpr std::array<std::pair<const char *, const char *>, 4> kGestures = {{
    {"nodded", "nod"}, {"smiled", "smile"}, {"listened", "listen"},
    {"sighed", "sigh"}}};

constexpr std::array<std::pair<const char *, const char *>, 6> kSpeechVerbs = {{
    {"said", "say"},        {"replied", "reply"}, {"answered", "answer"},
    {"cried", "cry"},       {"whispered", "whisper"}, {"remarked", "remark"}}};

// "the <noun>" as a dependent of `head`.
int AddNounPhrase(Sentence *s, const std::string &noun, const std::string &dep,
                  int head) {
  const int det = s->Add("the", "the", "DET", "det");
  const int n = s->Add(noun, noun, "NOUN", dep, head);
  s->Attach(det, n, "det");
  return n;
}

// Content clauses return the sentence-local clause root.
int TopicClause(Sentence *s, const TopicSpec &t) {
  const int subject = AddNounPhrase(s, t.subject, "nsubj", -1);
  int root = 0;
  switch (t.kind) {
    case TopicKind::kTransitive:
      root = s->Add(t.verb_surface, t.verb_lemma, "VERB", "ccomp");
      AddNounPhrase(s, t.object, "obj", root);
      break;
    case TopicKind::kIntransitive:
      root = s->Add(t.verb_surface, t.verb_lemma, "VERB", "ccomp");
      break;
    case TopicKind::kAdjective: {
      const int cop = s->Add("was", "be", "AUX", "cop");
      root = s->Add(t.verb_surface, t.verb_lemma, "ADJ", "ccomp");
      s->Attach(cop, root, "cop");
      break;
    }
  }
  s->Attach(subject, root, "nsubj");
  return root;
}

int ChatClause(Sentence *s, const ChatSpec &c) {
  const int subject = AddNounPhrase(s, c.noun, "nsubj", -1);
  const int cop = s->Add(c.copula, "be", "AUX", "cop");
  const int root = s->Add(c.adjective, c.adjective, "ADJ", "ccomp");
  s->Attach(subject, root, "nsubj");
  s->Attach(cop, root, "cop");
  return root;
}

// "<source> told me that the <noun> <verb>"; the source is a character or
// a blocked pronoun.
int ReportClause(Sentence *s, const Character *source, const EventSpec &news) {
  const int subject = source ? s->AddCharacter(*source, "nsubj")
                             : s->Add("I", "I", "PRON", "nsubj");
  const int verb = s->Add("told", "tell", "VERB", "ccomp");
  s->Attach(subject, verb, "nsubj");
  s->Add("me", "me", "PRON", "iobj", verb);
  const int mark = s->Add("that", "that", "SCONJ", "mark");
  const int n = AddNounPhrase(s, news.noun, "nsubj", -1);
  const int v = s->Add(news.surface, news.lemma, "VERB", "ccomp", verb);
  s->Attach(mark, v, "mark");
  s->Attach(n, v, "nsubj");
  return verb;
}

// "the letter mentioned the <noun>": a report verb with a non-character
// source.
int DocumentClause(Sentence *s, const EventSpec &news) {
  const int subject = AddNounPhrase(s, "letter", "nsubj", -1);
  const int verb = s->Add("mentioned", "mention", "VERB", "ccomp");
  s->Attach(subject, verb, "nsubj");
  AddNounPhrase(s, news.noun, "obj", verb);
  return verb;
}

enum class Content { kTopic, kChat, kReport, kBlockedReport, kDocument };

struct Line {
  bool narration = false;  // a gesture sentence rather than a quote
  int speaker = 0;         // entity
  Content content = Content::kChat;
  int topic = 0;           // index into the catalogue
  int source = -1;         // entity of a reported source
  int variant = 0;         // selects chat, news, gesture and framing
};

using Scene = std::vector<Line>;

class BookBuilder {
 public:
  BookBuilder(std::string id, bool curly, std::vector<Character> cast,
              std::vector<TopicSpec> topics)
      : curly_(curly), cast_(std::move(cast)), topics_(std::move(topics)) {
    book_.book_id = std::move(id);
    book_.gold_quotes.emplace();
  }

  void Gap(int sentences, int variant) {
    std::vector<Sentence> paragraph;
    for (int i = 0; i < sentences; ++i) {
      const auto &[noun, surface, lemma] = kFiller[(variant + i) % kFiller.size()];
      Sentence s;
      const int n = AddNounPhrase(&s, noun, "nsubj", -1);
      const int v = s.Add(surface, lemma, "VERB", "root");
      s.Attach(n, v, "nsubj");
      s.Punct(".", v);
      paragraph.push_back(std::move(s));
    }
    Emit(paragraph);
  }

  // Returns the quote ids of the scene's lines (-1 for narration lines).
  std::vector<int> AddScene(const Scene &scene) {
    std::vector<int> ids;
    for (const Line &line : scene) {
      Sentence s = line.narration ? Gesture(line) : QuoteLine(line);
      ids.push_back(s.quote() ? next_quote_ : -1);
      Emit({s});
    }
    return ids;
  }

  AnnotatedBook Finish() { return std::move(book_); }

 private:
  const Character &Cast(int entity) const { return cast_[entity]; }

  Sentence Gesture(const Line &line) const {
    Sentence s;
    const int name = s.AddCharacter(Cast(line.speaker), "nsubj");
    const auto &[surface, lemma] = kGestures[line.variant % kGestures.size()];
    const int v = s.Add(surface, lemma, "VERB", "root");
    s.Attach(name, v, "nsubj");
    s.Punct(".", v);
    return s;
  }

  int AddContent(Sentence *s, const Line &line) const {
    const EventSpec &news = kNews[line.variant % kNews.size()];
    switch (line.content) {
      case Content::kTopic:
        return TopicClause(s, topics_[line.topic]);
      case Content::kChat:
        return ChatClause(s, kChat[line.variant % kChat.size()]);
      case Content::kReport:
        return ReportClause(s, &Cast(line.source), news);
      case Content::kBlockedReport:
        return ReportClause(s, nullptr, news);
      case Content::kDocument:
        return DocumentClause(s, news);
    }
    return 0;
  }

  Sentence QuoteLine(const Line &line) const {
    const std::string open = curly_ ? "“" : "\"";
    const std::string close = curly_ ? "”" : "\"";
    const auto &[verb_surface, verb_lemma] =
        kSpeechVerbs[line.variant % kSpeechVerbs.size()];
    Sentence s;
    if (line.variant % 3 != 2) {
      // "<content>," said Mr. X.
      const int q0 = s.Punct(open);
      const int root = AddContent(&s, line);
      s.Punct(",", root);
      const int q1 = s.Punct(close);
      const int said = s.Add(verb_surface, verb_lemma, "VERB", "root");
      s.Attach(root, said, "ccomp");
      s.Attach(q0, said, "punct");
      s.Attach(q1, said, "punct");
      s.AddCharacter(Cast(line.speaker), "nsubj", said);
      s.Punct(".", said);
      s.MarkQuote(q0, q1, line.speaker);
    } else {
      // Mr. X said, "<content>."
      const int name = s.AddCharacter(Cast(line.speaker), "nsubj");
      const int said = s.Add(verb_surface, verb_lemma, "VERB", "root");
      s.Attach(name, said, "nsubj");
      s.Punct(",", said);
      const int q0 = s.Punct(open, said);
      const int root = AddContent(&s, line);
      s.Attach(root, said, "ccomp");
      s.Punct(".", root);
      const int q1 = s.Punct(close, said);
      s.MarkQuote(q0, q1, line.speaker);
    }
    return s;
  }

  void Emit(const std::vector<Sentence> &paragraph) {
    for (const Sentence &s : paragraph) {
      const int base = static_cast<int>(book_.tokens.size());
      for (const LocalToken &t : s.tokens()) {
        Token tok;
        tok.token_id = static_cast<int>(book_.tokens.size());
        tok.sentence_id = sentence_;
        tok.paragraph_id = paragraph_;
        tok.surface = t.surface;
        tok.lemma = t.lemma;
        tok.upos = t.upos;
        tok.dep_rel = t.head < 0 ? "root" : t.dep;
        if (t.head >= 0) tok.head = base + t.head;
        book_.tokens.push_back(std::move(tok));
      }
      for (const auto &[start, end, entity] : s.mentions()) {
        Mention m;
        m.mention_id = static_cast<int>(book_.mentions.size());
        m.start_token = base + start;
        m.end_token = base + end;
        m.entity_id = entity;
        for (int t = start; t <= end; ++t) {
          if (t > start) m.text += ' ';
          m.text += s.tokens()[t].surface;
        }
        book_.mentions.push_back(std::move(m));
      }
      if (const auto &q = s.quote()) {
        book_.gold_quotes->push_back(
            {next_quote_++, base + (*q)[0], base + (*q)[1], (*q)[2]});
      }
      ++sentence_;
    }
    ++paragraph_;
  }

  AnnotatedBook book_;
  bool curly_;
  std::vector<Character> cast_;
  std::vector<TopicSpec> topics_;
  int sentence_ = 0;
  int paragraph_ = 0;
  int next_quote_ = 0;
};

std::vector<Character> MakeCast(int book, Rng *rng) {
  static const std::array<const char *, 24> kSurnames = {
      "Ashby",  "Brandon", "Carew",  "Dunmore", "Ellery", "Fairfax",
      "Gresham", "Hollis", "Ingram", "Jessop",  "Keyes",  "Lyle",
      "Marlow", "Norris",  "Osgood", "Pryce",   "Quennell", "Rowe",
      "Sutton", "Thorne",  "Vane",   "Wilde",   "Yardley", "Zouch"};
  static const std::array<const char *, 3> kTitles = {"Mr.", "Mrs.", "Miss"};
  std::vector<int> order(kSurnames.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  rng->Shuffle(&order);
  std::vector<Character> cast;
  for (int e = 0; e < 10; ++e) {
    // Alternate so every book has both genders.
    const char *title = e % 2 == 0 ? "Mr." : kTitles[1 + (e / 2 + book) % 2];
    cast.push_back({e, title, kSurnames[order[e]]});
  }
  return cast;
}

// Picks `n` distinct entities from 0..9.
std::vector<int> Pick(Rng *rng, int n) {
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  rng->Shuffle(&all);
  all.resize(n);
  return all;
}

Line Say(int speaker, Content content, int variant, int topic = 0,
         int source = -1) {
  Line l;
  l.speaker = speaker;
  l.content = content;
  l.variant = variant;
  l.topic = topic;
  l.source = source;
  return l;
}

Line Nod(int entity, int variant) {
  Line l;
  l.narration = true;
  l.speaker = entity;
  l.variant = variant;
  return l;
}

// Characters present in a scene: speakers plus gesture subjects.
std::set<int> Present(const Scene &scene) {
  std::set<int> out;
  for (const Line &l : scene) out.insert(l.speaker);
  return out;
}

}  // namespace

SyntheticCorpus GenerateCorpus(const SyntheticOptions &options) {
  SyntheticCorpus corpus;
  Rng rng(options.seed);
  const auto catalogue = TopicCatalogue();

  for (int b = 0; b < options.books; ++b) {
    const std::string id = fmt::format("synthetic_{:02d}", b + 1);
    corpus.manifest.books.push_back(id);
    auto cast = MakeCast(b, &rng);
    std::vector<TopicSpec> topics = catalogue;
    rng.Shuffle(&topics);
    int next_topic = 0;
    int variant = b;

    BookBuilder builder(id, b % 2 == 1, cast, topics);
    auto gap = [&]() { builder.Gap(3 + rng.Below(2), variant++); };
    auto v = [&]() { return variant++; };
    gap();

    const bool implicit = b < options.books - options.books_without_implicit;
    const int implicit_plants = implicit ? options.implicit_plants_per_book : 0;

    // Interleave implicit and explicit plants with the distractors.
    std::vector<int> units;  // 0 implicit, 1 explicit, 2..5 distractors
    for (int i = 0; i < implicit_plants; ++i) units.push_back(0);
    for (int i = 0; i < options.explicit_plants_per_book; ++i) units.push_back(1);
    for (int d = 2; d <= 5; ++d) units.push_back(d);
    rng.Shuffle(&units);

    for (int unit : units) {
      if (unit == 0) {
        // A voices a topic tuple with B and D present; B repeats it later
        // to listeners who were absent at the origin.
        const auto r = Pick(&rng, 6);
        const int a = r[0], bb = r[1], d = r[2], c1 = r[3], c2 = r[4];
        const int topic = next_topic++;
        Scene origin = {Say(a, Content::kTopic, v(), topic),
                        Say(bb, Content::kChat, v()),
                        Say(d, Content::kChat, v())};
        Scene repeat = {Say(bb, Content::kTopic, v(), topic)};
        switch (rng.Below(3)) {
          case 0:
            repeat.push_back(Say(c1, Content::kChat, v()));
            break;
          case 1:
            repeat.push_back(Say(c1, Content::kChat, v()));
            repeat.push_back(Say(c2, Content::kChat, v()));
            break;
          default:
            repeat.push_back(Nod(c2, v()));
            repeat.push_back(Say(c1, Content::kChat, v()));
            break;
        }
        // Origin characters in the repeat scene are not new listeners.
        if (rng.Below(2) == 0) {
          repeat.push_back(Say(rng.Below(2) == 0 ? a : d, Content::kChat, v()));
        }
        builder.AddScene(origin);
        gap();
        builder.AddScene(repeat);
        gap();
        const auto before = Present(origin);
        for (int c : Present(repeat)) {
          if (c == bb || before.contains(c)) continue;
          corpus.manifest.implicit.emplace(id, a, bb, c,
                                           topics[topic].Key());
        }
      } else if (unit == 1) {
        // B reports what A said to whoever is in the scene.
        const auto r = Pick(&rng, 5);
        const int a = r[0], bb = r[1], x = r[2], y = r[3], z = r[4];
        Scene scene = {Say(x, Content::kChat, v()),
                       Say(bb, Content::kReport, v(), 0, a)};
        switch (rng.Below(3)) {
          case 0:
            scene.push_back(Nod(y, v()));
            scene.push_back(Say(x, Content::kChat, v()));
            break;
          case 1:
            scene.push_back(Say(y, Content::kChat, v()));
            scene.push_back(Say(z, Content::kChat, v()));
            break;
          default:
            // The source is present but is not a listener.
            scene.push_back(Say(a, Content::kChat, v()));
            scene.push_back(Say(y, Content::kChat, v()));
            break;
        }
        const auto ids = builder.AddScene(scene);
        gap();
        for (int c : Present(scene)) {
          if (c == bb || c == a) continue;
          corpus.manifest.explicit_triads.emplace(id, ids[1], a, bb, c);
        }
      } else if (unit == 2) {
        // The same speaker repeats a topic tuple: no propagation.
        const auto r = Pick(&rng, 3);
        const int topic = next_topic++;
        builder.AddScene({Say(r[0], Content::kTopic, v(), topic),
                          Say(r[1], Content::kChat, v())});
        gap();
        builder.AddScene({Say(r[0], Content::kTopic, v(), topic),
                          Say(r[2], Content::kChat, v())});
        gap();
      } else if (unit == 3) {
        // A repeat heard only by characters present at the origin.
        const auto r = Pick(&rng, 3);
        const int topic = next_topic++;
        builder.AddScene({Say(r[0], Content::kTopic, v(), topic),
                          Say(r[1], Content::kChat, v()),
                          Say(r[2], Content::kChat, v())});
        gap();
        builder.AddScene({Say(r[1], Content::kTopic, v(), topic),
                          Say(r[0], Content::kChat, v()),
                          Say(r[2], Content::kChat, v())});
        gap();
      } else if (unit == 4) {
        // Report verbs without a character source.
        const auto r = Pick(&rng, 3);
        builder.AddScene({Say(r[0], Content::kBlockedReport, v()),
                          Say(r[1], Content::kChat, v()),
                          Say(r[2], Content::kDocument, v())});
        gap();
      } else {
        // A report with nobody else to hear it.
        const auto r = Pick(&rng, 2);
        builder.AddScene({Say(r[0], Content::kChat, v()),
                          Say(r[1], Content::kReport, v(), 0, r[0])});
        gap();
      }
    }
    corpus.books.push_back(builder.Finish());
  }
  return corpus;
}

void WriteCorpus(const SyntheticCorpus &corpus,
                 const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  for (const AnnotatedBook &book : corpus.books) {
    BookPaths paths = BookPaths::FromPrefix(dir / book.book_id);
    paths.quotes = dir / (book.book_id + ".quotes.jsonl");
    WriteBook(book, paths);
  }
  WriteFile(dir / "manifest.json", corpus.manifest.ToJson() + "\n");
}

}  // namespace infoprop::synth
