// Copyright 2026 The cnlwiki Authors.
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

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "cnl/error.h"
#include "cnl/grammar.h"
#include "doctest.h"
#include "fixtures.h"

namespace cnl {
namespace {

using testing::Thrown;

std::vector<std::string> Surfaces(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  for (const Token &t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<Token> Words(const Lexicon &lex, const std::string &text) {
  return Tokenize(text, lex);
}

bool HasKind(const ParseNode &node, RuleKind kind) {
  if (!node.leaf() && node.kind == kind) return true;
  for (const ParseNode &child : node.children) {
    if (HasKind(child, kind)) return true;
  }
  return false;
}

TEST_CASE("tokenizing") {
  Lexicon lex = testing::GeographyLexicon();
  testing::AddNoun(&lex, "language", "languages");

  CHECK(Surfaces(Words(lex, "Every country is an area .")) ==
        std::vector<std::string>{"every", "country", "is", "an", "area", "."});
  // The terminator may be attached to the last word.
  CHECK(Surfaces(Words(lex, "Every country is an area.")) ==
        Surfaces(Words(lex, "Every country is an area .")));

  auto ace = Words(lex, "ACE is a language .");
  const LexEntry *entry = lex.FindByForm("Attempto_Controlled_English");
  REQUIRE(entry);
  CHECK(ace[0].kind == TokenKind::kLexical);
  CHECK(ace[0].entry == entry->id());
  CHECK(ace[0].role == FormRole::kAbbreviation);

  // Multiword forms are matched longest-first, with or without underscore.
  auto located = Words(lex, "Zurich is located in Switzerland.");
  CHECK(Surfaces(located) == std::vector<std::string>{
                                 "Zurich", "is", "located_in", "Switzerland",
                                 "."});
  CHECK(Surfaces(Words(lex, "Zurich is located_in Switzerland.")) ==
        Surfaces(located));
  auto long_name = Words(lex, "Attempto Controlled English is a language.");
  CHECK(long_name[0].surface == "Attempto_Controlled_English");
  CHECK(long_name.size() == 5);

  auto q = Words(lex, "what borders Switzerland?");
  CHECK(q.back().kind == TokenKind::kTerminator);
  CHECK(q.back().surface == "?");

  auto numbers = Words(lex, "Every country contains at least 3 cities.");
  CHECK(numbers[5].kind == TokenKind::kNumber);
  CHECK(numbers[5].number == 3);

  auto e = Thrown([&] { Words(lex, "Every blorp is a thing ."); });
  REQUIRE(e);
  CHECK(e->code() == ErrorCode::kUnknownToken);
  CHECK(e->position() == 1);
  CHECK(e->details() == std::vector<std::string>{"blorp"});
}

TEST_CASE("parsing the example sentences") {
  Lexicon lex = testing::UniversityLexicon();

  ParseTree author =
      Parse(Words(lex, "Every person who writes a book is an author ."), lex);
  CHECK_FALSE(author.interrogative());
  REQUIRE(author.root.children.size() == 2);
  const ParseNode &statement = author.root.children[0];
  CHECK(statement.kind == RuleKind::kStatement);
  CHECK(HasKind(statement.children[0], RuleKind::kNbarRelative));
  CHECK_FALSE(HasKind(statement.children[1], RuleKind::kNbarRelative));

  ParseTree lecture = Parse(
      Words(lex, "Every lecture is attended by at least 3 students ."), lex);
  CHECK(HasKind(lecture.root, RuleKind::kVpPassive));
  CHECK(HasKind(lecture.root, RuleKind::kNpCardinal));
  CHECK(Verbalize(lecture) ==
        "Every lecture is attended by at least 3 students.");

  const char *examples[] = {
      "Every lecture is attended by at least 3 students.",
      "Every lecturer is a professor or is an assistant.",
      "Every professor is employed by a university.",
      "If X contains Y then X is larger_than Y.",
      "If somebody X likes Y then X does not hate Y.",
      "If X is a student and a professor knows X then the professor hates X "
      "or likes X or is indifferent_to X.",
      "A student studies_at a university.",
      "Zurich is a city.",
  };
  for (const char *text : examples) {
    INFO(text);
    CHECK(CountParses(Words(lex, text), lex) == 1);
    CHECK(Verbalize(Parse(Words(lex, text), lex)) == text);
  }

  ParseTree question = Parse(Words(lex, "what contains Zurich ?"), lex);
  CHECK(question.interrogative());
}

TEST_CASE("syntax errors report the position and the menu") {
  Lexicon lex = testing::UniversityLexicon();
  auto tokens = Words(lex, "Every is a .");
  auto e = Thrown([&] { Parse(tokens, lex); });
  REQUIRE(e);
  CHECK(e->code() == ErrorCode::kSyntaxError);
  CHECK(e->position() == 1);
  std::vector<Token> prefix(tokens.begin(), tokens.begin() + 1);
  CHECK(e->details() == Surfaces(NextTokens(prefix, lex).AllTokens()));

  auto incomplete = Thrown([&] { Parse(Words(lex, "Every person"), lex); });
  REQUIRE(incomplete);
  CHECK(incomplete->position() == 2);

  auto dead = Thrown([&] { NextTokens(Words(lex, "Every is"), lex); });
  REQUIRE(dead);
  CHECK(dead->code() == ErrorCode::kDeadEnd);
}

TEST_CASE("menu for the empty prefix") {
  Lexicon lex = testing::GeographyLexicon();
  Grammar grammar({3});
  CompletionMenu menu = NextTokens({}, lex, grammar);
  for (const char *w : {"every", "a", "an", "no", "if", "somebody",
                        "something", "Zurich", "Switzerland",
                        "Attempto_Controlled_English", "ACE", "X", "Y", "Z",
                        "what", "who", "which"}) {
    INFO(w);
    CHECK(menu.Contains(w));
  }
  CHECK_FALSE(menu.Contains("country"));
  CHECK_FALSE(menu.Contains("."));

  // Oracle: first tokens of all sentences up to nine tokens, which is
  // enough for every sentence opener to occur ("if" needs nine).
  std::set<std::string> firsts;
  EnumerateSentences(
      lex, 9,
      [&](const std::vector<Token> &s) {
        firsts.insert(s[0].surface);
        return true;
      },
      grammar);
  auto offered = Surfaces(menu.AllTokens());
  CHECK(std::set<std::string>(offered.begin(), offered.end()) == firsts);
  CHECK(offered.size() == firsts.size());

  std::vector<std::string> labels;
  for (const MenuGroup &g : menu.groups) labels.push_back(g.label);
  CHECK(labels == std::vector<std::string>{"function word", "proper name",
                                           "variable"});
}

TEST_CASE("menus inside a sentence") {
  Lexicon lex = testing::GeographyLexicon();
  CompletionMenu is = NextTokens(Words(lex, "every city that is"), lex);
  for (const char *w :
       {"located_in", "larger_than", "bordered", "contained", "a", "an", "not"}) {
    INFO(w);
    CHECK(is.Contains(w));
  }
  // No participle was entered for "likes".
  CHECK_FALSE(is.Contains("liked"));

  CompletionMenu country = NextTokens(Words(lex, "every country"), lex);
  for (const char *w :
       {"is", "borders", "contains", "likes", "that", "who", "which", "does"}) {
    INFO(w);
    CHECK(country.Contains(w));
  }
  CHECK_FALSE(country.Contains("border"));
  CHECK_FALSE(country.Contains("are"));

  CompletionMenu plural = NextTokens(Words(lex, "at least 2 countries"), lex);
  CHECK(plural.Contains("border"));
  CHECK(plural.Contains("are"));
  CHECK_FALSE(plural.Contains("borders"));

  CompletionMenu articles = NextTokens(Words(lex, "Zurich is a"), lex);
  CHECK(articles.Contains("country"));
  CHECK(articles.Contains("part"));
  CHECK_FALSE(articles.Contains("area"));
  CHECK_FALSE(articles.Contains("owner"));

  CompletionMenu numbers = NextTokens(Words(lex, "Zurich borders at most"), lex);
  REQUIRE(numbers.groups.size() == 1);
  CHECK(numbers.groups[0].label == "number");
  CHECK(numbers.groups[0].tokens.size() == 100);
  CHECK(numbers.groups[0].tokens[0].number == 1);
  CHECK(numbers.groups[0].tokens[9].number == 10);

  CompletionMenu end = NextTokens(Words(lex, "Zurich borders Switzerland"), lex);
  CHECK(end.Contains("."));
  CHECK(end.Contains("and"));
  CHECK(end.Contains("or"));
  CHECK_FALSE(end.Contains("?"));
}

TEST_CASE("underscores are kept in display") {
  Lexicon lex = testing::UniversityLexicon();
  ParseTree tree = Parse(Words(lex, "If X contains Y then X is larger than Y."), lex);
  CHECK(Verbalize(tree) == "If X contains Y then X is larger_than Y.");
}

TEST_CASE("enumerating a tiny lexicon") {
  Lexicon lex = testing::TinyLexicon();
  Grammar grammar({3});
  std::vector<std::string> sentences;
  auto collect = [&](const std::vector<Token> &t) {
    sentences.push_back(VerbalizeTokens(t));
    return true;
  };
  EnumerateSentences(lex, 0, collect, grammar);
  CHECK(sentences.empty());

  // Up to four tokens only "NP likes NP ." and questions fit. Subject and
  // object noun phrases: Zurich, X, Y, Z, somebody, something and three
  // pronouns each. Questions: what/who likes NP, what/who is Zurich.
  EnumerateSentences(lex, 4, collect, grammar);
  CHECK(sentences.size() == 9 * 9 + 2 * 9 + 2);
  std::set<std::string> unique(sentences.begin(), sentences.end());
  CHECK(unique.size() == sentences.size());
  CHECK(unique.count("Zurich likes Zurich."));
  CHECK(unique.count("He likes him."));
  CHECK(unique.count("Who is Zurich?"));
  CHECK_FALSE(unique.count("He likes he."));

  sentences.clear();
  EnumerateSentences(lex, 5, collect, grammar);
  unique = std::set<std::string>(sentences.begin(), sentences.end());
  CHECK(unique.count("Zurich is a city."));
  CHECK(unique.count("Every city likes Zurich."));
  CHECK(unique.count("Which city likes X?"));
  CHECK_FALSE(unique.count("Zurich is liked by X."));
}

// Walks every prefix reachable through menus up to 'depth' tokens and
// compares the chart against the top-down recognizer at each step.
void CompareWithRecognizer(EarleyChart &chart, TopDownRecognizer &oracle,
                           int depth, int *checked) {
  ++*checked;
  REQUIRE(chart.Expected() == oracle.Expected());
  REQUIRE(chart.MinRemaining() == oracle.MinRemaining());
  if (depth == 0) return;
  std::vector<int> next;
  chart.ExpectedTokens(&next);
  for (int i : next) {
    const Token &t = chart.Vocabulary()[i];
    REQUIRE(chart.PushVocabulary(i));
    REQUIRE(oracle.Push(t));
    CompareWithRecognizer(chart, oracle, depth - 1, checked);
    chart.Pop();
    oracle.Pop();
  }
}

TEST_CASE("chart lookahead agrees with the top-down recognizer") {
  Lexicon lex = testing::TinyLexicon();
  testing::AddOf(&lex, "owner");
  testing::AddAdjective(&lex, "larger than");
  Grammar grammar({2});
  EarleyChart chart(grammar, lex);
  TopDownRecognizer oracle(grammar, lex);
  int checked = 0;
  CompareWithRecognizer(chart, oracle, 6, &checked);
  CHECK(checked > 10000);
}

// Collects all sentences reachable by menu choices, pruned by the
// chart's lower bound on the remaining length.
void WalkMenus(EarleyChart &chart, std::vector<int> *prefix, int max,
               std::set<std::vector<int>> *out) {
  std::vector<int> next;
  chart.ExpectedTokens(&next);
  for (int i : next) {
    REQUIRE(chart.PushVocabulary(i));
    prefix->push_back(i);
    if (chart.Complete()) {
      out->insert(*prefix);
    } else if (static_cast<int>(prefix->size()) + chart.MinRemaining() <= max) {
      WalkMenus(chart, prefix, max, out);
    }
    prefix->pop_back();
    chart.Pop();
  }
}

TEST_CASE("prediction is sound and complete, parses are unique") {
  Lexicon lex = testing::GeographyLexicon();
  Grammar grammar({2});
  EarleyChart chart(grammar, lex);
  std::map<std::string, int> index;
  for (size_t i = 0; i < chart.Vocabulary().size(); ++i) {
    index[chart.Vocabulary()[i].surface] = static_cast<int>(i);
  }

  const int kMax = 7;
  std::set<std::vector<int>> enumerated;
  size_t emitted = 0;
  EnumerateSentences(
      lex, kMax,
      [&](const std::vector<Token> &s) {
        ++emitted;
        std::vector<int> key;
        for (const Token &t : s) key.push_back(index.at(t.surface));
        enumerated.insert(key);
        return true;
      },
      grammar);
  CHECK(enumerated.size() == emitted);

  std::set<std::vector<int>> walked;
  std::vector<int> prefix;
  WalkMenus(chart, &prefix, kMax, &walked);
  CHECK(walked.size() == enumerated.size());
  CHECK(walked == enumerated);

  int ambiguous = 0, round_trip = 0;
  for (const auto &key : enumerated) {
    std::vector<Token> tokens;
    for (int i : key) tokens.push_back(chart.Vocabulary()[i]);
    if (CountParses(tokens, lex, grammar) != 1) ++ambiguous;
    ParseTree tree = Parse(tokens, lex, grammar);
    if (!(tree.Tokens() == tokens) ||
        !(Tokenize(Verbalize(tree), lex, grammar) == tokens)) {
      ++round_trip;
    }
  }
  CHECK(ambiguous == 0);
  CHECK(round_trip == 0);
}

TEST_CASE("leftmost derivations never repeat a terminal string") {
  Lexicon lex = testing::GeographyLexicon();
  Grammar grammar({2});
  std::set<std::vector<int>> seen;
  size_t derivations = 0;
  EnumerateTerminalSequences(
      lex, 8,
      [&](const std::vector<int> &s) {
        ++derivations;
        seen.insert(s);
        return true;
      },
      grammar);
  CHECK(derivations > 1000);
  CHECK(seen.size() == derivations);
}

TEST_CASE("charts can be extended and shrunk") {
  Lexicon lex = testing::GeographyLexicon();
  EarleyChart chart(Grammar::Default(), lex);
  auto tokens = Words(lex, "Every country borders Switzerland .");
  CompletionMenu empty = chart.Menu();
  for (const Token &t : tokens) REQUIRE(chart.Push(t));
  CHECK(chart.Complete());
  CHECK(chart.MinRemaining() == 0);
  CHECK(chart.CountTrees() == 1);
  CHECK_FALSE(chart.Push(tokens[0]));
  CHECK(chart.size() == tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) chart.Pop();
  CHECK(chart.size() == 0);
  CHECK(Surfaces(chart.Menu().AllTokens()) == Surfaces(empty.AllTokens()));
  CHECK(chart.MinRemaining() == 4);
}

}  // namespace
}  // namespace cnl
