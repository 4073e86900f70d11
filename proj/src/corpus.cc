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

#include "cnl/corpus.h"

#include <set>
#include <string>

namespace cnl {
namespace {

double Ratio(int a, int b) { return b == 0 ? 0.0 : double(a) / b; }

}  // namespace

Complexity ClassifyComplexity(const std::vector<Token> &tokens) {
  static const std::set<std::string> kMarkers = {
      "not", "no", "every", "if", "or",
      "least", "most", "exactly", "more", "less"};
  for (const Token &t : tokens) {
    if (t.kind == TokenKind::kFunctionWord && kMarkers.count(t.surface)) {
      return Complexity::kComplex;
    }
  }
  return Complexity::kSimple;
}

bool StartsWithArticle(const std::vector<Token> &tokens) {
  return !tokens.empty() && tokens[0].kind == TokenKind::kFunctionWord &&
         (tokens[0].surface == "a" || tokens[0].surface == "an");
}

double CorpusStats::complex_ratio() const { return Ratio(S_plus_x, S_plus); }
double CorpusStats::correct_ratio() const { return Ratio(S_plus, S); }
double CorpusStats::almost_correct_ratio() const {
  return Ratio(S_plus + S_e, S);
}
double CorpusStats::sentences_per_word() const { return Ratio(S, w); }
double CorpusStats::correct_per_word() const { return Ratio(S_plus, w); }

CorpusStats AnalyzeCorpus(const Kb &kb, int parse_failures) {
  CorpusStats stats;
  for (const auto &[id, s] : kb.statements()) {
    if (s.kind != StatementKind::kSentence) continue;
    ++stats.S;
    if (StartsWithArticle(s.tokens)) {
      ++stats.S_e;
    } else if (s.state == StatementState::kIntegrated) {
      ++stats.S_plus;
      if (ClassifyComplexity(s.tokens) == Complexity::kComplex) {
        ++stats.S_plus_x;
      }
    }
  }
  stats.S_minus = parse_failures;
  for (const auto &[id, entry] : kb.lexicon().entries()) {
    switch (entry.category()) {
      case WordCategory::kProperName: ++stats.w_p; break;
      case WordCategory::kNoun: ++stats.w_n; break;
      case WordCategory::kTransitiveVerb: ++stats.w_v; break;
      case WordCategory::kOfConstruct: ++stats.w_o; break;
      case WordCategory::kTransitiveAdjective: ++stats.w_a; break;
    }
  }
  stats.w_r = stats.w_v + stats.w_o + stats.w_a;
  stats.w = stats.w_p + stats.w_n + stats.w_r;
  return stats;
}

}  // namespace cnl
