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

// Sentence complexity and corpus statistics of a wiki.

#ifndef CNL_CORPUS_H_
#define CNL_CORPUS_H_

#include <vector>

#include "cnl/grammar.h"
#include "cnl/kb.h"

namespace cnl {

enum class Complexity { kSimple, kComplex };

// Complex iff the sentence contains a negation, an implication, a
// disjunction or a cardinality restriction. Looks at function words only.
Complexity ClassifyComplexity(const std::vector<Token> &tokens);

// True for a sentence starting with "a" or "an".
bool StartsWithArticle(const std::vector<Token> &tokens);

struct CorpusStats {
  int S = 0;          // declarative sentences
  int S_plus = 0;     // integrated, not starting with an article
  int S_plus_x = 0;   // complex among S_plus
  int S_e = 0;        // starting with "a" or "an"
  int S_w = 0;        // words of the wrong category; not detectable
  int S_minus = 0;    // lines an import could not parse
  int w = 0, w_p = 0, w_n = 0, w_r = 0, w_v = 0, w_o = 0, w_a = 0;

  // Zero when the denominator is zero.
  double complex_ratio() const;         // S_plus_x / S_plus
  double correct_ratio() const;         // S_plus / S
  double almost_correct_ratio() const;  // (S_plus + S_e) / S
  double sentences_per_word() const;    // S / w
  double correct_per_word() const;      // S_plus / w
};

CorpusStats AnalyzeCorpus(const Kb &kb, int parse_failures = 0);

}  // namespace cnl

#endif  // CNL_CORPUS_H_
