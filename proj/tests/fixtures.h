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

// Small lexicons shared by the tests.

#ifndef CNL_TESTS_FIXTURES_H_
#define CNL_TESTS_FIXTURES_H_

#include <functional>
#include <optional>

#include "cnl/error.h"
#include "cnl/lexicon.h"

namespace cnl::testing {

// Runs f and returns the code of the cnl::Error it throws, if any.
inline std::optional<Error> Thrown(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e;
  }
  return std::nullopt;
}

inline void AddNoun(Lexicon *lex, const char *sg, const char *pl) {
  lex->Add(WordCategory::kNoun,
           {{FormRole::kSingular, sg}, {FormRole::kPlural, pl}});
}

inline void AddName(Lexicon *lex, const char *name,
                    const char *abbreviation = nullptr) {
  WordForms forms{{FormRole::kName, name}};
  if (abbreviation) forms[FormRole::kAbbreviation] = abbreviation;
  lex->Add(WordCategory::kProperName, forms);
}

inline void AddVerb(Lexicon *lex, const char *third, const char *inf,
                    const char *participle = nullptr) {
  WordForms forms{{FormRole::kThirdSingular, third},
                  {FormRole::kInfinitive, inf}};
  if (participle) forms[FormRole::kPastParticiple] = participle;
  lex->Add(WordCategory::kTransitiveVerb, forms);
}

inline void AddOf(Lexicon *lex, const char *noun) {
  lex->Add(WordCategory::kOfConstruct, {{FormRole::kOfNoun, noun}});
}

inline void AddAdjective(Lexicon *lex, const char *adjective) {
  lex->Add(WordCategory::kTransitiveAdjective,
           {{FormRole::kAdjective, adjective}});
}

// One noun, one name, one verb without participle.
inline Lexicon TinyLexicon() {
  Lexicon lex;
  AddNoun(&lex, "city", "cities");
  AddName(&lex, "Zurich");
  AddVerb(&lex, "likes", "like");
  return lex;
}

// Fifteen words covering all five categories, both articles, a
// multiword name with abbreviation and a verb without participle.
inline Lexicon GeographyLexicon() {
  Lexicon lex;
  AddNoun(&lex, "country", "countries");
  AddNoun(&lex, "area", "areas");
  AddNoun(&lex, "city", "cities");
  AddNoun(&lex, "person", "persons");
  AddName(&lex, "Zurich");
  AddName(&lex, "Switzerland");
  AddName(&lex, "Attempto Controlled English", "ACE");
  AddVerb(&lex, "borders", "border", "bordered");
  AddVerb(&lex, "contains", "contain", "contained");
  AddVerb(&lex, "likes", "like");
  AddOf(&lex, "part");
  AddOf(&lex, "owner");
  AddAdjective(&lex, "located in");
  AddAdjective(&lex, "larger than");
  AddNoun(&lex, "student", "students");
  return lex;
}

// Words of the example sentences about universities and books.
inline Lexicon UniversityLexicon() {
  Lexicon lex;
  AddNoun(&lex, "person", "persons");
  AddNoun(&lex, "book", "books");
  AddNoun(&lex, "author", "authors");
  AddNoun(&lex, "lecture", "lectures");
  AddNoun(&lex, "student", "students");
  AddNoun(&lex, "lecturer", "lecturers");
  AddNoun(&lex, "professor", "professors");
  AddNoun(&lex, "assistant", "assistants");
  AddNoun(&lex, "university", "universities");
  AddNoun(&lex, "city", "cities");
  AddName(&lex, "Zurich");
  AddName(&lex, "John");
  AddVerb(&lex, "writes", "write", "written");
  AddVerb(&lex, "attends", "attend", "attended");
  AddVerb(&lex, "employs", "employ", "employed");
  AddVerb(&lex, "contains", "contain", "contained");
  AddVerb(&lex, "likes", "like", "liked");
  AddVerb(&lex, "hates", "hate", "hated");
  AddVerb(&lex, "knows", "know", "known");
  AddVerb(&lex, "studies at", "study at");
  AddAdjective(&lex, "larger than");
  AddAdjective(&lex, "indifferent to");
  return lex;
}

}  // namespace cnl::testing

#endif  // CNL_TESTS_FIXTURES_H_
