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

// Meaning of sentences: discourse representation structures, their
// first-order reading, the mapping to OWL axioms and question concepts.

#ifndef CNL_SEMANTICS_H_
#define CNL_SEMANTICS_H_

#include <optional>
#include <string>
#include <vector>

#include "cnl/grammar.h"
#include "cnl/lexicon.h"
#include "cnl/owl.h"

namespace cnl {

// A discourse referent or a proper name.
struct DrsTerm {
  int var = -1;      // referent number, or -1 for a name
  std::string name;  // canonical proper name when var < 0

  static DrsTerm Var(int v) { return DrsTerm{v, {}}; }
  static DrsTerm Named(std::string n) { return DrsTerm{-1, std::move(n)}; }
  bool named() const { return var < 0; }
  bool operator==(const DrsTerm &) const = default;
};

enum class CardOp : uint8_t { kAtLeast, kAtMost, kExactly };

struct Drs;

struct DrsCondition {
  enum Kind : uint8_t {
    kPred1,  // predicate(a)
    kPred2,  // predicate(a, b)
    kNeg,    // not boxes[0]
    kImp,    // boxes[0] => boxes[1]
    kOr,     // boxes[0] v boxes[1] v ...
    kCard,   // op number var: boxes[0]
  };
  Kind kind = kPred1;
  std::string predicate;
  DrsTerm a, b;
  std::vector<Drs> boxes;
  CardOp op = CardOp::kAtLeast;
  int number = 0;
  int var = -1;

  bool operator==(const DrsCondition &) const;
};

struct Drs {
  std::vector<int> referents;
  std::vector<DrsCondition> conditions;

  bool operator==(const Drs &) const;
};

// Predicate symbols: the lemma of the entry; of-constructs get "_of".
std::string PredicateSymbol(const LexEntry &entry);

// Builds the Drs of a declarative sentence. Anaphors are resolved within
// the sentence. Throws Error(kUnresolvedAnaphor) or
// Error(kInaccessibleAntecedent) with the token index.
Drs BuildDrs(const ParseTree &tree, const Lexicon &lexicon);

// Debug rendering, e.g. [A,B: person(A) write(A,B) book(B)] => [author(A)].
std::string DrsToString(const Drs &drs);

// ---------------------------------------------------------------------------
// First-order formulas.

struct Fol {
  enum Kind : uint8_t {
    kAtom,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kForall,
    kExists,
    kCount,  // exists>=n / exists<=n / exists=n
  };
  Kind kind = kAtom;
  std::string predicate;
  std::vector<DrsTerm> args;  // atom arguments
  int var = -1;               // bound variable of quantifiers
  CardOp op = CardOp::kAtLeast;
  int number = 0;
  std::vector<Fol> sub;
};

Fol DrsToFol(const Drs &drs);

// ASCII rendering with variables renamed A, B, C ... in order of
// appearance: forall A forall B (person(A) & write(A,B) & book(B) -> author(A))
std::string FolToString(const Fol &f);

// Truth in a finite interpretation: unary predicates are classes, binary
// ones roles and names individuals.
bool EvaluateFol(const Fol &f, const Interpretation &m);

// Free variables (should be empty for translated sentences).
std::vector<int> FreeVariables(const Fol &f);

// ---------------------------------------------------------------------------
// OWL mapping.

struct Expressibility {
  bool in_owl = false;
  std::vector<Axiom> axioms;  // when in_owl
  std::string reason;         // when not

  static Expressibility InOwl(std::vector<Axiom> axioms) {
    return Expressibility{true, std::move(axioms), {}};
  }
  static Expressibility OutsideOwl(std::string reason) {
    return Expressibility{false, {}, std::move(reason)};
  }
};

// Maps tree-shaped structures to axioms; everything else is OutsideOwl
// with a reason.
Expressibility MapToOwl(const Drs &drs);

struct Query {
  enum Mode : uint8_t { kIndividual, kClass };
  Mode mode = kClass;
  std::string individual;  // kIndividual
  Concept target;          // kClass

  bool operator==(const Query &) const = default;
};

// Throws Error(kUnsupportedQuestion) for questions whose wh-phrase does
// not roll up into a concept.
Query TranslateQuestion(const ParseTree &tree, const Lexicon &lexicon);

// For a declarative sentence starting with "a" or "an", the same tokens
// starting with "every"; otherwise nothing.
std::optional<std::vector<Token>> SuggestEvery(
    const std::vector<Token> &tokens, const Lexicon &lexicon,
    const Grammar &grammar = Grammar::Default());

}  // namespace cnl

#endif  // CNL_SEMANTICS_H_
