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

// Description-logic layer: concepts, axioms, functional-style output and
// the set semantics of concepts over finite interpretations.

#ifndef CNL_OWL_H_
#define CNL_OWL_H_

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cnl {

// An object property or its inverse.
struct Role {
  std::string name;
  bool inverse = false;

  Role Inverse() const { return Role{name, !inverse}; }
  auto operator<=>(const Role &) const = default;
};

enum class ConceptKind : uint8_t {
  kTop,
  kBottom,
  kNamed,
  kAnd,
  kOr,
  kNot,
  kSome,
  kAll,
  kMin,
  kMax,
  kExact,
  kOneOf,
};

// Immutable concept expression. 'name' holds the class name for kNamed and
// the individual for kOneOf; 'role' and 'number' are used by the
// restrictions; 'args' holds the operands.
struct Concept {
  ConceptKind kind = ConceptKind::kTop;
  std::string name;
  Role role;
  int number = 0;
  std::vector<Concept> args;

  static Concept Top() { return Concept{}; }
  static Concept Bottom();
  static Concept Named(std::string name);
  // And/Or flatten nested operands of the same kind; a single operand is
  // returned as is.
  static Concept And(std::vector<Concept> args);
  static Concept Or(std::vector<Concept> args);
  static Concept Not(Concept c);
  static Concept Some(Role role, Concept c);
  static Concept All(Role role, Concept c);
  static Concept Min(int n, Role role, Concept c);
  static Concept Max(int n, Role role, Concept c);
  static Concept Exact(int n, Role role, Concept c);
  static Concept OneOf(std::string individual);

  auto operator<=>(const Concept &) const = default;
  bool operator==(const Concept &) const = default;
};

enum class AxiomKind : uint8_t {
  kSubClassOf,
  kClassAssertion,
  kPropertyAssertion,
  kSubPropertyOf,
};

struct Axiom {
  AxiomKind kind = AxiomKind::kSubClassOf;
  Concept sub;   // SubClassOf lhs, or the asserted class
  Concept sup;   // SubClassOf rhs
  Role role;     // PropertyAssertion, SubPropertyOf lhs
  Role super_role;
  std::string a, b;  // individuals

  static Axiom SubClassOf(Concept sub, Concept sup);
  static Axiom ClassAssertion(Concept c, std::string a);
  // Stored with a direct role; an inverse role swaps the individuals.
  static Axiom PropertyAssertion(Role role, std::string a, std::string b);
  static Axiom SubPropertyOf(Role sub, Role sup);

  auto operator<=>(const Axiom &) const = default;
  bool operator==(const Axiom &) const = default;
};

// Names occurring in concepts and axioms.
struct Signature {
  std::set<std::string> classes;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  void Add(const Concept &c);
  void Add(const Axiom &a);
  bool operator==(const Signature &) const = default;
};

// Compact functional-style rendering on one line, e.g.
// SubClassOf(IntersectionOf(Class(:person) SomeValuesFrom(ObjectProperty(:write) Class(:book))) Class(:author))
std::string ToFunctional(const Concept &c);
std::string ToFunctional(const Axiom &a);
// The same with one constructor per line, two blanks per level.
std::string ToFunctionalIndented(const Axiom &a);

// Ontology document: prefix and ontology header, declarations for the
// signature, then the axioms in the given order.
std::string OntologyDocument(const std::vector<Axiom> &axioms,
                             const Signature &signature);

// A finite interpretation. Domain elements are 0..size-1.
struct Interpretation {
  int size = 0;
  std::map<std::string, std::vector<bool>> classes;
  std::map<std::string, std::set<std::pair<int, int>>> roles;
  std::map<std::string, int> individuals;

  bool InClass(const std::string &name, int x) const;
  bool Related(const Role &role, int x, int y) const;
};

// Extension of a concept; names missing from the interpretation denote
// the empty set.
std::vector<bool> Extension(const Concept &c, const Interpretation &m);
bool Holds(const Axiom &a, const Interpretation &m);

}  // namespace cnl

#endif  // CNL_OWL_H_
