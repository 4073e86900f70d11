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

// Tableau reasoner for the supported description logic: conjunction,
// disjunction, negation, existential, universal and qualified number
// restrictions over a role hierarchy with inverse roles. Nominals may
// occur in query concepts. Distinct individual names denote distinct
// elements.

#ifndef CNL_REASONER_H_
#define CNL_REASONER_H_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cnl/owl.h"

namespace cnl {

struct KbSnapshot {
  std::vector<Axiom> axioms;
  // Names that exist without occurring in an axiom, e.g. proper names
  // of the lexicon.
  Signature declared;

  Signature signature() const;
};

struct ReasonerOptions {
  // Steps a single call may take before it gives up with
  // Error(kResourceLimit). A step creates a completion graph node or
  // explores an alternative of a nondeterministic rule.
  size_t max_nodes = 100000;
};

// Direct sub- and superclass relation over named classes. Every class is
// a key of 'supers' and 'subs'; equivalent classes share their edges.
struct Hierarchy {
  std::map<std::string, std::set<std::string>> supers;
  std::map<std::string, std::set<std::string>> subs;
  std::map<std::string, std::set<std::string>> equivalents;
  std::set<std::string> unsatisfiable;
};

// Answers reasoning tasks over one snapshot. Not thread-safe; create one
// per thread. Preprocessing happens once in the constructor.
class Reasoner {
 public:
  explicit Reasoner(const KbSnapshot &kb, ReasonerOptions options = {});
  ~Reasoner();
  Reasoner(const Reasoner &) = delete;
  Reasoner &operator=(const Reasoner &) = delete;

  bool Consistent();
  // Satisfiability of a concept with respect to the axioms.
  bool Satisfiable(const Concept &c);
  bool Subsumed(const Concept &c, const Concept &d);
  // Whether the KB entails c(individual).
  bool Instance(const std::string &individual, const Concept &c);

  // Throws Error(kInconsistentKb).
  Hierarchy Classify();
  // Named classes of an individual. Throws kUnknownIndividual or
  // kInconsistentKb.
  std::set<std::string> Realize(const std::string &individual);
  // Individuals of a concept. Throws kInconsistentKb.
  std::set<std::string> Retrieve(const Concept &c);

  // Nodes created so far, over all calls.
  size_t nodes_created() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

enum class Consistency { kConsistent, kInconsistent };

Consistency CheckConsistency(const KbSnapshot &kb,
                             ReasonerOptions options = {});
bool IsSubsumed(const KbSnapshot &kb, const Concept &c, const Concept &d,
                ReasonerOptions options = {});
Hierarchy Classify(const KbSnapshot &kb, ReasonerOptions options = {});
std::set<std::string> Realize(const KbSnapshot &kb,
                              const std::string &individual,
                              ReasonerOptions options = {});
std::set<std::string> Retrieve(const KbSnapshot &kb, const Concept &c,
                               ReasonerOptions options = {});

}  // namespace cnl

#endif  // CNL_REASONER_H_
