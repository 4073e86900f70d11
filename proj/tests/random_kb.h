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

// Random knowledge bases over a small signature.
//
// The default generator stays inside a fragment with a small-model
// property: terminological axioms only restrict (their negation normal
// form has no existential or at-least restriction), and the witnesses
// demanded by assertions plus the individuals fit into kDomain elements.
// Restricting any model to the individuals and those witnesses yields a
// model again, so a consistent KB has a model of at most kDomain elements.

#ifndef CNL_TESTS_RANDOM_KB_H_
#define CNL_TESTS_RANDOM_KB_H_

#include <random>
#include <string>
#include <vector>

#include "cnl/owl.h"
#include "cnl/reasoner.h"

namespace cnl::testing {

class RandomKb {
 public:
  static constexpr int kDomain = 4;

  explicit RandomKb(unsigned seed) : rng_(seed) {}

  // A KB with at most 3 classes, 2 roles, 3 individuals and 8 axioms.
  // With 'general' set, terminological axioms may demand successors, so
  // the small-model property no longer holds.
  KbSnapshot Next(bool general = false) {
    KbSnapshot kb;
    int individuals = Pick(1, 3);
    int budget = kDomain - individuals;
    int axioms = Pick(1, 8);
    while (static_cast<int>(kb.axioms.size()) < axioms) {
      switch (Pick(0, 9)) {
        case 0: case 1: case 2: case 3:
          kb.axioms.push_back(Axiom::SubClassOf(
              general ? Any(2) : CoUniversal(2), general ? Any(2) : Universal(2)));
          break;
        case 4: case 5: case 6: {
          int w = 0;
          Concept c = Generating(2, &w);
          if (w > budget) break;
          budget -= w;
          kb.axioms.push_back(Axiom::ClassAssertion(c, Individual(individuals)));
          break;
        }
        case 7: case 8:
          kb.axioms.push_back(Axiom::PropertyAssertion(
              AnyRole(), Individual(individuals), Individual(individuals)));
          break;
        default:
          kb.axioms.push_back(Axiom::SubPropertyOf(AnyRole(), AnyRole()));
          break;
      }
    }
    budget_ = budget;
    return kb;
  }

  // Witnesses still available after the last call to Next().
  int budget() const { return budget_; }

  // An instance query whose negation, asserted for an individual, keeps
  // the KB inside the fragment when at most 'budget' witnesses remain.
  Concept Query(int budget) {
    switch (Pick(0, budget >= 1 ? 3 : 0)) {
      case 0: return Boolean(1);
      case 1: return Concept::All(AnyRole(), Boolean(1));
      case 2:
        return Concept::Max(Pick(0, budget - 1), AnyRole(), Boolean(0));
      default:
        return Concept::And({Boolean(0), Concept::All(AnyRole(), Boolean(0))});
    }
  }

  int Pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  std::string Individual(int count) {
    static const char *kNames[] = {"a", "b", "c"};
    return kNames[Pick(0, count - 1)];
  }

  Role AnyRole() {
    static const char *kNames[] = {"r", "s"};
    return Role{kNames[Pick(0, 1)], Pick(0, 3) == 0};
  }

  Concept Atom() {
    static const char *kNames[] = {"A", "B", "C"};
    return Concept::Named(kNames[Pick(0, 2)]);
  }

  Concept Boolean(int depth) {
    int k = Pick(0, depth > 0 ? 5 : 2);
    if (k == 0 || k == 1) return Atom();
    if (k == 2) return Concept::Not(Atom());
    if (k == 3) return Concept::And({Boolean(depth - 1), Boolean(depth - 1)});
    if (k == 4) return Concept::Or({Boolean(depth - 1), Boolean(depth - 1)});
    return Pick(0, 1) ? Concept::Top() : Concept::Bottom();
  }

  // Preserved under submodels.
  Concept Universal(int depth) {
    if (depth == 0) return Boolean(0);
    switch (Pick(0, 6)) {
      case 0: return Concept::All(AnyRole(), Universal(depth - 1));
      case 1: return Concept::Max(Pick(0, 2), AnyRole(), Boolean(1));
      case 2: return Concept::And({Universal(depth - 1), Universal(depth - 1)});
      case 3: return Concept::Or({Universal(depth - 1), Universal(depth - 1)});
      case 4: return Concept::Not(CoUniversal(depth - 1));
      default: return Boolean(1);
    }
  }

  // Negation of a universal concept.
  Concept CoUniversal(int depth) {
    if (depth == 0) return Boolean(0);
    switch (Pick(0, 6)) {
      case 0: return Concept::Some(AnyRole(), CoUniversal(depth - 1));
      case 1: return Concept::Min(Pick(1, 2), AnyRole(), Boolean(1));
      case 2: return Concept::And({CoUniversal(depth - 1), CoUniversal(depth - 1)});
      case 3: return Concept::Or({CoUniversal(depth - 1), CoUniversal(depth - 1)});
      case 4: return Concept::Not(Universal(depth - 1));
      default: return Boolean(1);
    }
  }

  // Any concept; *witnesses bounds the elements it may demand besides
  // the one it is asserted for.
  Concept Generating(int depth, int *witnesses) {
    if (depth == 0) return Universal(0);
    switch (Pick(0, 6)) {
      case 0: {
        int inner = 0;
        Concept c = Concept::Some(AnyRole(), Generating(depth - 1, &inner));
        *witnesses += 1 + inner;
        return c;
      }
      case 1: {
        int n = Pick(1, 2);
        *witnesses += n;
        return Concept::Min(n, AnyRole(), Boolean(1));
      }
      case 2:
        *witnesses += 1;
        return Concept::Exact(1, AnyRole(), Boolean(1));
      case 3:
        return Concept::And({Generating(depth - 1, witnesses),
                             Generating(depth - 1, witnesses)});
      case 4:
        return Concept::Or({Generating(depth - 1, witnesses),
                            Generating(depth - 1, witnesses)});
      default:
        return Universal(depth);
    }
  }

  Concept Any(int depth) {
    if (depth == 0) return Boolean(0);
    switch (Pick(0, 8)) {
      case 0: return Concept::Some(AnyRole(), Any(depth - 1));
      case 1: return Concept::All(AnyRole(), Any(depth - 1));
      case 2: return Concept::Min(Pick(1, 2), AnyRole(), Boolean(1));
      case 3: return Concept::Max(Pick(0, 2), AnyRole(), Boolean(1));
      case 4: return Concept::And({Any(depth - 1), Any(depth - 1)});
      case 5: return Concept::Or({Any(depth - 1), Any(depth - 1)});
      case 6: return Concept::Not(Any(depth - 1));
      default: return Boolean(1);
    }
  }

 private:
  std::mt19937 rng_;
  int budget_ = 0;
};

}  // namespace cnl::testing

#endif  // CNL_TESTS_RANDOM_KB_H_
