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

#include <string>

#include "cnl/error.h"
#include "cnl/finite_model.h"
#include "cnl/owl.h"
#include "cnl/reasoner.h"
#include "doctest.h"
#include "fixtures.h"
#include "random_kb.h"

namespace cnl {
namespace {

using testing::Thrown;

Concept N(const char *name) { return Concept::Named(name); }
Role R(const char *name) { return Role{name}; }

bool OracleConsistent(const KbSnapshot &kb, int domain = 4) {
  return FiniteModelCheck(kb, domain).has_value();
}

TEST_CASE("consistency of assertions and disjointness") {
  KbSnapshot kb;
  kb.axioms = {Axiom::SubClassOf(N("A"), Concept::Not(N("B"))),
               Axiom::ClassAssertion(N("A"), "a")};
  CHECK(CheckConsistency(kb) == Consistency::kConsistent);
  kb.axioms.push_back(Axiom::ClassAssertion(N("B"), "a"));
  CHECK(CheckConsistency(kb) == Consistency::kInconsistent);
  CHECK_FALSE(OracleConsistent(kb));
  // Disjunction that only one branch satisfies.
  kb.axioms = {Axiom::ClassAssertion(Concept::Or({N("A"), N("B")}), "a"),
               Axiom::ClassAssertion(Concept::Not(N("A")), "a"),
               Axiom::SubClassOf(N("B"), N("C"))};
  Reasoner r(kb);
  CHECK(r.Consistent());
  CHECK(r.Instance("a", N("C")));
  CHECK_FALSE(r.Instance("a", N("A")));
}

TEST_CASE("distinct names and number restrictions") {
  KbSnapshot kb;
  kb.axioms = {
      Axiom::ClassAssertion(Concept::Max(1, R("r"), Concept::Top()), "a"),
      Axiom::PropertyAssertion(R("r"), "a", "b"),
      Axiom::PropertyAssertion(R("r"), "a", "c")};
  CHECK(CheckConsistency(kb) == Consistency::kInconsistent);
  CHECK_FALSE(OracleConsistent(kb));

  // The anonymous successor has to be b.
  kb.axioms = {
      Axiom::ClassAssertion(Concept::Max(1, R("r"), Concept::Top()), "a"),
      Axiom::ClassAssertion(Concept::Some(R("r"), N("A")), "a"),
      Axiom::PropertyAssertion(R("r"), "a", "b")};
  Reasoner r(kb);
  CHECK(r.Consistent());
  CHECK(r.Instance("b", N("A")));
  kb.axioms.push_back(Axiom::ClassAssertion(Concept::Not(N("A")), "b"));
  CHECK(CheckConsistency(kb) == Consistency::kInconsistent);

  kb.axioms = {
      Axiom::ClassAssertion(Concept::Min(2, R("r"), N("A")), "a"),
      Axiom::ClassAssertion(Concept::Max(2, R("r"), Concept::Top()), "a"),
      Axiom::ClassAssertion(Concept::Some(R("r"), Concept::Not(N("A"))),
                            "a")};
  CHECK(CheckConsistency(kb) == Consistency::kInconsistent);
  CHECK_FALSE(OracleConsistent(kb, 5));
  kb.axioms.pop_back();
  CHECK(CheckConsistency(kb) == Consistency::kConsistent);
  Reasoner q(kb);
  CHECK(q.Instance("a", Concept::Exact(2, R("r"), N("A"))));
  CHECK(q.Instance("a", Concept::All(R("r"), N("A"))));
}

TEST_CASE("subsumption through restrictions, inverses and role hierarchy") {
  KbSnapshot kb;
  kb.axioms = {
      Axiom::SubClassOf(
          Concept::And({N("person"), Concept::Some(R("write"), N("book"))}),
          N("author")),
      Axiom::SubClassOf(N("student"), N("person"))};
  Concept writing_student =
      Concept::And({N("student"), Concept::Some(R("write"), N("book"))});
  CHECK(IsSubsumed(kb, writing_student, N("author")));
  CHECK_FALSE(IsSubsumed(kb, N("student"), N("author")));

  kb.axioms = {Axiom::SubClassOf(N("A"), Concept::Some(R("r"), N("B"))),
               Axiom::SubClassOf(N("B"), Concept::All(R("r").Inverse(), N("C")))};
  CHECK(IsSubsumed(kb, N("A"), N("C")));
  CHECK_FALSE(IsSubsumed(kb, N("C"), N("A")));

  kb.axioms = {Axiom::SubPropertyOf(R("r"), R("s")),
               Axiom::SubClassOf(N("A"), Concept::Some(R("r"), N("B")))};
  CHECK(IsSubsumed(kb, N("A"), Concept::Some(R("s"), N("B"))));
  CHECK_FALSE(IsSubsumed(kb, Concept::Some(R("s"), N("B")), N("A")));
  // A general axiom whose left side is not a class name.
  kb.axioms = {Axiom::SubClassOf(Concept::Some(R("r"), N("B")), N("A")),
               Axiom::SubClassOf(Concept::Not(N("A")), N("D"))};
  CHECK(IsSubsumed(kb, Concept::Some(R("r"), N("B")), N("A")));
  CHECK(IsSubsumed(kb, Concept::Top(), Concept::Or({N("A"), N("D")})));
  CHECK_FALSE(IsSubsumed(kb, Concept::Top(), N("A")));
}

TEST_CASE("cyclic axioms terminate") {
  KbSnapshot kb;
  kb.axioms = {Axiom::SubClassOf(
      N("A"), Concept::And({Concept::Some(R("r"), N("A")),
                            Concept::All(R("r").Inverse(), N("A"))}))};
  Reasoner r(kb);
  CHECK(r.Satisfiable(N("A")));
  CHECK_FALSE(r.Satisfiable(
      Concept::And({N("A"), Concept::All(R("r"), Concept::Not(N("A")))})));

  // Only infinite models: an r-chain from a without predecessors where
  // nothing has two predecessors.
  kb.axioms = {
      Axiom::SubClassOf(N("A"), Concept::Some(R("r"), N("A"))),
      Axiom::SubClassOf(Concept::Top(),
                        Concept::Max(1, R("r").Inverse(), Concept::Top())),
      Axiom::ClassAssertion(
          Concept::And({N("A"), Concept::All(R("r").Inverse(),
                                             Concept::Bottom())}),
          "a")};
  CHECK(CheckConsistency(kb) == Consistency::kConsistent);
  CHECK_FALSE(OracleConsistent(kb, 6));
}

TEST_CASE("classification") {
  KbSnapshot kb;
  kb.axioms = {
      Axiom::SubClassOf(N("student"), N("person")),
      Axiom::SubClassOf(N("professor"), N("lecturer")),
      Axiom::SubClassOf(N("lecturer"), N("person")),
      Axiom::SubClassOf(N("person"), N("human")),
      Axiom::SubClassOf(N("human"), N("person")),
      Axiom::SubClassOf(N("lecturer"),
                        Concept::Some(R("employ").Inverse(), N("university"))),
      Axiom::SubClassOf(Concept::Some(R("employ"), Concept::Top()),
                        N("employer")),
      Axiom::SubClassOf(N("ghost"),
                        Concept::And({N("student"), Concept::Not(N("person"))}))};
  Hierarchy h = Classify(kb);
  CHECK(h.unsatisfiable == std::set<std::string>{"ghost"});
  CHECK(h.supers.at("student") == std::set<std::string>{"human", "person"});
  CHECK(h.supers.at("professor") == std::set<std::string>{"lecturer"});
  CHECK(h.subs.at("person") ==
        std::set<std::string>{"lecturer", "student"});
  CHECK(h.equivalents.at("person") == std::set<std::string>{"human"});
  CHECK(h.supers.at("university") == std::set<std::string>{});
  // Universities employ someone only if some lecturer exists; not entailed.
  CHECK_FALSE(IsSubsumed(kb, N("university"), N("employer")));
  CHECK(IsSubsumed(kb, Concept::Some(R("employ"), N("lecturer")),
                   N("employer")));

  kb.axioms.push_back(Axiom::ClassAssertion(N("ghost"), "g"));
  auto e = Thrown([&] { Classify(kb); });
  REQUIRE(e);
  CHECK(e->code() == ErrorCode::kInconsistentKb);
}

TEST_CASE("realization and retrieval") {
  KbSnapshot kb;
  kb.axioms = {
      Axiom::SubClassOf(N("city"), N("area")),
      Axiom::SubClassOf(N("country"), N("area")),
      Axiom::ClassAssertion(N("city"), "Zurich"),
      Axiom::ClassAssertion(N("country"), "Switzerland"),
      Axiom::ClassAssertion(N("country"), "Germany"),
      Axiom::ClassAssertion(N("country"), "France"),
      Axiom::PropertyAssertion(R("border"), "Germany", "Switzerland"),
      Axiom::PropertyAssertion(R("border"), "France", "Switzerland"),
      Axiom::PropertyAssertion(R("border"), "Switzerland", "Austria"),
      Axiom::PropertyAssertion(R("contain"), "Switzerland", "Zurich")};
  Reasoner r(kb);
  CHECK(r.Realize("Zurich") == std::set<std::string>{"area", "city"});
  CHECK(r.Realize("Austria").empty());
  Concept borders_ch =
      Concept::Some(R("border"), Concept::OneOf("Switzerland"));
  CHECK(r.Retrieve(borders_ch) ==
        std::set<std::string>{"France", "Germany"});
  CHECK(r.Retrieve(Concept::Some(R("contain").Inverse(), N("country"))) ==
        std::set<std::string>{"Zurich"});
  CHECK(r.Retrieve(Concept::Some(R("border").Inverse(),
                                 Concept::OneOf("Switzerland"))) ==
        std::set<std::string>{"Austria"});
  CHECK(r.Retrieve(Concept::OneOf("Germany")) ==
        std::set<std::string>{"Germany"});
  // An unknown individual inside a query is fine.
  CHECK(r.Retrieve(Concept::Some(R("border"), Concept::OneOf("Mars")))
            .empty());

  // Bordering is symmetric once declared so.
  kb.axioms.push_back(Axiom::SubPropertyOf(R("border"), R("border").Inverse()));
  CHECK(Retrieve(kb, borders_ch) ==
        std::set<std::string>{"Austria", "France", "Germany"});

  auto e = Thrown([&] { r.Realize("Bern"); });
  REQUIRE(e);
  CHECK(e->code() == ErrorCode::kUnknownIndividual);
  kb.declared.individuals.insert("Bern");
  CHECK(Realize(kb, "Bern").empty());

  kb.axioms.push_back(
      Axiom::ClassAssertion(Concept::Not(N("area")), "Zurich"));
  e = Thrown([&] { Retrieve(kb, N("city")); });
  REQUIRE(e);
  CHECK(e->code() == ErrorCode::kInconsistentKb);
}

TEST_CASE("small worked examples") {
  KbSnapshot empty;
  CHECK(CheckConsistency(empty) == Consistency::kConsistent);
  auto singleton = FiniteModelCheck(empty, 1);
  REQUIRE(singleton);
  CHECK(singleton->size == 1);
  CHECK(IsSubsumed(empty, N("city"), N("city")));
  CHECK(Classify(empty).supers.empty());

  KbSnapshot kb;
  kb.axioms = {Axiom::SubClassOf(N("country"), N("area")),
               Axiom::SubClassOf(N("canton"), N("area"))};
  CHECK(IsSubsumed(kb, N("country"), N("area")));
  CHECK_FALSE(IsSubsumed(kb, N("country"), N("canton")));
  Hierarchy h = Classify(kb);
  CHECK(h.subs.at("area") == std::set<std::string>{"canton", "country"});
  CHECK(h.supers.at("area").empty());

  kb.axioms = {Axiom::SubPropertyOf(R("contain"), R("larger_than")),
               Axiom::PropertyAssertion(R("contain"), "A", "B")};
  CHECK(Retrieve(kb, Concept::Some(R("larger_than"), Concept::OneOf("B"))) ==
        std::set<std::string>{"A"});
  CHECK(Retrieve(kb, Concept::And({N("x"), Concept::Not(N("x"))})).empty());

  // The author axiom entails author(John): no model of its negation.
  kb.axioms = {
      Axiom::SubClassOf(
          Concept::And({N("person"), Concept::Some(R("write"), N("book"))}),
          N("author")),
      Axiom::PropertyAssertion(R("write"), "John", "Book1"),
      Axiom::ClassAssertion(N("person"), "John"),
      Axiom::ClassAssertion(N("book"), "Book1")};
  CHECK(Realize(kb, "John") == std::set<std::string>{"author", "person"});
  kb.axioms.push_back(
      Axiom::ClassAssertion(Concept::Not(N("author")), "John"));
  CHECK_FALSE(FiniteModelCheck(kb, 4));
  CHECK(CheckConsistency(kb) == Consistency::kInconsistent);

  kb.axioms = {Axiom::ClassAssertion(N("city"), "Zurich"),
               Axiom::SubClassOf(N("city"), Concept::Not(N("country"))),
               Axiom::ClassAssertion(N("country"), "Zurich")};
  CHECK(CheckConsistency(kb) == Consistency::kInconsistent);
}

TEST_CASE("monotonicity, duality and hierarchy coherence") {
  testing::RandomKb gen(23);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    KbSnapshot kb = gen.Next();
    INFO(OntologyDocument(kb.axioms, kb.signature()));
    Reasoner r(kb);
    if (!r.Consistent()) {
      KbSnapshot more = gen.Next();
      for (const Axiom &a : more.axioms) {
        KbSnapshot bigger = kb;
        bigger.axioms.push_back(a);
        REQUIRE(CheckConsistency(bigger) == Consistency::kInconsistent);
      }
      continue;
    }
    Signature sig = kb.signature();
    for (const std::string &ind : sig.individuals) {
      std::set<std::string> classes = r.Realize(ind);
      for (const std::string &c : sig.classes) {
        bool member = r.Retrieve(N(c.c_str())).count(ind) > 0;
        REQUIRE(member == (classes.count(c) > 0));
      }
    }
    Hierarchy h = r.Classify();
    for (const std::string &c : sig.classes) {
      if (h.unsatisfiable.count(c)) continue;
      for (const std::string &d : sig.classes) {
        if (c == d || h.unsatisfiable.count(d)) continue;
        bool sub = r.Subsumed(N(c.c_str()), N(d.c_str()));
        bool back = r.Subsumed(N(d.c_str()), N(c.c_str()));
        bool between = false;
        for (const std::string &e : sig.classes) {
          if (e == c || e == d || h.unsatisfiable.count(e)) continue;
          bool ce = r.Subsumed(N(c.c_str()), N(e.c_str()));
          bool ec = r.Subsumed(N(e.c_str()), N(c.c_str()));
          bool ed = r.Subsumed(N(e.c_str()), N(d.c_str()));
          bool de = r.Subsumed(N(d.c_str()), N(e.c_str()));
          between = between || (ce && !ec && ed && !de);
        }
        bool edge = h.supers.at(c).count(d) > 0;
        REQUIRE(edge == (sub && !back && !between));
        REQUIRE((h.equivalents[c].count(d) > 0) == (sub && back));
      }
    }
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("node limit") {
  KbSnapshot kb;
  kb.axioms = {Axiom::SubClassOf(N("A"), Concept::Some(R("r"), N("B"))),
               Axiom::SubClassOf(N("B"), Concept::Some(R("r"), N("C"))),
               Axiom::SubClassOf(N("C"), Concept::Some(R("r"), N("D"))),
               Axiom::ClassAssertion(N("A"), "a")};
  auto e = Thrown([&] { CheckConsistency(kb, ReasonerOptions{2}); });
  REQUIRE(e);
  CHECK(e->code() == ErrorCode::kResourceLimit);
  CHECK(CheckConsistency(kb, ReasonerOptions{4}) == Consistency::kConsistent);
}

TEST_CASE("finite model search") {
  KbSnapshot kb;
  kb.axioms = {
      Axiom::SubClassOf(N("A"), Concept::Some(R("r"), N("B"))),
      Axiom::SubClassOf(N("B"), Concept::Not(N("A"))),
      Axiom::ClassAssertion(N("A"), "a"),
      Axiom::ClassAssertion(Concept::Max(0, R("r"), Concept::Top()), "b"),
      Axiom::ClassAssertion(Concept::Not(N("B")), "b")};
  auto m = FiniteModelCheck(kb, 4);
  REQUIRE(m);
  CHECK(m->size == 3);
  for (const Axiom &a : kb.axioms) CHECK(Holds(a, *m));
  CHECK(m->individuals.at("a") != m->individuals.at("b"));

  kb.axioms.push_back(Axiom::ClassAssertion(N("B"), "a"));
  CHECK_FALSE(FiniteModelCheck(kb, 4));
  auto e = Thrown([&] { FiniteModelCheck(kb, kMaxFiniteDomain + 1); });
  REQUIRE(e);
  CHECK(e->code() == ErrorCode::kTooLarge);
}

TEST_CASE("reasoner agrees with bounded model search") {
  testing::RandomKb gen(7);
  int consistent = 0, inconsistent = 0, entailed = 0, queries = 0;
  for (int i = 0; i < 300; ++i) {
    KbSnapshot kb = gen.Next();
    auto model = FiniteModelCheck(kb, testing::RandomKb::kDomain);
    Reasoner r(kb);
    bool tableau = r.Consistent();
    INFO(OntologyDocument(kb.axioms, kb.signature()));
    REQUIRE(tableau == model.has_value());
    if (!tableau) {
      ++inconsistent;
      continue;
    }
    ++consistent;
    for (const Axiom &a : kb.axioms) REQUIRE(Holds(a, *model));
    // Instance checks: entailed iff adding the negation has no model.
    for (const std::string &ind : kb.signature().individuals) {
      Concept q = gen.Query(gen.budget());
      KbSnapshot extended = kb;
      extended.axioms.push_back(Axiom::ClassAssertion(Concept::Not(q), ind));
      bool oracle = !FiniteModelCheck(extended, testing::RandomKb::kDomain);
      INFO(ind << " : " << ToFunctional(q));
      REQUIRE(r.Instance(ind, q) == oracle);
      ++queries;
      entailed += oracle;
    }
  }
  MESSAGE(consistent << " consistent, " << inconsistent << " inconsistent, "
                     << entailed << "/" << queries << " entailed");
  CHECK(consistent > 50);
  CHECK(inconsistent > 25);
}

TEST_CASE("reasoner is sound on general random KBs") {
  testing::RandomKb gen(11);
  int open = 0, limited = 0;
  for (int i = 0; i < 200; ++i) {
    KbSnapshot kb = gen.Next(true);
    bool model = OracleConsistent(kb, 5);
    INFO(OntologyDocument(kb.axioms, kb.signature()));
    bool tableau = false;
    try {
      tableau = CheckConsistency(kb, ReasonerOptions{20000}) ==
                Consistency::kConsistent;
    } catch (const Error &e) {
      REQUIRE(e.code() == ErrorCode::kResourceLimit);
      ++limited;
      continue;
    }
    // A finite model refutes inconsistency; the converse needs no
    // finite model of bounded size to exist.
    if (model) REQUIRE(tableau);
    if (tableau && !model) ++open;
  }
  MESSAGE(open << " consistent KBs without a model of 5 elements, "
               << limited << " over the step limit");
  CHECK(limited < 10);
}

}  // namespace
}  // namespace cnl
