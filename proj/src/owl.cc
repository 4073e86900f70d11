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

#include "cnl/owl.h"

#include <algorithm>

namespace cnl {

Concept Concept::Bottom() {
  Concept c;
  c.kind = ConceptKind::kBottom;
  return c;
}

Concept Concept::Named(std::string name) {
  Concept c;
  c.kind = ConceptKind::kNamed;
  c.name = std::move(name);
  return c;
}

namespace {

Concept Nary(ConceptKind kind, std::vector<Concept> args) {
  std::vector<Concept> flat;
  for (Concept &a : args) {
    if (a.kind == kind) {
      for (Concept &b : a.args) flat.push_back(std::move(b));
    } else {
      flat.push_back(std::move(a));
    }
  }
  if (flat.size() == 1) return std::move(flat[0]);
  Concept c;
  c.kind = kind;
  c.args = std::move(flat);
  return c;
}

Concept Restriction(ConceptKind kind, int n, Role role, Concept filler) {
  Concept c;
  c.kind = kind;
  c.number = n;
  c.role = std::move(role);
  c.args.push_back(std::move(filler));
  return c;
}

}  // namespace

Concept Concept::And(std::vector<Concept> args) {
  if (args.empty()) return Top();
  return Nary(ConceptKind::kAnd, std::move(args));
}

Concept Concept::Or(std::vector<Concept> args) {
  if (args.empty()) return Bottom();
  return Nary(ConceptKind::kOr, std::move(args));
}

Concept Concept::Not(Concept c) {
  Concept n;
  n.kind = ConceptKind::kNot;
  n.args.push_back(std::move(c));
  return n;
}

Concept Concept::Some(Role role, Concept c) {
  return Restriction(ConceptKind::kSome, 0, std::move(role), std::move(c));
}

Concept Concept::All(Role role, Concept c) {
  return Restriction(ConceptKind::kAll, 0, std::move(role), std::move(c));
}

Concept Concept::Min(int n, Role role, Concept c) {
  return Restriction(ConceptKind::kMin, n, std::move(role), std::move(c));
}

Concept Concept::Max(int n, Role role, Concept c) {
  return Restriction(ConceptKind::kMax, n, std::move(role), std::move(c));
}

Concept Concept::Exact(int n, Role role, Concept c) {
  return Restriction(ConceptKind::kExact, n, std::move(role), std::move(c));
}

Concept Concept::OneOf(std::string individual) {
  Concept c;
  c.kind = ConceptKind::kOneOf;
  c.name = std::move(individual);
  return c;
}

Axiom Axiom::SubClassOf(Concept sub, Concept sup) {
  Axiom a;
  a.kind = AxiomKind::kSubClassOf;
  a.sub = std::move(sub);
  a.sup = std::move(sup);
  return a;
}

Axiom Axiom::ClassAssertion(Concept c, std::string individual) {
  Axiom a;
  a.kind = AxiomKind::kClassAssertion;
  a.sub = std::move(c);
  a.a = std::move(individual);
  return a;
}

Axiom Axiom::PropertyAssertion(Role role, std::string x, std::string y) {
  Axiom a;
  a.kind = AxiomKind::kPropertyAssertion;
  if (role.inverse) std::swap(x, y);
  a.role = Role{role.name, false};
  a.a = std::move(x);
  a.b = std::move(y);
  return a;
}

Axiom Axiom::SubPropertyOf(Role sub, Role sup) {
  // Normalize so the subproperty is direct.
  if (sub.inverse) {
    sub = sub.Inverse();
    sup = sup.Inverse();
  }
  Axiom a;
  a.kind = AxiomKind::kSubPropertyOf;
  a.role = std::move(sub);
  a.super_role = std::move(sup);
  return a;
}

void Signature::Add(const Concept &c) {
  switch (c.kind) {
    case ConceptKind::kNamed: classes.insert(c.name); break;
    case ConceptKind::kOneOf: individuals.insert(c.name); break;
    case ConceptKind::kSome:
    case ConceptKind::kAll:
    case ConceptKind::kMin:
    case ConceptKind::kMax:
    case ConceptKind::kExact: roles.insert(c.role.name); break;
    default: break;
  }
  for (const Concept &a : c.args) Add(a);
}

void Signature::Add(const Axiom &a) {
  switch (a.kind) {
    case AxiomKind::kSubClassOf:
      Add(a.sub);
      Add(a.sup);
      break;
    case AxiomKind::kClassAssertion:
      Add(a.sub);
      individuals.insert(a.a);
      break;
    case AxiomKind::kPropertyAssertion:
      roles.insert(a.role.name);
      individuals.insert(a.a);
      individuals.insert(a.b);
      break;
    case AxiomKind::kSubPropertyOf:
      roles.insert(a.role.name);
      roles.insert(a.super_role.name);
      break;
  }
}

// ---------------------------------------------------------------------------
// Functional-style output. Both layouts print the same term tree.

namespace {

struct Term {
  std::string head;  // constructor name, or the full text of an atom
  std::vector<Term> args;
  bool atom = true;
};

Term Atom(std::string text) { return Term{std::move(text), {}, true}; }

Term Compound(std::string head, std::vector<Term> args) {
  return Term{std::move(head), std::move(args), false};
}

Term RoleTerm(const Role &r) {
  Term base = Atom("ObjectProperty(:" + r.name + ")");
  if (!r.inverse) return base;
  return Compound("InverseObjectProperty", {base});
}

Term ConceptTerm(const Concept &c) {
  auto operands = [&]() {
    std::vector<Term> out;
    for (const Concept &a : c.args) out.push_back(ConceptTerm(a));
    return out;
  };
  switch (c.kind) {
    case ConceptKind::kTop: return Atom("Class(owl:Thing)");
    case ConceptKind::kBottom: return Atom("Class(owl:Nothing)");
    case ConceptKind::kNamed: return Atom("Class(:" + c.name + ")");
    case ConceptKind::kAnd: return Compound("IntersectionOf", operands());
    case ConceptKind::kOr: return Compound("UnionOf", operands());
    case ConceptKind::kNot: return Compound("ComplementOf", operands());
    case ConceptKind::kSome:
      return Compound("SomeValuesFrom",
                      {RoleTerm(c.role), ConceptTerm(c.args[0])});
    case ConceptKind::kAll:
      return Compound("AllValuesFrom",
                      {RoleTerm(c.role), ConceptTerm(c.args[0])});
    case ConceptKind::kMin:
    case ConceptKind::kMax:
    case ConceptKind::kExact: {
      const char *head = c.kind == ConceptKind::kMin   ? "MinCardinality"
                         : c.kind == ConceptKind::kMax ? "MaxCardinality"
                                                       : "ExactCardinality";
      return Compound(head, {Atom(std::to_string(c.number)), RoleTerm(c.role),
                             ConceptTerm(c.args[0])});
    }
    case ConceptKind::kOneOf:
      return Compound("OneOf", {Atom("Individual(:" + c.name + ")")});
  }
  return Atom("?");
}

Term AxiomTerm(const Axiom &a) {
  switch (a.kind) {
    case AxiomKind::kSubClassOf:
      return Compound("SubClassOf", {ConceptTerm(a.sub), ConceptTerm(a.sup)});
    case AxiomKind::kClassAssertion:
      return Compound("ClassAssertion",
                      {ConceptTerm(a.sub), Atom("Individual(:" + a.a + ")")});
    case AxiomKind::kPropertyAssertion:
      return Compound("PropertyAssertion",
                      {RoleTerm(a.role), Atom("Individual(:" + a.a + ")"),
                       Atom("Individual(:" + a.b + ")")});
    case AxiomKind::kSubPropertyOf:
      return Compound("SubPropertyOf",
                      {RoleTerm(a.role), RoleTerm(a.super_role)});
  }
  return Atom("?");
}

void PrintCompact(const Term &t, std::string *out) {
  *out += t.head;
  if (t.atom) return;
  out->push_back('(');
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i > 0) out->push_back(' ');
    PrintCompact(t.args[i], out);
  }
  out->push_back(')');
}

void PrintIndented(const Term &t, int depth, std::string *out) {
  std::string pad(2 * depth, ' ');
  if (t.atom) {
    *out += pad + t.head + "\n";
    return;
  }
  *out += pad + t.head + "(\n";
  for (const Term &a : t.args) PrintIndented(a, depth + 1, out);
  *out += pad + ")\n";
}

}  // namespace

std::string ToFunctional(const Concept &c) {
  std::string out;
  PrintCompact(ConceptTerm(c), &out);
  return out;
}

std::string ToFunctional(const Axiom &a) {
  std::string out;
  PrintCompact(AxiomTerm(a), &out);
  return out;
}

std::string ToFunctionalIndented(const Axiom &a) {
  std::string out;
  PrintIndented(AxiomTerm(a), 0, &out);
  return out;
}

std::string OntologyDocument(const std::vector<Axiom> &axioms,
                             const Signature &signature) {
  std::string out;
  out += "Namespace(=<http://cnlwiki.org/ontology#>)\n";
  out += "Ontology(<http://cnlwiki.org/ontology>\n";
  for (const std::string &c : signature.classes) {
    out += "Declaration(Class(:" + c + "))\n";
  }
  for (const std::string &r : signature.roles) {
    out += "Declaration(ObjectProperty(:" + r + "))\n";
  }
  for (const std::string &i : signature.individuals) {
    out += "Declaration(Individual(:" + i + "))\n";
  }
  for (const Axiom &a : axioms) out += ToFunctionalIndented(a);
  out += ")\n";
  return out;
}

// ---------------------------------------------------------------------------
// Semantics.

bool Interpretation::InClass(const std::string &name, int x) const {
  auto it = classes.find(name);
  return it != classes.end() && it->second[x];
}

bool Interpretation::Related(const Role &role, int x, int y) const {
  auto it = roles.find(role.name);
  if (it == roles.end()) return false;
  return role.inverse ? it->second.count({y, x}) > 0
                      : it->second.count({x, y}) > 0;
}

std::vector<bool> Extension(const Concept &c, const Interpretation &m) {
  std::vector<bool> out(m.size, false);
  switch (c.kind) {
    case ConceptKind::kTop:
      out.assign(m.size, true);
      break;
    case ConceptKind::kBottom:
      break;
    case ConceptKind::kNamed:
      for (int x = 0; x < m.size; ++x) out[x] = m.InClass(c.name, x);
      break;
    case ConceptKind::kAnd:
      out.assign(m.size, true);
      for (const Concept &a : c.args) {
        std::vector<bool> e = Extension(a, m);
        for (int x = 0; x < m.size; ++x) out[x] = out[x] && e[x];
      }
      break;
    case ConceptKind::kOr:
      for (const Concept &a : c.args) {
        std::vector<bool> e = Extension(a, m);
        for (int x = 0; x < m.size; ++x) out[x] = out[x] || e[x];
      }
      break;
    case ConceptKind::kNot: {
      std::vector<bool> e = Extension(c.args[0], m);
      for (int x = 0; x < m.size; ++x) out[x] = !e[x];
      break;
    }
    case ConceptKind::kOneOf: {
      auto it = m.individuals.find(c.name);
      if (it != m.individuals.end()) out[it->second] = true;
      break;
    }
    default: {
      std::vector<bool> e = Extension(c.args[0], m);
      for (int x = 0; x < m.size; ++x) {
        int count = 0, total = 0;
        for (int y = 0; y < m.size; ++y) {
          if (!m.Related(c.role, x, y)) continue;
          ++total;
          if (e[y]) ++count;
        }
        switch (c.kind) {
          case ConceptKind::kSome: out[x] = count > 0; break;
          case ConceptKind::kAll: out[x] = count == total; break;
          case ConceptKind::kMin: out[x] = count >= c.number; break;
          case ConceptKind::kMax: out[x] = count <= c.number; break;
          case ConceptKind::kExact: out[x] = count == c.number; break;
          default: break;
        }
      }
    }
  }
  return out;
}

bool Holds(const Axiom &a, const Interpretation &m) {
  switch (a.kind) {
    case AxiomKind::kSubClassOf: {
      std::vector<bool> sub = Extension(a.sub, m);
      std::vector<bool> sup = Extension(a.sup, m);
      for (int x = 0; x < m.size; ++x) {
        if (sub[x] && !sup[x]) return false;
      }
      return true;
    }
    case AxiomKind::kClassAssertion: {
      auto it = m.individuals.find(a.a);
      return it != m.individuals.end() && Extension(a.sub, m)[it->second];
    }
    case AxiomKind::kPropertyAssertion: {
      auto x = m.individuals.find(a.a);
      auto y = m.individuals.find(a.b);
      return x != m.individuals.end() && y != m.individuals.end() &&
             m.Related(a.role, x->second, y->second);
    }
    case AxiomKind::kSubPropertyOf:
      for (int x = 0; x < m.size; ++x) {
        for (int y = 0; y < m.size; ++y) {
          if (m.Related(a.role, x, y) && !m.Related(a.super_role, x, y)) {
            return false;
          }
        }
      }
      return true;
  }
  return false;
}

}  // namespace cnl
