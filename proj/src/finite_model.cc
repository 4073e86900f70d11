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

#include "cnl/finite_model.h"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cnl/error.h"

namespace cnl {
namespace {

constexpr int kMaxVariables = 200000;

// DPLL with two watched literals and chronological backtracking.
class Solver {
 public:
  explicit Solver(int variables)
      : value_(variables + 1, 0), watches_(2 * (variables + 1)) {}

  void AddClause(std::vector<int> clause) {
    if (!ok_) return;
    if (clause.empty()) {
      ok_ = false;
      return;
    }
    if (clause.size() == 1) {
      units_.push_back(clause[0]);
      return;
    }
    int id = static_cast<int>(clauses_.size());
    watches_[Index(clause[0])].push_back(id);
    watches_[Index(clause[1])].push_back(id);
    clauses_.push_back(std::move(clause));
  }

  // Variables to branch on first; the others follow by propagation in
  // most cases.
  void SetOrder(std::vector<int> order) { order_ = std::move(order); }

  bool Solve() {
    if (!ok_) return false;
    for (size_t v = 1; v < value_.size(); ++v) order_.push_back(static_cast<int>(v));
    for (int u : units_) {
      if (Value(u) < 0) return false;
      if (Value(u) == 0) Assign(u);
    }
    std::vector<std::pair<size_t, bool>> decisions;
    size_t next = 0;
    for (;;) {
      if (!Propagate()) {
        for (;;) {
          if (decisions.empty()) return false;
          auto [pos, flipped] = decisions.back();
          decisions.pop_back();
          int lit = trail_[pos];
          Undo(pos);
          next = 0;
          if (!flipped) {
            decisions.emplace_back(trail_.size(), true);
            Assign(-lit);
            break;
          }
        }
        continue;
      }
      while (next < order_.size() && value_[order_[next]] != 0) ++next;
      if (next >= order_.size()) return true;
      decisions.emplace_back(trail_.size(), false);
      Assign(-order_[next]);
    }
  }

  bool True(int var) const { return value_[var] > 0; }

 private:
  static size_t Index(int lit) {
    return lit > 0 ? 2 * static_cast<size_t>(lit)
                   : 2 * static_cast<size_t>(-lit) + 1;
  }
  int Value(int lit) const {
    int v = value_[lit > 0 ? lit : -lit];
    return lit > 0 ? v : -v;
  }
  void Assign(int lit) {
    value_[lit > 0 ? lit : -lit] = lit > 0 ? 1 : -1;
    trail_.push_back(lit);
  }
  void Undo(size_t pos) {
    while (trail_.size() > pos) {
      int lit = trail_.back();
      trail_.pop_back();
      value_[lit > 0 ? lit : -lit] = 0;
    }
    head_ = std::min(head_, pos);
  }

  bool Propagate() {
    while (head_ < trail_.size()) {
      int falsified = -trail_[head_++];
      std::vector<int> &watching = watches_[Index(falsified)];
      for (size_t i = 0; i < watching.size();) {
        std::vector<int> &c = clauses_[watching[i]];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (Value(c[0]) > 0) {
          ++i;
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < c.size(); ++k) {
          if (Value(c[k]) >= 0) {
            std::swap(c[1], c[k]);
            watches_[Index(c[1])].push_back(watching[i]);
            watching[i] = watching.back();
            watching.pop_back();
            moved = true;
            break;
          }
        }
        if (moved) continue;
        if (Value(c[0]) < 0) return false;
        Assign(c[0]);
        ++i;
      }
    }
    return true;
  }

  std::vector<int8_t> value_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> units_;
  std::vector<int> order_;
  std::vector<int> trail_;
  size_t head_ = 0;
  bool ok_ = true;
};

// Grounds concepts over elements 0..n-1 with Tseitin variables.
class Grounder {
 public:
  Grounder(int n, const std::map<std::string, int> &individuals)
      : n_(n), individuals_(individuals) {
    truth_ = Fresh();
    clauses_.push_back({truth_});
  }

  int Fresh() {
    if (++variables_ > kMaxVariables) {
      throw Error(ErrorCode::kTooLarge, "the grounding is too large");
    }
    return variables_;
  }

  int ClassVar(const std::string &name, int x) {
    auto [it, inserted] = classes_.try_emplace({name, x}, 0);
    if (inserted) it->second = Fresh();
    return it->second;
  }

  int RoleVar(const std::string &name, int x, int y) {
    auto [it, inserted] = roles_.try_emplace({name, x, y}, 0);
    if (inserted) it->second = Fresh();
    return it->second;
  }

  int RoleLit(const Role &r, int x, int y) {
    return r.inverse ? RoleVar(r.name, y, x) : RoleVar(r.name, x, y);
  }

  int And(const std::vector<int> &lits) {
    if (lits.empty()) return truth_;
    if (lits.size() == 1) return lits[0];
    int v = Fresh();
    std::vector<int> back{v};
    for (int l : lits) {
      clauses_.push_back({-v, l});
      back.push_back(-l);
    }
    clauses_.push_back(back);
    return v;
  }

  int Or(const std::vector<int> &lits) {
    std::vector<int> neg;
    for (int l : lits) neg.push_back(-l);
    return -And(neg);
  }

  // Holds iff at least k of the literals hold.
  int AtLeast(int k, const std::vector<int> &lits) {
    int m = static_cast<int>(lits.size());
    if (k <= 0) return truth_;
    if (k > m) return -truth_;
    int v = Fresh();
    // v implies every (m-k+1)-subset has a true member; any k true
    // members imply v.
    ForSubsets(m, m - k + 1, [&](const std::vector<int> &s) {
      std::vector<int> c{-v};
      for (int i : s) c.push_back(lits[i]);
      clauses_.push_back(c);
    });
    ForSubsets(m, k, [&](const std::vector<int> &s) {
      std::vector<int> c{v};
      for (int i : s) c.push_back(-lits[i]);
      clauses_.push_back(c);
    });
    return v;
  }

  int Lit(const Concept &c, int x) {
    std::pair<std::string, int> key{ToFunctional(c), x};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int lit = Build(c, x);
    memo_[key] = lit;
    return lit;
  }

  int truth() const { return truth_; }
  int variables() const { return variables_; }
  std::vector<std::vector<int>> &clauses() { return clauses_; }
  const std::map<std::pair<std::string, int>, int> &classes() const {
    return classes_;
  }
  const std::map<std::tuple<std::string, int, int>, int> &roles() const {
    return roles_;
  }

 private:
  template <typename F>
  static void ForSubsets(int m, int k, F f) {
    std::vector<int> s;
    std::function<void(int)> rec = [&](int from) {
      if (static_cast<int>(s.size()) == k) {
        f(s);
        return;
      }
      for (int i = from; i < m; ++i) {
        s.push_back(i);
        rec(i + 1);
        s.pop_back();
      }
    };
    rec(0);
  }

  // Literals for "x is related by r to y and y is in c", one per y.
  std::vector<int> Successors(const Concept &r, int x) {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y) {
      out.push_back(And({RoleLit(r.role, x, y), Lit(r.args.at(0), y)}));
    }
    return out;
  }

  int Build(const Concept &c, int x) {
    switch (c.kind) {
      case ConceptKind::kTop: return truth_;
      case ConceptKind::kBottom: return -truth_;
      case ConceptKind::kNamed: return ClassVar(c.name, x);
      case ConceptKind::kNot: return -Lit(c.args.at(0), x);
      case ConceptKind::kAnd:
      case ConceptKind::kOr: {
        std::vector<int> lits;
        for (const Concept &a : c.args) lits.push_back(Lit(a, x));
        return c.kind == ConceptKind::kAnd ? And(lits) : Or(lits);
      }
      case ConceptKind::kSome: return Or(Successors(c, x));
      case ConceptKind::kAll: {
        std::vector<int> lits;
        for (int y = 0; y < n_; ++y) {
          lits.push_back(Or({-RoleLit(c.role, x, y), Lit(c.args.at(0), y)}));
        }
        return And(lits);
      }
      case ConceptKind::kMin: return AtLeast(c.number, Successors(c, x));
      case ConceptKind::kMax: return -AtLeast(c.number + 1, Successors(c, x));
      case ConceptKind::kExact: {
        std::vector<int> s = Successors(c, x);
        return And({AtLeast(c.number, s), -AtLeast(c.number + 1, s)});
      }
      case ConceptKind::kOneOf: {
        auto it = individuals_.find(c.name);
        return it != individuals_.end() && it->second == x ? truth_ : -truth_;
      }
    }
    return truth_;
  }

  int n_;
  const std::map<std::string, int> &individuals_;
  int variables_ = 0;
  int truth_ = 0;
  std::vector<std::vector<int>> clauses_;
  std::map<std::pair<std::string, int>, int> classes_;
  std::map<std::tuple<std::string, int, int>, int> roles_;
  std::map<std::pair<std::string, int>, int> memo_;
};

std::optional<Interpretation> Search(const KbSnapshot &kb,
                                     const Signature &sig, int n) {
  std::map<std::string, int> individuals;
  for (const std::string &i : sig.individuals) {
    int next = static_cast<int>(individuals.size());
    individuals[i] = next;
  }
  Grounder g(n, individuals);
  for (const Axiom &a : kb.axioms) {
    switch (a.kind) {
      case AxiomKind::kSubClassOf:
        for (int x = 0; x < n; ++x) {
          int sub = g.Lit(a.sub, x);
          int sup = g.Lit(a.sup, x);
          g.clauses().push_back({-sub, sup});
        }
        break;
      case AxiomKind::kClassAssertion:
        g.clauses().push_back({g.Lit(a.sub, individuals.at(a.a))});
        break;
      case AxiomKind::kPropertyAssertion:
        g.clauses().push_back(
            {g.RoleLit(a.role, individuals.at(a.a), individuals.at(a.b))});
        break;
      case AxiomKind::kSubPropertyOf:
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            g.clauses().push_back(
                {-g.RoleLit(a.role, x, y), g.RoleLit(a.super_role, x, y)});
          }
        }
        break;
    }
  }
  for (const std::string &c : sig.classes) {
    for (int x = 0; x < n; ++x) g.ClassVar(c, x);
  }
  for (const std::string &r : sig.roles) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) g.RoleVar(r, x, y);
    }
  }
  Solver solver(g.variables());
  std::vector<int> order;
  for (const auto &[key, var] : g.classes()) order.push_back(var);
  for (const auto &[key, var] : g.roles()) order.push_back(var);
  solver.SetOrder(order);
  for (std::vector<int> &c : g.clauses()) solver.AddClause(std::move(c));
  if (!solver.Solve()) return std::nullopt;
  Interpretation m;
  m.size = n;
  m.individuals = individuals;
  for (const std::string &c : sig.classes) m.classes[c].assign(n, false);
  for (const std::string &r : sig.roles) m.roles[r];
  for (const auto &[key, var] : g.classes()) {
    if (solver.True(var)) m.classes[key.first][key.second] = true;
  }
  for (const auto &[key, var] : g.roles()) {
    if (solver.True(var)) {
      m.roles[std::get<0>(key)].insert({std::get<1>(key), std::get<2>(key)});
    }
  }
  return m;
}

}  // namespace

std::optional<Interpretation> FiniteModelCheck(const KbSnapshot &kb,
                                               int max_domain) {
  if (max_domain > kMaxFiniteDomain) {
    throw Error(ErrorCode::kTooLarge,
                "domain size " + std::to_string(max_domain) +
                    " exceeds the limit of " +
                    std::to_string(kMaxFiniteDomain));
  }
  Signature sig = kb.signature();
  int smallest = std::max<int>(1, static_cast<int>(sig.individuals.size()));
  for (int n = smallest; n <= max_domain; ++n) {
    if (auto m = Search(kb, sig, n)) return m;
  }
  return std::nullopt;
}

}  // namespace cnl
