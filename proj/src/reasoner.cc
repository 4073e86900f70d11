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

#include "cnl/reasoner.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <map>
#include <tuple>
#include <utility>

#include "cnl/error.h"

namespace cnl {

Signature KbSnapshot::signature() const {
  Signature s = declared;
  for (const Axiom &a : axioms) s.Add(a);
  return s;
}

namespace {

// Concepts in negation normal form, hash-consed into integer ids.
enum class K : uint8_t {
  kTop,
  kBottom,
  kAtom,
  kNotAtom,
  kAnd,
  kOr,
  kSome,
  kAll,
  kMin,
  kMax,
  kNominal,
  kNotNominal,
};

struct Node {
  K kind = K::kTop;
  int name = 0;  // atom or individual index
  int role = 0;  // 2 * role index + inverse bit
  int n = 0;
  std::vector<int> args;

  auto operator<=>(const Node &) const = default;
};

Node Leaf(K kind, int name = 0) {
  Node node;
  node.kind = kind;
  node.name = name;
  return node;
}

int Inv(int role) { return role ^ 1; }

class Store {
 public:
  Store() {
    top_ = Intern(Leaf(K::kTop));
    bottom_ = Intern(Leaf(K::kBottom));
  }

  int top() const { return top_; }
  int bottom() const { return bottom_; }
  const Node &at(int id) const { return nodes_[id]; }

  int Atom(const std::string &name, bool negated = false) {
    return Intern(Leaf(negated ? K::kNotAtom : K::kAtom, AtomIndex(name)));
  }
  int AtomIndex(const std::string &name) { return Index(atoms_, name); }
  int IndividualIndex(const std::string &name) {
    return Index(individuals_, name);
  }
  int RoleIndex(const Role &r) {
    return 2 * Index(roles_, r.name) + (r.inverse ? 1 : 0);
  }
  const std::vector<std::string> &atom_names() const { return atom_names_; }
  const std::vector<std::string> &individual_names() const {
    return individual_names_;
  }
  size_t role_count() const { return roles_.size(); }

  int And(std::vector<int> args) {
    std::vector<int> flat;
    for (int a : args) {
      if (a == bottom_) return bottom_;
      if (a == top_) continue;
      if (at(a).kind == K::kAnd) {
        flat.insert(flat.end(), at(a).args.begin(), at(a).args.end());
      } else {
        flat.push_back(a);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return top_;
    if (flat.size() == 1) return flat[0];
    return Intern(Node{K::kAnd, 0, 0, 0, std::move(flat)});
  }

  int Or(std::vector<int> args) {
    std::vector<int> flat;
    for (int a : args) {
      if (a == top_) return top_;
      if (a == bottom_) continue;
      if (at(a).kind == K::kOr) {
        flat.insert(flat.end(), at(a).args.begin(), at(a).args.end());
      } else {
        flat.push_back(a);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return bottom_;
    if (flat.size() == 1) return flat[0];
    return Intern(Node{K::kOr, 0, 0, 0, std::move(flat)});
  }

  int Some(int role, int c) {
    if (c == bottom_) return bottom_;
    return Intern(Node{K::kSome, 0, role, 0, {c}});
  }
  int All(int role, int c) {
    if (c == top_) return top_;
    return Intern(Node{K::kAll, 0, role, 0, {c}});
  }
  int Min(int n, int role, int c) {
    if (n <= 0) return top_;
    if (n == 1) return Some(role, c);
    if (c == bottom_) return bottom_;
    return Intern(Node{K::kMin, 0, role, n, {c}});
  }
  int Max(int n, int role, int c) {
    if (n < 0) return bottom_;
    if (n == 0) return All(role, Not(c));
    if (c == bottom_) return top_;
    return Intern(Node{K::kMax, 0, role, n, {c}});
  }

  int Not(int id) {
    auto it = negation_.find(id);
    if (it != negation_.end()) return it->second;
    Node node = at(id);
    int result = top_;
    switch (node.kind) {
      case K::kTop: result = bottom_; break;
      case K::kBottom: result = top_; break;
      case K::kAtom: result = Intern(Leaf(K::kNotAtom, node.name)); break;
      case K::kNotAtom: result = Intern(Leaf(K::kAtom, node.name)); break;
      case K::kNominal: result = Intern(Leaf(K::kNotNominal, node.name)); break;
      case K::kNotNominal: result = Intern(Leaf(K::kNominal, node.name)); break;
      case K::kAnd:
      case K::kOr: {
        std::vector<int> neg;
        for (int a : node.args) neg.push_back(Not(a));
        result = node.kind == K::kAnd ? Or(neg) : And(neg);
        break;
      }
      case K::kSome: result = All(node.role, Not(node.args[0])); break;
      case K::kAll: result = Some(node.role, Not(node.args[0])); break;
      case K::kMin: result = Max(node.n - 1, node.role, node.args[0]); break;
      case K::kMax: result = Min(node.n + 1, node.role, node.args[0]); break;
    }
    negation_[id] = result;
    negation_[result] = id;
    return result;
  }

  int From(const Concept &c) {
    switch (c.kind) {
      case ConceptKind::kTop: return top_;
      case ConceptKind::kBottom: return bottom_;
      case ConceptKind::kNamed: return Atom(c.name);
      case ConceptKind::kOneOf:
        return Intern(Leaf(K::kNominal, IndividualIndex(c.name)));
      case ConceptKind::kNot: return Not(From(c.args.at(0)));
      case ConceptKind::kAnd:
      case ConceptKind::kOr: {
        std::vector<int> args;
        for (const Concept &a : c.args) args.push_back(From(a));
        return c.kind == ConceptKind::kAnd ? And(args) : Or(args);
      }
      case ConceptKind::kSome:
        return Some(RoleIndex(c.role), From(c.args.at(0)));
      case ConceptKind::kAll:
        return All(RoleIndex(c.role), From(c.args.at(0)));
      case ConceptKind::kMin:
        return Min(c.number, RoleIndex(c.role), From(c.args.at(0)));
      case ConceptKind::kMax:
        return Max(c.number, RoleIndex(c.role), From(c.args.at(0)));
      case ConceptKind::kExact: {
        int role = RoleIndex(c.role);
        int filler = From(c.args.at(0));
        return And({Min(c.number, role, filler), Max(c.number, role, filler)});
      }
    }
    return top_;
  }

 private:
  int Intern(Node node) {
    auto [it, inserted] = ids_.try_emplace(node, static_cast<int>(nodes_.size()));
    if (inserted) nodes_.push_back(std::move(node));
    return it->second;
  }

  int Index(std::map<std::string, int> &table, const std::string &name) {
    auto [it, inserted] =
        table.try_emplace(name, static_cast<int>(table.size()));
    if (inserted) {
      if (&table == &atoms_) atom_names_.push_back(name);
      if (&table == &individuals_) individual_names_.push_back(name);
    }
    return it->second;
  }

  std::deque<Node> nodes_;  // stable references while interning
  std::map<Node, int> ids_;
  std::map<int, int> negation_;
  std::map<std::string, int> atoms_, individuals_, roles_;
  std::vector<std::string> atom_names_, individual_names_;
  int top_ = 0, bottom_ = 0;
};

bool Contains(const std::vector<int> &sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool Insert(std::vector<int> &sorted, int x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it != sorted.end() && *it == x) return false;
  sorted.insert(it, x);
  return true;
}

// Completion graph node. Roots are individuals and the start node of a
// satisfiability test; every other node has a tree parent.
struct TNode {
  int individual = -1;
  int parent = -1;
  bool root = false;
  bool alive = true;
  std::vector<int> label;
  // Neighbour -> roles as seen from this node.
  std::map<int, std::vector<int>> edges;
  std::vector<int> distinct;
};

// Nodes are shared between the copies made for branching and cloned on
// the first write.
struct Graph {
  std::vector<std::shared_ptr<TNode>> nodes;
  std::vector<int> individual_node;  // individual index -> node

  const TNode &at(int x) const { return *nodes[x]; }
  TNode &mut(int x) {
    if (nodes[x].use_count() > 1) nodes[x] = std::make_shared<TNode>(*nodes[x]);
    return *nodes[x];
  }
};

// Alternatives of a nondeterministic rule. Each is applied to a copy of
// the graph.
using Alternative = std::function<void(Graph &)>;

}  // namespace

struct Reasoner::Impl {
  Store store;
  ReasonerOptions options;
  std::vector<std::vector<int>> unfold;  // atom -> implied concepts
  std::vector<int> global;               // concepts of every node
  std::vector<std::vector<bool>> sub_role;  // sub_role[s][r]: s below r
  std::vector<std::pair<int, int>> assertions;  // (individual, concept)
  std::vector<std::tuple<int, int, int>> links;  // (role, a, b)
  std::vector<std::string> kb_individuals;
  std::set<std::string> kb_classes;
  size_t created = 0;
  size_t budget_start = 0;
  int consistent = -1;

  Impl(const KbSnapshot &kb, ReasonerOptions opts) : options(opts) {
    Signature sig = kb.signature();
    for (const std::string &c : sig.classes) store.AtomIndex(c);
    for (const std::string &i : sig.individuals) store.IndividualIndex(i);
    kb_individuals.assign(sig.individuals.begin(), sig.individuals.end());
    kb_classes = sig.classes;
    std::vector<std::pair<int, int>> role_axioms;
    for (const Axiom &a : kb.axioms) {
      switch (a.kind) {
        case AxiomKind::kSubClassOf:
          Absorb(store.From(a.sub), store.From(a.sup));
          break;
        case AxiomKind::kClassAssertion:
          assertions.emplace_back(store.IndividualIndex(a.a),
                                  store.From(a.sub));
          break;
        case AxiomKind::kPropertyAssertion:
          links.emplace_back(store.RoleIndex(a.role),
                             store.IndividualIndex(a.a),
                             store.IndividualIndex(a.b));
          break;
        case AxiomKind::kSubPropertyOf:
          role_axioms.emplace_back(store.RoleIndex(a.role),
                                   store.RoleIndex(a.super_role));
          break;
      }
    }
    BuildRoleHierarchy(role_axioms);
  }

  void BuildRoleHierarchy(const std::vector<std::pair<int, int>> &axioms) {
    size_t n = 2 * store.role_count();
    sub_role.assign(n, std::vector<bool>(n, false));
    for (size_t r = 0; r < n; ++r) sub_role[r][r] = true;
    for (auto [s, r] : axioms) {
      sub_role[s][r] = true;
      sub_role[Inv(s)][Inv(r)] = true;
    }
    for (size_t k = 0; k < n; ++k) {
      for (size_t i = 0; i < n; ++i) {
        if (!sub_role[i][k]) continue;
        for (size_t j = 0; j < n; ++j) {
          if (sub_role[k][j]) sub_role[i][j] = true;
        }
      }
    }
  }

  // Rewrites sub => sup into lazily unfolded rules where possible.
  void Absorb(int sub, int sup) {
    const Node node = store.at(sub);
    switch (node.kind) {
      case K::kAtom:
        if (unfold.size() <= static_cast<size_t>(node.name)) {
          unfold.resize(node.name + 1);
        }
        unfold[node.name].push_back(sup);
        return;
      case K::kTop:
        global.push_back(sup);
        return;
      case K::kBottom:
        return;
      case K::kOr:
        for (int a : node.args) Absorb(a, sup);
        return;
      case K::kSome:
        Absorb(node.args[0], store.All(Inv(node.role), sup));
        return;
      case K::kAnd: {
        for (K kind : {K::kAtom, K::kSome}) {
          for (size_t i = 0; i < node.args.size(); ++i) {
            if (store.at(node.args[i]).kind != kind) continue;
            std::vector<int> rest;
            for (size_t j = 0; j < node.args.size(); ++j) {
              if (j != i) rest.push_back(node.args[j]);
            }
            Absorb(node.args[i],
                   store.Or({store.Not(store.And(rest)), sup}));
            return;
          }
        }
        break;
      }
      default:
        break;
    }
    global.push_back(store.Or({store.Not(sub), sup}));
  }

  bool SubRole(int s, int r) const {
    if (static_cast<size_t>(s) >= sub_role.size() ||
        static_cast<size_t>(r) >= sub_role.size()) {
      return s == r;
    }
    return sub_role[s][r];
  }

  // ----- completion graph primitives -----

  bool IsNeighbour(const Graph &g, int x, int y, int role) const {
    auto it = g.at(x).edges.find(y);
    if (it == g.at(x).edges.end()) return false;
    for (int s : it->second) {
      if (SubRole(s, role)) return true;
    }
    return false;
  }

  std::vector<int> Neighbours(const Graph &g, int x, int role) const {
    std::vector<int> out;
    for (const auto &[y, roles] : g.at(x).edges) {
      if (!g.at(y).alive) continue;
      for (int s : roles) {
        if (SubRole(s, role)) {
          out.push_back(y);
          break;
        }
      }
    }
    return out;
  }

  static bool Distinct(const Graph &g, int x, int y) {
    if (x == y) return false;
    const TNode &a = g.at(x);
    const TNode &b = g.at(y);
    if (a.individual >= 0 && b.individual >= 0) return true;
    return Contains(a.distinct, y);
  }

  // Whether 'candidates' holds k pairwise distinct nodes.
  static bool HasDistinct(const Graph &g, const std::vector<int> &candidates,
                          int k) {
    if (k <= 0) return true;
    if (static_cast<int>(candidates.size()) < k) return false;
    std::vector<int> chosen;
    std::function<bool(size_t)> search = [&](size_t from) {
      if (static_cast<int>(chosen.size()) == k) return true;
      for (size_t i = from; i < candidates.size(); ++i) {
        if (static_cast<int>(chosen.size() + candidates.size() - i) < k) {
          return false;
        }
        bool ok = true;
        for (int c : chosen) ok = ok && Distinct(g, c, candidates[i]);
        if (!ok) continue;
        chosen.push_back(candidates[i]);
        if (search(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    return search(0);
  }

  void Spend() {
    if (++created - budget_start > options.max_nodes) {
      throw Error(ErrorCode::kResourceLimit,
                  "reasoning exceeded the limit of " +
                      std::to_string(options.max_nodes) + " steps");
    }
  }

  int NewNode(Graph &g) {
    Spend();
    g.nodes.push_back(std::make_shared<TNode>());
    int id = static_cast<int>(g.nodes.size()) - 1;
    for (int c : global) Insert(g.mut(id).label, c);
    return id;
  }

  static void AddEdge(Graph &g, int x, int y, int role) {
    Insert(g.mut(x).edges[y], role);
    Insert(g.mut(y).edges[x], Inv(role));
  }

  static void Kill(Graph &g, int x) {
    for (const auto &[y, roles] : g.at(x).edges) {
      if (y != x) g.mut(y).edges.erase(x);
    }
    TNode &node = g.mut(x);
    node.edges.clear();
    node.alive = false;
  }

  static void Prune(Graph &g, int x) {
    std::vector<int> children;
    for (const auto &[y, roles] : g.at(x).edges) {
      if (g.at(y).alive && !g.at(y).root && g.at(y).parent == x &&
          y != x) {
        children.push_back(y);
      }
    }
    for (int c : children) {
      Prune(g, c);
      Kill(g, c);
    }
  }

  // Merges y into z.
  static void Merge(Graph &g, int y, int z) {
    Prune(g, y);
    for (int c : g.at(y).label) Insert(g.mut(z).label, c);
    std::map<int, std::vector<int>> edges = g.at(y).edges;
    for (const auto &[w, roles] : edges) {
      if (!g.at(w).alive) continue;
      for (int r : roles) {
        if (w == y || w == z) {
          Insert(g.mut(z).edges[z], r);
          Insert(g.mut(z).edges[z], Inv(r));
        } else {
          AddEdge(g, z, w, r);
        }
      }
    }
    for (int d : g.at(y).distinct) {
      if (!g.at(d).alive) continue;
      Insert(g.mut(z).distinct, d);
      Insert(g.mut(d).distinct, z);
    }
    Kill(g, y);
  }

  bool Blockable(const Graph &g, int x) const { return !g.at(x).root; }

  bool DirectlyBlocked(const Graph &g, int x) const {
    const TNode &node = g.at(x);
    if (node.root) return false;
    int y = node.parent;
    auto own = g.at(y).edges.find(x);
    if (own == g.at(y).edges.end()) return false;
    const std::vector<int> &edge = own->second;
    for (int xp = y; Blockable(g, xp); xp = g.at(xp).parent) {
      int yp = g.at(xp).parent;
      if (g.at(xp).label == node.label &&
          g.at(yp).label == g.at(y).label) {
        auto it = g.at(yp).edges.find(xp);
        if (it != g.at(yp).edges.end() && it->second == edge) return true;
      }
    }
    return false;
  }

  bool IndirectlyBlocked(const Graph &g, int x) const {
    for (int a = x; Blockable(g, a);) {
      a = g.at(a).parent;
      if (DirectlyBlocked(g, a)) return true;
    }
    return false;
  }

  bool Blocked(const Graph &g, int x) const {
    return DirectlyBlocked(g, x) || IndirectlyBlocked(g, x);
  }

  // ----- rules -----

  enum class Step { kClash, kChanged, kNone };

  static bool Add(Graph &g, int x, int c) {
    if (Contains(g.at(x).label, c)) return false;
    return Insert(g.mut(x).label, c);
  }

  // Deterministic rules on one node.
  Step Deterministic(Graph &g, int x) {
    bool changed = false;
    for (size_t i = 0; i < g.at(x).label.size(); ++i) {
      int c = g.at(x).label[i];
      const Node &node = store.at(c);
      switch (node.kind) {
        case K::kBottom:
          return Step::kClash;
        case K::kAtom:
          if (Contains(g.at(x).label, store.Not(c))) return Step::kClash;
          if (static_cast<size_t>(node.name) < unfold.size()) {
            for (int d : unfold[node.name]) changed |= Add(g, x, d);
          }
          break;
        case K::kAnd:
          for (int a : node.args) changed |= Add(g, x, a);
          break;
        case K::kAll:
          for (int y : Neighbours(g, x, node.role)) {
            changed |= Add(g, y, node.args[0]);
          }
          break;
        case K::kNominal: {
          int ind = g.at(x).individual;
          if (ind == node.name) break;
          if (ind >= 0) return Step::kClash;
          int target = g.individual_node[node.name];
          if (Distinct(g, x, target)) return Step::kClash;
          Merge(g, x, target);
          return Step::kChanged;
        }
        case K::kNotNominal:
          if (g.at(x).individual == node.name) return Step::kClash;
          break;
        case K::kMax: {
          std::vector<int> with;
          for (int y : Neighbours(g, x, node.role)) {
            if (Contains(g.at(y).label, node.args[0])) with.push_back(y);
          }
          if (HasDistinct(g, with, node.n + 1)) return Step::kClash;
          break;
        }
        case K::kMin:
          if (node.n > 1 && IsSelfContradictoryMin(g, x, node)) {
            return Step::kClash;
          }
          break;
        default:
          break;
      }
    }
    return changed ? Step::kChanged : Step::kNone;
  }

  // >= n r.C together with <= m r.C, m < n, on the same node.
  bool IsSelfContradictoryMin(const Graph &g, int x, const Node &min) {
    for (int c : g.at(x).label) {
      const Node &other = store.at(c);
      if (other.kind == K::kMax && other.n < min.n &&
          other.args[0] == min.args[0] && SubRole(min.role, other.role)) {
        return true;
      }
    }
    return false;
  }

  // Runs deterministic rules to a fixpoint. False on a clash.
  bool Saturate(Graph &g) {
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t x = 0; x < g.nodes.size(); ++x) {
        if (!g.at(x).alive || IndirectlyBlocked(g, x)) continue;
        Step s = Deterministic(g, x);
        if (s == Step::kClash) return false;
        if (s == Step::kChanged) changed = true;
      }
    }
    return true;
  }

  int Cost(int c) const {
    switch (store.at(c).kind) {
      case K::kSome:
      case K::kMin: return 3;
      case K::kAnd:
      case K::kOr: return 2;
      case K::kAll:
      case K::kMax: return 1;
      default: return 0;
    }
  }

  // Finds the first applicable nondeterministic rule.
  bool Branch(Graph &g, std::vector<Alternative> *out) {
    for (size_t xi = 0; xi < g.nodes.size(); ++xi) {
      int x = static_cast<int>(xi);
      if (!g.at(x).alive || IndirectlyBlocked(g, x)) continue;
      for (int c : g.at(x).label) {
        const Node &node = store.at(c);
        if (node.kind == K::kOr) {
          bool done = false;
          for (int a : node.args) done = done || Contains(g.at(x).label, a);
          if (done) continue;
          // Cheap disjuncts first; later alternatives exclude the earlier
          // ones.
          std::vector<int> order = node.args;
          std::stable_sort(order.begin(), order.end(), [this](int p, int q) {
            return Cost(p) < Cost(q);
          });
          std::vector<int> earlier;
          for (int a : order) {
            out->push_back([x, a, earlier](Graph &h) {
              Add(h, x, a);
              for (int e : earlier) Add(h, x, e);
            });
            earlier.push_back(store.Not(a));
          }
          return true;
        }
        if (node.kind != K::kMax) continue;
        int filler = node.args[0];
        int neg = store.Not(filler);
        std::vector<int> neighbours = Neighbours(g, x, node.role);
        for (int y : neighbours) {
          const std::vector<int> &l = g.at(y).label;
          if (Contains(l, filler) || Contains(l, neg)) continue;
          out->push_back([this, y, filler](Graph &h) { Add(h, y, filler); });
          out->push_back([this, y, neg](Graph &h) { Add(h, y, neg); });
          return true;
        }
        std::vector<int> with;
        for (int y : neighbours) {
          if (Contains(g.at(y).label, filler)) with.push_back(y);
        }
        if (static_cast<int>(with.size()) <= node.n) continue;
        int parent = g.at(x).root ? -1 : g.at(x).parent;
        for (size_t i = 0; i < with.size(); ++i) {
          for (size_t j = i + 1; j < with.size(); ++j) {
            int a = with[i], b = with[j];
            if (Distinct(g, a, b)) continue;
            auto keeps = [&](int n) {
              const TNode &t = g.at(n);
              return t.individual >= 0 ? 3 : t.root ? 2 : n == parent ? 1 : 0;
            };
            int from = b, into = a;
            if (keeps(b) > keeps(a)) std::swap(from, into);
            out->push_back([from, into](Graph &h) { Merge(h, from, into); });
          }
        }
        // Saturate would have found the clash if no pair were mergeable.
        return true;
      }
    }
    return false;
  }

  // Applies one generating rule. False when none applies.
  bool Generate(Graph &g) {
    for (size_t xi = 0; xi < g.nodes.size(); ++xi) {
      int x = static_cast<int>(xi);
      if (!g.at(x).alive) continue;
      bool blocked = false, checked = false;
      for (size_t i = 0; i < g.at(x).label.size(); ++i) {
        const Node node = store.at(g.at(x).label[i]);
        if (node.kind != K::kSome && node.kind != K::kMin) continue;
        int filler = node.args[0];
        int need = node.kind == K::kSome ? 1 : node.n;
        std::vector<int> with;
        for (int y : Neighbours(g, x, node.role)) {
          if (Contains(g.at(y).label, filler)) with.push_back(y);
        }
        if (node.kind == K::kSome ? !with.empty()
                                  : HasDistinct(g, with, need)) {
          continue;
        }
        if (!checked) {
          blocked = Blocked(g, x);
          checked = true;
        }
        if (blocked) break;
        std::vector<int> fresh;
        for (int k = 0; k < need; ++k) {
          int y = NewNode(g);
          g.mut(y).parent = x;
          Add(g, y, filler);
          AddEdge(g, x, y, node.role);
          for (int f : fresh) {
            Insert(g.mut(y).distinct, f);
            Insert(g.mut(f).distinct, y);
          }
          fresh.push_back(y);
        }
        return true;
      }
    }
    return false;
  }

  // Depth-first search over the nondeterministic choices with an explicit
  // stack of choice points.
  bool Expand(Graph g) {
    struct ChoicePoint {
      Graph graph;
      std::vector<Alternative> alternatives;
      size_t next = 0;
    };
    std::vector<ChoicePoint> stack;
    // Node slots held by the stack; bounds memory.
    size_t held = 0;
    const size_t max_held = 64 * options.max_nodes;
    for (;;) {
      for (;;) {
        if (!Saturate(g)) break;
        std::vector<Alternative> alternatives;
        if (Branch(g, &alternatives)) {
          held += g.nodes.size();
          if (held > max_held) {
            throw Error(ErrorCode::kResourceLimit,
                        "reasoning exceeded its memory limit");
          }
          stack.push_back({std::move(g), std::move(alternatives), 0});
          break;
        }
        if (!Generate(g)) return true;
      }
      for (;;) {
        if (stack.empty()) return false;
        ChoicePoint &top = stack.back();
        Alternative alt = top.alternatives[top.next++];
        Spend();
        if (top.next == top.alternatives.size()) {
          held -= top.graph.nodes.size();
          g = std::move(top.graph);
          stack.pop_back();
        } else {
          g = top.graph;
        }
        alt(g);
        break;
      }
    }
  }

  // ----- entry points -----

  // Builds the initial graph. 'with_abox' adds the assertions; extra
  // concepts go on individuals or, for individual -1, on a fresh root.
  Graph Initial(bool with_abox,
                const std::vector<std::pair<int, int>> &extra) {
    Graph g;
    size_t individuals = store.individual_names().size();
    g.individual_node.assign(individuals, -1);
    for (size_t i = 0; with_abox && i < individuals; ++i) {
      int x = NewNode(g);
      g.mut(x).individual = static_cast<int>(i);
      g.mut(x).root = true;
      g.individual_node[i] = x;
    }
    if (with_abox) {
      for (auto [ind, c] : assertions) Add(g, g.individual_node[ind], c);
      for (auto [role, a, b] : links) {
        AddEdge(g, g.individual_node[a], g.individual_node[b], role);
      }
    }
    int fresh = -1;
    for (auto [ind, c] : extra) {
      if (ind >= 0) {
        Add(g, g.individual_node[ind], c);
        continue;
      }
      if (fresh < 0) {
        fresh = NewNode(g);
        g.mut(fresh).root = true;
      }
      Add(g, fresh, c);
    }
    return g;
  }

  bool Run(bool with_abox, const std::vector<std::pair<int, int>> &extra) {
    budget_start = created;
    return Expand(Initial(with_abox, extra));
  }

  bool Consistent() {
    if (consistent < 0) consistent = Run(true, {}) ? 1 : 0;
    return consistent == 1;
  }

  void RequireConsistent() {
    if (!Consistent()) {
      throw Error(ErrorCode::kInconsistentKb, "the knowledge base is inconsistent");
    }
  }

  // Satisfiability of a concept id w.r.t. the terminology. Without
  // nominals the assertions cannot influence it once the KB is
  // consistent; with nominals they are included.
  bool SatisfiableId(int c) {
    bool nominals = HasNominal(c);
    if (nominals && !Consistent()) return false;
    return Run(nominals, {{-1, c}});
  }

  bool HasNominal(int c) {
    const Node &node = store.at(c);
    if (node.kind == K::kNominal || node.kind == K::kNotNominal) return true;
    for (int a : node.args) {
      if (HasNominal(a)) return true;
    }
    return false;
  }

  bool InstanceId(int individual, int c) {
    return !Run(true, {{individual, store.Not(c)}});
  }
};

Reasoner::Reasoner(const KbSnapshot &kb, ReasonerOptions options)
    : impl_(std::make_unique<Impl>(kb, options)) {}

Reasoner::~Reasoner() = default;

size_t Reasoner::nodes_created() const { return impl_->created; }

bool Reasoner::Consistent() { return impl_->Consistent(); }

bool Reasoner::Satisfiable(const Concept &c) {
  int id = impl_->store.From(c);
  return impl_->SatisfiableId(id);
}

bool Reasoner::Subsumed(const Concept &c, const Concept &d) {
  Store &s = impl_->store;
  return !impl_->SatisfiableId(s.And({s.From(c), s.Not(s.From(d))}));
}

bool Reasoner::Instance(const std::string &individual, const Concept &c) {
  int id = impl_->store.From(c);
  return impl_->InstanceId(impl_->store.IndividualIndex(individual), id);
}

Hierarchy Reasoner::Classify() {
  impl_->RequireConsistent();
  Store &s = impl_->store;
  std::vector<std::string> names(impl_->kb_classes.begin(),
                                 impl_->kb_classes.end());
  size_t n = names.size();
  std::vector<int> atoms;
  for (const std::string &name : names) atoms.push_back(s.Atom(name));
  Hierarchy h;
  std::vector<bool> sat(n);
  for (size_t i = 0; i < n; ++i) {
    sat[i] = impl_->SatisfiableId(atoms[i]);
    if (!sat[i]) h.unsatisfiable.insert(names[i]);
  }
  // below[i][j]: class i is subsumed by class j.
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    if (!sat[i]) continue;
    below[i][i] = true;
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !sat[j]) continue;
      below[i][j] = !impl_->SatisfiableId(s.And({atoms[i], s.Not(atoms[j])}));
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (!sat[i]) continue;
    h.supers[names[i]];
    h.subs[names[i]];
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !below[i][j]) continue;
      if (below[j][i]) {
        h.equivalents[names[i]].insert(names[j]);
        continue;
      }
      bool direct = true;
      for (size_t k = 0; k < n && direct; ++k) {
        if (k == i || k == j) continue;
        bool strict_above_i = below[i][k] && !below[k][i];
        bool strict_below_j = below[k][j] && !below[j][k];
        if (strict_above_i && strict_below_j) direct = false;
      }
      if (direct) {
        h.supers[names[i]].insert(names[j]);
        h.subs[names[j]].insert(names[i]);
      }
    }
  }
  return h;
}

std::set<std::string> Reasoner::Realize(const std::string &individual) {
  const std::vector<std::string> &known = impl_->kb_individuals;
  if (!std::binary_search(known.begin(), known.end(), individual)) {
    throw Error(ErrorCode::kUnknownIndividual,
                "unknown individual: " + individual, -1, {individual});
  }
  impl_->RequireConsistent();
  std::set<std::string> out;
  int ind = impl_->store.IndividualIndex(individual);
  for (const std::string &c : impl_->kb_classes) {
    if (impl_->InstanceId(ind, impl_->store.Atom(c))) out.insert(c);
  }
  return out;
}

std::set<std::string> Reasoner::Retrieve(const Concept &c) {
  impl_->RequireConsistent();
  int id = impl_->store.From(c);
  std::set<std::string> out;
  for (const std::string &name : impl_->kb_individuals) {
    if (impl_->InstanceId(impl_->store.IndividualIndex(name), id)) {
      out.insert(name);
    }
  }
  return out;
}

Consistency CheckConsistency(const KbSnapshot &kb, ReasonerOptions options) {
  return Reasoner(kb, options).Consistent() ? Consistency::kConsistent
                                            : Consistency::kInconsistent;
}

bool IsSubsumed(const KbSnapshot &kb, const Concept &c, const Concept &d,
                ReasonerOptions options) {
  return Reasoner(kb, options).Subsumed(c, d);
}

Hierarchy Classify(const KbSnapshot &kb, ReasonerOptions options) {
  return Reasoner(kb, options).Classify();
}

std::set<std::string> Realize(const KbSnapshot &kb,
                              const std::string &individual,
                              ReasonerOptions options) {
  return Reasoner(kb, options).Realize(individual);
}

std::set<std::string> Retrieve(const KbSnapshot &kb, const Concept &c,
                               ReasonerOptions options) {
  return Reasoner(kb, options).Retrieve(c);
}

}  // namespace cnl
