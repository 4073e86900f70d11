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

#include "cnl/semantics.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cnl/error.h"

namespace cnl {

bool DrsCondition::operator==(const DrsCondition &o) const {
  return kind == o.kind && predicate == o.predicate && a == o.a &&
         b == o.b && boxes == o.boxes && op == o.op && number == o.number &&
         var == o.var;
}

bool Drs::operator==(const Drs &o) const {
  return referents == o.referents && conditions == o.conditions;
}

std::string PredicateSymbol(const LexEntry &entry) {
  if (entry.category() == WordCategory::kOfConstruct) {
    return entry.symbol() + "_of";
  }
  return entry.symbol();
}

// ---------------------------------------------------------------------------
// Drs construction.

namespace {

using Scope = std::function<void(const DrsTerm &, Drs *)>;

const Token &LeafToken(const ParseNode &node) { return *node.token; }

bool IsWord(const ParseNode &node, const char *word) {
  return node.leaf() && node.token->surface == word;
}

class DrsBuilder {
 public:
  DrsBuilder(const Lexicon &lexicon, const ParseNode &root)
      : lexicon_(lexicon) {
    Index(root);
  }

  Drs Sentence(const ParseNode &s) {
    Drs top;
    if (s.kind == RuleKind::kSentenceStatement) {
      Statement(s.children[0], &top);
    } else {
      DrsCondition imp;
      imp.kind = DrsCondition::kImp;
      imp.boxes.resize(2);
      size_t mark = accessible_.size();
      Condition(s.children[1], &imp.boxes[0]);
      Condition(s.children[3], &imp.boxes[1]);
      Release(mark);
      top.conditions.push_back(std::move(imp));
    }
    return top;
  }

  // Builds "q VPC" or "q is N' and VPC" for a question; returns the
  // query referent.
  int Question(const ParseNode &q, Drs *top) {
    int v = NewReferent(top, "", "");
    DrsTerm t = DrsTerm::Var(v);
    if (q.kind == RuleKind::kQuestionWhich) {
      Nbar(q.children[1], t, top);
      Vpc(q.children[2], t, top);
    } else {
      Vpc(q.children[1], t, top);
    }
    return v;
  }

 private:
  struct Antecedent {
    DrsTerm term;
    std::string noun;
    std::string variable;
  };

  void Index(const ParseNode &node) {
    if (node.leaf()) {
      positions_[&node] = static_cast<int>(positions_.size());
      return;
    }
    for (const ParseNode &c : node.children) Index(c);
  }

  int Position(const ParseNode &leaf) const {
    auto it = positions_.find(&leaf);
    return it == positions_.end() ? -1 : it->second;
  }

  std::string Symbol(const ParseNode &leaf) const {
    return PredicateSymbol(lexicon_.Get(LeafToken(leaf).entry));
  }

  int NewReferent(Drs *box, std::string noun, std::string variable) {
    int v = next_var_++;
    box->referents.push_back(v);
    accessible_.push_back(
        Antecedent{DrsTerm::Var(v), std::move(noun), std::move(variable)});
    return v;
  }

  // Referents introduced after 'mark' go out of reach.
  void Release(size_t mark) {
    for (size_t i = mark; i < accessible_.size(); ++i) {
      inaccessible_.push_back(accessible_[i]);
    }
    accessible_.resize(mark);
  }

  static void Add1(Drs *box, std::string predicate, DrsTerm a) {
    DrsCondition c;
    c.kind = DrsCondition::kPred1;
    c.predicate = std::move(predicate);
    c.a = std::move(a);
    box->conditions.push_back(std::move(c));
  }

  static void Add2(Drs *box, std::string predicate, DrsTerm a, DrsTerm b) {
    DrsCondition c;
    c.kind = DrsCondition::kPred2;
    c.predicate = std::move(predicate);
    c.a = std::move(a);
    c.b = std::move(b);
    box->conditions.push_back(std::move(c));
  }

  // Runs 'fill' on a fresh box under negation.
  void Negated(Drs *box, const std::function<void(Drs *)> &fill) {
    DrsCondition neg;
    neg.kind = DrsCondition::kNeg;
    neg.boxes.resize(1);
    size_t mark = accessible_.size();
    fill(&neg.boxes[0]);
    Release(mark);
    box->conditions.push_back(std::move(neg));
  }

  // Applies items split into "or" groups of "and" items. A single group
  // is added directly; several become a disjunction.
  template <typename Item>
  void Coordinate(const std::vector<std::vector<Item>> &groups, Drs *box,
                  const std::function<void(const Item &, Drs *)> &apply) {
    if (groups.size() == 1) {
      for (const Item &item : groups[0]) apply(item, box);
      return;
    }
    DrsCondition disj;
    disj.kind = DrsCondition::kOr;
    for (const auto &group : groups) {
      Drs b;
      size_t mark = accessible_.size();
      for (const Item &item : group) apply(item, &b);
      Release(mark);
      disj.boxes.push_back(std::move(b));
    }
    box->conditions.push_back(std::move(disj));
  }

  // Flattens right-recursive coordination: 'item' is the child index of
  // the coordinated element, 'rest' the index of the recursive tail.
  static std::vector<std::vector<const ParseNode *>> Groups(
      const ParseNode *node, size_t item, RuleKind and_kind,
      RuleKind or_kind) {
    std::vector<std::vector<const ParseNode *>> groups(1);
    for (;;) {
      groups.back().push_back(&node->children[item]);
      if (node->kind == and_kind) {
        node = &node->children.back();
      } else if (node->kind == or_kind) {
        node = &node->children.back();
        groups.emplace_back();
      } else {
        break;
      }
    }
    return groups;
  }

  void Condition(const ParseNode &cond, Drs *box) {
    // COND -> CONJ ("or" COND); CONJ -> STMT ("and" CONJ).
    std::vector<const ParseNode *> disjuncts;
    for (const ParseNode *n = &cond;;) {
      disjuncts.push_back(&n->children[0]);
      if (n->kind != RuleKind::kCondOr) break;
      n = &n->children[2];
    }
    std::vector<std::vector<const ParseNode *>> groups;
    for (const ParseNode *conj : disjuncts) {
      groups.push_back(Groups(conj, 0, RuleKind::kConjAnd, RuleKind::kCondOr)
                           .front());
    }
    Coordinate<const ParseNode *>(
        groups, box,
        [this](const ParseNode *const &stmt, Drs *b) { Statement(*stmt, b); });
  }

  void Statement(const ParseNode &stmt, Drs *box) {
    const ParseNode &vpc = stmt.children[1];
    Np(stmt.children[0], box, true,
       [this, &vpc](const DrsTerm &s, Drs *b) { Vpc(vpc, s, b); });
  }

  void Vpc(const ParseNode &vpc, const DrsTerm &subject, Drs *box) {
    auto groups = Groups(&vpc, 0, RuleKind::kVpcAnd, RuleKind::kVpcOr);
    Coordinate<const ParseNode *>(
        groups, box, [this, &subject](const ParseNode *const &vp, Drs *b) {
          Vp(*vp, subject, b);
        });
  }

  void Rel(const ParseNode &rel, const DrsTerm &subject, Drs *box) {
    auto groups = Groups(&rel, 1, RuleKind::kRelAnd, RuleKind::kRelOr);
    Coordinate<const ParseNode *>(
        groups, box, [this, &subject](const ParseNode *const &vp, Drs *b) {
          Vp(*vp, subject, b);
        });
  }

  void Vp(const ParseNode &vp, const DrsTerm &s, Drs *box) {
    const auto &ch = vp.children;
    switch (vp.kind) {
      case RuleKind::kVpTransitive: {
        std::string verb = Symbol(ch[0]);
        Np(ch[1], box, false, [verb, s](const DrsTerm &o, Drs *b) {
          Add2(b, verb, s, o);
        });
        break;
      }
      case RuleKind::kVpCopulaAdjective: {
        std::string adj = Symbol(ch[1]);
        Np(ch[2], box, false,
           [adj, s](const DrsTerm &o, Drs *b) { Add2(b, adj, s, o); });
        break;
      }
      case RuleKind::kVpPassive: {
        std::string verb = Symbol(ch[1]);
        Np(ch[3], box, false,
           [verb, s](const DrsTerm &o, Drs *b) { Add2(b, verb, o, s); });
        break;
      }
      case RuleKind::kVpNegTransitive:
      case RuleKind::kVpNegCopulaAdjective: {
        std::string pred = Symbol(ch[2]);
        const ParseNode &obj = ch[3];
        Negated(box, [&](Drs *neg) {
          Np(obj, neg, false,
             [pred, s](const DrsTerm &o, Drs *b) { Add2(b, pred, s, o); });
        });
        break;
      }
      case RuleKind::kVpCopulaNoun:
        Nbar(ch.back(), s, box);
        break;
      case RuleKind::kVpNegCopulaNoun:
        Negated(box, [&](Drs *neg) { Nbar(ch.back(), s, neg); });
        break;
      default:
        break;
    }
  }

  // Noun of an N' node, used to label its referent for "the Noun".
  std::string HeadNoun(const ParseNode &nbar) const {
    if (nbar.kind == RuleKind::kNbarOf) return "";
    return LexSymbol(nbar.children[0]);
  }

  std::string LexSymbol(const ParseNode &leaf) const {
    return lexicon_.Get(LeafToken(leaf).entry).symbol();
  }

  void Nbar(const ParseNode &nbar, const DrsTerm &x, Drs *box) {
    const auto &ch = nbar.children;
    switch (nbar.kind) {
      case RuleKind::kNbarNoun:
        Add1(box, Symbol(ch[0]), x);
        break;
      case RuleKind::kNbarRelative:
        Add1(box, Symbol(ch[0]), x);
        Rel(ch[1], x, box);
        break;
      case RuleKind::kNbarOf: {
        std::string rel = Symbol(ch[0]);
        Np(ch[2], box, false,
           [rel, x](const DrsTerm &y, Drs *b) { Add2(b, rel, x, y); });
        break;
      }
      default:
        break;
    }
  }

  // Adds the restrictor and the scope for referent x. Subjects state the
  // noun first, objects the relation first.
  void RestrictAndScope(const ParseNode &nbar, int x, Drs *box, bool subject,
                        const Scope &scope) {
    DrsTerm t = DrsTerm::Var(x);
    if (subject) {
      Nbar(nbar, t, box);
      scope(t, box);
    } else {
      scope(t, box);
      Nbar(nbar, t, box);
    }
  }

  void Np(const ParseNode &np, Drs *box, bool subject, const Scope &scope) {
    const auto &ch = np.children;
    switch (np.kind) {
      case RuleKind::kNpDeterminer: {
        const ParseNode &nbar = ch[1];
        if (IsWord(ch[0], "every") || IsWord(ch[0], "no")) {
          bool negative = IsWord(ch[0], "no");
          DrsCondition imp;
          imp.kind = DrsCondition::kImp;
          imp.boxes.resize(2);
          size_t mark = accessible_.size();
          int x = NewReferent(&imp.boxes[0], HeadNoun(nbar), "");
          Nbar(nbar, DrsTerm::Var(x), &imp.boxes[0]);
          if (negative) {
            Negated(&imp.boxes[1],
                    [&](Drs *neg) { scope(DrsTerm::Var(x), neg); });
          } else {
            scope(DrsTerm::Var(x), &imp.boxes[1]);
          }
          Release(mark);
          box->conditions.push_back(std::move(imp));
        } else {
          int x = NewReferent(box, HeadNoun(nbar), "");
          RestrictAndScope(nbar, x, box, subject, scope);
        }
        break;
      }
      case RuleKind::kNpCardinal: {
        DrsCondition card;
        card.kind = DrsCondition::kCard;
        int n = LeafToken(ch[ch.size() - 2]).number;
        const std::string &w = LeafToken(ch[0]).surface;
        const std::string &w2 = LeafToken(ch[1]).surface;
        if (w == "exactly") {
          card.op = CardOp::kExactly;
        } else if (w == "at") {
          card.op = w2 == "least" ? CardOp::kAtLeast : CardOp::kAtMost;
        } else if (w == "more") {
          card.op = CardOp::kAtLeast;
          ++n;
        } else {
          card.op = CardOp::kAtMost;
          --n;
        }
        card.number = n;
        card.boxes.resize(1);
        size_t mark = accessible_.size();
        const ParseNode &nbar = ch.back();
        int x = NewReferent(&card.boxes[0], HeadNoun(nbar), "");
        // The counted referent is bound by the condition, not the box.
        card.boxes[0].referents.pop_back();
        card.var = x;
        RestrictAndScope(nbar, x, &card.boxes[0], subject, scope);
        Release(mark);
        box->conditions.push_back(std::move(card));
        break;
      }
      case RuleKind::kNpProperName: {
        DrsTerm t = DrsTerm::Named(LexSymbol(ch[0]));
        accessible_.push_back(Antecedent{t, "", ""});
        scope(t, box);
        break;
      }
      case RuleKind::kNpVariable:
        scope(Variable(ch[0], box, false), box);
        break;
      case RuleKind::kNpSomebody:
      case RuleKind::kNpSomething:
        if (ch.size() == 2) {
          scope(Variable(ch[1], box, true), box);
        } else {
          scope(DrsTerm::Var(NewReferent(box, "", "")), box);
        }
        break;
      case RuleKind::kNpDefinite: {
        std::string noun = LexSymbol(ch[1]);
        scope(Resolve(ch[0], [&](const Antecedent &a) {
                return a.noun == noun;
              }),
              box);
        break;
      }
      case RuleKind::kNpPronoun:
        scope(Resolve(ch[0], [](const Antecedent &) { return true; }), box);
        break;
      default:
        break;
    }
  }

  // A variable refers to the accessible referent of that name; its first
  // use introduces the referent. "somebody X" always introduces one.
  DrsTerm Variable(const ParseNode &leaf, Drs *box, bool introduce) {
    const std::string &name = LeafToken(leaf).surface;
    if (!introduce) {
      for (auto it = accessible_.rbegin(); it != accessible_.rend(); ++it) {
        if (it->variable == name) return it->term;
      }
      for (const Antecedent &a : inaccessible_) {
        if (a.variable == name) {
          throw Error(ErrorCode::kInaccessibleAntecedent,
                      "variable " + name + " is not accessible here",
                      Position(leaf), {name});
        }
      }
    }
    return DrsTerm::Var(NewReferent(box, "", name));
  }

  DrsTerm Resolve(const ParseNode &leaf,
                  const std::function<bool(const Antecedent &)> &match) {
    for (auto it = accessible_.rbegin(); it != accessible_.rend(); ++it) {
      if (match(*it)) return it->term;
    }
    std::string surface = LeafToken(leaf).surface;
    for (const Antecedent &a : inaccessible_) {
      if (match(a)) {
        throw Error(ErrorCode::kInaccessibleAntecedent,
                    "the antecedent of '" + surface + "' is not accessible",
                    Position(leaf), {surface});
      }
    }
    throw Error(ErrorCode::kUnresolvedAnaphor,
                "no antecedent for '" + surface + "'", Position(leaf),
                {surface});
  }

  const Lexicon &lexicon_;
  std::map<const ParseNode *, int> positions_;
  std::vector<Antecedent> accessible_;
  std::vector<Antecedent> inaccessible_;
  int next_var_ = 0;
};

std::string VarName(int v) {
  std::string name(1, static_cast<char>('A' + v % 26));
  if (v >= 26) name += std::to_string(v / 26);
  return name;
}

std::string TermString(const DrsTerm &t,
                       const std::function<std::string(int)> &var_name) {
  return t.named() ? t.name : var_name(t.var);
}

void AppendDrs(const Drs &drs, std::string *out);

void AppendCondition(const DrsCondition &c, std::string *out) {
  auto name = [](int v) { return VarName(v); };
  switch (c.kind) {
    case DrsCondition::kPred1:
      *out += c.predicate + "(" + TermString(c.a, name) + ")";
      break;
    case DrsCondition::kPred2:
      *out += c.predicate + "(" + TermString(c.a, name) + "," +
              TermString(c.b, name) + ")";
      break;
    case DrsCondition::kNeg:
      *out += "NOT ";
      AppendDrs(c.boxes[0], out);
      break;
    case DrsCondition::kImp:
      AppendDrs(c.boxes[0], out);
      *out += " => ";
      AppendDrs(c.boxes[1], out);
      break;
    case DrsCondition::kOr:
      for (size_t i = 0; i < c.boxes.size(); ++i) {
        if (i > 0) *out += " OR ";
        AppendDrs(c.boxes[i], out);
      }
      break;
    case DrsCondition::kCard: {
      const char *op = c.op == CardOp::kAtLeast  ? ">="
                       : c.op == CardOp::kAtMost ? "<="
                                                 : "=";
      *out += std::string("COUNT") + op + std::to_string(c.number) + " " +
              VarName(c.var) + " ";
      AppendDrs(c.boxes[0], out);
      break;
    }
  }
}

void AppendDrs(const Drs &drs, std::string *out) {
  *out += "[";
  for (size_t i = 0; i < drs.referents.size(); ++i) {
    if (i > 0) *out += ",";
    *out += VarName(drs.referents[i]);
  }
  *out += ":";
  for (const DrsCondition &c : drs.conditions) {
    *out += " ";
    AppendCondition(c, out);
  }
  *out += "]";
}

}  // namespace

Drs BuildDrs(const ParseTree &tree, const Lexicon &lexicon) {
  if (tree.interrogative()) {
    throw Error(ErrorCode::kSyntaxError, "a question has no Drs");
  }
  DrsBuilder builder(lexicon, tree.root);
  return builder.Sentence(tree.root);
}

std::string DrsToString(const Drs &drs) {
  std::string out;
  AppendDrs(drs, &out);
  return out;
}

// ---------------------------------------------------------------------------
// First-order logic.

namespace {

Fol Atom(const DrsCondition &c) {
  Fol f;
  f.kind = Fol::kAtom;
  f.predicate = c.predicate;
  f.args.push_back(c.a);
  if (c.kind == DrsCondition::kPred2) f.args.push_back(c.b);
  return f;
}

Fol Junction(Fol::Kind kind, std::vector<Fol> parts) {
  if (parts.size() == 1) return std::move(parts[0]);
  Fol f;
  f.kind = kind;
  f.sub = std::move(parts);
  return f;
}

Fol Quantify(Fol::Kind kind, const std::vector<int> &vars, Fol body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    Fol q;
    q.kind = kind;
    q.var = *it;
    q.sub.push_back(std::move(body));
    body = std::move(q);
  }
  return body;
}

Fol Conditions(const Drs &drs);

Fol ConditionToFol(const DrsCondition &c) {
  switch (c.kind) {
    case DrsCondition::kPred1:
    case DrsCondition::kPred2:
      return Atom(c);
    case DrsCondition::kNeg: {
      Fol f;
      f.kind = Fol::kNot;
      f.sub.push_back(DrsToFol(c.boxes[0]));
      return f;
    }
    case DrsCondition::kImp: {
      Fol imp;
      imp.kind = Fol::kImplies;
      imp.sub.push_back(Conditions(c.boxes[0]));
      imp.sub.push_back(DrsToFol(c.boxes[1]));
      return Quantify(Fol::kForall, c.boxes[0].referents, std::move(imp));
    }
    case DrsCondition::kOr: {
      std::vector<Fol> parts;
      for (const Drs &b : c.boxes) parts.push_back(DrsToFol(b));
      return Junction(Fol::kOr, std::move(parts));
    }
    case DrsCondition::kCard: {
      Fol f;
      f.kind = Fol::kCount;
      f.op = c.op;
      f.number = c.number;
      f.var = c.var;
      f.sub.push_back(DrsToFol(c.boxes[0]));
      return f;
    }
  }
  return Fol{};
}

Fol Conditions(const Drs &drs) {
  std::vector<Fol> parts;
  for (const DrsCondition &c : drs.conditions) {
    parts.push_back(ConditionToFol(c));
  }
  if (parts.empty()) {
    Fol empty;
    empty.kind = Fol::kAnd;
    return empty;
  }
  return Junction(Fol::kAnd, std::move(parts));
}

class FolPrinter {
 public:
  std::string Print(const Fol &f) {
    switch (f.kind) {
      case Fol::kAtom: {
        std::string out = f.predicate + "(";
        for (size_t i = 0; i < f.args.size(); ++i) {
          if (i > 0) out += ",";
          out += f.args[i].named() ? f.args[i].name : Name(f.args[i].var);
        }
        return out + ")";
      }
      case Fol::kNot:
        return "~" + Operand(f.sub[0]);
      case Fol::kForall:
      case Fol::kExists:
      case Fol::kCount: {
        std::string q = f.kind == Fol::kForall   ? "forall"
                        : f.kind == Fol::kExists ? "exists"
                        : f.op == CardOp::kAtLeast
                            ? "exists>=" + std::to_string(f.number)
                        : f.op == CardOp::kAtMost
                            ? "exists<=" + std::to_string(f.number)
                            : "exists=" + std::to_string(f.number);
        std::string head = q + " " + Bind(f.var) + " ";
        const Fol &body = f.sub[0];
        if (Quantifier(body) || body.kind == Fol::kNot) {
          return head + Print(body);
        }
        return head + "(" + Print(body) + ")";
      }
      case Fol::kAnd:
      case Fol::kOr: {
        if (f.sub.empty()) return f.kind == Fol::kAnd ? "true" : "false";
        const char *sep = f.kind == Fol::kAnd ? " & " : " | ";
        std::string out;
        for (size_t i = 0; i < f.sub.size(); ++i) {
          if (i > 0) out += sep;
          const Fol &s = f.sub[i];
          bool wrap = s.kind == Fol::kImplies ||
                      ((s.kind == Fol::kAnd || s.kind == Fol::kOr) &&
                       s.kind != f.kind);
          out += wrap ? "(" + Print(s) + ")" : Print(s);
        }
        return out;
      }
      case Fol::kImplies: {
        auto side = [&](const Fol &s) {
          return s.kind == Fol::kImplies ? "(" + Print(s) + ")" : Print(s);
        };
        std::string lhs = side(f.sub[0]);
        return lhs + " -> " + side(f.sub[1]);
      }
    }
    return "";
  }

 private:
  static bool Quantifier(const Fol &f) {
    return f.kind == Fol::kForall || f.kind == Fol::kExists ||
           f.kind == Fol::kCount;
  }

  // Operand of a negation.
  std::string Operand(const Fol &f) {
    if (f.kind == Fol::kAtom || f.kind == Fol::kNot || Quantifier(f)) {
      return Print(f);
    }
    return "(" + Print(f) + ")";
  }

  std::string Bind(int var) {
    auto it = names_.find(var);
    if (it != names_.end()) return it->second;
    std::string name = VarName(static_cast<int>(names_.size()));
    names_[var] = name;
    return name;
  }

  std::string Name(int var) { return Bind(var); }

  std::map<int, std::string> names_;
};

bool Eval(const Fol &f, const Interpretation &m, std::map<int, int> *env) {
  switch (f.kind) {
    case Fol::kAtom: {
      std::vector<int> values;
      for (const DrsTerm &t : f.args) {
        if (t.named()) {
          auto it = m.individuals.find(t.name);
          if (it == m.individuals.end()) return false;
          values.push_back(it->second);
        } else {
          values.push_back(env->at(t.var));
        }
      }
      if (values.size() == 1) return m.InClass(f.predicate, values[0]);
      return m.Related(Role{f.predicate, false}, values[0], values[1]);
    }
    case Fol::kNot:
      return !Eval(f.sub[0], m, env);
    case Fol::kAnd:
      for (const Fol &s : f.sub) {
        if (!Eval(s, m, env)) return false;
      }
      return true;
    case Fol::kOr:
      for (const Fol &s : f.sub) {
        if (Eval(s, m, env)) return true;
      }
      return false;
    case Fol::kImplies:
      return !Eval(f.sub[0], m, env) || Eval(f.sub[1], m, env);
    case Fol::kForall:
    case Fol::kExists:
    case Fol::kCount: {
      int count = 0;
      for (int x = 0; x < m.size; ++x) {
        (*env)[f.var] = x;
        bool v = Eval(f.sub[0], m, env);
        if (f.kind == Fol::kForall && !v) {
          env->erase(f.var);
          return false;
        }
        if (f.kind == Fol::kExists && v) {
          env->erase(f.var);
          return true;
        }
        if (v) ++count;
      }
      env->erase(f.var);
      if (f.kind == Fol::kForall) return true;
      if (f.kind == Fol::kExists) return false;
      switch (f.op) {
        case CardOp::kAtLeast: return count >= f.number;
        case CardOp::kAtMost: return count <= f.number;
        case CardOp::kExactly: return count == f.number;
      }
      return false;
    }
  }
  return false;
}

void Free(const Fol &f, std::set<int> *bound, std::set<int> *out) {
  if (f.kind == Fol::kAtom) {
    for (const DrsTerm &t : f.args) {
      if (!t.named() && !bound->count(t.var)) out->insert(t.var);
    }
    return;
  }
  bool binds = f.kind == Fol::kForall || f.kind == Fol::kExists ||
               f.kind == Fol::kCount;
  bool fresh = binds && bound->insert(f.var).second;
  for (const Fol &s : f.sub) Free(s, bound, out);
  if (fresh) bound->erase(f.var);
}

}  // namespace

Fol DrsToFol(const Drs &drs) {
  return Quantify(Fol::kExists, drs.referents, Conditions(drs));
}

std::string FolToString(const Fol &f) {
  FolPrinter printer;
  return printer.Print(f);
}

bool EvaluateFol(const Fol &f, const Interpretation &m) {
  std::map<int, int> env;
  return Eval(f, m, &env);
}

std::vector<int> FreeVariables(const Fol &f) {
  std::set<int> bound, out;
  Free(f, &bound, &out);
  return std::vector<int>(out.begin(), out.end());
}

// ---------------------------------------------------------------------------
// OWL mapping by rolling up tree-shaped conditions.

namespace {

using TermSet = std::set<std::pair<int, std::string>>;

std::pair<int, std::string> Key(const DrsTerm &t) { return {t.var, t.name}; }

void FreeTerms(const DrsCondition &c, TermSet *out);

void FreeTerms(const Drs &box, TermSet *out) {
  TermSet inner;
  for (const DrsCondition &c : box.conditions) FreeTerms(c, &inner);
  for (int v : box.referents) inner.erase({v, ""});
  out->insert(inner.begin(), inner.end());
}

void FreeTerms(const DrsCondition &c, TermSet *out) {
  switch (c.kind) {
    case DrsCondition::kPred1:
      out->insert(Key(c.a));
      break;
    case DrsCondition::kPred2:
      out->insert(Key(c.a));
      out->insert(Key(c.b));
      break;
    case DrsCondition::kImp: {
      // Referents of the antecedent are bound in the consequent too.
      TermSet inner;
      for (const DrsCondition &d : c.boxes[0].conditions) FreeTerms(d, &inner);
      for (const DrsCondition &d : c.boxes[1].conditions) FreeTerms(d, &inner);
      for (int v : c.boxes[0].referents) inner.erase({v, ""});
      for (int v : c.boxes[1].referents) inner.erase({v, ""});
      out->insert(inner.begin(), inner.end());
      break;
    }
    case DrsCondition::kCard: {
      TermSet inner;
      FreeTerms(c.boxes[0], &inner);
      inner.erase({c.var, ""});
      out->insert(inner.begin(), inner.end());
      break;
    }
    default:
      for (const Drs &b : c.boxes) FreeTerms(b, out);
  }
}

// Thrown internally when a structure does not roll up.
struct NotTree {
  std::string reason;
};

const char *kNotTree = "the sentence is not tree-shaped";
const char *kNamedInside =
    "an individual occurs inside a general statement";

class Roller {
 public:
  explicit Roller(bool query) : query_(query) {}

  // Rolls up a box around 'anchor', which is either one of the box's own
  // referents or a term from outside.
  Concept Box(const Drs &box, const DrsTerm &anchor) {
    std::vector<bool> used(box.conditions.size(), false);
    std::set<int> visited;
    if (!anchor.named()) visited.insert(anchor.var);
    Concept c = Node(box, anchor, &used, &visited);
    Check(box, used, visited);
    return c;
  }

  void Check(const Drs &box, const std::vector<bool> &used,
             const std::set<int> &visited) {
    for (size_t i = 0; i < used.size(); ++i) {
      if (!used[i]) throw NotTree{Mentions(box.conditions[i])};
    }
    for (int v : box.referents) {
      if (!visited.count(v)) throw NotTree{kNotTree};
    }
  }

  // Concept for everything the box says about 'node' and the referents
  // hanging off it.
  Concept Node(const Drs &box, const DrsTerm &node, std::vector<bool> *used,
               std::set<int> *visited) {
    std::vector<Concept> parts;
    const auto &conds = box.conditions;
    for (size_t i = 0; i < conds.size(); ++i) {
      if ((*used)[i]) continue;
      const DrsCondition &c = conds[i];
      if (c.kind == DrsCondition::kPred1) {
        if (c.a == node) {
          (*used)[i] = true;
          parts.push_back(Concept::Named(c.predicate));
        }
        continue;
      }
      if (c.kind == DrsCondition::kPred2) {
        if (!(c.a == node) && !(c.b == node)) continue;
        if (c.a == c.b) throw NotTree{"a relation links a term to itself"};
        bool inverse = !(c.a == node);
        const DrsTerm &other = inverse ? c.a : c.b;
        Role role{c.predicate, inverse};
        if (other.named()) {
          if (!query_) continue;
          (*used)[i] = true;
          parts.push_back(Concept::Some(role, Concept::OneOf(other.name)));
          continue;
        }
        bool own = std::find(box.referents.begin(), box.referents.end(),
                             other.var) != box.referents.end();
        if (!own || visited->count(other.var)) continue;
        (*used)[i] = true;
        visited->insert(other.var);
        parts.push_back(Concept::Some(role, Node(box, other, used, visited)));
        continue;
      }
      TermSet free;
      FreeTerms(c, &free);
      if (free.size() == 1 && *free.begin() == Key(node)) {
        (*used)[i] = true;
        parts.push_back(Complex(c, node));
      }
    }
    return Concept::And(std::move(parts));
  }

  Concept Complex(const DrsCondition &c, const DrsTerm &node) {
    switch (c.kind) {
      case DrsCondition::kNeg:
        return Concept::Not(Box(c.boxes[0], node));
      case DrsCondition::kOr: {
        std::vector<Concept> parts;
        for (const Drs &b : c.boxes) parts.push_back(Box(b, node));
        return Concept::Or(std::move(parts));
      }
      case DrsCondition::kCard: {
        DrsTerm y = DrsTerm::Var(c.var);
        Drs body = c.boxes[0];
        Role role;
        if (!TakeLink(&body, node, y, &role)) throw NotTree{kNotTree};
        Concept filler = Box(body, y);
        switch (c.op) {
          case CardOp::kAtLeast: return Concept::Min(c.number, role, filler);
          case CardOp::kAtMost: return Concept::Max(c.number, role, filler);
          case CardOp::kExactly: return Concept::Exact(c.number, role, filler);
        }
        break;
      }
      case DrsCondition::kImp: {
        // "... Vs no N'": every N' is something node is not related to.
        const Drs &ante = c.boxes[0];
        const Drs &cons = c.boxes[1];
        if (ante.referents.empty() || !cons.referents.empty() ||
            cons.conditions.size() != 1 ||
            cons.conditions[0].kind != DrsCondition::kNeg) {
          throw NotTree{"a universal statement inside a statement about "
                        "one thing is not supported"};
        }
        Drs link = cons.conditions[0].boxes[0];
        DrsTerm y = DrsTerm::Var(ante.referents[0]);
        Role role;
        if (!link.referents.empty() || !TakeLink(&link, node, y, &role) ||
            !link.conditions.empty()) {
          throw NotTree{kNotTree};
        }
        return Concept::All(role, Concept::Not(Box(ante, y)));
      }
      default:
        break;
    }
    throw NotTree{kNotTree};
  }

  // Removes the single binary condition linking x and y from the box.
  static bool TakeLink(Drs *box, const DrsTerm &x, const DrsTerm &y,
                       Role *role) {
    int found = -1;
    for (size_t i = 0; i < box->conditions.size(); ++i) {
      const DrsCondition &c = box->conditions[i];
      if (c.kind != DrsCondition::kPred2) continue;
      if ((c.a == x && c.b == y) || (c.a == y && c.b == x)) {
        if (found >= 0) return false;
        found = static_cast<int>(i);
      }
    }
    if (found < 0) return false;
    const DrsCondition &c = box->conditions[found];
    *role = Role{c.predicate, !(c.a == x)};
    box->conditions.erase(box->conditions.begin() + found);
    return true;
  }

  std::string Mentions(const DrsCondition &c) const {
    TermSet free;
    FreeTerms(c, &free);
    int names = 0;
    for (const auto &t : free) {
      if (t.first < 0) ++names;
    }
    if (!query_ && names > 0) return kNamedInside;
    return kNotTree;
  }

 private:
  bool query_;
};

// "If X V1 Y then X V2 Y."
std::optional<Axiom> SubProperty(const DrsCondition &imp) {
  const Drs &ante = imp.boxes[0];
  const Drs &cons = imp.boxes[1];
  if (ante.referents.size() != 2 || ante.conditions.size() != 1 ||
      !cons.referents.empty() || cons.conditions.size() != 1) {
    return std::nullopt;
  }
  const DrsCondition &r = ante.conditions[0];
  if (r.kind != DrsCondition::kPred2 || r.a.named() || r.b.named() ||
      r.a == r.b) {
    return std::nullopt;
  }
  const DrsCondition &s = cons.conditions[0];
  if (s.kind == DrsCondition::kNeg) {
    const Drs &inner = s.boxes[0];
    if (inner.referents.empty() && inner.conditions.size() == 1 &&
        inner.conditions[0].kind == DrsCondition::kPred2) {
      throw NotTree{"disjointness of relations is not supported"};
    }
    return std::nullopt;
  }
  if (s.kind != DrsCondition::kPred2) return std::nullopt;
  if (s.a == r.a && s.b == r.b) {
    return Axiom::SubPropertyOf(Role{r.predicate, false},
                                Role{s.predicate, false});
  }
  if (s.a == r.b && s.b == r.a) {
    return Axiom::SubPropertyOf(Role{r.predicate, false},
                                Role{s.predicate, true});
  }
  return std::nullopt;
}

std::optional<Axiom> SubClass(const DrsCondition &imp) {
  const Drs &ante = imp.boxes[0];
  std::optional<NotTree> first_failure;
  for (int root : ante.referents) {
    try {
      Roller roller(false);
      DrsTerm r = DrsTerm::Var(root);
      Concept sub = roller.Box(ante, r);
      Concept sup = roller.Box(imp.boxes[1], r);
      return Axiom::SubClassOf(std::move(sub), std::move(sup));
    } catch (const NotTree &e) {
      if (!first_failure) first_failure = e;
    }
  }
  if (first_failure) throw *first_failure;
  return std::nullopt;
}

void AddAssertions(const Concept &c, const std::string &individual,
                   std::vector<Axiom> *out) {
  if (c.kind == ConceptKind::kTop) return;
  if (c.kind == ConceptKind::kAnd) {
    for (const Concept &a : c.args) AddAssertions(a, individual, out);
    return;
  }
  out->push_back(Axiom::ClassAssertion(c, individual));
}

}  // namespace

Expressibility MapToOwl(const Drs &drs) {
  try {
    std::vector<Axiom> axioms;
    std::vector<bool> used(drs.conditions.size(), false);
    std::set<int> visited;
    std::vector<std::string> names;
    auto note_name = [&](const DrsTerm &t) {
      if (t.named() &&
          std::find(names.begin(), names.end(), t.name) == names.end()) {
        names.push_back(t.name);
      }
    };
    for (size_t i = 0; i < drs.conditions.size(); ++i) {
      const DrsCondition &c = drs.conditions[i];
      TermSet free;
      FreeTerms(c, &free);
      for (const auto &[var, name] : free) {
        if (var < 0) note_name(DrsTerm::Named(name));
      }
      if (c.kind == DrsCondition::kImp && free.empty()) {
        if (auto a = SubProperty(c)) {
          axioms.push_back(*a);
        } else if (auto s = SubClass(c)) {
          axioms.push_back(*s);
        } else {
          throw NotTree{"a conditional without a universally quantified "
                        "subject is not supported"};
        }
        used[i] = true;
      } else if (c.kind == DrsCondition::kPred2 && c.a.named() &&
                 c.b.named()) {
        if (c.a == c.b) throw NotTree{"a relation links a term to itself"};
        axioms.push_back(
            Axiom::PropertyAssertion(Role{c.predicate, false}, c.a.name,
                                     c.b.name));
        used[i] = true;
      }
    }
    Roller roller(false);
    for (const std::string &name : names) {
      Concept c = roller.Node(drs, DrsTerm::Named(name), &used, &visited);
      AddAssertions(c, name, &axioms);
    }
    for (int v : drs.referents) {
      if (!visited.count(v)) {
        throw NotTree{"an existential statement needs a named individual"};
      }
    }
    roller.Check(drs, used, visited);
    return Expressibility::InOwl(std::move(axioms));
  } catch (const NotTree &e) {
    return Expressibility::OutsideOwl(e.reason);
  }
}

Query TranslateQuestion(const ParseTree &tree, const Lexicon &lexicon) {
  if (!tree.interrogative()) {
    throw Error(ErrorCode::kUnsupportedQuestion, "not a question");
  }
  const ParseNode &q = tree.root.children[0];
  Query query;
  if (q.kind == RuleKind::kQuestionIdentity) {
    query.mode = Query::kIndividual;
    query.individual = lexicon.Get(q.children[2].token->entry).symbol();
    return query;
  }
  DrsBuilder builder(lexicon, tree.root);
  Drs top;
  int v = builder.Question(q, &top);
  try {
    Roller roller(true);
    query.mode = Query::kClass;
    query.target = roller.Box(top, DrsTerm::Var(v));
  } catch (const NotTree &e) {
    throw Error(ErrorCode::kUnsupportedQuestion,
                "question cannot be answered: " + e.reason);
  }
  return query;
}

std::optional<std::vector<Token>> SuggestEvery(const std::vector<Token> &tokens,
                                               const Lexicon &lexicon,
                                               const Grammar &grammar) {
  if (tokens.size() < 2 || tokens[0].kind != TokenKind::kFunctionWord ||
      (tokens[0].surface != "a" && tokens[0].surface != "an") ||
      tokens.back().surface != ".") {
    return std::nullopt;
  }
  std::vector<Token> out = tokens;
  out[0] = Token::Word("every");
  if (CountParses(out, lexicon, grammar) == 0) return std::nullopt;
  return out;
}

}  // namespace cnl
