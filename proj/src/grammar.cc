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

#include "cnl/grammar.h"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "cnl/error.h"

namespace cnl {

Token Token::Word(std::string_view word) {
  Token t;
  t.kind = TokenKind::kFunctionWord;
  t.surface = std::string(word);
  return t;
}

Token Token::Lexical(const LexEntry &entry, FormRole role) {
  Token t;
  t.kind = TokenKind::kLexical;
  t.surface = entry.form(role);
  t.entry = entry.id();
  t.role = role;
  return t;
}

Token Token::Variable(std::string_view name) {
  Token t;
  t.kind = TokenKind::kVariable;
  t.surface = std::string(name);
  return t;
}

Token Token::Number(int value) {
  Token t;
  t.kind = TokenKind::kNumber;
  t.surface = std::to_string(value);
  t.number = value;
  return t;
}

Token Token::Terminator(char c) {
  Token t;
  t.kind = TokenKind::kTerminator;
  t.surface = std::string(1, c);
  return t;
}

const char *RuleKindName(RuleKind kind) {
  switch (kind) {
    case RuleKind::kSentenceStatement: return "SentenceStatement";
    case RuleKind::kSentenceIf: return "SentenceIf";
    case RuleKind::kSentenceQuestion: return "SentenceQuestion";
    case RuleKind::kCondSingle: return "CondSingle";
    case RuleKind::kCondOr: return "CondOr";
    case RuleKind::kConjSingle: return "ConjSingle";
    case RuleKind::kConjAnd: return "ConjAnd";
    case RuleKind::kStatement: return "Statement";
    case RuleKind::kVpcSingle: return "VpcSingle";
    case RuleKind::kVpcAnd: return "VpcAnd";
    case RuleKind::kVpcOr: return "VpcOr";
    case RuleKind::kVpTransitive: return "VpTransitive";
    case RuleKind::kVpNegTransitive: return "VpNegTransitive";
    case RuleKind::kVpCopulaNoun: return "VpCopulaNoun";
    case RuleKind::kVpCopulaAdjective: return "VpCopulaAdjective";
    case RuleKind::kVpNegCopulaNoun: return "VpNegCopulaNoun";
    case RuleKind::kVpNegCopulaAdjective: return "VpNegCopulaAdjective";
    case RuleKind::kVpPassive: return "VpPassive";
    case RuleKind::kNpDeterminer: return "NpDeterminer";
    case RuleKind::kNpCardinal: return "NpCardinal";
    case RuleKind::kNpProperName: return "NpProperName";
    case RuleKind::kNpVariable: return "NpVariable";
    case RuleKind::kNpSomebody: return "NpSomebody";
    case RuleKind::kNpSomething: return "NpSomething";
    case RuleKind::kNpDefinite: return "NpDefinite";
    case RuleKind::kNpPronoun: return "NpPronoun";
    case RuleKind::kNbarNoun: return "NbarNoun";
    case RuleKind::kNbarRelative: return "NbarRelative";
    case RuleKind::kNbarOf: return "NbarOf";
    case RuleKind::kRelSingle: return "RelSingle";
    case RuleKind::kRelAnd: return "RelAnd";
    case RuleKind::kRelOr: return "RelOr";
    case RuleKind::kQuestionWhat: return "QuestionWhat";
    case RuleKind::kQuestionWho: return "QuestionWho";
    case RuleKind::kQuestionWhich: return "QuestionWhich";
    case RuleKind::kQuestionIdentity: return "QuestionIdentity";
  }
  return "";
}

namespace {

const std::map<std::string, TermClass> &ClassNames() {
  static const std::map<std::string, TermClass> names = {
      {"$ProperName", TermClass::kProperName},
      {"$NounSgC", TermClass::kNounSgConsonant},
      {"$NounSgV", TermClass::kNounSgVowel},
      {"$NounSg", TermClass::kNounSg},
      {"$NounPl", TermClass::kNounPl},
      {"$OfC", TermClass::kOfConsonant},
      {"$OfV", TermClass::kOfVowel},
      {"$Of", TermClass::kOf},
      {"$Verb3sg", TermClass::kVerb3sg},
      {"$VerbInf", TermClass::kVerbInf},
      {"$VerbPP", TermClass::kVerbPastParticiple},
      {"$Adjective", TermClass::kAdjective},
      {"$Variable", TermClass::kVariable},
      {"$NumberOne", TermClass::kNumberOne},
      {"$NumberMany", TermClass::kNumberMany},
      {"$RelPron", TermClass::kRelativePronoun},
      {"$SubjPron", TermClass::kSubjectPronoun},
      {"$ObjPron", TermClass::kObjectPronoun},
  };
  return names;
}

const char *const kVariables[] = {"X", "Y", "Z"};

bool IsOneOf(std::string_view word, std::initializer_list<const char *> set) {
  for (const char *s : set) {
    if (word == s) return true;
  }
  return false;
}

// Token-level facts used by the class terminals.
bool ClassMatches(TermClass cls, const Token &token, int max_number) {
  switch (cls) {
    case TermClass::kLiteral:
      return false;
    case TermClass::kVariable:
      return token.kind == TokenKind::kVariable;
    case TermClass::kNumberOne:
      return token.kind == TokenKind::kNumber && token.number == 1;
    case TermClass::kNumberMany:
      return token.kind == TokenKind::kNumber && token.number >= 2 &&
             token.number <= max_number;
    case TermClass::kRelativePronoun:
      return token.kind == TokenKind::kFunctionWord &&
             IsOneOf(token.surface, {"that", "who", "which"});
    case TermClass::kSubjectPronoun:
      return token.kind == TokenKind::kFunctionWord &&
             IsOneOf(token.surface, {"he", "she", "it"});
    case TermClass::kObjectPronoun:
      return token.kind == TokenKind::kFunctionWord &&
             IsOneOf(token.surface, {"him", "her", "it"});
    default:
      break;
  }
  if (token.kind != TokenKind::kLexical) return false;
  switch (cls) {
    case TermClass::kProperName:
      return token.role == FormRole::kName ||
             token.role == FormRole::kAbbreviation;
    case TermClass::kNounSgConsonant:
      return token.role == FormRole::kSingular && !TakesAn(token.surface);
    case TermClass::kNounSgVowel:
      return token.role == FormRole::kSingular && TakesAn(token.surface);
    case TermClass::kNounSg:
      return token.role == FormRole::kSingular;
    case TermClass::kNounPl:
      return token.role == FormRole::kPlural;
    case TermClass::kOfConsonant:
      return token.role == FormRole::kOfNoun && !TakesAn(token.surface);
    case TermClass::kOfVowel:
      return token.role == FormRole::kOfNoun && TakesAn(token.surface);
    case TermClass::kOf:
      return token.role == FormRole::kOfNoun;
    case TermClass::kVerb3sg:
      return token.role == FormRole::kThirdSingular;
    case TermClass::kVerbInf:
      return token.role == FormRole::kInfinitive;
    case TermClass::kVerbPastParticiple:
      return token.role == FormRole::kPastParticiple;
    case TermClass::kAdjective:
      return token.role == FormRole::kAdjective;
    default:
      return false;
  }
}

}  // namespace

Grammar::Grammar(GrammarOptions options) : options_(options) { Build(); }

const Grammar &Grammar::Default() {
  static const Grammar *grammar = new Grammar();
  return *grammar;
}

int Grammar::Nonterminal(const std::string &name) {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  names_.push_back(name);
  by_lhs_.emplace_back();
  return static_cast<int>(names_.size() - 1);
}

int Grammar::Literal(const std::string &word) {
  for (size_t i = 0; i < terminals_.size(); ++i) {
    if (terminals_[i].cls == TermClass::kLiteral &&
        terminals_[i].literal == word) {
      return static_cast<int>(i);
    }
  }
  terminals_.push_back({TermClass::kLiteral, word});
  return static_cast<int>(terminals_.size() - 1);
}

int Grammar::Class(TermClass cls) {
  for (size_t i = 0; i < terminals_.size(); ++i) {
    if (terminals_[i].cls == cls) return static_cast<int>(i);
  }
  terminals_.push_back({cls, ""});
  return static_cast<int>(terminals_.size() - 1);
}

// Right-hand side notation: 'word is a literal, $Name a terminal class and
// anything else a nonterminal.
void Grammar::Add(const std::string &lhs, RuleKind kind,
                  const std::vector<std::string> &rhs) {
  Rule rule;
  rule.lhs = static_cast<int16_t>(Nonterminal(lhs));
  rule.kind = kind;
  for (const std::string &s : rhs) {
    Symbol symbol;
    if (s[0] == '\'') {
      symbol = {true, static_cast<int16_t>(Literal(s.substr(1)))};
    } else if (s[0] == '$') {
      symbol = {true, static_cast<int16_t>(Class(ClassNames().at(s)))};
    } else {
      symbol = {false, static_cast<int16_t>(Nonterminal(s))};
    }
    rule.rhs.push_back(symbol);
  }
  by_lhs_[rule.lhs].push_back(static_cast<int>(rules_.size()));
  rules_.push_back(std::move(rule));
}

void Grammar::Build() {
  const std::vector<std::string> numbers = {"sg", "pl"};
  const std::vector<std::string> opens = {"O", "C"};
  start_ = Nonterminal("S");

  Add("S", RuleKind::kSentenceStatement, {"STMT", "'."});
  Add("S", RuleKind::kSentenceIf, {"'if", "COND", "'then", "COND", "'."});
  Add("S", RuleKind::kSentenceQuestion, {"Q", "'?"});
  Add("COND", RuleKind::kCondSingle, {"CONJ"});
  Add("COND", RuleKind::kCondOr, {"CONJ", "'or", "COND"});
  Add("CONJ", RuleKind::kConjSingle, {"STMT"});
  Add("CONJ", RuleKind::kConjAnd, {"STMT", "'and", "CONJ"});
  for (const auto &n : numbers) {
    for (const auto &o : opens) {
      Add("STMT", RuleKind::kStatement, {"NP_" + n + "_subj_" + o, "VPC_" + n});
    }
  }

  // Coordinated verb phrases; "and" binds tighter than "or", which the
  // semantics applies over the flat list.
  for (const auto &n : numbers) {
    const std::string vpc = "VPC_" + n;
    for (const auto &o : opens) {
      const std::string vp = "VP_" + n + "_" + o;
      Add(vpc, RuleKind::kVpcSingle, {vp});
      Add(vpc, RuleKind::kVpcAnd, {vp, "'and", vpc});
      Add(vpc, RuleKind::kVpcOr, {vp, "'or", vpc});
    }
  }

  for (const auto &o : opens) {
    const std::string vs = "VP_sg_" + o;
    const std::string vp = "VP_pl_" + o;
    for (const auto &m : numbers) {
      const std::string obj = "NP_" + m + "_obj_" + o;
      Add(vs, RuleKind::kVpTransitive, {"$Verb3sg", obj});
      Add(vs, RuleKind::kVpNegTransitive, {"'does", "'not", "$VerbInf", obj});
      Add(vs, RuleKind::kVpCopulaAdjective, {"'is", "$Adjective", obj});
      Add(vs, RuleKind::kVpNegCopulaAdjective,
          {"'is", "'not", "$Adjective", obj});
      Add(vs, RuleKind::kVpPassive, {"'is", "$VerbPP", "'by", obj});
      Add(vp, RuleKind::kVpTransitive, {"$VerbInf", obj});
      Add(vp, RuleKind::kVpNegTransitive, {"'do", "'not", "$VerbInf", obj});
      Add(vp, RuleKind::kVpCopulaAdjective, {"'are", "$Adjective", obj});
      Add(vp, RuleKind::kVpNegCopulaAdjective,
          {"'are", "'not", "$Adjective", obj});
      Add(vp, RuleKind::kVpPassive, {"'are", "$VerbPP", "'by", obj});
    }
    Add(vs, RuleKind::kVpCopulaNoun, {"'is", "'a", "NBAR_c_" + o});
    Add(vs, RuleKind::kVpCopulaNoun, {"'is", "'an", "NBAR_v_" + o});
    Add(vs, RuleKind::kVpNegCopulaNoun, {"'is", "'not", "'a", "NBAR_c_" + o});
    Add(vs, RuleKind::kVpNegCopulaNoun, {"'is", "'not", "'an", "NBAR_v_" + o});
    Add(vp, RuleKind::kVpCopulaNoun, {"'are", "NBARPL_" + o});
    Add(vp, RuleKind::kVpNegCopulaNoun, {"'are", "'not", "NBARPL_" + o});
  }

  const std::vector<std::vector<std::string>> cardinals = {
      {"'at", "'least"}, {"'at", "'most"}, {"'exactly"},
      {"'more", "'than"}, {"'less", "'than"}};
  for (const std::string role : {"subj", "obj"}) {
    for (const auto &o : opens) {
      const std::string sg = "NP_sg_" + role + "_" + o;
      const std::string pl = "NP_pl_" + role + "_" + o;
      Add(sg, RuleKind::kNpDeterminer, {"'a", "NBAR_c_" + o});
      Add(sg, RuleKind::kNpDeterminer, {"'an", "NBAR_v_" + o});
      Add(sg, RuleKind::kNpDeterminer, {"'every", "NBAR_any_" + o});
      Add(sg, RuleKind::kNpDeterminer, {"'no", "NBAR_any_" + o});
      Add(pl, RuleKind::kNpDeterminer, {"'some", "NBARPL_" + o});
      for (const auto &card : cardinals) {
        std::vector<std::string> rhs = card;
        rhs.push_back("$NumberOne");
        rhs.push_back("NBAR_any_" + o);
        Add(sg, RuleKind::kNpCardinal, rhs);
        rhs = card;
        rhs.push_back("$NumberMany");
        rhs.push_back("NBARPL_" + o);
        Add(pl, RuleKind::kNpCardinal, rhs);
      }
      if (o == "C") {
        Add(sg, RuleKind::kNpProperName, {"$ProperName"});
        Add(sg, RuleKind::kNpVariable, {"$Variable"});
        Add(sg, RuleKind::kNpSomebody, {"'somebody"});
        Add(sg, RuleKind::kNpSomebody, {"'somebody", "$Variable"});
        Add(sg, RuleKind::kNpSomething, {"'something"});
        Add(sg, RuleKind::kNpSomething, {"'something", "$Variable"});
        Add(sg, RuleKind::kNpDefinite, {"'the", "$NounSg"});
        Add(sg, RuleKind::kNpPronoun,
            {role == "subj" ? "$SubjPron" : "$ObjPron"});
      }
    }
  }

  // Singular N' by article class; an open N' ends in a relative clause.
  const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
      articles = {{"c", {"$NounSgC", "$OfC"}},
                  {"v", {"$NounSgV", "$OfV"}},
                  {"any", {"$NounSg", "$Of"}}};
  for (const auto &[av, classes] : articles) {
    const std::string closed = "NBAR_" + av + "_C";
    const std::string open = "NBAR_" + av + "_O";
    Add(closed, RuleKind::kNbarNoun, {classes.first});
    Add(open, RuleKind::kNbarRelative, {classes.first, "REL_sg"});
    for (const auto &m : numbers) {
      Add(closed, RuleKind::kNbarOf, {classes.second, "'of", "NP_" + m + "_obj_C"});
      Add(open, RuleKind::kNbarOf, {classes.second, "'of", "NP_" + m + "_obj_O"});
    }
  }
  Add("NBARPL_C", RuleKind::kNbarNoun, {"$NounPl"});
  Add("NBARPL_O", RuleKind::kNbarRelative, {"$NounPl", "REL_pl"});

  for (const auto &n : numbers) {
    const std::string rel = "REL_" + n;
    for (const auto &o : opens) {
      Add(rel, RuleKind::kRelSingle, {"$RelPron", "VP_" + n + "_" + o});
    }
    Add(rel, RuleKind::kRelAnd, {"$RelPron", "VP_" + n + "_C", "'and", rel});
    Add(rel, RuleKind::kRelOr, {"$RelPron", "VP_" + n + "_C", "'or", rel});
  }

  Add("Q", RuleKind::kQuestionWhat, {"'what", "VPC_sg"});
  Add("Q", RuleKind::kQuestionWho, {"'who", "VPC_sg"});
  for (const auto &o : opens) {
    Add("Q", RuleKind::kQuestionWhich, {"'which", "NBAR_any_" + o, "VPC_sg"});
    Add("Q", RuleKind::kQuestionWhich, {"'which", "NBARPL_" + o, "VPC_pl"});
  }
  Add("Q", RuleKind::kQuestionIdentity, {"'what", "'is", "$ProperName"});
  Add("Q", RuleKind::kQuestionIdentity, {"'who", "'is", "$ProperName"});
}

bool Grammar::Matches(int terminal, const Token &token) const {
  const Terminal &t = terminals_[terminal];
  if (t.cls == TermClass::kLiteral) {
    return (token.kind == TokenKind::kFunctionWord ||
            token.kind == TokenKind::kTerminator) &&
           token.surface == t.literal;
  }
  return ClassMatches(t.cls, token, options_.max_number);
}

TerminalSet Grammar::Match(const Token &token) const {
  TerminalSet set;
  for (size_t i = 0; i < terminals_.size(); ++i) {
    if (Matches(static_cast<int>(i), token)) set.set(i);
  }
  return set;
}

std::vector<Token> Grammar::Expand(int terminal,
                                   const Lexicon &lexicon) const {
  const Terminal &t = terminals_[terminal];
  std::vector<Token> out;
  switch (t.cls) {
    case TermClass::kLiteral:
      if (t.literal == "." || t.literal == "?") {
        out.push_back(Token::Terminator(t.literal[0]));
      } else {
        out.push_back(Token::Word(t.literal));
      }
      return out;
    case TermClass::kVariable:
      for (const char *v : kVariables) out.push_back(Token::Variable(v));
      return out;
    case TermClass::kNumberOne:
      out.push_back(Token::Number(1));
      return out;
    case TermClass::kNumberMany:
      for (int i = 2; i <= options_.max_number; ++i) {
        out.push_back(Token::Number(i));
      }
      return out;
    case TermClass::kRelativePronoun:
      for (const char *w : {"that", "which", "who"}) {
        out.push_back(Token::Word(w));
      }
      return out;
    case TermClass::kSubjectPronoun:
      for (const char *w : {"he", "it", "she"}) out.push_back(Token::Word(w));
      return out;
    case TermClass::kObjectPronoun:
      for (const char *w : {"her", "him", "it"}) out.push_back(Token::Word(w));
      return out;
    default:
      break;
  }
  for (const auto &[id, entry] : lexicon.entries()) {
    for (const auto &[role, form] : entry.forms()) {
      Token token = Token::Lexical(entry, role);
      if (ClassMatches(t.cls, token, options_.max_number)) {
        out.push_back(std::move(token));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Token &a, const Token &b) {
    return a.surface < b.surface;
  });
  return out;
}

std::string Grammar::SymbolName(Symbol symbol) const {
  if (!symbol.terminal) return names_[symbol.id];
  const Terminal &t = terminals_[symbol.id];
  if (t.cls == TermClass::kLiteral) return "'" + t.literal;
  for (const auto &[name, cls] : ClassNames()) {
    if (cls == t.cls) return name;
  }
  return "?";
}

Grammar::Usable Grammar::UsableFor(const Lexicon &lexicon) const {
  Usable usable;
  usable.terminal.assign(terminals_.size(), false);
  for (size_t i = 0; i < terminals_.size(); ++i) {
    const Terminal &t = terminals_[i];
    switch (t.cls) {
      case TermClass::kLiteral:
      case TermClass::kVariable:
      case TermClass::kNumberOne:
      case TermClass::kRelativePronoun:
      case TermClass::kSubjectPronoun:
      case TermClass::kObjectPronoun:
        usable.terminal[i] = true;
        break;
      case TermClass::kNumberMany:
        usable.terminal[i] = options_.max_number >= 2;
        break;
      default:
        usable.terminal[i] = false;
        break;
    }
  }
  for (const auto &[id, entry] : lexicon.entries()) {
    for (const auto &[role, form] : entry.forms()) {
      Token token = Token::Lexical(entry, role);
      for (size_t i = 0; i < terminals_.size(); ++i) {
        if (!usable.terminal[i] &&
            ClassMatches(terminals_[i].cls, token, options_.max_number)) {
          usable.terminal[i] = true;
        }
      }
    }
  }

  // Shortest derivation per nonterminal by fixpoint; unproductive ones stay
  // at INT_MAX.
  usable.min_length.assign(names_.size(), INT_MAX);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule &rule : rules_) {
      long total = 0;
      for (const Symbol &s : rule.rhs) {
        if (s.terminal) {
          if (!usable.terminal[s.id]) {
            total = INT_MAX;
            break;
          }
          total += 1;
        } else {
          if (usable.min_length[s.id] == INT_MAX) {
            total = INT_MAX;
            break;
          }
          total += usable.min_length[s.id];
        }
      }
      if (total < usable.min_length[rule.lhs]) {
        usable.min_length[rule.lhs] = static_cast<int>(total);
        changed = true;
      }
    }
  }
  usable.nonterminal.assign(names_.size(), false);
  for (size_t i = 0; i < names_.size(); ++i) {
    usable.nonterminal[i] = usable.min_length[i] != INT_MAX;
  }
  usable.rule.assign(rules_.size(), false);
  for (size_t r = 0; r < rules_.size(); ++r) {
    bool ok = true;
    for (const Symbol &s : rules_[r].rhs) {
      ok &= s.terminal ? usable.terminal[s.id] : usable.nonterminal[s.id];
    }
    usable.rule[r] = ok;
  }
  return usable;
}

int Grammar::MinLength(const Usable &usable, const std::vector<Symbol> &symbols,
                       size_t from) const {
  long total = 0;
  for (size_t i = from; i < symbols.size(); ++i) {
    const Symbol &s = symbols[i];
    if (s.terminal) {
      if (!usable.terminal[s.id]) return INT_MAX;
      total += 1;
    } else {
      if (!usable.nonterminal[s.id]) return INT_MAX;
      total += usable.min_length[s.id];
    }
  }
  return total >= INT_MAX ? INT_MAX : static_cast<int>(total);
}

// ---------------------------------------------------------------------------
// Oracles.

namespace {

class TerminalEnumerator {
 public:
  TerminalEnumerator(const Grammar &grammar, const Grammar::Usable &usable,
                     int max_tokens,
                     const std::function<bool(const std::vector<int> &)> &emit)
      : grammar_(grammar), usable_(usable), max_(max_tokens), emit_(emit) {}

  void Run() {
    if (max_ <= 0 || !usable_.nonterminal[grammar_.start()]) return;
    stack_.push_back({false, static_cast<int16_t>(grammar_.start())});
    pending_ = usable_.min_length[grammar_.start()];
    if (pending_ <= max_) Step();
  }

 private:
  int Cost(const Symbol &s) const {
    return s.terminal ? 1 : usable_.min_length[s.id];
  }

  // Invariant: emitted_.size() + pending_ <= max_.
  bool Step() {
    if (stack_.empty()) return emit_(emitted_);
    Symbol top = stack_.back();
    stack_.pop_back();
    pending_ -= Cost(top);
    bool go_on = true;
    if (top.terminal) {
      emitted_.push_back(top.id);
      pending_ += 0;
      go_on = Step();
      emitted_.pop_back();
    } else {
      for (int r : grammar_.RulesFor(top.id)) {
        if (!usable_.rule[r]) continue;
        const Rule &rule = grammar_.rules()[r];
        int added = 0;
        for (const Symbol &s : rule.rhs) added += Cost(s);
        if (static_cast<int>(emitted_.size()) + pending_ + added > max_) continue;
        for (auto it = rule.rhs.rbegin(); it != rule.rhs.rend(); ++it) {
          stack_.push_back(*it);
        }
        pending_ += added;
        go_on = Step();
        pending_ -= added;
        stack_.resize(stack_.size() - rule.rhs.size());
        if (!go_on) break;
      }
    }
    stack_.push_back(top);
    pending_ += Cost(top);
    return go_on;
  }

  const Grammar &grammar_;
  const Grammar::Usable &usable_;
  int max_;
  const std::function<bool(const std::vector<int> &)> &emit_;
  std::vector<Symbol> stack_;  // top at back
  std::vector<int> emitted_;
  int pending_ = 0;
};

}  // namespace

void EnumerateTerminalSequences(
    const Lexicon &lexicon, int max_tokens,
    const std::function<bool(const std::vector<int> &)> &emit,
    const Grammar &grammar) {
  Grammar::Usable usable = grammar.UsableFor(lexicon);
  TerminalEnumerator enumerator(grammar, usable, max_tokens, emit);
  enumerator.Run();
}

void EnumerateSentences(
    const Lexicon &lexicon, int max_tokens,
    const std::function<bool(const std::vector<Token> &)> &emit,
    const Grammar &grammar) {
  std::vector<std::vector<Token>> expansions(grammar.terminals().size());
  for (size_t i = 0; i < expansions.size(); ++i) {
    expansions[i] = grammar.Expand(static_cast<int>(i), lexicon);
  }
  std::vector<Token> tokens;
  bool stop = false;
  std::function<void(const std::vector<int> &, size_t)> product =
      [&](const std::vector<int> &seq, size_t pos) {
        if (stop) return;
        if (pos == seq.size()) {
          if (!emit(tokens)) stop = true;
          return;
        }
        for (const Token &t : expansions[seq[pos]]) {
          tokens.push_back(t);
          product(seq, pos + 1);
          tokens.pop_back();
          if (stop) return;
        }
      };
  EnumerateTerminalSequences(
      lexicon, max_tokens,
      [&](const std::vector<int> &seq) {
        product(seq, 0);
        return !stop;
      },
      grammar);
}

TopDownRecognizer::TopDownRecognizer(const Grammar &grammar,
                                     const Lexicon &lexicon)
    : grammar_(grammar), usable_(grammar.UsableFor(lexicon)) {
  Reset();
}

std::vector<TopDownRecognizer::Stack> TopDownRecognizer::Expand(
    std::vector<Stack> stacks) const {
  std::set<Stack> done;
  while (!stacks.empty()) {
    Stack stack = std::move(stacks.back());
    stacks.pop_back();
    if (stack.empty() || stack.back().terminal) {
      done.insert(std::move(stack));
      continue;
    }
    Symbol top = stack.back();
    stack.pop_back();
    for (int r : grammar_.RulesFor(top.id)) {
      if (!usable_.rule[r]) continue;
      Stack next = stack;
      const Rule &rule = grammar_.rules()[r];
      for (auto it = rule.rhs.rbegin(); it != rule.rhs.rend(); ++it) {
        next.push_back(*it);
      }
      stacks.push_back(std::move(next));
    }
  }
  return {done.begin(), done.end()};
}

void TopDownRecognizer::Reset() {
  history_.clear();
  std::vector<Stack> initial;
  if (usable_.nonterminal[grammar_.start()]) {
    initial.push_back({Symbol{false, static_cast<int16_t>(grammar_.start())}});
  }
  history_.push_back(Expand(std::move(initial)));
}

bool TopDownRecognizer::Push(const Token &token) {
  std::vector<Stack> next;
  for (const Stack &stack : history_.back()) {
    if (stack.empty()) continue;
    if (grammar_.Matches(stack.back().id, token)) {
      Stack rest(stack.begin(), stack.end() - 1);
      next.push_back(std::move(rest));
    }
  }
  if (next.empty()) return false;
  history_.push_back(Expand(std::move(next)));
  return true;
}

void TopDownRecognizer::Pop() {
  if (history_.size() > 1) history_.pop_back();
}

TerminalSet TopDownRecognizer::Expected() const {
  TerminalSet set;
  for (const Stack &stack : history_.back()) {
    if (!stack.empty()) set.set(stack.back().id);
  }
  return set;
}

int TopDownRecognizer::MinRemaining() const {
  int best = INT_MAX;
  for (const Stack &stack : history_.back()) {
    best = std::min(best, grammar_.MinLength(usable_, stack));
  }
  return best;
}

bool TopDownRecognizer::Accepts(const std::vector<Token> &tokens) {
  Reset();
  for (const Token &t : tokens) {
    if (!Push(t)) return false;
  }
  for (const Stack &stack : history_.back()) {
    if (stack.empty()) return true;
  }
  return false;
}

}  // namespace cnl
