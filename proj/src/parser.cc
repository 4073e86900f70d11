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

#include <algorithm>
#include <climits>
#include <tuple>
#include <cctype>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "cnl/error.h"
#include "cnl/grammar.h"

namespace cnl {

namespace {

struct Item {
  int16_t rule;
  int16_t dot;
  int32_t origin;

  uint64_t Key() const {
    return (static_cast<uint64_t>(rule) << 40) |
           (static_cast<uint64_t>(dot) << 32) | static_cast<uint32_t>(origin);
  }
};

const char *GroupLabel(TermClass cls) {
  switch (cls) {
    case TermClass::kProperName: return "proper name";
    case TermClass::kNounSgConsonant:
    case TermClass::kNounSgVowel:
    case TermClass::kNounSg:
    case TermClass::kNounPl: return "noun";
    case TermClass::kOfConsonant:
    case TermClass::kOfVowel:
    case TermClass::kOf: return "of-construct";
    case TermClass::kVerb3sg:
    case TermClass::kVerbInf:
    case TermClass::kVerbPastParticiple: return "verb";
    case TermClass::kAdjective: return "adjective";
    case TermClass::kVariable: return "variable";
    case TermClass::kNumberOne:
    case TermClass::kNumberMany: return "number";
    default: return "function word";
  }
}

const char *const kGroupOrder[] = {"function word", "proper name", "noun",
                                   "verb",          "of-construct", "adjective",
                                   "variable",      "number"};

}  // namespace

void ParseNode::CollectTokens(std::vector<Token> *out) const {
  if (token) {
    out->push_back(*token);
    return;
  }
  for (const ParseNode &child : children) child.CollectTokens(out);
}

bool ParseTree::interrogative() const {
  return root.kind == RuleKind::kSentenceQuestion;
}

std::vector<Token> ParseTree::Tokens() const {
  std::vector<Token> out;
  root.CollectTokens(&out);
  return out;
}

bool CompletionMenu::Contains(std::string_view surface) const {
  for (const MenuGroup &g : groups) {
    for (const Token &t : g.tokens) {
      if (t.surface == surface) return true;
    }
  }
  return false;
}

std::vector<Token> CompletionMenu::AllTokens() const {
  std::vector<Token> out;
  for (const MenuGroup &g : groups) {
    out.insert(out.end(), g.tokens.begin(), g.tokens.end());
  }
  return out;
}

size_t CompletionMenu::size() const {
  size_t n = 0;
  for (const MenuGroup &g : groups) n += g.tokens.size();
  return n;
}

// ---------------------------------------------------------------------------
// Earley chart.

namespace {

// Item sets are kept in a pool and reused after Pop(), so a depth-first
// walk over prefixes does not allocate per step.
struct ItemSet {
  std::vector<Item> items;
  std::vector<uint32_t> table;  // open addressing, key + 1, 0 = empty
  std::vector<std::vector<int>> waiting;  // item indices by next nonterminal
  std::vector<int> outer;  // memo for MinRemaining, -1 = unknown
  std::vector<int> touched;  // nonterminals with waiting items or memo
  std::vector<int> scan;     // item indices whose next symbol is a terminal
  Token token;             // token consumed to reach this set
  int vocabulary = -1;

  static uint32_t KeyOf(const Item &item) {
    return (static_cast<uint32_t>(item.rule) << 20) |
           (static_cast<uint32_t>(item.dot) << 16) |
           static_cast<uint32_t>(item.origin);
  }

  // Clears only what the previous use touched.
  void Reset(size_t nonterminals) {
    if (table.empty()) table.assign(1024, 0);
    for (const Item &item : items) Erase(KeyOf(item));
    items.clear();
    scan.clear();
    if (waiting.size() != nonterminals) {
      waiting.assign(nonterminals, {});
      outer.assign(nonterminals, -1);
      touched.clear();
    }
    for (int n : touched) {
      waiting[n].clear();
      outer[n] = -1;
    }
    touched.clear();
  }

  void Wait(int nonterminal, int item) {
    if (waiting[nonterminal].empty() && outer[nonterminal] < 0) {
      touched.push_back(nonterminal);
    }
    waiting[nonterminal].push_back(item);
  }

  void SetOuter(int nonterminal, int value) {
    if (waiting[nonterminal].empty() && outer[nonterminal] < 0) {
      touched.push_back(nonterminal);
    }
    outer[nonterminal] = value;
  }

  void Erase(uint32_t key) {
    size_t mask = table.size() - 1;
    for (size_t h = (key * 2654435761u) & mask;; h = (h + 1) & mask) {
      if (table[h] == key + 1) {
        table[h] = 0;
        return;
      }
    }
  }

  bool Contains(uint32_t key) const {
    size_t mask = table.size() - 1;
    for (size_t h = (key * 2654435761u) & mask;; h = (h + 1) & mask) {
      if (table[h] == 0) return false;
      if (table[h] == key + 1) return true;
    }
  }

  bool Insert(uint32_t key) {
    if ((items.size() + 1) * 2 > table.size()) Grow();
    size_t mask = table.size() - 1;
    for (size_t h = (key * 2654435761u) & mask;; h = (h + 1) & mask) {
      if (table[h] == 0) {
        table[h] = key + 1;
        return true;
      }
      if (table[h] == key + 1) return false;
    }
  }

  void Grow() {
    std::vector<uint32_t> old = std::move(table);
    table.assign(old.size() * 2, 0);
    size_t mask = table.size() - 1;
    for (uint32_t k : old) {
      if (k == 0) continue;
      size_t h = ((k - 1) * 2654435761u) & mask;
      while (table[h] != 0) h = (h + 1) & mask;
      table[h] = k;
    }
  }
};

}  // namespace

struct EarleyChart::Impl {
  Impl(const Grammar &g, const Lexicon &lex)
      : grammar(g), lexicon(lex), usable(g.UsableFor(lex)) {
    for (const Rule &rule : grammar.rules()) {
      std::vector<int> rest(rule.rhs.size() + 1);
      for (size_t d = 0; d <= rule.rhs.size(); ++d) {
        rest[d] = grammar.MinLength(usable, rule.rhs, d);
      }
      min_rest.push_back(std::move(rest));
    }
    Open();
    if (usable.nonterminal[grammar.start()]) {
      Predict(0, grammar.start());
      Close(0);
    }
  }

  const Grammar &grammar;
  const Lexicon &lexicon;
  Grammar::Usable usable;
  // Per rule and dot, fewest tokens that finish the rule.
  std::vector<std::vector<int>> min_rest;
  std::vector<ItemSet> pool;
  size_t active = 0;  // number of live sets; set k follows k tokens

  std::vector<Token> vocabulary;
  std::vector<TerminalSet> vocabulary_match;
  // Per terminal, the vocabulary indices it expands to.
  std::vector<std::vector<int>> terminal_tokens;

  // Built on first use; plain parsing does not need it.
  void BuildVocabulary() {
    if (!terminal_tokens.empty()) return;
    std::vector<std::vector<Token>> expansions;
    std::vector<std::pair<std::string, Token>> all;
    for (size_t i = 0; i < grammar.terminals().size(); ++i) {
      expansions.push_back(grammar.Expand(static_cast<int>(i), lexicon));
      for (const Token &t : expansions.back()) all.emplace_back(t.surface, t);
    }
    std::sort(all.begin(), all.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    std::unordered_map<std::string, int> index;
    for (auto &[surface, token] : all) {
      if (index.count(surface)) continue;
      index[surface] = static_cast<int>(vocabulary.size());
      vocabulary_match.push_back(grammar.Match(token));
      vocabulary.push_back(std::move(token));
    }
    terminal_tokens.resize(expansions.size());
    for (size_t i = 0; i < expansions.size(); ++i) {
      for (const Token &t : expansions[i]) {
        terminal_tokens[i].push_back(index.at(t.surface));
      }
    }
  }

  size_t last() const { return active - 1; }

  ItemSet &Open() {
    if (pool.size() == active) pool.emplace_back();
    ItemSet &set = pool[active++];
    set.Reset(grammar.nonterminals().size());
    return set;
  }

  const Rule &RuleOf(const Item &item) const {
    return grammar.rules()[item.rule];
  }

  void AddItem(size_t set, Item item) {
    ItemSet &s = pool[set];
    if (!s.Insert(ItemSet::KeyOf(item))) return;
    const Rule &rule = RuleOf(item);
    if (item.dot < static_cast<int16_t>(rule.rhs.size())) {
      if (rule.rhs[item.dot].terminal) {
        s.scan.push_back(static_cast<int>(s.items.size()));
      } else {
        s.Wait(rule.rhs[item.dot].id, static_cast<int>(s.items.size()));
      }
    }
    s.items.push_back(item);
  }

  void Predict(size_t set, int nonterminal) {
    for (int r : grammar.RulesFor(nonterminal)) {
      if (!usable.rule[r]) continue;
      AddItem(set, Item{static_cast<int16_t>(r), 0, static_cast<int32_t>(set)});
    }
  }

  void Close(size_t set) {
    for (size_t i = 0; i < pool[set].items.size(); ++i) {
      Item item = pool[set].items[i];
      const Rule &rule = RuleOf(item);
      if (item.dot == static_cast<int16_t>(rule.rhs.size())) {
        // Complete: advance items in the origin set waiting for rule.lhs.
        // No rule is empty, so the origin set is never 'set' itself.
        const ItemSet &origin = pool[item.origin];
        for (int k : origin.waiting[rule.lhs]) {
          const Item &parent = origin.items[k];
          AddItem(set, Item{parent.rule, static_cast<int16_t>(parent.dot + 1),
                            parent.origin});
        }
        continue;
      }
      const Symbol &next = rule.rhs[item.dot];
      // Predict once, on behalf of the first item waiting for 'next'.
      if (!next.terminal &&
          pool[set].waiting[next.id][0] == static_cast<int>(i)) {
        Predict(set, next.id);
      }
    }
  }

  bool Push(const Token &token, const TerminalSet &match, int vocab) {
    size_t from = last();
    ItemSet &next = Open();
    next.token = token;
    next.vocabulary = vocab;
    size_t to = last();
    for (int k : pool[from].scan) {
      const Item &item = pool[from].items[k];
      const Symbol &s = RuleOf(item).rhs[item.dot];
      if (match.test(s.id)) {
        AddItem(to, Item{item.rule, static_cast<int16_t>(item.dot + 1),
                         item.origin});
      }
    }
    if (pool[to].items.empty()) {
      --active;
      return false;
    }
    Close(to);
    return true;
  }

  TerminalSet Expected() const {
    TerminalSet set;
    for (int k : pool[last()].scan) {
      const Item &item = pool[last()].items[k];
      set.set(RuleOf(item).rhs[item.dot].id);
    }
    return set;
  }

  // Fewest tokens needed after set 'set' to finish 'nonterminal' predicted
  // there and everything above it.
  int Outer(size_t set, int nonterminal) const {
    ItemSet &s = const_cast<ItemSet &>(pool[set]);
    if (s.outer[nonterminal] >= 0) return s.outer[nonterminal];
    int best = INT32_MAX;
    if (set == 0 && nonterminal == grammar.start()) best = 0;
    for (int k : s.waiting[nonterminal]) {
      const Item &parent = s.items[k];
      const Rule &rule = RuleOf(parent);
      int after = min_rest[parent.rule][parent.dot + 1];
      int up = Outer(parent.origin, rule.lhs);
      if (after != INT32_MAX && up != INT32_MAX) {
        best = std::min(best, after + up);
      }
    }
    s.SetOuter(nonterminal, best);
    return best;
  }

  int MinRemaining() const {
    int best = INT32_MAX;
    for (const Item &item : pool[last()].items) {
      const Rule &rule = RuleOf(item);
      int rest = min_rest[item.rule][item.dot];
      int up = Outer(item.origin, rule.lhs);
      if (rest != INT32_MAX && up != INT32_MAX) best = std::min(best, rest + up);
    }
    return best;
  }

  bool Has(size_t set, int rule, int dot, int origin) const {
    Item item{static_cast<int16_t>(rule), static_cast<int16_t>(dot),
              static_cast<int32_t>(origin)};
    return pool[set].Contains(ItemSet::KeyOf(item));
  }

  // Completed rules for 'nonterminal' spanning [from, to).
  std::vector<int> CompletedRules(int nonterminal, size_t from,
                                  size_t to) const {
    std::vector<int> out;
    for (int r : grammar.RulesFor(nonterminal)) {
      if (!usable.rule[r]) continue;
      if (Has(to, r, static_cast<int>(grammar.rules()[r].rhs.size()),
              static_cast<int>(from))) {
        out.push_back(r);
      }
    }
    return out;
  }

  // Tree building and counting. Token k leads from set k to set k + 1.
  using Key = std::tuple<int, int, size_t, size_t>;
  mutable std::map<Key, uint64_t> count_memo;

  uint64_t CountSymbol(Symbol s, size_t from, size_t to) const {
    if (s.terminal) {
      return (to == from + 1 && grammar.Matches(s.id, pool[to].token)) ? 1 : 0;
    }
    uint64_t total = 0;
    for (int r : CompletedRules(s.id, from, to)) {
      total += CountRule(r, static_cast<int>(grammar.rules()[r].rhs.size()),
                         from, to);
    }
    return total;
  }

  // Ways rhs[0..dot) of the rule derives tokens [from, to).
  uint64_t CountRule(int rule, int dot, size_t from, size_t to) const {
    if (dot == 0) return from == to ? 1 : 0;
    Key key{rule, dot, from, to};
    auto it = count_memo.find(key);
    if (it != count_memo.end()) return it->second;
    const Symbol &last_symbol = grammar.rules()[rule].rhs[dot - 1];
    uint64_t total = 0;
    for (size_t mid = from; mid < to; ++mid) {
      if (!Has(mid, rule, dot - 1, static_cast<int>(from))) continue;
      uint64_t right = CountSymbol(last_symbol, mid, to);
      if (right == 0) continue;
      total += right * CountRule(rule, dot - 1, from, mid);
    }
    count_memo[key] = total;
    return total;
  }

  bool BuildSymbol(Symbol s, size_t from, size_t to, ParseNode *out) const {
    if (s.terminal) {
      if (to != from + 1 || !grammar.Matches(s.id, pool[to].token)) {
        return false;
      }
      out->rule = -1;
      out->token = pool[to].token;
      return true;
    }
    for (int r : CompletedRules(s.id, from, to)) {
      const Rule &rule = grammar.rules()[r];
      std::vector<ParseNode> children(rule.rhs.size());
      if (BuildRule(r, static_cast<int>(rule.rhs.size()), from, to,
                    &children)) {
        out->rule = r;
        out->kind = rule.kind;
        out->children = std::move(children);
        return true;
      }
    }
    return false;
  }

  bool BuildRule(int rule, int dot, size_t from, size_t to,
                 std::vector<ParseNode> *children) const {
    if (dot == 0) return from == to;
    const Symbol &last_symbol = grammar.rules()[rule].rhs[dot - 1];
    for (size_t mid = to; mid-- > from;) {
      if (!Has(mid, rule, dot - 1, static_cast<int>(from))) continue;
      ParseNode node;
      if (!BuildSymbol(last_symbol, mid, to, &node)) continue;
      if (BuildRule(rule, dot - 1, from, mid, children)) {
        (*children)[dot - 1] = std::move(node);
        return true;
      }
    }
    return false;
  }
};

EarleyChart::EarleyChart(const Grammar &grammar, const Lexicon &lexicon)
    : impl_(new Impl(grammar, lexicon)) {}

EarleyChart::~EarleyChart() { delete impl_; }

bool EarleyChart::Push(const Token &token) {
  impl_->count_memo.clear();
  return impl_->Push(token, impl_->grammar.Match(token), -1);
}

bool EarleyChart::PushVocabulary(int index) {
  impl_->count_memo.clear();
  impl_->BuildVocabulary();
  return impl_->Push(impl_->vocabulary[index], impl_->vocabulary_match[index],
                     index);
}

void EarleyChart::Pop() {
  if (impl_->active > 1) --impl_->active;
  impl_->count_memo.clear();
}

size_t EarleyChart::size() const { return impl_->active - 1; }

TerminalSet EarleyChart::Expected() const { return impl_->Expected(); }

const std::vector<Token> &EarleyChart::Vocabulary() const {
  impl_->BuildVocabulary();
  return impl_->vocabulary;
}

void EarleyChart::ExpectedTokens(std::vector<int> *out) const {
  impl_->BuildVocabulary();
  out->clear();
  TerminalSet expected = Expected();
  for (size_t i = 0; i < impl_->terminal_tokens.size(); ++i) {
    if (!expected.test(i)) continue;
    const auto &tokens = impl_->terminal_tokens[i];
    out->insert(out->end(), tokens.begin(), tokens.end());
  }
  std::sort(out->begin(), out->end());
  out->erase(std::unique(out->begin(), out->end()), out->end());
}

int EarleyChart::MinRemaining() const { return impl_->MinRemaining(); }

CompletionMenu EarleyChart::Menu() const {
  impl_->BuildVocabulary();
  TerminalSet expected = Expected();
  const Grammar &grammar = impl_->grammar;
  std::map<std::string, std::vector<int>> groups;
  for (size_t i = 0; i < grammar.terminals().size(); ++i) {
    if (!expected.test(i)) continue;
    auto &group = groups[GroupLabel(grammar.terminals()[i].cls)];
    const auto &tokens = impl_->terminal_tokens[i];
    group.insert(group.end(), tokens.begin(), tokens.end());
  }
  CompletionMenu menu;
  for (const char *label : kGroupOrder) {
    auto it = groups.find(label);
    if (it == groups.end()) continue;
    std::vector<int> &indices = it->second;
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    MenuGroup group{label, {}};
    for (int i : indices) group.tokens.push_back(impl_->vocabulary[i]);
    std::stable_sort(group.tokens.begin(), group.tokens.end(),
                     [](const Token &a, const Token &b) {
                       if (a.kind == TokenKind::kNumber &&
                           b.kind == TokenKind::kNumber) {
                         return a.number < b.number;
                       }
                       return false;
                     });
    menu.groups.push_back(std::move(group));
  }
  return menu;
}

bool EarleyChart::Complete() const {
  const Grammar &grammar = impl_->grammar;
  if (impl_->active < 2) return false;
  return !impl_->CompletedRules(grammar.start(), 0, impl_->last()).empty();
}

ParseTree EarleyChart::Tree() const {
  ParseTree tree;
  Symbol start{false, static_cast<int16_t>(impl_->grammar.start())};
  if (!impl_->BuildSymbol(start, 0, impl_->last(), &tree.root)) {
    throw Error(ErrorCode::kSyntaxError, "incomplete sentence",
                static_cast<int>(size()));
  }
  return tree;
}

uint64_t EarleyChart::CountTrees() const {
  if (!Complete()) return 0;
  Symbol start{false, static_cast<int16_t>(impl_->grammar.start())};
  return impl_->CountSymbol(start, 0, impl_->last());
}

// ---------------------------------------------------------------------------
// Public operations.

std::vector<Token> Tokenize(std::string_view text, const Lexicon &lexicon,
                            const Grammar &grammar) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  bool terminated = false;
  char terminator = 0;
  if (!words.empty()) {
    std::string &last = words.back();
    char c = last.back();
    if (c == '.' || c == '?') {
      terminated = true;
      terminator = c;
      last.pop_back();
      if (last.empty()) words.pop_back();
    }
  }

  size_t max_words = 1;
  for (const auto &[form, ref] : lexicon.index()) {
    max_words =
        std::max(max_words, 1 + static_cast<size_t>(std::count(
                                    form.begin(), form.end(), '_')));
  }

  std::unordered_set<std::string> function_words;
  for (const Terminal &t : grammar.terminals()) {
    if (t.cls == TermClass::kLiteral) function_words.insert(t.literal);
  }
  for (const char *w : {"that", "who", "which", "he", "she", "it", "him",
                        "her"}) {
    function_words.insert(w);
  }

  std::vector<Token> tokens;
  for (size_t i = 0; i < words.size();) {
    bool found = false;
    for (size_t n = std::min(max_words, words.size() - i); n >= 1; --n) {
      std::string candidate = words[i];
      for (size_t k = 1; k < n; ++k) candidate += "_" + words[i + k];
      auto resolved = lexicon.Resolve(candidate);
      if (!resolved.empty()) {
        tokens.push_back(Token::Lexical(*resolved[0].first, resolved[0].second));
        i += n;
        found = true;
        break;
      }
    }
    if (found) continue;
    const std::string &w = words[i];
    if (w == "X" || w == "Y" || w == "Z") {
      tokens.push_back(Token::Variable(w));
    } else if (!w.empty() && w.size() <= 6 &&
               std::all_of(w.begin(), w.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               }) &&
               w[0] != '0') {
      tokens.push_back(Token::Number(std::stoi(w)));
    } else {
      std::string lower = w;
      for (char &c : lower) c = std::tolower(static_cast<unsigned char>(c));
      if (lower == "." || lower == "?" || !function_words.count(lower)) {
        throw Error(ErrorCode::kUnknownToken,
                    "unknown word '" + w + "' at token " +
                        std::to_string(tokens.size()),
                    static_cast<int>(tokens.size()), {w});
      }
      tokens.push_back(Token::Word(lower));
    }
    ++i;
  }
  if (terminated) tokens.push_back(Token::Terminator(terminator));
  return tokens;
}

namespace {

std::vector<std::string> Surfaces(const CompletionMenu &menu) {
  std::vector<std::string> out;
  for (const Token &t : menu.AllTokens()) out.push_back(t.surface);
  return out;
}

}  // namespace

ParseTree Parse(const std::vector<Token> &tokens, const Lexicon &lexicon,
                const Grammar &grammar) {
  EarleyChart chart(grammar, lexicon);
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!chart.Push(tokens[i])) {
      throw Error(ErrorCode::kSyntaxError,
                  "unexpected '" + tokens[i].surface + "' at token " +
                      std::to_string(i),
                  static_cast<int>(i), Surfaces(chart.Menu()));
    }
  }
  if (!chart.Complete()) {
    throw Error(ErrorCode::kSyntaxError, "incomplete sentence",
                static_cast<int>(tokens.size()), Surfaces(chart.Menu()));
  }
  return chart.Tree();
}

uint64_t CountParses(const std::vector<Token> &tokens, const Lexicon &lexicon,
                     const Grammar &grammar) {
  EarleyChart chart(grammar, lexicon);
  for (const Token &t : tokens) {
    if (!chart.Push(t)) return 0;
  }
  return chart.CountTrees();
}

CompletionMenu NextTokens(const std::vector<Token> &prefix,
                          const Lexicon &lexicon, const Grammar &grammar) {
  EarleyChart chart(grammar, lexicon);
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (!chart.Push(prefix[i])) {
      throw Error(ErrorCode::kDeadEnd,
                  "prefix cannot be extended after token " + std::to_string(i),
                  static_cast<int>(i));
    }
  }
  CompletionMenu menu = chart.Menu();
  if (menu.groups.empty()) {
    throw Error(ErrorCode::kDeadEnd, "prefix cannot be extended",
                static_cast<int>(prefix.size()));
  }
  return menu;
}

std::string VerbalizeTokens(const std::vector<Token> &tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token &t = tokens[i];
    if (t.kind != TokenKind::kTerminator && !out.empty()) out.push_back(' ');
    std::string surface = t.surface;
    if (i == 0 && t.kind == TokenKind::kFunctionWord && !surface.empty()) {
      surface[0] = std::toupper(static_cast<unsigned char>(surface[0]));
    }
    out += surface;
  }
  return out;
}

std::string Verbalize(const ParseTree &tree) {
  return VerbalizeTokens(tree.Tokens());
}

}  // namespace cnl
