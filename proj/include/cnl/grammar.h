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

#ifndef CNL_GRAMMAR_H_
#define CNL_GRAMMAR_H_

#include <bitset>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnl/lexicon.h"

namespace cnl {

enum class TokenKind {
  kFunctionWord,
  kLexical,
  kVariable,
  kNumber,
  kTerminator,
};

struct Token {
  TokenKind kind = TokenKind::kFunctionWord;
  // Function words are lower case; lexical tokens carry the normalized
  // form with underscores; terminators are "." or "?".
  std::string surface;
  EntryId entry;
  FormRole role = FormRole::kName;
  int number = 0;

  bool operator==(const Token &other) const {
    return kind == other.kind && surface == other.surface &&
           entry == other.entry && role == other.role &&
           number == other.number;
  }

  static Token Word(std::string_view word);
  static Token Lexical(const LexEntry &entry, FormRole role);
  static Token Variable(std::string_view name);
  static Token Number(int value);
  static Token Terminator(char c);
};

// Classes of terminals the grammar refers to. kLiteral terminals match one
// function word; the others match a family of tokens.
enum class TermClass : uint8_t {
  kLiteral,
  kProperName,
  kNounSgConsonant,  // takes "a"
  kNounSgVowel,      // takes "an"
  kNounSg,
  kNounPl,
  kOfConsonant,
  kOfVowel,
  kOf,
  kVerb3sg,
  kVerbInf,
  kVerbPastParticiple,
  kAdjective,
  kVariable,
  kNumberOne,
  kNumberMany,
  kRelativePronoun,   // that, who, which
  kSubjectPronoun,    // he, she, it
  kObjectPronoun,     // him, her, it
};

// Semantic label of a grammar rule. Rules that differ only in agreement
// or attachment features share a kind.
enum class RuleKind : uint8_t {
  kSentenceStatement,  // S -> STMT "."
  kSentenceIf,         // S -> "if" COND "then" COND "."
  kSentenceQuestion,   // S -> Q "?"
  kCondSingle,
  kCondOr,
  kConjSingle,
  kConjAnd,
  kStatement,  // STMT -> NP VPC
  kVpcSingle,
  kVpcAnd,
  kVpcOr,
  kVpTransitive,        // V NP
  kVpNegTransitive,     // does not V NP
  kVpCopulaNoun,        // is a N'
  kVpCopulaAdjective,   // is Adj NP
  kVpNegCopulaNoun,     // is not a N'
  kVpNegCopulaAdjective,
  kVpPassive,           // is Vpp by NP
  kNpDeterminer,        // a|an|every|no|some N'
  kNpCardinal,          // at least|at most|exactly|more than|less than Num N'
  kNpProperName,
  kNpVariable,
  kNpSomebody,          // somebody [Var]
  kNpSomething,         // something [Var]
  kNpDefinite,          // the Noun
  kNpPronoun,
  kNbarNoun,
  kNbarRelative,
  kNbarOf,
  kRelSingle,
  kRelAnd,
  kRelOr,
  kQuestionWhat,    // what VPC
  kQuestionWho,     // who VPC
  kQuestionWhich,   // which N' VPC
  kQuestionIdentity,  // what|who is PN
};

const char *RuleKindName(RuleKind kind);

struct GrammarOptions {
  // Cardinality determiners accept the numbers 1..max_number.
  int max_number = 100;
};

// A grammar symbol: a nonterminal or an index into the terminal table.
struct Symbol {
  bool terminal = false;
  int16_t id = 0;
  auto operator<=>(const Symbol &) const = default;
};

struct Terminal {
  TermClass cls = TermClass::kLiteral;
  std::string literal;
};

struct Rule {
  int16_t lhs = 0;
  std::vector<Symbol> rhs;
  RuleKind kind = RuleKind::kStatement;
};

constexpr int kMaxTerminals = 128;
using TerminalSet = std::bitset<kMaxTerminals>;

// The controlled-English grammar. Agreement (singular/plural, a/an) and
// relative clause attachment are compiled into nonterminal variants so the
// grammar is context-free and unambiguous: a relative clause can only be
// coordinated ("and that ...") when its verb phrase does not itself end in a
// relative clause, which makes coordinated clauses attach to the nearest
// noun. There are no empty rules and no left recursion.
class Grammar {
 public:
  explicit Grammar(GrammarOptions options = {});

  // Shared default instance (numbers 1..100).
  static const Grammar &Default();

  const GrammarOptions &options() const { return options_; }
  const std::vector<Rule> &rules() const { return rules_; }
  const std::vector<Terminal> &terminals() const { return terminals_; }
  const std::vector<std::string> &nonterminals() const { return names_; }
  const std::vector<int> &RulesFor(int nonterminal) const {
    return by_lhs_[nonterminal];
  }
  int start() const { return start_; }

  // Set of terminals a token matches.
  TerminalSet Match(const Token &token) const;
  bool Matches(int terminal, const Token &token) const;

  // All tokens a terminal stands for under a lexicon, in sorted order.
  std::vector<Token> Expand(int terminal, const Lexicon &lexicon) const;

  std::string SymbolName(Symbol symbol) const;

  // Rules usable under a lexicon: rules whose symbols can all derive some
  // token sequence when only the lexicon's words are available.
  struct Usable {
    std::vector<bool> rule;
    std::vector<bool> nonterminal;
    std::vector<bool> terminal;
    // Length of the shortest terminal string each nonterminal derives.
    std::vector<int> min_length;
  };
  Usable UsableFor(const Lexicon &lexicon) const;

  int MinLength(const Usable &usable, const std::vector<Symbol> &symbols,
                size_t from = 0) const;

 private:
  int Nonterminal(const std::string &name);
  int Literal(const std::string &word);
  int Class(TermClass cls);
  void Add(const std::string &lhs, RuleKind kind,
           const std::vector<std::string> &rhs);
  void Build();

  GrammarOptions options_;
  std::vector<Rule> rules_;
  std::vector<Terminal> terminals_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> by_lhs_;
  int start_ = 0;
};

// ---------------------------------------------------------------------------
// Parsing.

struct ParseNode {
  RuleKind kind = RuleKind::kStatement;
  int rule = -1;  // -1 for leaves
  std::vector<ParseNode> children;
  std::optional<Token> token;

  bool leaf() const { return token.has_value(); }
  // Leaves under this node, left to right.
  void CollectTokens(std::vector<Token> *out) const;
};

struct ParseTree {
  ParseNode root;
  bool interrogative() const;
  std::vector<Token> Tokens() const;
};

struct MenuGroup {
  std::string label;
  std::vector<Token> tokens;
};

// Tokens that can continue a prefix, grouped by category label
// ("function word", "proper name", "noun", "verb", "of-construct",
// "adjective", "variable", "number").
struct CompletionMenu {
  std::vector<MenuGroup> groups;

  bool Contains(std::string_view surface) const;
  std::vector<Token> AllTokens() const;
  size_t size() const;
};

// Splits text on blanks, separates a final "." or "?", matches multiword
// lexical forms longest-first and lower-cases function words. Throws
// Error(kUnknownToken) with the token index.
std::vector<Token> Tokenize(std::string_view text, const Lexicon &lexicon,
                            const Grammar &grammar = Grammar::Default());

// Parses a complete sentence or question. Throws Error(kSyntaxError) with
// the index of the first token that cannot be accepted and the surfaces
// the menu would have offered there.
ParseTree Parse(const std::vector<Token> &tokens, const Lexicon &lexicon,
                const Grammar &grammar = Grammar::Default());

// Number of distinct parse trees; 0 if rejected.
uint64_t CountParses(const std::vector<Token> &tokens, const Lexicon &lexicon,
                     const Grammar &grammar = Grammar::Default());

// Lookahead menu for a prefix. Throws Error(kDeadEnd) if the prefix cannot
// be extended.
CompletionMenu NextTokens(const std::vector<Token> &prefix,
                          const Lexicon &lexicon,
                          const Grammar &grammar = Grammar::Default());

// Display text: single blanks, capitalized first word, terminator attached.
std::string Verbalize(const ParseTree &tree);
std::string VerbalizeTokens(const std::vector<Token> &tokens);

// Incremental Earley recognizer; one item set per consumed token.
class EarleyChart {
 public:
  EarleyChart(const Grammar &grammar, const Lexicon &lexicon);
  ~EarleyChart();
  EarleyChart(const EarleyChart &) = delete;
  EarleyChart &operator=(const EarleyChart &) = delete;

  // Consumes a token; returns false (and leaves the chart unchanged) if the
  // token cannot continue the current prefix.
  bool Push(const Token &token);
  // Removes the last consumed token.
  void Pop();
  size_t size() const;

  // Terminals that can come next.
  TerminalSet Expected() const;
  CompletionMenu Menu() const;
  bool Complete() const;

  // Every token the grammar can offer under the lexicon, each once.
  const std::vector<Token> &Vocabulary() const;
  // Indices into Vocabulary() of the tokens that can come next, ascending.
  void ExpectedTokens(std::vector<int> *out) const;
  bool PushVocabulary(int index);
  // Fewest further tokens needed to complete a sentence, terminator
  // included; 0 when complete.
  int MinRemaining() const;

  // Builds the tree for the consumed tokens, which must be complete.
  ParseTree Tree() const;
  uint64_t CountTrees() const;

 private:
  struct Impl;
  Impl *impl_;
};

// ---------------------------------------------------------------------------
// Oracles. These derive sentences top-down from the rules and share no code
// with the chart parser.

// Calls 'emit' for every accepted token sequence with at most max_tokens
// tokens (terminator included). Returning false from 'emit' stops.
void EnumerateSentences(const Lexicon &lexicon, int max_tokens,
                        const std::function<bool(const std::vector<Token> &)>
                            &emit,
                        const Grammar &grammar = Grammar::Default());

// Same over terminal sequences: one call per leftmost derivation.
void EnumerateTerminalSequences(
    const Lexicon &lexicon, int max_tokens,
    const std::function<bool(const std::vector<int> &)> &emit,
    const Grammar &grammar = Grammar::Default());

// Nondeterministic top-down recognizer over sets of pending symbol stacks.
class TopDownRecognizer {
 public:
  TopDownRecognizer(const Grammar &grammar, const Lexicon &lexicon);

  // Start over with the empty prefix.
  void Reset();
  // Consumes a token; returns false if no configuration accepts it.
  bool Push(const Token &token);
  void Pop();
  // Terminals on top of some pending configuration.
  TerminalSet Expected() const;
  // Shortest number of further tokens needed to finish a sentence.
  int MinRemaining() const;
  bool Accepts(const std::vector<Token> &tokens);

 private:
  using Stack = std::vector<Symbol>;  // top at back
  std::vector<Stack> Expand(std::vector<Stack> stacks) const;

  const Grammar &grammar_;
  Grammar::Usable usable_;
  std::vector<std::vector<Stack>> history_;
};

}  // namespace cnl

#endif  // CNL_GRAMMAR_H_
