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

// The wiki: pages holding sentences, questions and comments, the
// consistency gate that decides which sentences take part in reasoning,
// inline query answers, persistence and ontology export.

#ifndef CNL_KB_H_
#define CNL_KB_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cnl/grammar.h"
#include "cnl/lexicon.h"
#include "cnl/owl.h"
#include "cnl/reasoner.h"
#include "cnl/semantics.h"

namespace cnl {

enum class StatementKind { kSentence, kQuestion, kComment };

// Only sentences have a state other than kNone.
enum class StatementState { kNone, kIntegrated, kNonOwl, kConflicting };

const char *StatementKindName(StatementKind kind);
const char *StatementStateName(StatementState state);

struct Statement {
  int id = 0;
  std::string page;
  StatementKind kind = StatementKind::kComment;
  StatementState state = StatementState::kNone;
  // Token text of sentences and questions; raw text of comments.
  std::string text;
  std::vector<Token> tokens;
  Drs drs;
  Expressibility expressibility;
  Query query;
};

struct WikiPage {
  // The canonical form of a lexicon entry, or a free article name.
  std::string id;
  std::string title;
  std::vector<int> statements;
};

// A piece of a comment: plain text, an internal [[page]] link or a URL.
struct CommentPart {
  enum Kind { kText, kPageLink, kUrl };
  Kind kind = kText;
  std::string text;
  bool operator==(const CommentPart &) const = default;
};

std::vector<CommentPart> ParseComment(std::string_view text);

struct StatementView {
  int id = 0;
  StatementKind kind = StatementKind::kComment;
  StatementState state = StatementState::kNone;
  std::string text;
  bool red_triangle = false;
  std::vector<std::string> answers;  // questions only
  std::vector<CommentPart> parts;    // comments only
  std::string error;                 // a question the reasoner gave up on
};

struct PageView {
  std::string id;
  std::string title;
  std::vector<StatementView> statements;
};

// A wiki. Copies are independent values; the service mutates a private
// copy and publishes it, so readers always see a complete state.
class Kb {
 public:
  Kb() = default;
  explicit Kb(Lexicon lexicon);

  const Lexicon &lexicon() const { return lexicon_; }
  const std::map<std::string, WikiPage> &pages() const { return pages_; }
  const std::map<int, Statement> &statements() const { return statements_; }
  // Axioms of the integrated sentences in id order; proper names of the
  // lexicon are declared.
  const KbSnapshot &snapshot() const { return snapshot_; }

  // Adds a word and its page. Lexicon errors propagate.
  const LexEntry &AddWord(WordCategory category, const WordForms &forms);
  // Removes a word and its empty page. Throws kNotFound, or kInUse with
  // the ids of the statements that use it or stand on its page.
  void RemoveWord(EntryId id);
  // Creates a free article. Throws kInvalidCharacter or kConflict.
  const WikiPage &AddPage(std::string_view title);
  // Page of a lexicon entry.
  static std::string PageId(const LexEntry &entry);

  // Parses a sentence or question and stores it on a page. Sentences go
  // through the consistency gate. Throws kNotFound for a missing page and
  // the errors of tokenizing, parsing and interpretation.
  const Statement &AddStatement(std::string_view page, std::string_view text);
  // Stores a comment verbatim.
  const Statement &AddComment(std::string_view page, std::string_view text);
  // Removes a statement; conflicting sentences are then retried in id
  // order. Throws kNotFound.
  void RemoveStatement(int id);

  // Throws kNotFound.
  PageView RenderPage(std::string_view page) const;
  // Direct super- and subclasses of a noun as sentences. Throws
  // kUnknownWord.
  std::vector<std::string> HierarchyView(std::string_view noun) const;
  std::string ExportOwl() const;

  // Writes the wiki into a directory. Throws kIoError.
  void Save(const std::string &directory) const;
  // Throws kIoError or kCorruptFile with the line number as position and
  // the file name as detail.
  static Kb Load(const std::string &directory);

  // Re-verifies the invariants; returns a description of each violation.
  std::vector<std::string> Check() const;

 private:
  Statement &Create(std::string_view page, StatementKind kind, int id = 0);
  void Rebuild();
  bool ConsistentWith(const std::vector<Axiom> &extra) const;
  std::string Answer(const std::string &individual) const;
  std::vector<std::string> Answers(const Statement &s,
                                   Reasoner *reasoner) const;

  Lexicon lexicon_;
  std::map<std::string, WikiPage> pages_;
  std::map<int, Statement> statements_;
  KbSnapshot snapshot_;
  int next_id_ = 1;
};

// Display form of a proper name: blanks for underscores, followed by the
// abbreviation in parentheses when there is one.
std::string DisplayName(const LexEntry &entry);

}  // namespace cnl

#endif  // CNL_KB_H_
