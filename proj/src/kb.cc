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

#include "cnl/kb.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <utility>

#include "cnl/error.h"

namespace cnl {
namespace {

constexpr const char *kHeader = "ACWKB 1";
constexpr const char *kLexiconFile = "lexicon.acw";
constexpr const char *kPageSuffix = ".page";

std::string Blanks(std::string s) {
  std::replace(s.begin(), s.end(), '_', ' ');
  return s;
}

Error NotFound(const std::string &what) {
  return Error(ErrorCode::kNotFound, "not found: " + what, -1, {what});
}

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

bool Unescape(std::string_view text, std::string *out) {
  out->clear();
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\') {
      out->push_back(text[i]);
      continue;
    }
    if (++i == text.size()) return false;
    switch (text[i]) {
      case '\\': out->push_back('\\'); break;
      case 't': out->push_back('\t'); break;
      case 'n': out->push_back('\n'); break;
      case 'r': out->push_back('\r'); break;
      default: return false;
    }
  }
  return true;
}

const char *StateField(StatementState state) {
  switch (state) {
    case StatementState::kIntegrated: return "integrated";
    case StatementState::kNonOwl: return "non-owl";
    case StatementState::kConflicting: return "conflicting";
    case StatementState::kNone: break;
  }
  return "-";
}

// One record of a persisted file.
struct Record {
  int line = 0;
  std::string kind, state, payload;
};

// Reads header, records and the closing END record of a file.
std::vector<Record> ReadRecords(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read " + path.string(), -1,
                {path.string()});
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string data = buffer.str();
  std::string file = path.filename().string();
  auto corrupt = [&](int line, const std::string &why) {
    return Error(ErrorCode::kCorruptFile,
                 file + ":" + std::to_string(line) + ": " + why, line, {file});
  };
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < data.size()) {
    size_t end = data.find('\n', start);
    if (end == std::string::npos) {
      throw corrupt(static_cast<int>(lines.size()) + 1,
                    "incomplete last line");
    }
    lines.push_back(data.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty() || lines[0] != kHeader) {
    throw corrupt(1, "missing header");
  }
  std::vector<Record> records;
  for (size_t i = 1; i < lines.size(); ++i) {
    int line = static_cast<int>(i) + 1;
    size_t t1 = lines[i].find('\t');
    size_t t2 = t1 == std::string::npos ? t1 : lines[i].find('\t', t1 + 1);
    if (t2 == std::string::npos) throw corrupt(line, "malformed record");
    Record r{line, lines[i].substr(0, t1), lines[i].substr(t1 + 1, t2 - t1 - 1),
             lines[i].substr(t2 + 1)};
    if (r.kind == "END") {
      if (i + 1 != lines.size()) throw corrupt(line + 1, "data after end");
      if (r.payload != std::to_string(records.size())) {
        throw corrupt(line, "record count mismatch");
      }
      return records;
    }
    records.push_back(std::move(r));
  }
  throw corrupt(static_cast<int>(lines.size()) + 1, "missing end record");
}

void WriteFile(const std::filesystem::path &path, const std::string &data) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << data;
    if (!out) {
      throw Error(ErrorCode::kIoError, "cannot write " + tmp.string(), -1,
                  {tmp.string()});
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string(), -1,
                {path.string()});
  }
}

std::string Serialize(const std::vector<std::array<std::string, 3>> &records) {
  std::string out = std::string(kHeader) + "\n";
  for (const auto &r : records) out += r[0] + "\t" + r[1] + "\t" + r[2] + "\n";
  out += "END\t-\t" + std::to_string(records.size()) + "\n";
  return out;
}

}  // namespace

const char *StatementKindName(StatementKind kind) {
  switch (kind) {
    case StatementKind::kSentence: return "sentence";
    case StatementKind::kQuestion: return "question";
    case StatementKind::kComment: return "comment";
  }
  return "";
}

const char *StatementStateName(StatementState state) {
  switch (state) {
    case StatementState::kIntegrated: return "integrated";
    case StatementState::kNonOwl: return "non-owl";
    case StatementState::kConflicting: return "conflicting";
    case StatementState::kNone: return "none";
  }
  return "";
}

std::vector<CommentPart> ParseComment(std::string_view text) {
  std::vector<CommentPart> parts;
  auto add = [&](CommentPart::Kind kind, std::string_view s) {
    if (s.empty()) return;
    if (kind == CommentPart::kText && !parts.empty() &&
        parts.back().kind == CommentPart::kText) {
      parts.back().text += s;
      return;
    }
    parts.push_back({kind, std::string(s)});
  };
  size_t i = 0, plain = 0;
  while (i < text.size()) {
    if (text.compare(i, 2, "[[") == 0) {
      size_t close = text.find("]]", i + 2);
      if (close != std::string_view::npos && close > i + 2) {
        add(CommentPart::kText, text.substr(plain, i - plain));
        add(CommentPart::kPageLink, text.substr(i + 2, close - i - 2));
        i = plain = close + 2;
        continue;
      }
    }
    bool url = text.compare(i, 7, "http://") == 0 ||
               text.compare(i, 8, "https://") == 0;
    if (url && (i == 0 || std::isspace(static_cast<unsigned char>(text[i - 1])) ||
                text[i - 1] == '(')) {
      size_t end = i;
      while (end < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      // Sentence punctuation after a URL is not part of it.
      while (end > i && std::string_view(".,;:!?)").find(text[end - 1]) !=
                            std::string_view::npos) {
        --end;
      }
      add(CommentPart::kText, text.substr(plain, i - plain));
      add(CommentPart::kUrl, text.substr(i, end - i));
      i = plain = end;
      continue;
    }
    ++i;
  }
  add(CommentPart::kText, text.substr(plain));
  return parts;
}

std::string DisplayName(const LexEntry &entry) {
  std::string out = Blanks(entry.symbol());
  if (entry.has(FormRole::kAbbreviation)) {
    out += " (" + Blanks(entry.form(FormRole::kAbbreviation)) + ")";
  }
  return out;
}

Kb::Kb(Lexicon lexicon) : lexicon_(std::move(lexicon)) {
  for (const auto &[id, entry] : lexicon_.entries()) {
    std::string page = PageId(entry);
    pages_[page] = WikiPage{page, Blanks(page), {}};
  }
  Rebuild();
}

std::string Kb::PageId(const LexEntry &entry) { return entry.symbol(); }

const LexEntry &Kb::AddWord(WordCategory category, const WordForms &forms) {
  Lexicon next = lexicon_;
  const LexEntry &added = next.Add(category, forms);
  std::string page = PageId(added);
  if (pages_.count(page)) {
    throw Error(ErrorCode::kConflict, "a page named " + page + " exists", -1,
                {page});
  }
  EntryId id = added.id();
  lexicon_ = std::move(next);
  pages_[page] = WikiPage{page, Blanks(page), {}};
  Rebuild();
  return lexicon_.Get(id);
}

void Kb::RemoveWord(EntryId id) {
  const LexEntry *entry = lexicon_.Find(id);
  if (!entry) throw NotFound("word " + std::to_string(id.value));
  std::string page = PageId(*entry);
  std::set<int> users;
  for (const auto &[sid, s] : statements_) {
    if (s.page == page) users.insert(sid);
    for (const Token &t : s.tokens) {
      if (t.kind == TokenKind::kLexical && t.entry == id) users.insert(sid);
    }
  }
  if (!users.empty()) {
    std::vector<std::string> ids;
    for (int u : users) ids.push_back(std::to_string(u));
    throw Error(ErrorCode::kInUse, "the word " + page + " is in use", -1, ids);
  }
  lexicon_.Remove(id);
  pages_.erase(page);
  Rebuild();
}

const WikiPage &Kb::AddPage(std::string_view title) {
  std::string id = ValidateWordForm(title);
  if (pages_.count(id) || lexicon_.FindByForm(id)) {
    throw Error(ErrorCode::kConflict, "the page " + id + " exists", -1, {id});
  }
  return pages_[id] = WikiPage{id, Blanks(id), {}};
}

Statement &Kb::Create(std::string_view page, StatementKind kind, int id) {
  auto it = pages_.find(std::string(page));
  if (it == pages_.end()) throw NotFound("page " + std::string(page));
  if (id == 0) id = next_id_++;
  it->second.statements.push_back(id);
  Statement &s = statements_[id];
  s.id = id;
  s.page = it->first;
  s.kind = kind;
  return s;
}

bool Kb::ConsistentWith(const std::vector<Axiom> &extra) const {
  KbSnapshot candidate = snapshot_;
  candidate.axioms.insert(candidate.axioms.end(), extra.begin(), extra.end());
  return CheckConsistency(candidate) == Consistency::kConsistent;
}

const Statement &Kb::AddStatement(std::string_view page,
                                  std::string_view text) {
  if (!pages_.count(std::string(page))) {
    throw NotFound("page " + std::string(page));
  }
  Statement s;
  s.tokens = Tokenize(text, lexicon_);
  ParseTree tree = Parse(s.tokens, lexicon_);
  s.text = VerbalizeTokens(s.tokens);
  if (tree.interrogative()) {
    s.kind = StatementKind::kQuestion;
    s.query = TranslateQuestion(tree, lexicon_);
  } else {
    s.kind = StatementKind::kSentence;
    s.drs = BuildDrs(tree, lexicon_);
    s.expressibility = MapToOwl(s.drs);
    if (!s.expressibility.in_owl) {
      s.state = StatementState::kNonOwl;
    } else if (ConsistentWith(s.expressibility.axioms)) {
      s.state = StatementState::kIntegrated;
    } else {
      s.state = StatementState::kConflicting;
    }
  }
  Statement &stored = Create(page, s.kind);
  int id = stored.id;
  std::string page_id = stored.page;
  stored = std::move(s);
  stored.id = id;
  stored.page = page_id;
  if (stored.state == StatementState::kIntegrated) {
    snapshot_.axioms.insert(snapshot_.axioms.end(),
                            stored.expressibility.axioms.begin(),
                            stored.expressibility.axioms.end());
  }
  return stored;
}

const Statement &Kb::AddComment(std::string_view page, std::string_view text) {
  Statement &s = Create(page, StatementKind::kComment);
  s.text = std::string(text);
  return s;
}

void Kb::RemoveStatement(int id) {
  auto it = statements_.find(id);
  if (it == statements_.end()) throw NotFound("statement " + std::to_string(id));
  bool integrated = it->second.state == StatementState::kIntegrated;
  std::vector<int> &list = pages_.at(it->second.page).statements;
  list.erase(std::remove(list.begin(), list.end(), id), list.end());
  statements_.erase(it);
  if (!integrated) return;
  Rebuild();
  // Conflicting sentences were inconsistent with a superset of the new
  // snapshot; only now can they succeed.
  for (auto &[sid, s] : statements_) {
    if (s.state != StatementState::kConflicting) continue;
    if (ConsistentWith(s.expressibility.axioms)) {
      s.state = StatementState::kIntegrated;
      Rebuild();
    }
  }
}

void Kb::Rebuild() {
  snapshot_ = KbSnapshot{};
  for (const auto &[id, s] : statements_) {
    if (s.state != StatementState::kIntegrated) continue;
    snapshot_.axioms.insert(snapshot_.axioms.end(),
                            s.expressibility.axioms.begin(),
                            s.expressibility.axioms.end());
  }
  for (const auto &[id, entry] : lexicon_.entries()) {
    if (entry.category() == WordCategory::kProperName) {
      snapshot_.declared.individuals.insert(entry.symbol());
    }
  }
}

std::string Kb::Answer(const std::string &individual) const {
  const LexEntry *entry = lexicon_.FindByForm(individual);
  return entry ? DisplayName(*entry) : Blanks(individual);
}

std::vector<std::string> Kb::Answers(const Statement &s,
                                     Reasoner *reasoner) const {
  std::vector<std::string> out;
  if (s.query.mode == Query::kIndividual) {
    for (const std::string &c : reasoner->Realize(s.query.individual)) {
      out.push_back(Blanks(c));
    }
  } else {
    for (const std::string &i : reasoner->Retrieve(s.query.target)) {
      out.push_back(Answer(i));
    }
  }
  return out;
}

PageView Kb::RenderPage(std::string_view page) const {
  auto it = pages_.find(std::string(page));
  if (it == pages_.end()) throw NotFound("page " + std::string(page));
  PageView view{it->first, it->second.title, {}};
  std::unique_ptr<Reasoner> reasoner;
  for (int id : it->second.statements) {
    const Statement &s = statements_.at(id);
    StatementView v;
    v.id = id;
    v.kind = s.kind;
    v.state = s.state;
    v.text = s.text;
    v.red_triangle = s.state == StatementState::kNonOwl;
    if (s.kind == StatementKind::kComment) v.parts = ParseComment(s.text);
    if (s.kind == StatementKind::kQuestion) {
      if (!reasoner) reasoner = std::make_unique<Reasoner>(snapshot_);
      try {
        v.answers = Answers(s, reasoner.get());
      } catch (const Error &e) {
        v.error = e.what();
      }
    }
    view.statements.push_back(std::move(v));
  }
  return view;
}

std::vector<std::string> Kb::HierarchyView(std::string_view noun) const {
  const LexEntry *entry = lexicon_.FindByForm(noun);
  if (!entry || entry->category() != WordCategory::kNoun) {
    throw Error(ErrorCode::kUnknownWord, "not a noun: " + std::string(noun),
                -1, {std::string(noun)});
  }
  Hierarchy h = Classify(snapshot_);
  auto sentence = [&](const std::string &sub, const std::string &sup) {
    const LexEntry *a = lexicon_.FindByForm(sub);
    const LexEntry *b = lexicon_.FindByForm(sup);
    std::vector<Token> tokens{Token::Word("every")};
    tokens.push_back(a ? Token::Lexical(*a, FormRole::kSingular)
                       : Token::Word(sub));
    tokens.push_back(Token::Word("is"));
    tokens.push_back(Token::Word(TakesAn(sup) ? "an" : "a"));
    tokens.push_back(b ? Token::Lexical(*b, FormRole::kSingular)
                       : Token::Word(sup));
    tokens.push_back(Token::Terminator('.'));
    return VerbalizeTokens(tokens);
  };
  std::vector<std::string> out;
  std::string c = entry->symbol();
  if (!h.supers.count(c)) return out;
  for (const std::string &d : h.supers.at(c)) out.push_back(sentence(c, d));
  if (h.equivalents.count(c)) {
    for (const std::string &e : h.equivalents.at(c)) {
      out.push_back(sentence(c, e));
      out.push_back(sentence(e, c));
    }
  }
  for (const std::string &d : h.subs.at(c)) out.push_back(sentence(d, c));
  return out;
}

std::string Kb::ExportOwl() const {
  Signature sig;
  for (const Axiom &a : snapshot_.axioms) sig.Add(a);
  std::string out = OntologyDocument(snapshot_.axioms, sig);
  for (const auto &[id, s] : statements_) {
    if (s.state == StatementState::kNonOwl ||
        s.state == StatementState::kConflicting) {
      out += "# omitted ";
      out += StatementStateName(s.state);
      out += " sentence " + std::to_string(id) + ": " + s.text + "\n";
    }
  }
  return out;
}

void Kb::Save(const std::string &directory) const {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError, "cannot create " + directory, -1,
                {directory});
  }
  std::vector<std::array<std::string, 3>> words;
  for (const auto &[id, entry] : lexicon_.entries()) {
    std::string forms;
    for (const auto &[role, form] : entry.forms()) {
      if (!forms.empty()) forms += " ";
      forms += std::string(RoleName(role)) + "=" + form;
    }
    words.push_back({"WORD", CategoryName(entry.category()), forms});
  }
  words.push_back({"NEXT", "-", std::to_string(next_id_)});
  WriteFile(fs::path(directory) / kLexiconFile, Serialize(words));
  std::set<std::string> written;
  for (const auto &[id, page] : pages_) {
    std::vector<std::array<std::string, 3>> records;
    records.push_back({"PAGE", "-", Escape(page.title)});
    for (int sid : page.statements) {
      const Statement &s = statements_.at(sid);
      std::string kind = s.kind == StatementKind::kSentence   ? "SENTENCE"
                         : s.kind == StatementKind::kQuestion ? "QUESTION"
                                                              : "COMMENT";
      records.push_back({"ID", "-", std::to_string(sid)});
      records.push_back({kind, StateField(s.state), Escape(s.text)});
    }
    std::string file = id + kPageSuffix;
    WriteFile(fs::path(directory) / file, Serialize(records));
    written.insert(file);
  }
  for (const auto &f : fs::directory_iterator(directory, ec)) {
    std::string name = f.path().filename().string();
    if (f.path().extension() == kPageSuffix && !written.count(name)) {
      fs::remove(f.path(), ec);
    }
  }
}

Kb Kb::Load(const std::string &directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) {
    throw Error(ErrorCode::kIoError, "not a directory: " + directory, -1,
                {directory});
  }
  auto corrupt = [](const std::string &file, int line, const std::string &why) {
    return Error(ErrorCode::kCorruptFile,
                 file + ":" + std::to_string(line) + ": " + why, line, {file});
  };
  auto number = [](const std::string &text, int *out) {
    if (text.empty() || text.size() > 9 ||
        text.find_first_not_of("0123456789") != std::string::npos) {
      return false;
    }
    *out = std::stoi(text);
    return *out > 0;
  };
  Lexicon lexicon;
  std::vector<Record> words = ReadRecords(fs::path(directory) / kLexiconFile);
  int next_id = 0;
  if (words.empty() || words.back().kind != "NEXT" ||
      !number(words.back().payload, &next_id)) {
    int line = words.empty() ? 2 : words.back().line;
    throw corrupt(kLexiconFile, line, "missing statement counter");
  }
  words.pop_back();
  for (const Record &r : words) {
    WordCategory category;
    if (r.kind != "WORD" || !ParseCategory(r.state, &category)) {
      throw corrupt(kLexiconFile, r.line, "malformed word");
    }
    WordForms forms;
    std::istringstream in(r.payload);
    std::string item;
    while (in >> item) {
      size_t eq = item.find('=');
      FormRole role;
      if (eq == std::string::npos ||
          !ParseRole(std::string_view(item).substr(0, eq), &role)) {
        throw corrupt(kLexiconFile, r.line, "malformed form");
      }
      forms[role] = item.substr(eq + 1);
    }
    try {
      lexicon.Add(category, forms);
    } catch (const Error &e) {
      throw corrupt(kLexiconFile, r.line, e.what());
    }
  }
  Kb kb(std::move(lexicon));
  kb.next_id_ = next_id;
  std::vector<std::string> files;
  for (const auto &f : fs::directory_iterator(directory)) {
    if (f.path().extension() == kPageSuffix) {
      files.push_back(f.path().filename().string());
    }
  }
  std::sort(files.begin(), files.end());
  // Statement id -> (file, line) for error reports.
  std::map<int, std::pair<std::string, int>> origin;
  for (const std::string &file : files) {
    std::string id = file.substr(0, file.size() - std::string(kPageSuffix).size());
    std::vector<Record> records = ReadRecords(fs::path(directory) / file);
    if (records.empty() || records[0].kind != "PAGE") {
      throw corrupt(file, 2, "missing page record");
    }
    if (!kb.pages_.count(id)) {
      try {
        ValidateWordForm(id);
      } catch (const Error &) {
        throw corrupt(file, 2, "invalid page name");
      }
      kb.pages_[id] = WikiPage{id, "", {}};
    }
    std::string title;
    if (!Unescape(records[0].payload, &title)) {
      throw corrupt(file, records[0].line, "bad escape");
    }
    kb.pages_[id].title = title;
    for (size_t i = 1; i < records.size(); i += 2) {
      // Each statement is an ID record followed by its content.
      int sid = 0;
      if (records[i].kind != "ID" || records[i].state != "-" ||
          !number(records[i].payload, &sid) || sid >= next_id ||
          kb.statements_.count(sid)) {
        throw corrupt(file, records[i].line, "bad statement id");
      }
      if (i + 1 == records.size()) {
        throw corrupt(file, records[i].line + 1, "missing statement");
      }
      const Record &r = records[i + 1];
      std::string text;
      if (!Unescape(r.payload, &text)) throw corrupt(file, r.line, "bad escape");
      if (r.kind == "COMMENT") {
        if (r.state != "-") throw corrupt(file, r.line, "bad state");
        kb.Create(id, StatementKind::kComment, sid).text = text;
        origin[sid] = {file, r.line};
        continue;
      }
      if (r.kind != "SENTENCE" && r.kind != "QUESTION") {
        throw corrupt(file, r.line, "unknown record " + r.kind);
      }
      // Parse and interpret without the gate; the saved state is checked
      // below.
      Statement s;
      try {
        s.tokens = Tokenize(text, kb.lexicon_);
        ParseTree tree = Parse(s.tokens, kb.lexicon_);
        s.text = VerbalizeTokens(s.tokens);
        if (tree.interrogative()) {
          s.kind = StatementKind::kQuestion;
          s.query = TranslateQuestion(tree, kb.lexicon_);
        } else {
          s.kind = StatementKind::kSentence;
          s.drs = BuildDrs(tree, kb.lexicon_);
          s.expressibility = MapToOwl(s.drs);
        }
      } catch (const Error &e) {
        throw corrupt(file, r.line, e.what());
      }
      bool sentence = s.kind == StatementKind::kSentence;
      if (sentence != (r.kind == "SENTENCE")) {
        throw corrupt(file, r.line, "record kind does not match the text");
      }
      if (!sentence) {
        if (r.state != "-") throw corrupt(file, r.line, "bad state");
      } else if (r.state == "integrated") {
        s.state = StatementState::kIntegrated;
      } else if (r.state == "non-owl") {
        s.state = StatementState::kNonOwl;
      } else if (r.state == "conflicting") {
        s.state = StatementState::kConflicting;
      } else {
        throw corrupt(file, r.line, "bad state");
      }
      if (sentence &&
          s.expressibility.in_owl != (s.state != StatementState::kNonOwl)) {
        throw corrupt(file, r.line, "state does not match the sentence");
      }
      Statement &stored = kb.Create(id, s.kind, sid);
      stored = std::move(s);
      stored.id = sid;
      stored.page = id;
      origin[sid] = {file, r.line};
    }
  }
  kb.Rebuild();
  if (CheckConsistency(kb.snapshot_) != Consistency::kConsistent) {
    throw Error(ErrorCode::kCorruptFile,
                "the integrated sentences are inconsistent", -1, {directory});
  }
  for (const auto &[sid, s] : kb.statements_) {
    if (s.state == StatementState::kConflicting &&
        kb.ConsistentWith(s.expressibility.axioms)) {
      auto [file, line] = origin.at(sid);
      throw corrupt(file, line, "a conflicting sentence is consistent");
    }
  }
  return kb;
}

std::vector<std::string> Kb::Check() const {
  std::vector<std::string> problems;
  if (CheckConsistency(snapshot_) != Consistency::kConsistent) {
    problems.push_back("the reasoned ontology is inconsistent");
  }
  std::vector<Axiom> expected;
  for (const auto &[id, s] : statements_) {
    std::string label = "statement " + std::to_string(id);
    if (!pages_.count(s.page)) problems.push_back(label + " has no page");
    if (s.kind != StatementKind::kSentence) {
      if (s.state != StatementState::kNone) {
        problems.push_back(label + " is not a sentence but has a state");
      }
      continue;
    }
    bool in_owl = s.expressibility.in_owl;
    if ((s.state == StatementState::kNonOwl) == in_owl) {
      problems.push_back(label + " has a state that does not match its logic");
    }
    if (s.state == StatementState::kIntegrated) {
      expected.insert(expected.end(), s.expressibility.axioms.begin(),
                      s.expressibility.axioms.end());
    }
    if (s.state == StatementState::kConflicting &&
        ConsistentWith(s.expressibility.axioms)) {
      problems.push_back(label + " is conflicting but consistent");
    }
  }
  if (expected != snapshot_.axioms) {
    problems.push_back("the snapshot differs from the integrated sentences");
  }
  size_t listed = 0;
  for (const auto &[id, page] : pages_) {
    listed += page.statements.size();
    for (int sid : page.statements) {
      auto it = statements_.find(sid);
      if (it == statements_.end() || it->second.page != id) {
        problems.push_back("page " + id + " lists a foreign statement");
      }
    }
  }
  if (listed != statements_.size()) {
    problems.push_back("some statements are on no page");
  }
  for (const auto &[id, entry] : lexicon_.entries()) {
    if (!pages_.count(PageId(entry))) {
      problems.push_back("the word " + entry.symbol() + " has no page");
    }
  }
  return problems;
}

}  // namespace cnl
