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

#include "cnl/lexicon.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "cnl/error.h"

namespace cnl {

namespace {

const char *const kReservedWords[] = {
    "a",     "an",        "every", "no",   "if",    "then",    "and",
    "or",    "that",      "who",   "which", "what", "is",      "are",
    "does",  "do",        "not",   "by",   "of",    "at",      "least",
    "most",  "exactly",   "more",  "less", "than",  "somebody", "something",
    "the",   "he",        "she",   "it",   "him",   "her",     "some",
    "x",     "y",         "z",
};

struct RoleSpec {
  FormRole role;
  bool mandatory;
};

std::vector<RoleSpec> RolesOf(WordCategory category) {
  switch (category) {
    case WordCategory::kProperName:
      return {{FormRole::kName, true}, {FormRole::kAbbreviation, false}};
    case WordCategory::kNoun:
      return {{FormRole::kSingular, true}, {FormRole::kPlural, true}};
    case WordCategory::kTransitiveVerb:
      return {{FormRole::kThirdSingular, true},
              {FormRole::kInfinitive, true},
              {FormRole::kPastParticiple, false}};
    case WordCategory::kOfConstruct:
      return {{FormRole::kOfNoun, true}};
    case WordCategory::kTransitiveAdjective:
      return {{FormRole::kAdjective, true}};
  }
  return {};
}

FormRole SymbolRole(WordCategory category) {
  switch (category) {
    case WordCategory::kProperName: return FormRole::kName;
    case WordCategory::kNoun: return FormRole::kSingular;
    case WordCategory::kTransitiveVerb: return FormRole::kInfinitive;
    case WordCategory::kOfConstruct: return FormRole::kOfNoun;
    case WordCategory::kTransitiveAdjective: return FormRole::kAdjective;
  }
  return FormRole::kName;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = std::tolower(static_cast<unsigned char>(c));
  return out;
}

}  // namespace

const char *CategoryName(WordCategory category) {
  switch (category) {
    case WordCategory::kProperName: return "proper-name";
    case WordCategory::kNoun: return "noun";
    case WordCategory::kTransitiveVerb: return "verb";
    case WordCategory::kOfConstruct: return "of-construct";
    case WordCategory::kTransitiveAdjective: return "adjective";
  }
  return "";
}

const char *RoleName(FormRole role) {
  switch (role) {
    case FormRole::kName: return "name";
    case FormRole::kAbbreviation: return "abbreviation";
    case FormRole::kSingular: return "singular";
    case FormRole::kPlural: return "plural";
    case FormRole::kThirdSingular: return "third-singular";
    case FormRole::kInfinitive: return "infinitive";
    case FormRole::kPastParticiple: return "past-participle";
    case FormRole::kOfNoun: return "of-noun";
    case FormRole::kAdjective: return "adjective";
  }
  return "";
}

bool ParseCategory(std::string_view name, WordCategory *category) {
  for (auto c : {WordCategory::kProperName, WordCategory::kNoun,
                 WordCategory::kTransitiveVerb, WordCategory::kOfConstruct,
                 WordCategory::kTransitiveAdjective}) {
    if (name == CategoryName(c)) {
      *category = c;
      return true;
    }
  }
  return false;
}

bool ParseRole(std::string_view name, FormRole *role) {
  for (auto r : {FormRole::kName, FormRole::kAbbreviation, FormRole::kSingular,
                 FormRole::kPlural, FormRole::kThirdSingular,
                 FormRole::kInfinitive, FormRole::kPastParticiple,
                 FormRole::kOfNoun, FormRole::kAdjective}) {
    if (name == RoleName(r)) {
      *role = r;
      return true;
    }
  }
  return false;
}

const std::string &LexEntry::form(FormRole role) const {
  static const std::string kEmpty;
  auto it = forms_.find(role);
  return it == forms_.end() ? kEmpty : it->second;
}

const std::string &LexEntry::symbol() const {
  return form(SymbolRole(category_));
}

std::string ValidateWordForm(std::string_view surface) {
  // Trim surrounding blanks; each run of inner blanks becomes one
  // underscore.
  size_t begin = surface.find_first_not_of(' ');
  size_t end = surface.find_last_not_of(' ');
  if (begin == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidCharacter, "empty word form", 0);
  }
  std::string out;
  for (size_t i = begin; i <= end; ++i) {
    unsigned char c = surface[i];
    bool ok = std::isalnum(c) || c == '-' || c == ' ' || c == '_';
    if (i == begin && !std::isalpha(c)) ok = false;
    if (!ok) {
      throw Error(ErrorCode::kInvalidCharacter,
                  "invalid character '" + std::string(1, c) + "' at position " +
                      std::to_string(i),
                  static_cast<int>(i), {std::string(1, c)});
    }
    if (c == ' ') {
      if (surface[i - 1] != ' ') out.push_back('_');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

bool IsReservedWord(std::string_view word) {
  std::string lower = Lower(word);
  for (const char *r : kReservedWords) {
    if (lower == r) return true;
  }
  return false;
}

bool TakesAn(std::string_view word) {
  std::string w = Lower(word);
  if (w.empty()) return false;
  for (const char *p : {"hour", "honest", "honor", "honour", "heir"}) {
    if (w.rfind(p, 0) == 0) return true;
  }
  for (const char *p : {"uni", "use", "usu", "uti", "eu", "one", "once"}) {
    if (w.rfind(p, 0) == 0) return false;
  }
  return std::string_view("aeiou").find(w[0]) != std::string_view::npos;
}

WordForms Lexicon::Normalize(WordCategory category,
                             const WordForms &forms) const {
  std::vector<RoleSpec> roles = RolesOf(category);
  for (const auto &[role, text] : forms) {
    bool known = std::any_of(roles.begin(), roles.end(),
                             [&](const RoleSpec &s) { return s.role == role; });
    if (!known) {
      throw Error(ErrorCode::kWrongCategory,
                  std::string("form role ") + RoleName(role) +
                      " does not belong to category " + CategoryName(category));
    }
  }
  WordForms out;
  for (const RoleSpec &spec : roles) {
    auto it = forms.find(spec.role);
    if (it == forms.end() || it->second.empty()) {
      if (spec.mandatory) {
        throw Error(ErrorCode::kMissingForm,
                    std::string("missing ") + RoleName(spec.role) + " form",
                    -1, {RoleName(spec.role)});
      }
      continue;
    }
    out[spec.role] = ValidateWordForm(it->second);
  }
  std::set<std::string> seen;
  for (const auto &[role, text] : out) {
    if (IsReservedWord(text) || index_.count(text) || !seen.insert(text).second) {
      throw Error(ErrorCode::kConflict, "word form '" + text + "' is taken",
                  -1, {text});
    }
  }
  return out;
}

const LexEntry &Lexicon::Insert(EntryId id, WordCategory category,
                                WordForms forms) {
  auto [it, inserted] =
      entries_.emplace(id, LexEntry(id, category, std::move(forms)));
  if (!inserted) {
    throw Error(ErrorCode::kConflict,
                "duplicate entry id " + std::to_string(id.value));
  }
  for (const auto &[role, text] : it->second.forms()) {
    index_[text] = {id, role};
  }
  next_id_ = std::max(next_id_, id.value + 1);
  return it->second;
}

const LexEntry &Lexicon::Add(WordCategory category, const WordForms &forms) {
  WordForms normalized = Normalize(category, forms);
  return Insert(EntryId{next_id_}, category, std::move(normalized));
}

const LexEntry &Lexicon::Restore(EntryId id, WordCategory category,
                                 const WordForms &forms) {
  WordForms normalized = Normalize(category, forms);
  return Insert(id, category, std::move(normalized));
}

void Lexicon::SetAbbreviation(EntryId id, std::string_view abbreviation) {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw Error(ErrorCode::kNotFound, "no such entry");
  }
  LexEntry &entry = it->second;
  if (entry.category() != WordCategory::kProperName) {
    throw Error(ErrorCode::kWrongCategory,
                "abbreviations are only defined for proper names");
  }
  std::string form = ValidateWordForm(abbreviation);
  if (IsReservedWord(form) || index_.count(form) ||
      entry.has(FormRole::kAbbreviation)) {
    throw Error(ErrorCode::kConflict, "word form '" + form + "' is taken", -1,
                {form});
  }
  entry.forms_[FormRole::kAbbreviation] = form;
  index_[form] = {id, FormRole::kAbbreviation};
}

void Lexicon::Remove(EntryId id) {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw Error(ErrorCode::kNotFound, "no such entry");
  }
  for (const auto &[role, text] : it->second.forms()) index_.erase(text);
  entries_.erase(it);
}

std::vector<std::pair<const LexEntry *, FormRole>> Lexicon::Resolve(
    std::string_view surface) const {
  std::vector<std::pair<const LexEntry *, FormRole>> out;
  auto it = index_.find(std::string(surface));
  if (it != index_.end()) {
    out.emplace_back(&entries_.at(it->second.first), it->second.second);
  }
  return out;
}

const LexEntry *Lexicon::Find(EntryId id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

const LexEntry &Lexicon::Get(EntryId id) const {
  const LexEntry *entry = Find(id);
  if (entry == nullptr) throw Error(ErrorCode::kNotFound, "no such entry");
  return *entry;
}

const LexEntry *Lexicon::FindByForm(std::string_view surface) const {
  auto it = index_.find(std::string(surface));
  return it == index_.end() ? nullptr : &entries_.at(it->second.first);
}

bool Lexicon::operator==(const Lexicon &other) const {
  if (index_ != other.index_ || entries_.size() != other.entries_.size()) {
    return false;
  }
  for (const auto &[id, entry] : entries_) {
    const LexEntry *o = other.Find(id);
    if (o == nullptr || o->category() != entry.category() ||
        o->forms() != entry.forms()) {
      return false;
    }
  }
  return true;
}

}  // namespace cnl
