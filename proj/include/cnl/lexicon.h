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

#ifndef CNL_LEXICON_H_
#define CNL_LEXICON_H_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cnl {

// The five kinds of content words. Function words are fixed by the grammar.
enum class WordCategory {
  kProperName,
  kNoun,
  kTransitiveVerb,
  kOfConstruct,
  kTransitiveAdjective,
};

// Which surface form of an entry a token uses.
enum class FormRole {
  kName,            // proper name, long form
  kAbbreviation,    // proper name, short form
  kSingular,        // noun
  kPlural,          // noun
  kThirdSingular,   // verb, "borders"
  kInfinitive,      // verb, "border"
  kPastParticiple,  // verb, "bordered"
  kOfNoun,          // of-construct, "part" as in "part of"
  kAdjective,       // transitive adjective incl. preposition, "located_in"
};

const char *CategoryName(WordCategory category);
const char *RoleName(FormRole role);
// Parses the names produced above; returns false on unknown input.
bool ParseCategory(std::string_view name, WordCategory *category);
bool ParseRole(std::string_view name, FormRole *role);

// Stable identifier of a lexicon entry.
struct EntryId {
  uint32_t value = 0;
  auto operator<=>(const EntryId &) const = default;
};

using WordForms = std::map<FormRole, std::string>;

class LexEntry {
 public:
  LexEntry(EntryId id, WordCategory category, WordForms forms)
      : id_(id), category_(category), forms_(std::move(forms)) {}

  EntryId id() const { return id_; }
  WordCategory category() const { return category_; }
  const WordForms &forms() const { return forms_; }

  // Returns the form for a role, or an empty string if absent.
  const std::string &form(FormRole role) const;
  bool has(FormRole role) const { return forms_.count(role) > 0; }

  // Canonical symbol used for logic and OWL output: the long proper name,
  // the singular noun, the verb infinitive, the of-noun or the adjective.
  const std::string &symbol() const;

 private:
  friend class Lexicon;

  EntryId id_;
  WordCategory category_;
  WordForms forms_;
};

// Checks the word charset (letters, digits, hyphens, blanks) and returns
// the normalized surface with blanks replaced by underscores. Throws
// Error(kInvalidCharacter) with the offending position and character.
std::string ValidateWordForm(std::string_view surface);

// True for function words and variable names, which cannot be used as
// content word forms. Case-insensitive.
bool IsReservedWord(std::string_view word);

// True if the indefinite article before this word is "an".
bool TakesAn(std::string_view word);

// A set of entries with an index from every surface form to its entry.
// Surface forms are unique across the whole lexicon, so every token
// resolves to at most one entry. Lexicon is a value type; copies are
// independent snapshots.
class Lexicon {
 public:
  // Adds an entry. Forms are validated and normalized. Throws kConflict if
  // a form is reserved or already used, kMissingForm if a mandatory form
  // of the category is absent, kWrongCategory for a role that does not
  // belong to the category.
  const LexEntry &Add(WordCategory category, const WordForms &forms);

  // Adds or replaces nothing: an abbreviation can be set once.
  void SetAbbreviation(EntryId id, std::string_view abbreviation);

  // Removes an entry and all its forms. Throws kNotFound.
  void Remove(EntryId id);

  // All (entry, role) pairs whose form equals the surface.
  std::vector<std::pair<const LexEntry *, FormRole>> Resolve(
      std::string_view surface) const;

  const LexEntry *Find(EntryId id) const;
  const LexEntry &Get(EntryId id) const;
  // Finds the entry owning a surface form, or null.
  const LexEntry *FindByForm(std::string_view surface) const;

  const std::map<EntryId, LexEntry> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Index of surface forms, exposed for tests and the grammar.
  const std::unordered_map<std::string, std::pair<EntryId, FormRole>> &index()
      const {
    return index_;
  }

  // Restores an entry with a given id (used when loading).
  const LexEntry &Restore(EntryId id, WordCategory category,
                          const WordForms &forms);

  bool operator==(const Lexicon &other) const;

 private:
  WordForms Normalize(WordCategory category, const WordForms &forms) const;
  const LexEntry &Insert(EntryId id, WordCategory category, WordForms forms);

  std::map<EntryId, LexEntry> entries_;
  std::unordered_map<std::string, std::pair<EntryId, FormRole>> index_;
  uint32_t next_id_ = 1;
};

}  // namespace cnl

#endif  // CNL_LEXICON_H_
