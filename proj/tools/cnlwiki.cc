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

// Command line tool for a wiki stored in a directory.
//
//   cnlwiki --kb DIR serve [--port N]
//   cnlwiki --kb DIR import FILE [--page PAGE]
//   cnlwiki --kb DIR add-word CATEGORY ROLE=FORM...
//   cnlwiki --kb DIR export-owl
//   cnlwiki --kb DIR stats
//   cnlwiki --kb DIR check
//   cnlwiki --kb DIR complete TOKEN...
//
// Exit status: 0 ok, 1 user error, 2 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cnl/api.h"
#include "cnl/corpus.h"
#include "cnl/error.h"
#include "cnl/kb.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

// A missing directory is an empty wiki.
cnl::Kb Open(const std::string &dir) {
  if (!std::filesystem::exists(dir)) return cnl::Kb();
  return cnl::Kb::Load(dir);
}

int Import(const std::string &dir, const std::string &file, std::string page) {
  std::ifstream in(file);
  if (!in) {
    throw cnl::Error(cnl::ErrorCode::kIoError, "cannot read " + file, -1,
                     {file});
  }
  cnl::Kb kb = Open(dir);
  if (!kb.pages().count(page)) page = kb.AddPage(page).id;
  std::string line;
  int number = 0, failures = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::cout << number << "\t";
    try {
      const cnl::Statement &s = kb.AddStatement(page, line);
      std::cout << (s.kind == cnl::StatementKind::kQuestion
                        ? "question"
                        : cnl::StatementStateName(s.state))
                << "\t" << s.text << "\n";
    } catch (const cnl::Error &e) {
      ++failures;
      std::cout << "error\t" << cnl::ErrorCodeName(e.code()) << ": "
                << e.what() << "\n";
    }
  }
  kb.Save(dir);
  cnl::CorpusStats stats = cnl::AnalyzeCorpus(kb, failures);
  std::cout << "S=" << stats.S << " S_plus=" << stats.S_plus
            << " S_e=" << stats.S_e << " S_minus=" << stats.S_minus << "\n";
  return failures == 0 ? 0 : 1;
}

int AddWord(const std::string &dir, const std::string &category_name,
            const std::vector<std::string> &items) {
  cnl::WordCategory category;
  if (!cnl::ParseCategory(category_name, &category)) {
    std::cerr << "unknown category: " << category_name << "\n";
    return 1;
  }
  cnl::WordForms forms;
  for (const std::string &item : items) {
    size_t eq = item.find('=');
    cnl::FormRole role;
    if (eq == std::string::npos ||
        !cnl::ParseRole(std::string_view(item).substr(0, eq), &role)) {
      std::cerr << "expected ROLE=FORM: " << item << "\n";
      return 1;
    }
    forms[role] = item.substr(eq + 1);
  }
  cnl::Kb kb = Open(dir);
  const cnl::LexEntry &entry = kb.AddWord(category, forms);
  std::cout << cnl::Kb::PageId(entry) << "\n";
  kb.Save(dir);
  return 0;
}

int Complete(const std::string &dir, const std::vector<std::string> &tokens) {
  std::string list;
  for (const std::string &t : tokens) {
    if (!list.empty()) list += ",";
    list += t;
  }
  cnl::Service service(Open(dir));
  cnl::ApiResponse r = service.Handle("GET", "/api/complete", {{"tokens", list}}, "");
  json body = json::parse(r.body);
  if (r.status != 200) {
    std::cerr << body["error"]["code"].get<std::string>() << ": "
              << body["error"]["message"].get<std::string>() << "\n";
    return 1;
  }
  if (body["complete"] == true) {
    std::cout << "(complete sentence)\n";
    if (body.contains("every_rewrite")) {
      std::cout << "every rewrite: " << body["every_rewrite"].get<std::string>()
                << "\n";
    }
  }
  for (const json &g : body["groups"]) {
    std::cout << g["label"].get<std::string>() << ":";
    for (const json &t : g["tokens"]) std::cout << " " << t.get<std::string>();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"controlled English wiki"};
  app.require_subcommand(1);
  std::string dir = "wiki";
  app.add_option("--kb", dir, "wiki directory")->capture_default_str();

  int port = 8080;
  std::string host = "127.0.0.1";
  auto *serve = app.add_subcommand("serve", "run the HTTP API");
  serve->add_option("--port", port, "port")->capture_default_str();
  serve->add_option("--host", host, "address to bind")->capture_default_str();

  std::string file, page = "Imported";
  auto *import = app.add_subcommand("import", "add one statement per line");
  import->add_option("file", file, "statement file")->required();
  import->add_option("--page", page, "target page")->capture_default_str();

  std::string category;
  std::vector<std::string> forms;
  auto *add_word = app.add_subcommand("add-word", "add a word to the lexicon");
  add_word->add_option("category", category,
                       "proper-name, noun, verb, of-construct or adjective")
      ->required();
  add_word->add_option("forms", forms, "ROLE=FORM, e.g. singular=city")
      ->required();

  auto *export_owl = app.add_subcommand("export-owl", "print the ontology");
  auto *stats = app.add_subcommand("stats", "print corpus statistics");
  auto *check = app.add_subcommand("check", "re-verify the invariants");

  std::vector<std::string> tokens;
  auto *complete = app.add_subcommand("complete", "print the next-token menu");
  complete->add_option("tokens", tokens, "prefix tokens");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*serve) {
      cnl::Service service(Open(dir), dir);
      std::cerr << "listening on " << host << ":" << port << "\n";
      cnl::Serve(&service, host, port);
      return 0;
    }
    if (*import) return Import(dir, file, page);
    if (*add_word) return AddWord(dir, category, forms);
    if (*complete) return Complete(dir, tokens);
    cnl::Kb kb = Open(dir);
    if (*export_owl) {
      std::cout << kb.ExportOwl();
    } else if (*stats) {
      cnl::Service service(std::move(kb));
      std::cout << service.Handle("GET", "/api/stats", {}, "").body << "\n";
    } else if (*check) {
      std::vector<std::string> problems = kb.Check();
      for (const std::string &p : problems) std::cout << p << "\n";
      if (!problems.empty()) return 1;
      std::cout << "ok\n";
    }
    return 0;
  } catch (const cnl::Error &e) {
    std::cerr << cnl::ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
