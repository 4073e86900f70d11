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

#include "cnl/api.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "cnl/corpus.h"
#include "doctest.h"
#include "fixtures.h"
#include "httplib.h"
#include "json.hpp"

namespace cnl {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

Lexicon Geography() {
  Lexicon lex = testing::GeographyLexicon();
  testing::AddName(&lex, "Germany");
  testing::AddName(&lex, "Italy");
  return lex;
}

struct Call {
  int status;
  json body;
};

Call Get(Service &s, const std::string &path,
         std::map<std::string, std::string> query = {}) {
  ApiResponse r = s.Handle("GET", path, query, "");
  return {r.status, r.content_type == "application/json" ? json::parse(r.body)
                                                         : json(r.body)};
}

Call Post(Service &s, const std::string &path, const json &body) {
  ApiResponse r = s.Handle("POST", path, {}, body.dump());
  return {r.status, json::parse(r.body)};
}

Call Delete(Service &s, const std::string &path) {
  ApiResponse r = s.Handle("DELETE", path, {}, "");
  return {r.status, json::parse(r.body)};
}

std::vector<std::string> Surfaces(const CompletionMenu &menu) {
  std::vector<std::string> out;
  for (const Token &t : menu.AllTokens()) out.push_back(t.surface);
  return out;
}

std::vector<std::string> Surfaces(const json &groups) {
  std::vector<std::string> out;
  for (const json &g : groups) {
    for (const json &t : g["tokens"]) out.push_back(t);
  }
  return out;
}

TEST_CASE("completion menus") {
  Service s{Kb(Geography())};
  Call c = Get(s, "/api/complete", {{"tokens", "every,city"}});
  CHECK(c.status == 200);
  CHECK(c.body["complete"] == false);
  const Lexicon &lex = s.kb()->lexicon();
  CHECK(Surfaces(c.body["groups"]) ==
        Surfaces(NextTokens(Tokenize("every city", lex), lex)));
  CHECK(Surfaces(c.body["groups"]).size() > 3);

  c = Get(s, "/api/complete");
  CHECK(Surfaces(c.body["groups"]) == Surfaces(NextTokens({}, lex)));

  c = Get(s, "/api/complete", {{"tokens", "a,city,is,an,area,."}});
  CHECK(c.body["complete"] == true);
  CHECK(c.body["every_rewrite"] == "Every city is an area.");
  c = Get(s, "/api/complete", {{"tokens", "every,city,is,an,area,."}});
  CHECK_FALSE(c.body.contains("every_rewrite"));

  c = Get(s, "/api/complete", {{"tokens", "every,is"}});
  CHECK(c.status == 400);
  CHECK(c.body["error"]["code"] == "DeadEnd");
  c = Get(s, "/api/complete", {{"tokens", "every,moon"}});
  CHECK(c.body["error"]["code"] == "UnknownToken");
}

TEST_CASE("statements through the API") {
  Service s{Kb(Geography())};
  Call c = Post(s, "/api/pages/Zurich/statements", {{"text", "Zurich is a country."}});
  CHECK(c.status == 200);
  CHECK(c.body["state"] == "integrated");
  int first = c.body["id"];
  c = Post(s, "/api/pages/Zurich/statements", {{"text", "Zurich is not a country."}});
  CHECK(c.status == 200);
  CHECK(c.body["state"] == "conflicting");
  CHECK(c.body["page"] == "Zurich");
  int second = c.body["id"];

  c = Post(s, "/api/pages/Zurich/statements",
           {{"text", "See [[Switzerland]]."}, {"kind", "comment"}});
  CHECK(c.body["kind"] == "comment");
  CHECK(c.body["parts"][1] == json{{"kind", "link"}, {"text", "Switzerland"}});

  c = Post(s, "/api/pages/Zurich/statements", {{"text", "what is Zurich?"}});
  CHECK(c.body["kind"] == "question");
  CHECK(c.body["answers"] == json{"country"});

  c = Post(s, "/api/pages/country/statements", {{"text", "A city is an area."}});
  CHECK(c.body["every_rewrite"] == "Every city is an area.");

  c = Delete(s, "/api/statements/" + std::to_string(first));
  CHECK(c.status == 200);
  CHECK(c.body["changed"] ==
        json::array({{{"id", second}, {"state", "integrated"}}}));
  c = Delete(s, "/api/statements/" + std::to_string(first));
  CHECK(c.status == 404);
  CHECK(c.body["error"]["code"] == "NotFound");
  CHECK(Delete(s, "/api/statements/x").status == 404);

  c = Post(s, "/api/pages/Zurich/statements", {{"text", "Zurich is a."}});
  CHECK(c.status == 400);
  CHECK(c.body["error"]["code"] == "SyntaxError");
  CHECK(c.body["error"]["position"] == 3);
  CHECK(Post(s, "/api/pages/nowhere/statements", {{"text", "Zurich is a city."}})
            .status == 404);
  CHECK(Post(s, "/api/pages/Zurich/statements", json::object()).status == 400);
  CHECK(Post(s, "/api/pages/Zurich/statements", {{"text", 3}}).status == 400);
  ApiResponse raw = s.Handle("POST", "/api/pages/Zurich/statements", {}, "{");
  CHECK(raw.status == 400);
  CHECK(s.Handle("PUT", "/api/pages", {}, "").status == 405);
  CHECK(Get(s, "/api/nothing").status == 404);
  CHECK(s.kb()->Check().empty());
}

TEST_CASE("pages, words and hierarchy") {
  Service s{Kb(Geography())};
  Call c = Post(s, "/api/words",
                {{"category", "noun"},
                 {"forms", {{"singular", "canton"}, {"plural", "cantons"}}}});
  CHECK(c.status == 200);
  CHECK(c.body["page"] == "canton");
  c = Post(s, "/api/words",
           {{"category", "noun"},
            {"forms", {{"singular", "canton"}, {"plural", "cantons"}}}});
  CHECK(c.status == 409);
  c = Post(s, "/api/words", {{"category", "planet"}, {"forms", json::object()}});
  CHECK(c.status == 400);
  c = Post(s, "/api/words", {{"category", "noun"}, {"forms", {{"singular", "x"}}}});
  CHECK(c.body["error"]["code"] == "MissingForm");

  c = Post(s, "/api/pages", {{"title", "Swiss history"}});
  CHECK(c.body["id"] == "Swiss_history");
  c = Get(s, "/api/pages");
  bool found = false;
  for (const json &p : c.body["pages"]) {
    found = found || (p["id"] == "Swiss_history" && p["title"] == "Swiss history");
  }
  CHECK(found);

  Post(s, "/api/pages/canton/statements", {{"text", "Every canton is an area."}});
  c = Get(s, "/api/hierarchy/canton");
  CHECK(c.body["sentences"] == json{"Every canton is an area."});
  CHECK(Get(s, "/api/hierarchy/moon").status == 404);

  c = Get(s, "/api/pages/canton");
  CHECK(c.body["title"] == "canton");
  CHECK(c.body["statements"][0]["red_triangle"] == false);
  CHECK(Get(s, "/api/pages/nowhere").status == 404);
}

TEST_CASE("responses match the engine") {
  Service s{Kb(Geography())};
  for (const char *text :
       {"Switzerland is a country.", "Germany borders Switzerland.",
        "Italy borders Switzerland.", "Every country is an area.",
        "what borders Switzerland?",
        "If X borders Y then Y borders X.",
        "Every area that borders a country is a country or is a city."}) {
    Post(s, "/api/pages/Switzerland/statements", {{"text", text}});
  }
  std::shared_ptr<const Kb> kb = s.kb();
  ApiResponse owl = s.Handle("GET", "/api/export.owl", {}, "");
  CHECK(owl.content_type.rfind("text/plain", 0) == 0);
  CHECK(owl.body == kb->ExportOwl());

  json page = Get(s, "/api/pages/Switzerland").body;
  PageView view = kb->RenderPage("Switzerland");
  REQUIRE(page["statements"].size() == view.statements.size());
  for (size_t i = 0; i < view.statements.size(); ++i) {
    CHECK(page["statements"][i]["id"] == view.statements[i].id);
    CHECK(page["statements"][i]["text"] == view.statements[i].text);
  }
  CHECK(page["statements"][4]["answers"] == json{"Germany", "Italy"});

  json stats = Get(s, "/api/stats").body;
  CorpusStats direct = AnalyzeCorpus(*kb);
  CHECK(stats["S"] == direct.S);
  CHECK(stats["S_plus_x"] == direct.S_plus_x);
  CHECK(stats["w"] == direct.w);
  CHECK(stats["complex_ratio"] == direct.complex_ratio());
}

TEST_CASE("changes are saved before the response") {
  fs::path dir = fs::temp_directory_path() / "cnl_api_test";
  fs::remove_all(dir);
  Kb(Geography()).Save(dir.string());
  Service s(Kb::Load(dir.string()), dir.string());
  Post(s, "/api/pages/Zurich/statements", {{"text", "Zurich is a city."}});
  Kb reloaded = Kb::Load(dir.string());
  CHECK(reloaded.statements().size() == 1);
  CHECK(reloaded.ExportOwl() == s.kb()->ExportOwl());

  // A failed save leaves the published state unchanged.
  fs::remove_all(dir);
  std::ofstream(dir.string()) << "not a directory";
  Call c = Post(s, "/api/pages/Zurich/statements", {{"text", "Zurich is an area."}});
  CHECK(c.status == 500);
  CHECK(s.kb()->statements().size() == 1);
  fs::remove(dir);
}

TEST_CASE("readers keep their snapshot") {
  Service s{Kb(Geography())};
  std::shared_ptr<const Kb> before = s.kb();
  Post(s, "/api/pages/Zurich/statements", {{"text", "Zurich is a city."}});
  CHECK(before->statements().empty());
  CHECK(s.kb()->statements().size() == 1);
}

TEST_CASE("concurrent writers are serialized") {
  Service s{Kb(Geography())};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&s] {
      for (int i = 0; i < 5; ++i) {
        Post(s, "/api/pages/Zurich/statements", {{"text", "Zurich is a city."}});
        Get(s, "/api/pages/Zurich");
      }
    });
  }
  for (auto &t : threads) t.join();
  CHECK(s.kb()->statements().size() == 20);
  CHECK(s.kb()->Check().empty());
}

TEST_CASE("HTTP server") {
  Service s{Kb(Geography())};
  httplib::Server server;
  s.Register(&server);
  int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto res = client.Post("/api/pages/Zurich/statements",
                         R"({"text": "Zurich is a city."})", "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(json::parse(res->body)["state"] == "integrated");
  res = client.Get("/api/complete?tokens=every%2Ccity");
  REQUIRE(res);
  CHECK(json::parse(res->body)["groups"].size() > 0);
  res = client.Get("/api/pages/Attempto%20Controlled%20English");
  REQUIRE(res);
  CHECK(res->status == 404);
  res = client.Get("/api/pages/Attempto_Controlled_English");
  REQUIRE(res);
  CHECK(json::parse(res->body)["title"] == "Attempto Controlled English");
  res = client.Delete("/api/statements/1");
  REQUIRE(res);
  CHECK(res->status == 200);
  res = client.Get("/api/export.owl");
  REQUIRE(res);
  CHECK(res->body == s.kb()->ExportOwl());

  server.stop();
  thread.join();

  CHECK_THROWS_AS(Serve(&s, "256.0.0.1", port), Error);
}

}  // namespace
}  // namespace cnl
