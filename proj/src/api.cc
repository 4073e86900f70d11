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

#include <utility>
#include <vector>

#include "cnl/corpus.h"
#include "cnl/error.h"
#include "httplib.h"
#include "json.hpp"

namespace cnl {
namespace {

using json = nlohmann::json;

int Status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
    case ErrorCode::kUnknownWord:
      return 404;
    case ErrorCode::kConflict:
    case ErrorCode::kInUse:
      return 409;
    case ErrorCode::kResourceLimit:
      return 503;
    case ErrorCode::kInconsistentKb:
    case ErrorCode::kCorruptFile:
    case ErrorCode::kIoError:
    case ErrorCode::kTooLarge:
      return 500;
    default:
      return 400;
  }
}

ApiResponse Json(int status, const json &body) {
  return ApiResponse{status, "application/json", body.dump()};
}

ApiResponse Failure(const Error &e) {
  json error = {{"code", ErrorCodeName(e.code())},
                {"message", e.what()},
                {"position", e.position()},
                {"details", e.details()}};
  return Json(Status(e.code()), {{"error", error}});
}

Error BadRequest(const std::string &message) {
  return Error(ErrorCode::kSyntaxError, message);
}

std::vector<std::string> Split(const std::string &path) {
  std::vector<std::string> parts;
  size_t start = 1;
  while (start <= path.size()) {
    size_t end = path.find('/', start);
    if (end == std::string::npos) end = path.size();
    parts.push_back(path.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

json StatementJson(const StatementView &v) {
  json out = {{"id", v.id},
              {"kind", StatementKindName(v.kind)},
              {"text", v.text}};
  if (v.kind == StatementKind::kSentence) {
    out["state"] = StatementStateName(v.state);
    out["red_triangle"] = v.red_triangle;
  }
  if (v.kind == StatementKind::kQuestion) {
    out["answers"] = v.answers;
    if (!v.error.empty()) out["error"] = v.error;
  }
  if (v.kind == StatementKind::kComment) {
    json parts = json::array();
    for (const CommentPart &p : v.parts) {
      const char *kind = p.kind == CommentPart::kPageLink ? "link"
                         : p.kind == CommentPart::kUrl    ? "url"
                                                          : "text";
      parts.push_back({{"kind", kind}, {"text", p.text}});
    }
    out["parts"] = parts;
  }
  return out;
}

json PageJson(const PageView &view) {
  json statements = json::array();
  for (const StatementView &v : view.statements) {
    statements.push_back(StatementJson(v));
  }
  return {{"id", view.id}, {"title", view.title}, {"statements", statements}};
}

json StatsJson(const CorpusStats &s) {
  return {{"S", s.S},
          {"S_plus", s.S_plus},
          {"S_plus_x", s.S_plus_x},
          {"S_e", s.S_e},
          {"S_w", s.S_w},
          {"S_minus", s.S_minus},
          {"w", s.w},
          {"w_p", s.w_p},
          {"w_n", s.w_n},
          {"w_r", s.w_r},
          {"w_v", s.w_v},
          {"w_o", s.w_o},
          {"w_a", s.w_a},
          {"complex_ratio", s.complex_ratio()},
          {"correct_ratio", s.correct_ratio()},
          {"almost_correct_ratio", s.almost_correct_ratio()},
          {"sentences_per_word", s.sentences_per_word()},
          {"correct_per_word", s.correct_per_word()}};
}

json EntryJson(const LexEntry &entry) {
  json forms = json::object();
  for (const auto &[role, form] : entry.forms()) forms[RoleName(role)] = form;
  return {{"id", entry.id().value},
          {"category", CategoryName(entry.category())},
          {"forms", forms},
          {"page", Kb::PageId(entry)}};
}

std::vector<std::string> Surfaces(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  for (const Token &t : tokens) out.push_back(t.surface);
  return out;
}

json Complete(const Kb &kb, const std::string &list) {
  std::string text;
  for (char c : list) text.push_back(c == ',' ? ' ' : c);
  std::vector<Token> prefix = Tokenize(text, kb.lexicon());
  json out = {{"tokens", Surfaces(prefix)}, {"groups", json::array()}};
  bool ends = !prefix.empty() && prefix.back().kind == TokenKind::kTerminator;
  if (ends && CountParses(prefix, kb.lexicon()) > 0) {
    out["complete"] = true;
    if (auto every = SuggestEvery(prefix, kb.lexicon())) {
      out["every_rewrite"] = VerbalizeTokens(*every);
    }
    return out;
  }
  out["complete"] = false;
  for (const MenuGroup &g : NextTokens(prefix, kb.lexicon()).groups) {
    out["groups"].push_back({{"label", g.label}, {"tokens", Surfaces(g.tokens)}});
  }
  return out;
}

const json &Field(const json &body, const char *name, json::value_t type) {
  auto it = body.find(name);
  if (it == body.end() || it->type() != type) {
    throw BadRequest(std::string("missing or malformed field '") + name + "'");
  }
  return *it;
}

}  // namespace

Service::Service(Kb kb, std::string directory)
    : directory_(std::move(directory)),
      current_(std::make_shared<const Kb>(std::move(kb))) {}

std::shared_ptr<const Kb> Service::kb() const {
  std::lock_guard<std::mutex> lock(current_mutex_);
  return current_;
}

void Service::Publish(Kb next) {
  if (!directory_.empty()) next.Save(directory_);
  auto published = std::make_shared<const Kb>(std::move(next));
  std::lock_guard<std::mutex> lock(current_mutex_);
  current_ = std::move(published);
}

ApiResponse Service::Handle(const std::string &method, const std::string &path,
                            const std::map<std::string, std::string> &query,
                            const std::string &body) {
  try {
    if (method == "GET") return Read(method, path, query);
    if (method == "POST" || method == "DELETE") {
      return Write(method, path, body);
    }
    return Json(405, {{"error",
                       {{"code", "MethodNotAllowed"},
                        {"message", "method not allowed"},
                        {"position", -1},
                        {"details", json::array()}}}});
  } catch (const Error &e) {
    return Failure(e);
  } catch (const json::exception &e) {
    return Failure(BadRequest(std::string("malformed request: ") + e.what()));
  } catch (const std::exception &e) {
    return Failure(Error(ErrorCode::kIoError, e.what()));
  }
}

ApiResponse Service::Read(const std::string &, const std::string &path,
                          const std::map<std::string, std::string> &query) {
  std::shared_ptr<const Kb> kb = this->kb();
  std::vector<std::string> p = Split(path);
  if (p.size() < 2 || p[0] != "api") {
    throw Error(ErrorCode::kNotFound, "no such route " + path);
  }
  if (p.size() == 2 && p[1] == "pages") {
    json pages = json::array();
    for (const auto &[id, page] : kb->pages()) {
      pages.push_back({{"id", id},
                       {"title", page.title},
                       {"statements", page.statements.size()}});
    }
    return Json(200, {{"pages", pages}});
  }
  if (p.size() == 3 && p[1] == "pages") {
    return Json(200, PageJson(kb->RenderPage(p[2])));
  }
  if (p.size() == 2 && p[1] == "complete") {
    auto it = query.find("tokens");
    return Json(200, Complete(*kb, it == query.end() ? "" : it->second));
  }
  if (p.size() == 3 && p[1] == "hierarchy") {
    return Json(200, {{"noun", p[2]}, {"sentences", kb->HierarchyView(p[2])}});
  }
  if (p.size() == 2 && p[1] == "stats") {
    return Json(200, StatsJson(AnalyzeCorpus(*kb)));
  }
  if (p.size() == 2 && p[1] == "export.owl") {
    return ApiResponse{200, "text/plain; charset=utf-8", kb->ExportOwl()};
  }
  throw Error(ErrorCode::kNotFound, "no such route " + path);
}

ApiResponse Service::Write(const std::string &method, const std::string &path,
                           const std::string &body) {
  std::vector<std::string> p = Split(path);
  std::lock_guard<std::mutex> lock(writer_mutex_);
  Kb next = *kb();
  json request = body.empty() ? json::object() : json::parse(body);
  if (!request.is_object()) throw BadRequest("the body must be an object");
  if (method == "POST" && p.size() == 4 && p[0] == "api" && p[1] == "pages" &&
      p[3] == "statements") {
    std::string text = Field(request, "text", json::value_t::string);
    std::string kind = request.value("kind", "sentence");
    int id;
    if (kind == "comment") {
      id = next.AddComment(p[2], text).id;
    } else if (kind == "sentence") {
      id = next.AddStatement(p[2], text).id;
    } else {
      throw BadRequest("unknown statement kind '" + kind + "'");
    }
    json out;
    for (const StatementView &v : next.RenderPage(p[2]).statements) {
      if (v.id == id) out = StatementJson(v);
    }
    out["page"] = p[2];
    const Statement &s = next.statements().at(id);
    if (s.kind == StatementKind::kSentence) {
      if (auto every = SuggestEvery(s.tokens, next.lexicon())) {
        out["every_rewrite"] = VerbalizeTokens(*every);
      }
    }
    Publish(std::move(next));
    return Json(200, out);
  }
  if (method == "POST" && p.size() == 2 && p[0] == "api" && p[1] == "pages") {
    const WikiPage &page =
        next.AddPage(Field(request, "title", json::value_t::string)
                         .get<std::string>());
    json out = {{"id", page.id}, {"title", page.title}};
    Publish(std::move(next));
    return Json(200, out);
  }
  if (method == "DELETE" && p.size() == 3 && p[0] == "api" &&
      p[1] == "statements") {
    int id = 0;
    try {
      size_t used = 0;
      id = std::stoi(p[2], &used);
      if (used != p[2].size()) throw std::invalid_argument(p[2]);
    } catch (const std::logic_error &) {
      throw Error(ErrorCode::kNotFound, "no statement " + p[2]);
    }
    std::map<int, StatementState> before;
    for (const auto &[sid, s] : next.statements()) before[sid] = s.state;
    next.RemoveStatement(id);
    json changed = json::array();
    for (const auto &[sid, s] : next.statements()) {
      if (before.at(sid) != s.state) {
        changed.push_back({{"id", sid}, {"state", StatementStateName(s.state)}});
      }
    }
    Publish(std::move(next));
    return Json(200, {{"removed", id}, {"changed", changed}});
  }
  if (method == "POST" && p.size() == 2 && p[0] == "api" && p[1] == "words") {
    WordCategory category;
    std::string name = Field(request, "category", json::value_t::string);
    if (!ParseCategory(name, &category)) {
      throw Error(ErrorCode::kWrongCategory, "unknown category '" + name + "'",
                  -1, {name});
    }
    WordForms forms;
    for (const auto &[role, form] :
         Field(request, "forms", json::value_t::object).items()) {
      FormRole r;
      if (!ParseRole(role, &r) || !form.is_string()) {
        throw Error(ErrorCode::kWrongCategory, "unknown form '" + role + "'",
                    -1, {role});
      }
      forms[r] = form.get<std::string>();
    }
    json out = EntryJson(next.AddWord(category, forms));
    Publish(std::move(next));
    return Json(200, out);
  }
  throw Error(ErrorCode::kNotFound, "no such route " + path);
}

void Service::Register(httplib::Server *server) {
  auto handler = [this](const httplib::Request &req, httplib::Response &res) {
    std::map<std::string, std::string> query;
    for (const auto &[k, v] : req.params) query[k] = v;
    ApiResponse r = Handle(req.method, req.path, query, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  const char *pattern = R"(/api/.*)";
  server->Get(pattern, handler);
  server->Post(pattern, handler);
  server->Delete(pattern, handler);
}

void Serve(Service *service, const std::string &host, int port) {
  httplib::Server server;
  service->Register(&server);
  if (!server.bind_to_port(host, port)) {
    throw Error(ErrorCode::kIoError,
                "cannot bind " + host + ":" + std::to_string(port), -1,
                {std::to_string(port)});
  }
  server.listen_after_bind();
}

}  // namespace cnl
