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

// JSON over HTTP access to a wiki. Requests are handled by Service::Handle,
// which the HTTP server and the tests share.

#ifndef CNL_API_H_
#define CNL_API_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "cnl/kb.h"

namespace httplib {
class Server;
}

namespace cnl {

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Routes:
//   GET    /api/pages                  page list
//   POST   /api/pages                  {title} creates a free article
//   GET    /api/pages/{id}             rendered page with answers
//   POST   /api/pages/{id}/statements  {text, kind?} kind is "sentence",
//                                      the default, or "comment"
//   DELETE /api/statements/{id}
//   GET    /api/complete?tokens=a,b    lookahead menu after a prefix
//   POST   /api/words                  {category, forms: {role: form}}
//   GET    /api/hierarchy/{noun}
//   GET    /api/stats
//   GET    /api/export.owl             ontology document as text
// Errors are {"error": {code, message, position, details}}.
class Service {
 public:
  // With a directory, every change is saved there before the response.
  explicit Service(Kb kb, std::string directory = "");

  // 'path' is already percent-decoded.
  ApiResponse Handle(const std::string &method, const std::string &path,
                     const std::map<std::string, std::string> &query,
                     const std::string &body);

  // The current state. Readers keep it alive while they use it.
  std::shared_ptr<const Kb> kb() const;

  // Installs the routes on an HTTP server.
  void Register(httplib::Server *server);

 private:
  ApiResponse Read(const std::string &method, const std::string &path,
                   const std::map<std::string, std::string> &query);
  ApiResponse Write(const std::string &method, const std::string &path,
                    const std::string &body);
  void Publish(Kb next);

  std::string directory_;
  // Serializes writers; readers only take 'current_mutex_'.
  std::mutex writer_mutex_;
  mutable std::mutex current_mutex_;
  std::shared_ptr<const Kb> current_;
};

// Serves until the process ends. Throws kIoError if the port cannot be
// bound.
void Serve(Service *service, const std::string &host, int port);

}  // namespace cnl

#endif  // CNL_API_H_
