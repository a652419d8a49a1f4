// Copyright 2026 The ann Authors.
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


// A service bound to a free loopback port and served on a background thread.

#ifndef ANN_TESTS_LIVE_SERVICE_HPP_
#define ANN_TESTS_LIVE_SERVICE_HPP_

#include <httplib.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "ann/service.hpp"

namespace ann::testing {

inline constexpr const char* kAnnotatorsTsv =
    "# id\tname\ttoken\n"
    "alice\tAlice\ttok-alice\n"
    "bob\tBob\ttok-bob\n";

inline std::shared_ptr<const Tagset> bundled_tagset() {
  return std::shared_ptr<const Tagset>(&Tagset::magahi(), [](const Tagset*) {});
}

struct LiveService {
  Workspace workspace{bundled_tagset()};
  std::unique_ptr<AnnotationService> service;
  std::thread thread;
  int port = -1;

  explicit LiveService(AutotagLexicon lexicon = {}, ServiceOptions options = {},
                       std::string_view annotators = kAnnotatorsTsv) {
    service = std::make_unique<AnnotationService>(workspace, AnnotatorRegistry::parse(annotators),
                                                  std::move(lexicon), std::move(options));
    port = service->bind("127.0.0.1", 0);
    if (port <= 0) throw std::runtime_error("could not bind a loopback port");
    thread = std::thread([this] { service->serve(); });
    service->wait_until_ready();
  }
  ~LiveService() {
    service->stop();
    thread.join();
  }

  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port);
    c.set_connection_timeout(5);
    c.set_read_timeout(10);
    return c;
  }
};

inline httplib::Headers bearer(const std::string& token) { return {{"Authorization", "Bearer " + token}}; }

inline nlohmann::json body_of(const httplib::Result& r) {
  if (!r || r->body.empty()) return nullptr;
  return nlohmann::json::parse(r->body, nullptr, false);
}

}  // namespace ann::testing

#endif  // ANN_TESTS_LIVE_SERVICE_HPP_
