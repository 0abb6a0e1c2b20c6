// Copyright 2026 The Terridoc Authors.
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

#ifndef TERRIDOC_SERVER_H_
#define TERRIDOC_SERVER_H_

#include <filesystem>
#include <memory>
#include <string>

namespace terridoc {

// Read-only HTTP front for the concept navigator:
//   GET /graph.json   the graph file, application/json
//   GET /health       {"status":"ok"}
//   GET /...          static files from ui_dir, when given
class GraphServer {
 public:
  // Loads the graph file; throws ValidationError when it cannot be read.
  GraphServer(const std::filesystem::path &graph_path, const std::filesystem::path &ui_dir);
  ~GraphServer();
  GraphServer(const GraphServer &) = delete;
  GraphServer &operator=(const GraphServer &) = delete;

  // Binds host:port (port 0 picks a free one) and returns the bound port.
  // Throws IoError when the port is unavailable.
  int Bind(const std::string &host, int port);

  // Serves until Stop(); call after Bind.
  void Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace terridoc

#endif  // TERRIDOC_SERVER_H_
