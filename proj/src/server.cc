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

#include "terridoc/server.h"

#include "httplib.h"
#include "terridoc/errors.h"
#include "terridoc/pipeline.h"

namespace terridoc {

struct GraphServer::Impl {
  httplib::Server server;
  std::string graph;
};

GraphServer::GraphServer(const std::filesystem::path &graph_path,
                         const std::filesystem::path &ui_dir)
    : impl_(std::make_unique<Impl>()) {
  impl_->graph = ReadInputFile(graph_path);

  // No SO_REUSEPORT: a port held by another process must fail to bind.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void *>(&yes), sizeof yes);
  });

  impl_->server.Get("/graph.json", [this](const httplib::Request &, httplib::Response &res) {
    res.set_content(impl_->graph, "application/json");
  });
  impl_->server.Get("/health", [](const httplib::Request &, httplib::Response &res) {
    res.set_content(R"({"status":"ok"})", "application/json");
  });
  if (!ui_dir.empty()) {
    if (!std::filesystem::is_directory(ui_dir)) {
      throw ValidationError("UI directory not found: " + ui_dir.string());
    }
    impl_->server.set_mount_point("/", ui_dir.string());
  }
}

GraphServer::~GraphServer() { Stop(); }

int GraphServer::Bind(const std::string &host, int port) {
  int bound = port;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (!impl_->server.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound <= 0) {
    throw IoError("cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void GraphServer::Listen() { impl_->server.listen_after_bind(); }

void GraphServer::Stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace terridoc
