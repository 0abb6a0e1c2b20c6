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

// terridoc: build a territory ontology from indexed library notices.
//
//   terridoc build  --notices N.xml --thesaurus T.jsonl --gazetteer G.csv --out-dir OUT
//   terridoc export --graph OUT/terridoc.json --out-dir DIR
//   terridoc stats  --notices N.xml --thesaurus T.jsonl
//   terridoc serve  --graph OUT/terridoc.json [--ui-dir UI] [--port 8080]
//
// Exit status: 0 success, 1 invalid input, 2 I/O or environment failure.

#include <csignal>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "terridoc/errors.h"
#include "terridoc/export.h"
#include "terridoc/notice.h"
#include "terridoc/pipeline.h"
#include "terridoc/server.h"
#include "terridoc/terridoc_graph.h"
#include "terridoc/thesaurus.h"

#ifndef TERRIDOC_DEFAULT_LEXICON_DIR
#define TERRIDOC_DEFAULT_LEXICON_DIR "data/lexicon"
#endif

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

terridoc::GraphServer *g_server = nullptr;

void HandleSignal(int) {
  if (g_server != nullptr) g_server->Stop();
}

int RunExport(const std::filesystem::path &graph_path, const std::filesystem::path &out_dir) {
  const terridoc::Ontology ontology = terridoc::ImportJson(terridoc::ReadInputFile(graph_path));
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw terridoc::IoError("cannot create " + out_dir.string() + ": " + ec.message());
  terridoc::WriteOutputFile(out_dir / "ontology.ttl", terridoc::ExportTurtle(ontology));
  terridoc::WriteOutputFile(out_dir / "graph.dot", terridoc::ExportDot(ontology));
  return 0;
}

int RunStats(const std::filesystem::path &notices_path,
             const std::filesystem::path &thesaurus_path) {
  const auto notices = terridoc::ParseNotices(terridoc::ReadInputFile(notices_path));
  const auto thesaurus = terridoc::LoadThesaurus(terridoc::ReadInputFile(thesaurus_path));
  const auto graph = terridoc::BuildTerridoc(notices, thesaurus);
  std::cout << terridoc::GraphStatsJson(terridoc::ComputeGraphStats(graph));
  return 0;
}

int RunServe(const std::filesystem::path &graph_path, const std::filesystem::path &ui_dir,
             const std::string &host, int port) {
  terridoc::GraphServer server(graph_path, ui_dir);
  const int bound = server.Bind(host, port);
  g_server = &server;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);
  std::cerr << "serving " << graph_path.string() << " on http://" << host << ":" << bound << "/\n";
  server.Listen();
  g_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Build a territory ontology from indexed library notices"};
  app.require_subcommand(1);

  terridoc::PipelineConfig config;
  config.lexicon_dir = TERRIDOC_DEFAULT_LEXICON_DIR;
  std::string link_policy = "existing";
  auto *build = app.add_subcommand("build", "Run the full pipeline and write the four outputs");
  build->add_option("--notices", config.notices_path, "Notices XML file")->required();
  build->add_option("--thesaurus", config.thesaurus_path, "Thesaurus JSON Lines file")->required();
  build->add_option("--gazetteer", config.gazetteer_path, "Gazetteer CSV file")->required();
  build->add_option("--out-dir", config.out_dir, "Output directory")->required();
  build->add_option("--lexicon-dir", config.lexicon_dir, "Directory with det.txt, prep.txt, cc.txt")
      ->capture_default_str();
  build->add_flag("--spatial-relations", config.spatial_relations,
                  "Derive spatial_within / spatial_near edges between instances");
  build->add_option("--near-km", config.near_km, "Distance threshold for spatial_near")
      ->capture_default_str();
  build->add_option("--link-policy", link_policy,
                    "Qualifiers without a concept: drop (existing) or create a concept")
      ->check(CLI::IsMember({"existing", "create"}))
      ->capture_default_str();

  std::filesystem::path export_graph;
  std::filesystem::path export_out;
  auto *exporter = app.add_subcommand("export", "Re-serialize terridoc.json to Turtle and DOT");
  exporter->add_option("--graph", export_graph, "terridoc.json file")->required();
  exporter->add_option("--out-dir", export_out, "Output directory")->required();

  std::filesystem::path stats_notices;
  std::filesystem::path stats_thesaurus;
  auto *stats = app.add_subcommand("stats", "Print term-graph statistics as JSON");
  stats->add_option("--notices", stats_notices, "Notices XML file")->required();
  stats->add_option("--thesaurus", stats_thesaurus, "Thesaurus JSON Lines file")->required();

  std::filesystem::path serve_graph;
  std::filesystem::path serve_ui;
  std::string host = "127.0.0.1";
  int port = 8080;
  auto *serve = app.add_subcommand("serve", "Serve the graph and the navigator UI over HTTP");
  serve->add_option("--graph", serve_graph, "terridoc.json file")->required();
  serve->add_option("--ui-dir", serve_ui, "Static UI directory");
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--port", port, "Port")->capture_default_str()->check(CLI::Range(0, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*build) {
      config.link_policy =
          link_policy == "create" ? terridoc::LinkPolicy::kCreate : terridoc::LinkPolicy::kExisting;
      terridoc::RunBuild(config);
      return 0;
    }
    if (*exporter) return RunExport(export_graph, export_out);
    if (*stats) return RunStats(stats_notices, stats_thesaurus);
    if (*serve) return RunServe(serve_graph, serve_ui, host, port);
  } catch (const terridoc::IoError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const terridoc::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const terridoc::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitValidation;
}
