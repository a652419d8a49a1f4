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

// ann: command-line front end for the annotation platform.
//
//   ann serve       --corpus DIR [--tagset FILE] [--lexicon FILE] --port N --annotators FILE
//   ann ingest      --corpus DIR --subcorpus PATH [--split newline|danda] FILE...
//   ann import-csv  --corpus DIR --subcorpus PATH --doc-id ID FILE
//   ann autotag     --corpus DIR [--lexicon FILE] [--mode M] [--min-count N] [--doc ID]...
//   ann build-lexicon --corpus DIR --out FILE
//   ann metadata    --corpus DIR --kind K --fields JSON [--doc ID]
//   ann validate    --corpus DIR
//   ann stats       --corpus DIR
//   ann export      --corpus DIR --format xml|tsv [--doc ID] [--out FILE]
//
// ANN_CORPUS_DIR, when set, overrides --corpus.

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "ann/autotag.hpp"
#include "ann/error.hpp"
#include "ann/metadata.hpp"
#include "ann/serialization.hpp"
#include "ann/service.hpp"
#include "ann/workspace.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct CommonOptions {
  std::string corpus;
  std::string tagset;
};

std::shared_ptr<const ann::Tagset> load_tagset(const std::string& path) {
  if (path.empty()) return std::make_shared<const ann::Tagset>(ann::Tagset::magahi());
  return std::make_shared<const ann::Tagset>(ann::Tagset::load_file(path));
}

fs::path corpus_dir(const CommonOptions& o) {
  if (const char* env = std::getenv("ANN_CORPUS_DIR"); env && *env) return env;
  if (o.corpus.empty()) throw ann::Error("Usage", "no corpus directory: pass --corpus or set ANN_CORPUS_DIR");
  return o.corpus;
}

std::unique_ptr<ann::Workspace> open_workspace(const CommonOptions& o) {
  return ann::Workspace::open(corpus_dir(o), load_tagset(o.tagset));
}

ann::AutotagLexicon lexicon_for(const ann::Workspace& ws, const std::string& path) {
  if (!path.empty()) return ann::read_lexicon_tsv(ann::read_file(path), ws.tagset());
  ann::AutotagLexicon lex = ann::build_lexicon(ws.store().snapshot(), ws.tagset());
  lex.source_note = "built from the corpus store";
  return lex;
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--corpus", o.corpus, "Corpus directory (ANN_CORPUS_DIR overrides)");
  cmd->add_option("--tagset", o.tagset, "Tagset definition file (default: bundled Magahi tagset)")
      ->check(CLI::ExistingFile);
}

int run_serve(const CommonOptions& o, const std::string& lexicon_path, const std::string& annotators_path,
              const std::string& host, int port, int idle_minutes, const std::string& static_dir) {
  // Block termination signals before any server thread starts; a dedicated
  // thread waits for them and stops the server.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  auto ws = open_workspace(o);
  ann::ServiceOptions options;
  options.idle_timeout = std::chrono::minutes(idle_minutes);
  if (!static_dir.empty()) options.static_dir = static_dir;
  ann::AnnotationService service(*ws, ann::AnnotatorRegistry::load_file(annotators_path),
                                 lexicon_for(*ws, lexicon_path), options);
  int bound = service.bind(host, port);
  if (bound < 0) {
    std::cerr << "ann: cannot bind " << host << ":" << port << "\n";
    return 1;
  }
  std::cout << "listening on http://" << host << ":" << bound << "\n" << std::flush;

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    service.stop();
  });
  service.serve();
  // serve() can also return on its own; wake the waiter so it can be joined.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return 0;
}

ann::SubcorpusPath parse_subcorpus(const std::string& s) { return ann::SubcorpusPath::parse(s); }

void print_report(const ann::ValidationReport& report) {
  for (const auto& f : report.findings)
    std::cout << ann::to_string(f.severity) << "\t" << f.code << "\t" << f.subject << "\t" << f.message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus annotation platform: ingest, tag, validate and export a POS-annotated corpus"};
  app.require_subcommand(1);

  CommonOptions common;

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP annotation service");
  add_common(serve, common);
  std::string lexicon_path, annotators_path, host = "127.0.0.1", static_dir;
  int port = 8080, idle_minutes = 60;
  serve->add_option("--lexicon", lexicon_path, "Lexicon TSV (default: built from the corpus)")
      ->check(CLI::ExistingFile);
  serve->add_option("--annotators", annotators_path, "Annotator registry TSV")
      ->required()
      ->check(CLI::ExistingFile);
  serve->add_option("--port", port, "TCP port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--idle-timeout", idle_minutes, "Minutes before an idle claim lapses")
      ->check(CLI::PositiveNumber);
  serve->add_option("--static", static_dir, "Directory served at /")->check(CLI::ExistingDirectory);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Add raw UTF-8 text files as documents");
  add_common(ingest, common);
  std::string subcorpus, split = "newline";
  std::vector<std::string> files;
  std::string doc_id;
  ingest->add_option("--subcorpus", subcorpus, "Subcorpus path, e.g. spoken/personal")->required();
  ingest->add_option("--split", split, "Sentence splitting")->check(CLI::IsMember({"newline", "danda"}));
  ingest->add_option("--doc-id", doc_id, "Document id (single file only; default: file stem)");
  ingest->add_option("files", files, "Text files")->required()->check(CLI::ExistingFile);

  // import-csv
  auto* import_csv = app.add_subcommand("import-csv", "Import a legacy sentence_id,text,tags CSV");
  add_common(import_csv, common);
  std::string csv_file;
  import_csv->add_option("--subcorpus", subcorpus, "Subcorpus path")->required();
  import_csv->add_option("--doc-id", doc_id, "Document id")->required();
  import_csv->add_option("file", csv_file, "CSV file")->required()->check(CLI::ExistingFile);

  // autotag
  auto* autotag = app.add_subcommand("autotag", "Pre-fill untagged tokens from a lexicon");
  add_common(autotag, common);
  std::string mode = "unambiguous_only";
  std::size_t min_count = 1;
  std::vector<std::string> doc_ids;
  autotag->add_option("--lexicon", lexicon_path, "Lexicon TSV (default: built from the corpus)")
      ->check(CLI::ExistingFile);
  autotag->add_option("--mode", mode, "Policy")->check(CLI::IsMember({"unambiguous_only", "most_frequent"}));
  autotag->add_option("--min-count", min_count, "Minimum count for a candidate")->check(CLI::PositiveNumber);
  autotag->add_option("--doc", doc_ids, "Documents to tag (default: all)");

  // build-lexicon
  auto* build_lex = app.add_subcommand("build-lexicon", "Write a lexicon of manual tags");
  add_common(build_lex, common);
  std::string out_path;
  build_lex->add_option("--out", out_path, "Output TSV")->required();

  // metadata
  auto* metadata = app.add_subcommand("metadata", "Create a metadata record");
  add_common(metadata, common);
  std::string kind, fields_arg;
  metadata->add_option("--kind", kind, "written, cmc, recording or descriptive")
      ->required()
      ->check(CLI::IsMember({"written", "cmc", "recording", "descriptive"}));
  metadata->add_option("--fields", fields_arg, "JSON object, or @file")->required();
  metadata->add_option("--doc", doc_id, "Document the record catalogues");

  // validate, stats
  auto* validate = app.add_subcommand("validate", "Check tags and the metadata catalog");
  add_common(validate, common);
  auto* stats = app.add_subcommand("stats", "Print word and sentence counts");
  add_common(stats, common);

  // export
  auto* exp = app.add_subcommand("export", "Export the corpus");
  add_common(exp, common);
  std::string format = "xml";
  exp->add_option("--format", format, "xml or tsv")->check(CLI::IsMember({"xml", "tsv"}));
  exp->add_option("--doc", doc_id, "Export a single document");
  exp->add_option("--out", out_path, "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve) {
      return run_serve(common, lexicon_path, annotators_path, host, port, idle_minutes, static_dir);
    }

    if (*ingest) {
      if (!doc_id.empty() && files.size() != 1) throw ann::Error("Usage", "--doc-id needs exactly one file");
      auto ws = open_workspace(common);
      ann::SentenceSplitter splitter{split == "danda" ? ann::SplitMode::kDanda : ann::SplitMode::kNewline};
      ann::SubcorpusPath path = parse_subcorpus(subcorpus);
      for (const auto& f : files) {
        ann::Document d = ws->ingest_file(f, path, doc_id.empty() ? std::nullopt : std::optional(doc_id), splitter);
        std::cout << d.doc_id << "\t" << d.sentences.size() << " sentences\t" << d.token_count() << " tokens\n";
      }
      ws->save_metadata();
      return 0;
    }

    if (*import_csv) {
      auto ws = open_workspace(common);
      auto result = ann::import_legacy_csv(ann::read_file(csv_file), doc_id, parse_subcorpus(subcorpus), ws->store());
      for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
      ws->save_metadata();
      std::cout << doc_id << "\t" << result.document.sentences.size() << " sentences\n";
      return 0;
    }

    if (*autotag) {
      auto ws = open_workspace(common);
      ann::AutotagLexicon lex = lexicon_for(*ws, lexicon_path);
      ann::AutotagPolicy policy{*ann::parse_policy_mode(mode), min_count};
      if (doc_ids.empty()) doc_ids = ws->store().document_ids();
      std::size_t total = 0;
      for (const auto& id : doc_ids) {
        std::size_t n = 0;
        ws->store().update_document(id, [&](ann::Document& d) {
          n = ann::autotag_document(d, lex, policy, ws->tagset());
        });
        std::cout << id << "\t" << n << " suggestions\n";
        total += n;
      }
      std::cout << "total\t" << total << " suggestions\n";
      return 0;
    }

    if (*build_lex) {
      auto ws = open_workspace(common);
      ann::AutotagLexicon lex = lexicon_for(*ws, "");
      ann::write_file_atomic(out_path, ann::write_lexicon_tsv(lex));
      std::cout << lex.entries.size() << " forms\n";
      return 0;
    }

    if (*metadata) {
      auto ws = open_workspace(common);
      json fields = json::parse(fields_arg.starts_with("@") ? ann::read_file(fields_arg.substr(1)) : fields_arg);
      ann::RecordKind k = *ann::parse_record_kind(kind);
      if (!doc_id.empty() && !ws->store().contains(doc_id)) throw ann::UnknownDocument(doc_id);
      ann::MetadataRecord record;
      ws->update_catalog([&](ann::Catalog& c) { record = c.create(k, fields); });
      if (!doc_id.empty()) {
        ws->store().set_metadata_ref(doc_id, record.id);
        ws->save_metadata();
      }
      std::cout << record.id << "\n";
      return 0;
    }

    if (*validate) {
      auto ws = open_workspace(common);
      ann::Corpus corpus = ws->store().snapshot();
      ann::ValidationReport report;
      for (const auto& d : corpus.documents)
        for (const auto& s : d.sentences)
          for (std::size_t i = 0; i < s.tokens.size(); ++i) {
            if (!s.tokens[i].tag) continue;
            ann::ValidationReport r = ann::validate_assignment(*s.tokens[i].tag, ws->tagset());
            for (auto& f : r.findings) f.subject = s.id + "#" + std::to_string(i);
            report.merge(r);
          }
      report.merge(ann::validate_catalog(corpus, ws->catalog()));
      print_report(report);
      std::cout << (report.has_errors() ? "invalid" : "valid") << "\n";
      return report.has_errors() ? 1 : 0;
    }

    if (*stats) {
      auto ws = open_workspace(common);
      std::cout << ann::to_json(ann::compute_stats(ws->store().snapshot())).dump(2) << "\n";
      return 0;
    }

    if (*exp) {
      auto ws = open_workspace(common);
      ann::Corpus corpus = ws->store().snapshot();
      std::string out;
      if (!doc_id.empty()) corpus.documents = {ws->store().document(doc_id)};
      if (format == "xml") {
        out = ann::export_xml(corpus, ws->catalog(), ws->tagset());
      } else {
        for (const auto& d : corpus.documents) {
          if (!out.empty()) out += '\n';
          out += ann::export_tsv(d, ws->tagset());
        }
      }
      if (out_path.empty()) std::cout << out;
      else ann::write_file_atomic(out_path, out);
      return 0;
    }
  } catch (const ann::Error& e) {
    std::cerr << "ann: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ann: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
