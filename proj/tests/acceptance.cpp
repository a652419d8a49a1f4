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


// Acceptance gate: one PASS/FAIL line per criterion, each checked against
// its runtime budget. Exits non-zero if any criterion fails.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "ann/autotag.hpp"
#include "ann/error.hpp"
#include "ann/serialization.hpp"
#include "ann/workspace.hpp"
#include "live_service.hpp"
#include "support.hpp"

using namespace ann;
using namespace ann::testing;
using nlohmann::json;

namespace {

// Collects the first few discrepancies of a criterion.
struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    else if (!ok) failures.push_back("");
  }
};

struct Criterion {
  std::string name;
  std::chrono::milliseconds budget;  // zero means no runtime bound
  std::function<void(Outcome&)> run;
};

std::vector<std::string> labels(const std::vector<const TagNode*>& nodes) {
  std::vector<std::string> out;
  for (const auto* n : nodes) out.push_back(n->label);
  return out;
}

void tagset_fidelity(Outcome& o) {
  Tagset t = Tagset::load(read_file(ANN_TAGSET_PATH));
  o.expect(t.top_level().size() == 11, "top-level categories = " + std::to_string(t.top_level().size()));
  o.expect(t.size() == 44, "convention rows = " + std::to_string(t.size()));
  o.expect(t.find_convention("RP__CL") != nullptr, "RP__CL missing");
  const TagNode* vm = t.find_convention("V__VM");
  o.expect(vm && labels(t.list_children(*vm)) == std::vector<std::string>{"VF", "VNF", "VNP"},
           "children of V__VM");
  const TagNode* rd = t.find_convention("RD");
  o.expect(rd && labels(t.list_children(*rd)) == std::vector<std::string>{"RDF", "SYM", "PUNC", "UNK", "ECH"},
           "children of RD");
}

void derivation_law(Outcome& o) {
  const Tagset& t = Tagset::magahi();
  auto leaves = t.leaves();
  o.expect(leaves.size() == 35, "leaf count = " + std::to_string(leaves.size()));
  for (const TagNode* leaf : leaves) {
    std::string conv = t.derive_full_tag(leaf->label);
    o.expect(&t.parse_tag(conv) == leaf, "roundtrip of " + leaf->label);
    o.expect(conv.substr(0, conv.find("__")) == t.top_ancestor(*leaf).label, "first segment of " + conv);
  }
}

void autotag_oracle(Outcome& o) {
  for (unsigned seed = 0; seed < 100; ++seed) {
    std::mt19937 rng(seed);
    auto sents = random_annotated(rng, 200, 20);
    AutotagLexicon lex = build_lexicon(sents, Tagset::magahi());
    FlatLexicon flat;
    for (const auto& [form, counts] : lex.entries) flat[form] = counts;
    o.expect(flat == brute_force_lexicon(sents), "lexicon recount, seed " + std::to_string(seed));
    for (std::size_t min_count = 1; min_count <= 3; ++min_count)
      for (const auto& [form, counts] : flat)
        o.expect(suggest(lex, form, {PolicyMode::kMostFrequent, min_count}) ==
                     brute_force_most_frequent(counts, min_count),
                 "argmax for '" + form + "', seed " + std::to_string(seed));
  }
}

void never_overwrite(Outcome& o) {
  for (unsigned seed = 0; seed < 100; ++seed) {
    std::mt19937 rng(1000 + seed);
    auto sents = random_annotated(rng, 40, 10);
    AutotagLexicon lex = build_lexicon(random_annotated(rng, 200, 10), Tagset::magahi());
    Sentence s = sents[rng() % sents.size()];
    Sentence before = s;
    PolicyMode mode = seed % 2 ? PolicyMode::kMostFrequent : PolicyMode::kUnambiguousOnly;
    autotag_sentence(s, lex, {mode, 1 + seed % 3}, Tagset::magahi());
    for (std::size_t i = 0; i < s.tokens.size(); ++i)
      if (before.tokens[i].is_manual())
        o.expect(s.tokens[i] == before.tokens[i], "manual token altered, seed " + std::to_string(seed));
  }
}

void roundtrips(Outcome& o) {
  const Tagset& t = Tagset::magahi();
  for (unsigned seed = 0; seed < 100; ++seed) {
    std::mt19937 rng(2000 + seed);
    Corpus c{{random_document(rng, t, "rt" + std::to_string(seed), 1 + rng() % 20)}};
    Catalog cat = catalogue(c);
    const Document& d = c.documents[0];
    std::string tag = " seed " + std::to_string(seed);

    std::string tsv = export_tsv(d, t);
    o.expect(import_tsv(tsv, t) == d, "TSV identity" + tag);
    o.expect(export_tsv(d, t) == tsv, "TSV determinism" + tag);

    std::string xml = export_xml(c, cat, t);
    XmlImport back = import_xml(xml, t);
    o.expect(back.corpus.documents == c.documents, "XML corpus identity" + tag);
    bool same_records = back.catalog.records().size() == cat.records().size();
    for (const auto& r : cat.records()) {
      const MetadataRecord* b = back.catalog.find(r.id);
      same_records = same_records && b && to_json(*b) == to_json(r);
    }
    o.expect(same_records, "XML catalog identity" + tag);
    o.expect(export_xml(c, cat, t) == xml, "XML determinism" + tag);
  }
}

void ingest_ids_and_stats(Outcome& o) {
  std::mt19937 rng(3000);
  CorpusStore store(bundled_tagset());
  CorpusStats sum;
  for (int i = 0; i < 50; ++i) {
    std::string raw;
    std::size_t lines = 1 + rng() % 10;
    for (std::size_t l = 0; l < lines; ++l) raw += random_text(rng) + "\n";
    Document d = store.ingest(raw, "doc" + std::to_string(i), random_path(rng));
    sum += compute_stats(d);
  }
  auto ids = store.sentence_ids();
  o.expect(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size(), "sentence ids not unique");
  Corpus snap = store.snapshot();
  std::size_t total = 0;
  for (const auto& d : snap.documents) total += d.sentences.size();
  o.expect(ids.size() == total, "sentence index size");
  o.expect(compute_stats(snap) == sum, "corpus stats differ from the per-document sum");
}

void metadata_integrity(Outcome& o) {
  struct Case {
    RecordKind kind;
    json full;
    std::optional<Channel> channel;
    const std::vector<std::string>& required;
  };
  const Case cases[] = {{RecordKind::kWritten, written_fields(), std::nullopt, kWrittenRequired},
                        {RecordKind::kCmc, cmc_async_fields(), Channel::kCmcAsynchronous, kCmcAsyncRequired},
                        {RecordKind::kCmc, cmc_sync_fields(), Channel::kCmcSynchronous, kCmcSyncRequired},
                        {RecordKind::kRecording, recording_fields(), std::nullopt, kRecordingRequired}};
  for (const auto& c : cases) {
    o.expect(required_fields(c.kind, c.channel) == c.required,
             std::string("inventory of ") + to_string(c.kind));
    for (const auto& field : c.required) {
      json f = c.full;
      f.erase(field);
      std::vector<std::string> missing;
      try {
        create_record(c.kind, f, "r");
      } catch (const MissingField& e) {
        missing = e.fields();
      }
      o.expect(missing == std::vector<std::string>{field},
               std::string(to_string(c.kind)) + " without " + field);
    }
  }

  Corpus corpus;
  for (int i = 0; i < 3; ++i)
    corpus.documents.push_back(make_document("ek du\ngo", "m" + std::to_string(i),
                                             SubcorpusPath::indirect_written(Source::kBook, Genre::kPoetry)));
  Catalog cat = catalogue(corpus);
  o.expect(!validate_catalog(corpus, cat).has_errors(), "clean catalog reported errors");
  cat.find(corpus.documents[1].metadata_ref)->sentence_ids().push_back("m1.0099");
  ValidationReport r = validate_catalog(corpus, cat);
  o.expect(r.count("DanglingSentenceRef") == 1 && r.has_errors(), "planted dangling reference not caught");
}

void service_consistency(Outcome& o) {
  std::string annotators;
  for (int i = 0; i < 16; ++i) annotators += "a" + std::to_string(i) + "\tA" + std::to_string(i) + "\tt" + std::to_string(i) + "\n";
  AutotagLexicon lex;
  lex.entries["go"] = {{"RP__CL", 5}};
  lex.entries["ek"] = {{"QT__QTC", 2}};
  lex.entries["je"] = {{"PR__PRL", 3}, {"DM__DMR", 2}};
  LiveService live(lex, {}, annotators);
  live.workspace.store().ingest("ek go je ghora\nu go!\nje ek du go", "doc", SubcorpusPath::spoken(Domain::kPublic));

  std::atomic<int> ok{0}, conflict{0}, other{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 16; ++i)
    threads.emplace_back([&, i] {
      auto c = live.client();
      auto r = c.Post("/documents/doc/claim", bearer("t" + std::to_string(i)), "", "application/json");
      if (r && r->status == 200) ++ok;
      else if (r && r->status == 409) ++conflict;
      else ++other;
    });
  for (auto& th : threads) th.join();
  o.expect(ok == 1, std::to_string(ok.load()) + " of 16 claims granted");
  o.expect(conflict == 15 && other == 0, "other claims were not all conflicts");

  auto holder = live.service->claims().current("doc");
  if (!holder) return o.expect(false, "no claim recorded");
  std::string token = "t" + holder->annotator_id.substr(1);
  auto c = live.client();

  auto check_partition = [&](const std::string& step) {
    json p = body_of(c.Get("/documents/doc/progress"));
    Progress expect = progress(live.workspace.store().document("doc"));
    std::size_t total = p["total_tokens"], manual = p["manual"], automatic = p["auto"], untagged = p["untagged"];
    o.expect(manual + automatic + untagged == total, "partition after " + step);
    o.expect(total == expect.total_tokens && manual == expect.manual && automatic == expect.automatic &&
                 untagged == expect.untagged,
             "progress recount after " + step);
  };
  auto status = [](const httplib::Result& r) { return r ? r->status : -1; };

  check_partition("ingest");
  o.expect(status(c.Post("/autotag/doc", bearer(token), R"({"policy":{"mode":"most_frequent"}})",
                         "application/json")) == 200, "autotag");
  check_partition("autotag");
  o.expect(status(c.Put("/sentences/doc.0001/tokens/3/tag", bearer(token), R"({"leaf_label":"NN"})",
                        "application/json")) == 200, "tag");
  check_partition("tag");
  o.expect(status(c.Post("/sentences/doc.0001/tokens/1/confirm", bearer(token), "", "application/json")) == 200,
           "confirm");
  check_partition("confirm");
  o.expect(status(c.Delete("/sentences/doc.0003/tokens/0/tag", bearer(token))) == 200, "clear");
  check_partition("clear");
  o.expect(status(c.Post("/sentences/doc.0002/confirm-all", bearer(token), "", "application/json")) == 200,
           "confirm-all");
  check_partition("confirm-all");
  o.expect(status(c.Post("/autotag/doc", bearer(token), "{}", "application/json")) == 200, "re-autotag");
  check_partition("re-autotag");
}

}  // namespace

int main() {
  using std::chrono::milliseconds;
  const std::vector<Criterion> criteria = {
      {"tagset fidelity", milliseconds(1000), tagset_fidelity},
      {"derivation law", milliseconds(1000), derivation_law},
      {"autotag oracle", milliseconds(10000), autotag_oracle},
      {"never-overwrite", milliseconds(0), never_overwrite},
      {"roundtrips", milliseconds(30000), roundtrips},
      {"id uniqueness and stats additivity", milliseconds(0), ingest_ids_and_stats},
      {"metadata integrity", milliseconds(0), metadata_integrity},
      {"service consistency", milliseconds(0), service_consistency},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<milliseconds>(std::chrono::steady_clock::now() - start);
    bool over = c.budget.count() > 0 && ms > c.budget;
    bool pass = o.failures.empty() && !over;
    failed += pass ? 0 : 1;

    std::ostringstream line;
    line << (pass ? "PASS " : "FAIL ") << c.name << " (" << o.checks << " checks, " << ms.count() << " ms";
    if (c.budget.count() > 0) line << ", budget " << c.budget.count() << " ms";
    line << ")";
    std::puts(line.str().c_str());
    if (over) std::printf("    over the runtime budget\n");
    for (const auto& f : o.failures)
      if (!f.empty()) std::printf("    %s\n", f.c_str());
    if (o.failures.size() > 5) std::printf("    ... %zu failures in all\n", o.failures.size());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
