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

#include <doctest.h>

#include <random>
#include <set>
#include <thread>

#include "ann/corpus.hpp"
#include "ann/error.hpp"
#include "ann/store.hpp"
#include "ann/text.hpp"
#include "support.hpp"

using namespace ann;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::shared_ptr<const Tagset> magahi() { return std::make_shared<const Tagset>(Tagset::magahi()); }

// Oracle: spans are ordered, disjoint, name their surface, and only
// whitespace lies between and around them.
bool spans_reconstruct(const std::string& text, const std::vector<Token>& tokens) {
  std::size_t pos = 0;
  for (const auto& t : tokens) {
    if (t.span.begin < pos || t.span.end <= t.span.begin || t.span.end > text.size()) return false;
    std::string gap = text.substr(pos, t.span.begin - pos);
    for (char c : gap)
      if (c != ' ' && c != '\t') return false;
    if (text.substr(t.span.begin, t.span.end - t.span.begin) != t.surface) return false;
    pos = t.span.end;
  }
  for (char c : text.substr(pos))
    if (c != ' ' && c != '\t') return false;
  return true;
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("tokenize") {
    CHECK(surfaces(tokenize("ek du igarəh")) == std::vector<std::string>{"ek", "du", "igarəh"});
    CHECK(tokenize("").empty());
    CHECK(tokenize("   \t ").empty());
    CHECK(surfaces(tokenize("əre!")) == std::vector<std::string>{"əre", "!"});
    CHECK(surfaces(tokenize("u gelai।")) == std::vector<std::string>{"u", "gelai", "।"});
    CHECK(surfaces(tokenize("ka?!")) == std::vector<std::string>{"ka", "?!"});
    CHECK(surfaces(tokenize("के।।")) == std::vector<std::string>{"के", "।।"});
    CHECK(surfaces(tokenize("\"ka\"")) == std::vector<std::string>{"\"", "ka", "\""});
    CHECK(surfaces(tokenize("son-ma")) == std::vector<std::string>{"son", "-", "ma"});
    // No-break space and ideographic space are Unicode whitespace.
    CHECK(surfaces(tokenize("ek du　igarəh")) == std::vector<std::string>{"ek", "du", "igarəh"});
    // Symbols (category S) are not punctuation.
    CHECK(surfaces(tokenize("$5 & ok")) == std::vector<std::string>{"$5", "&", "ok"});

    auto t = tokenize("həm  go");
    CHECK(t[0].span == Span{0, 4});
    CHECK(t[1].span == Span{6, 8});
  }

  TEST_CASE("tokenize reconstructs random text") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
      std::string text = testing::random_text(rng, 12);
      auto tokens = tokenize(text);
      CAPTURE(text);
      CHECK(spans_reconstruct(text, tokens));
      CHECK(reconstructs(text, tokens));
      CHECK(detokenize(text, tokens) == text);
      for (const auto& tok : tokens) CHECK_FALSE(contains_space(tok.surface));
    }
  }

  TEST_CASE("reconstructs rejects bad spans") {
    auto tokens = tokenize("ek du");
    CHECK(reconstructs("ek du", tokens));
    CHECK_FALSE(reconstructs("ek du x", tokens));
    tokens[1].surface = "dv";
    CHECK_FALSE(reconstructs("ek du", tokens));
  }

  TEST_CASE("sentence splitting") {
    CHECK(split_sentences("a b\n\nc d\n") == std::vector<std::string>{"a b", "c d"});
    CHECK(split_sentences("a\r\nb\r\n") == std::vector<std::string>{"a", "b"});
    CHECK(split_sentences("").empty());

    SentenceSplitter danda{SplitMode::kDanda};
    CHECK(split_sentences("ek du। tin char॥ pãc", danda) ==
          std::vector<std::string>{"ek du।", "tin char॥", "pãc"});
    CHECK(split_sentences("ek\ndu।।tin", danda) == std::vector<std::string>{"ek du।।", "tin"});
    CHECK(split_sentences("ek\n\ndu।", danda) == std::vector<std::string>{"ek", "du।"});
  }

  TEST_CASE("make_document assigns ordinal ids") {
    Document d = make_document("line one\nline two\nline three\n", "folktale01",
                               SubcorpusPath::indirect_written(Source::kBook, Genre::kProse));
    std::vector<std::string> ids;
    for (const auto& s : d.sentences) ids.push_back(s.id);
    CHECK(ids == std::vector<std::string>{"folktale01.0001", "folktale01.0002", "folktale01.0003"});
    for (const auto& s : d.sentences) CHECK(s.status == SentenceStatus::kRaw);

    CHECK(make_document("one\n\ntwo", "d", SubcorpusPath::spoken(Domain::kPublic)).sentences.size() == 2);
    CHECK(make_sentence_id("x", 12345) == "x.12345");
  }

  TEST_CASE("make_document rejects bad input") {
    auto path = SubcorpusPath::spoken(Domain::kPublic);
    try {
      make_document("ok\xC3(", "d", path);
      FAIL("expected EncodingError");
    } catch (const EncodingError& e) {
      CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(make_document("ok\xED\xA0\x80", "d", path), EncodingError);  // surrogate
    CHECK_THROWS_AS(make_document("ok\xC0\xAF", "d", path), EncodingError);      // overlong
    CHECK_THROWS_AS(make_document("ok", "", path), InvalidValue);
    CHECK_THROWS_AS(make_document("ok", "a b", path), InvalidValue);
    CHECK_THROWS_AS(make_document("ok", "../etc", path), InvalidValue);
    CHECK_THROWS_AS(make_document("ok", "a/b", path), InvalidValue);
    CHECK_FALSE(is_valid_doc_id(".hidden"));
    CHECK(is_valid_doc_id("blog-2011_03"));
  }

  TEST_CASE("subcorpus paths") {
    CHECK(SubcorpusPath::all().size() == 14);
    std::set<std::string> strs;
    for (const auto& p : SubcorpusPath::all()) {
      CHECK(SubcorpusPath::parse(p.str()) == p);
      strs.insert(p.str());
    }
    CHECK(strs.size() == 14);
    auto p = SubcorpusPath::parse("indirect_written/magazine/poetry");
    CHECK(p.mode() == Mode::kIndirectWritten);
    CHECK(p.branch_name() == "magazine-poetry");
    CHECK(SubcorpusPath::parse("direct_written/cmc_asynchronous").channel() == Channel::kCmcAsynchronous);
    CHECK(SubcorpusPath::parse("spoken/public").domain() == Domain::kPublic);
    CHECK_THROWS_AS(SubcorpusPath::parse("spoken/magazine"), InvalidValue);
    CHECK_THROWS_AS(SubcorpusPath::parse("indirect_written/blog/prose"), InvalidValue);
    CHECK_THROWS_AS(SubcorpusPath::parse("spoken"), InvalidValue);
    CHECK_THROWS_AS(SubcorpusPath::parse("spoken/personal/extra"), InvalidValue);
  }

  TEST_CASE("stats") {
    Corpus c;
    CHECK(compute_stats(c) == CorpusStats{});

    Document d;
    d.doc_id = "d";
    d.subcorpus = SubcorpusPath::spoken(Domain::kPersonal);
    d.sentences.push_back({"d.0001", "a b c", tokenize("a b c"), SentenceStatus::kRaw});
    d.sentences.push_back({"d.0002", "a b c d!", tokenize("a b c d!"), SentenceStatus::kRaw});
    c.documents.push_back(d);
    auto st = compute_stats(c);
    CHECK(st.word_count == 7);
    CHECK(st.sentence_count == 2);
    CHECK(st.by_mode.at(Mode::kSpoken) == Counts{7, 2});

    Document e;
    e.doc_id = "e";
    e.subcorpus = SubcorpusPath::direct_written(Channel::kNonCmcPublic);
    e.sentences.push_back({"e.0001", "əre!", tokenize("əre!"), SentenceStatus::kRaw});
    CHECK(compute_stats(e).word_count == 1);
    // A token tagged as punctuation is not a word whatever its shape.
    e.sentences[0].tokens[0].tag = Tagset::magahi().assign("RD__PUNC", Provenance::kManual);
    CHECK(compute_stats(e).word_count == 0);
  }

  TEST_CASE("stats additivity over random documents") {
    std::mt19937 rng(11);
    const Tagset& t = Tagset::magahi();
    for (int round = 0; round < 20; ++round) {
      Corpus c;
      CorpusStats sum;
      std::size_t ndocs = rng() % 6;
      for (std::size_t i = 0; i < ndocs; ++i) {
        c.documents.push_back(testing::random_document(rng, t, "doc" + std::to_string(i), 1 + rng() % 5));
        sum += compute_stats(c.documents.back());
      }
      // Brute-force word count.
      std::size_t words = 0, sentences = 0;
      for (const auto& d : c.documents)
        for (const auto& s : d.sentences) {
          ++sentences;
          for (const auto& tok : s.tokens) {
            bool punct_tag = tok.tag && tok.tag->convention == "RD__PUNC";
            bool all_punct = true;
            for (std::size_t i = 0; i < tok.surface.size();) {
              CodePoint cp = decode_at(tok.surface, i);
              all_punct = all_punct && is_punct(cp.value);
              i += cp.length;
            }
            if (!punct_tag && !all_punct) ++words;
          }
        }
      auto st = compute_stats(c);
      CHECK(st == sum);
      CHECK(st.word_count == words);
      CHECK(st.sentence_count == sentences);
      std::size_t w = 0, s = 0;
      for (const auto& [_, counts] : st.by_mode) {
        w += counts.words;
        s += counts.sentences;
      }
      CHECK(w == st.word_count);
      CHECK(s == st.sentence_count);
    }
  }

  TEST_CASE("tagging operations and status") {
    const Tagset& t = Tagset::magahi();
    Sentence s{"d.0001", "həm go", tokenize("həm go"), SentenceStatus::kRaw};
    apply_tag(s, 0, t.assign_label("PRP", Provenance::kManual));
    CHECK(s.tokens[0].tag->convention == "PR__PRP");
    CHECK(s.status == SentenceStatus::kInProgress);
    CHECK_THROWS_AS(apply_tag(s, 99, t.assign_label("NN", Provenance::kManual)), IndexOutOfRange);
    CHECK_THROWS_AS(confirm_token(s, 1), NoSuggestion);
    CHECK_THROWS_AS(confirm_token(s, 0), NoSuggestion);

    s.tokens[1].tag = t.assign("RP__CL", Provenance::kAuto);
    confirm_token(s, 1);
    CHECK(s.tokens[1].tag->provenance == Provenance::kManual);
    CHECK(s.tokens[1].tag->convention == "RP__CL");
    CHECK(s.status == SentenceStatus::kComplete);

    // Complete stays complete until an explicit clear.
    apply_tag(s, 1, t.assign_label("CL", Provenance::kManual));
    CHECK(s.status == SentenceStatus::kComplete);
    clear_tags(s);
    CHECK(s.status == SentenceStatus::kRaw);
    CHECK_FALSE(s.tokens[0].tag);

    s.tokens[0].tag = t.assign("PR__PRP", Provenance::kAuto);
    s.tokens[1].tag = t.assign("RP__CL", Provenance::kSuggested);
    CHECK(confirm_all(s) == 2);
    CHECK(s.status == SentenceStatus::kComplete);
    CHECK(confirm_all(s) == 0);

    s.tokens[1].tag = t.assign("RP__CL", Provenance::kAuto);
    clear_suggestion(s, 1);
    CHECK_FALSE(s.tokens[1].tag);
    CHECK_THROWS_AS(clear_suggestion(s, 1), NoSuggestion);
    CHECK_THROWS_AS(clear_suggestion(s, 0), NoSuggestion);
  }

  TEST_CASE("document status") {
    Document d;
    d.sentences.resize(2);
    CHECK(document_status(d) == SentenceStatus::kRaw);
    d.sentences[0].status = SentenceStatus::kComplete;
    CHECK(document_status(d) == SentenceStatus::kInProgress);
    d.sentences[1].status = SentenceStatus::kComplete;
    CHECK(document_status(d) == SentenceStatus::kComplete);
    d.sentences[0].status = SentenceStatus::kAutotagged;
    d.sentences[1].status = SentenceStatus::kAutotagged;
    CHECK(document_status(d) == SentenceStatus::kAutotagged);
  }
}

TEST_SUITE("store") {
  TEST_CASE("ingest and set_tag") {
    CorpusStore store(magahi());
    auto path = SubcorpusPath::indirect_written(Source::kBook, Genre::kProse);
    store.ingest("həm go dekhli\n", "folktale01", path);
    CHECK_THROWS_AS(store.ingest("x\n", "folktale01", path), DuplicateDocument);

    auto s = store.set_tag("folktale01.0001", 0, "PRP", Provenance::kManual);
    CHECK(s.tokens[0].tag->convention == "PR__PRP");
    s = store.set_tag("folktale01.0001", 1, "CL", Provenance::kManual);
    CHECK(s.tokens[1].tag->convention == "RP__CL");
    CHECK(store.sentence("folktale01.0001").tokens[1].tag->convention == "RP__CL");
    CHECK_THROWS_AS(store.set_tag("folktale01.0001", 99, "NN", Provenance::kManual), IndexOutOfRange);
    CHECK_THROWS_AS(store.set_tag("folktale01.0001", 0, "XX", Provenance::kManual), UnknownLabel);
    CHECK_THROWS_AS(store.set_tag("nope.0001", 0, "NN", Provenance::kManual), UnknownSentence);
    CHECK_THROWS_AS(store.document("nope"), UnknownDocument);
    CHECK(store.document_of("folktale01.0001") == "folktale01");
  }

  TEST_CASE("add_document rejects sentence id collisions") {
    CorpusStore store(magahi());
    Document a = make_document("x\ny\n", "a", SubcorpusPath::spoken(Domain::kPublic));
    store.add_document(a);
    Document b = a;
    b.doc_id = "b";
    CHECK_THROWS_AS(store.add_document(b), DuplicateSentence);
    CHECK_FALSE(store.contains("b"));
    Document c = make_document("x\ny\n", "c", SubcorpusPath::spoken(Domain::kPublic));
    c.sentences[1].id = c.sentences[0].id;
    CHECK_THROWS_AS(store.add_document(c), DuplicateSentence);
    c.doc_id = "../c";
    CHECK_THROWS_AS(store.add_document(c), InvalidValue);
    CHECK(store.sentence_ids().size() == 2);
  }

  TEST_CASE("randomized ingest yields unique sentence ids") {
    std::mt19937 rng(3);
    CorpusStore store(magahi());
    std::size_t expected = 0;
    for (int i = 0; i < 30; ++i) {
      std::string raw;
      std::size_t lines = rng() % 6;
      for (std::size_t l = 0; l < lines; ++l) raw += testing::random_text(rng) + (rng() % 3 == 0 ? "\n\n" : "\n");
      std::string id = "doc" + std::to_string(rng() % 40);
      if (store.contains(id)) {
        CHECK_THROWS_AS(store.ingest(raw, id, testing::random_path(rng)), DuplicateDocument);
        continue;
      }
      expected += store.ingest(raw, id, testing::random_path(rng)).sentences.size();
    }
    auto ids = store.sentence_ids();
    CHECK(ids.size() == expected);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == expected);
    for (const auto& d : store.snapshot().documents)
      for (const auto& s : d.sentences) CHECK(s.id.rfind(d.doc_id + ".", 0) == 0);
  }

  TEST_CASE("concurrent writers on one document apply in a total order") {
    CorpusStore store(magahi());
    std::string line;
    for (int i = 0; i < 64; ++i) line += "w ";
    store.ingest(line + "\n", "d", SubcorpusPath::spoken(Domain::kPublic));
    store.ingest(line + "\n", "e", SubcorpusPath::spoken(Domain::kPublic));
    std::atomic<int> notifications{0};
    store.set_observer([&](const Document&) { ++notifications; });

    std::vector<std::thread> threads;
    for (int th = 0; th < 8; ++th) {
      threads.emplace_back([&, th] {
        for (int i = th; i < 64; i += 8) {
          store.set_tag("d.0001", static_cast<std::size_t>(i), "NN", Provenance::kManual);
          store.set_tag("e.0001", static_cast<std::size_t>(i), "JJ", Provenance::kAuto);
          (void)store.snapshot();
        }
      });
    }
    for (auto& t : threads) t.join();
    CHECK(notifications == 128);
    auto d = store.document("d");
    for (const auto& t : d.sentences[0].tokens) CHECK(t.tag->convention == "N__NN");
    CHECK(d.sentences[0].status == SentenceStatus::kComplete);
    auto e = store.document("e");
    for (const auto& t : e.sentences[0].tokens) CHECK(t.tag->provenance == Provenance::kAuto);
    CHECK(e.sentences[0].status == SentenceStatus::kInProgress);
  }
}
