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


// Writes randomized corpus exports for schema validation:
//   xml_samples <out_dir> [count]

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "ann/serialization.hpp"
#include "ann/workspace.hpp"
#include "support.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <out_dir> [count]\n", argv[0]);
    return 2;
  }
  std::filesystem::path dir = argv[1];
  int count = argc > 2 ? std::atoi(argv[2]) : 20;
  std::filesystem::create_directories(dir);
  const ann::Tagset& t = ann::Tagset::magahi();
  for (int i = 0; i < count; ++i) {
    std::mt19937 rng(static_cast<unsigned>(i));
    ann::Corpus c;
    std::size_t docs = i == 0 ? 0 : 1 + rng() % 6;
    for (std::size_t d = 0; d < docs; ++d)
      c.documents.push_back(ann::testing::random_document(rng, t, "s" + std::to_string(d), 1 + rng() % 8));
    ann::Catalog cat = ann::testing::catalogue(c);
    char name[32];
    std::snprintf(name, sizeof name, "sample-%03d.xml", i);
    ann::write_file_atomic(dir / name, ann::export_xml(c, cat, t));
  }
  return 0;
}
