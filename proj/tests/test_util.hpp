// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "commlab/algebra.hpp"
#include "commlab/congruence.hpp"
#include "commlab/partition.hpp"

namespace testing {

inline std::filesystem::path corpus_dir() { return COMMLAB_CORPUS_DIR; }
inline std::filesystem::path data_dir() { return COMMLAB_DATA_DIR; }

inline commlab::Algebra corpus(const std::string& name) {
  return commlab::load_algebra(corpus_dir() / (name + ".alg"));
}

// Every shipped algebra, sorted by file name.
inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir())) {
    if (entry.path().extension() == ".alg") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

// Corpus algebras small enough for the exhaustive oracles.
inline std::vector<std::string> small_corpus_names(std::size_t max_size) {
  std::vector<std::string> out;
  for (const auto& name : corpus_names()) {
    if (corpus(name).size() <= max_size) out.push_back(name);
  }
  return out;
}

inline commlab::Partition P(const commlab::Algebra& alg, const std::string& text) {
  return commlab::Partition::parse(text, alg.size());
}

}  // namespace testing
