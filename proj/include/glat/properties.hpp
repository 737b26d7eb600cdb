#pragma once

#include <string>
#include <vector>

#include "glat/corpus.hpp"

namespace glat {

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // "<entry>: <message>"
};

struct CheckReport {
  std::vector<PropertyResult> properties;  // sorted by name
  bool ok() const;
};

struct CheckOptions {
  RecognitionOptions recognition;
  EmbeddingSearchOptions search;
};

CheckReport run_property_suite(const std::vector<CorpusLattice>& lattices,
                               const std::vector<CorpusReduction>& reductions,
                               const CheckOptions& opts = {});

}  // namespace glat
