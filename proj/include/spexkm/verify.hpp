#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spexkm/oracle.hpp"

namespace spexkm {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long long checks = 0;
  std::string counterexample;      // first failing instance, empty on success
  std::vector<std::string> notes;  // observations reported as data
};

/// lemma22, lemma23, lemma24, prop25, claimA, tutteberge, theorem11, fyz.
const std::vector<std::string>& suite_names();

/// Runs one named property suite. Throws DomainError for an unknown name.
SuiteResult run_suite(std::string_view name, const SearchOptions& options = {});

}  // namespace spexkm
