#pragma once

#include <map>
#include <string>
#include <vector>

namespace woundlab {

/// Line-oriented corpus: blocks of "key: value" lines separated by blank
/// lines. Keys prefixed "expect_" form the expected block, compared exactly
/// against the computed values.
struct CorpusEntry {
  std::string name;
  std::string command;
  std::map<std::string, std::string> input;
  std::map<std::string, std::string> expect;
  std::string provenance;
};

std::vector<CorpusEntry> parse_corpus(const std::string& text);

struct EntryResult {
  std::string name;
  bool pass = false;
  std::string detail;  // mismatch description or computed summary
  double elapsed_ms = 0.0;
};

struct RunReport {
  std::vector<EntryResult> entries;
  int passed = 0;
  int failed = 0;
};

/// Computes the output map for one entry (exposed for tests).
std::map<std::string, std::string> run_corpus_entry(const CorpusEntry& entry);

/// Runs all entries; results ordered by entry name.
RunReport run_corpus(const std::vector<CorpusEntry>& entries);

/// The bundled examples: every desk-checkable value the sources state.
const std::string& default_corpus();

}  // namespace woundlab
