#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "taglinegen/types.hpp"

namespace taglinegen {

struct PipelineReport {
  std::size_t experts_total = 0;
  std::size_t candidates_occupation_pattern = 0;
  std::size_t candidates_link_triangulation = 0;
  std::size_t users_occupation_pattern = 0;  // final tagline came from this method
  std::size_t users_link_triangulation = 0;
  std::size_t users_fallback = 0;  // user_classification defaults
  std::size_t ambiguous_identities = 0;
  std::size_t malformed_links_skipped = 0;
  double load_ms = 0.0;
  double generate_ms = 0.0;
  double stats_ms = 0.0;
  double select_ms = 0.0;
  double write_ms = 0.0;
  double total_ms = 0.0;
};

struct PipelineInputs {
  std::string profiles_path;
  std::string lexicon_path;
  std::string kb_path;
  std::optional<std::string> templates_path;
  std::string out_path;
  int threads = 1;
  // Ambiguity and skip notes go here, one line each, never into the data
  // output. nullptr silences them (counts stay in the report).
  std::ostream* diagnostics = nullptr;
};

// End to end: load, rank experts, generate candidates by both extraction
// methods, score with corpus-wide term stats, select one tagline per
// expert, classification defaults for experts with no candidate. Output is
// deterministic for identical inputs regardless of thread count.
PipelineReport run_pipeline(const PipelineConfig& config, const PipelineInputs& inputs);

// One "key: value" line per report field, then the same data as a single
// JSON record.
void write_report(const PipelineReport& report, std::ostream& out);

void write_taglines(const std::vector<UserProfile>& experts, const std::vector<Tagline>& taglines,
                    std::ostream& out);

}  // namespace taglinegen
