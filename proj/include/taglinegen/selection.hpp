#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "taglinegen/types.hpp"

namespace taglinegen {

// Corpus-wide document frequencies over every candidate of every user.
struct TermStats {
  std::int64_t total_documents = 0;                    // M
  std::unordered_map<std::string, std::int64_t> df;    // documents containing t
};

struct ScoredCandidate {
  Candidate candidate;
  double raw_score = 0.0;    // Score(D)
  double final_score = 0.0;  // Score'(D) = Score(D) * chars / T
  int word_count = 0;
};

// Maximal vowel groups (a e i o u y), one fewer for a lone terminal silent
// 'e' when another group exists, floor 1.
int count_syllables(std::string_view word);

// Flesch reading ease clamped to [0, 100]; zero-word text scores 0.
// Sentences are runs of . ! ? (at least one), words are whitespace tokens
// containing a letter.
double flesch_score(std::string_view text);

// Candidate texts tokenized to lowercase terms with edge punctuation
// stripped ('@'/'#' prefixes kept, the "[link]" proxy excluded).
std::vector<std::string> term_tokens(std::string_view text);

// Throws EmptyCorpus on an empty candidate list.
TermStats build_term_stats(const std::vector<Candidate>& candidates);

// Score(D) = sum over unique terms of tf * ln(M / df) divided by the word
// count; Score'(D) scales by char_length / max_chars. Throws UnknownTerm
// when the candidate was not part of the stats corpus.
ScoredCandidate score_candidate(const Candidate& c, const TermStats& stats, int max_chars);

// Highest Score' wins. With min_readability set, candidates under it are
// excluded unless that would empty the pool. Ties break by longer text,
// then method priority (occupation_pattern, link_triangulation,
// user_classification), then lexicographic text. Throws NoCandidates.
Tagline select_final(const std::vector<Candidate>& user_candidates, const TermStats& stats,
                     int max_chars, std::optional<double> min_readability);

}  // namespace taglinegen
