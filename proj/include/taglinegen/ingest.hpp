#pragma once

#include <string>
#include <vector>

#include "taglinegen/eval_metrics.hpp"
#include "taglinegen/lexicon.hpp"
#include "taglinegen/types.hpp"

namespace taglinegen {

// Newline-delimited JSON records, one profile per line, validated in file
// order. Throws ParseError(line), InvalidProfile, DuplicateUser, IoError.
std::vector<UserProfile> load_profiles(const std::string& path);

// Profiles sorted by expert_score descending (ties by user_id ascending),
// cut to the top ceil(fraction * N). Throws EmptyInput and DomainError on a
// fraction outside (0, 1].
std::vector<UserProfile> select_experts(std::vector<UserProfile> profiles, double fraction);

// Plain text, one title per line, '#' comments. Throws EmptyLexicon.
OccupationLexicon load_lexicon(const std::string& path);

// Newline-delimited JSON KB snapshot records. Throws ParseError(line).
std::vector<KbPage> load_kb(const std::string& path);

// "item_id,judge_id,question,rating" CSV with header.
std::vector<GenerationRow> load_generation_rows(const std::string& path);

// "item_id,algorithmic_choice,judge_id,choice" CSV with header, grouped per
// item with choices ordered by judge_id.
std::vector<SelectionJudgment> load_selection_judgments(const std::string& path);

// Candidate records previously written by the generate stage.
std::vector<Candidate> load_candidates(const std::string& path,
                                       std::vector<std::string>* screen_names = nullptr);

}  // namespace taglinegen
