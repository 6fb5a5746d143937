#pragma once

#include <map>
#include <string>
#include <vector>

namespace taglinegen {

// Q1/Q2 item: one rating in {0,1,2} per judge ("2=very good, 1=good, 0=bad").
struct GenerationJudgment {
  std::string item_id;
  std::vector<int> ratings;
};

// Selection item: the algorithmic pick (1 or 2) plus judge choices in
// {0,1,2} where 0 means "both are almost same".
struct SelectionJudgment {
  std::string item_id;
  int algorithmic_choice = 1;
  std::vector<int> judge_choices;
};

// Percentage of items where a strict majority of judges rated good (1) or
// very good (2). Throws EmptyInput.
double majority_good_pct(const std::vector<GenerationJudgment>& items);

// Percentage of individual ratings that are 1 or 2. Throws EmptyInput.
double good_pct(const std::vector<GenerationJudgment>& items);

// Standard Fleiss kappa over items x raters with `categories` categories.
// Perfect agreement returns exactly 1.0. Throws EmptyInput,
// UnequalRaterCounts, or DomainError on out-of-range ratings.
double fleiss_kappa(const std::vector<std::vector<int>>& items, int categories);

// Items where every judge chose 0 are discarded first; of the rest, the
// percentage where a strict majority picked the algorithmic choice (a 0
// vote never matches). Throws EmptyInput when nothing remains.
double selection_majority_agreement(const std::vector<SelectionJudgment>& items);

// Raw generation-judgment CSV rows ("item_id,judge_id,question,rating").
struct GenerationRow {
  std::string item_id;
  std::string judge_id;
  std::string question;  // Q1, Q2, or Q3
  int rating = 0;
};

// Groups rows for one question into judgment items, ratings ordered by
// judge_id, items ordered by item_id. Enforces the {0,1,2} scale and at
// least two ratings per item.
std::vector<GenerationJudgment> group_generation(const std::vector<GenerationRow>& rows,
                                                 const std::string& question);

// Q3 accuracy answers ("1=accurate, 0=misleading, -1=I don't know") as a
// simple distribution; it feeds no metric.
std::map<int, std::size_t> q3_distribution(const std::vector<GenerationRow>& rows);

}  // namespace taglinegen
