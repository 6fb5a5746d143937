#include "taglinegen/eval_metrics.hpp"

#include <algorithm>
#include <cstdint>

#include "taglinegen/errors.hpp"

namespace taglinegen {

double majority_good_pct(const std::vector<GenerationJudgment>& items) {
  if (items.empty()) throw EmptyInput("no judgment items");
  std::size_t qualifying = 0;
  for (const GenerationJudgment& item : items) {
    std::size_t good = 0;
    for (int r : item.ratings) {
      if (r == 1 || r == 2) ++good;
    }
    if (2 * good > item.ratings.size()) ++qualifying;
  }
  return 100.0 * static_cast<double>(qualifying) / static_cast<double>(items.size());
}

double good_pct(const std::vector<GenerationJudgment>& items) {
  if (items.empty()) throw EmptyInput("no judgment items");
  std::size_t good = 0;
  std::size_t total = 0;
  for (const GenerationJudgment& item : items) {
    for (int r : item.ratings) {
      ++total;
      if (r == 1 || r == 2) ++good;
    }
  }
  if (total == 0) throw EmptyInput("no ratings");
  return 100.0 * static_cast<double>(good) / static_cast<double>(total);
}

double fleiss_kappa(const std::vector<std::vector<int>>& items, int categories) {
  if (items.empty()) throw EmptyInput("no items");
  if (categories < 2) throw DomainError("need at least two categories");
  const std::size_t raters = items.front().size();
  if (raters < 2) throw UnequalRaterCounts("need at least two raters per item");

  std::vector<std::int64_t> category_totals(static_cast<std::size_t>(categories), 0);
  double agreement_sum = 0.0;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(categories));
  for (const std::vector<int>& ratings : items) {
    if (ratings.size() != raters)
      throw UnequalRaterCounts("items have differing rater counts");
    std::fill(counts.begin(), counts.end(), 0);
    for (int r : ratings) {
      if (r < 0 || r >= categories) throw DomainError("rating outside category range");
      ++counts[static_cast<std::size_t>(r)];
    }
    std::int64_t pairs = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      pairs += counts[j] * (counts[j] - 1);
      category_totals[j] += counts[j];
    }
    agreement_sum += static_cast<double>(pairs) /
                     static_cast<double>(raters * (raters - 1));
  }

  const double n_items = static_cast<double>(items.size());
  const double p_bar = agreement_sum / n_items;
  if (p_bar == 1.0) return 1.0;

  double pe_bar = 0.0;
  for (std::int64_t total : category_totals) {
    double proportion = static_cast<double>(total) / (n_items * static_cast<double>(raters));
    pe_bar += proportion * proportion;
  }
  return (p_bar - pe_bar) / (1.0 - pe_bar);
}

double selection_majority_agreement(const std::vector<SelectionJudgment>& items) {
  std::size_t considered = 0;
  std::size_t agreed = 0;
  for (const SelectionJudgment& item : items) {
    bool all_zero = std::all_of(item.judge_choices.begin(), item.judge_choices.end(),
                                [](int c) { return c == 0; });
    if (item.judge_choices.empty() || all_zero) continue;
    ++considered;
    std::size_t matching = 0;
    for (int c : item.judge_choices) {
      if (c == item.algorithmic_choice) ++matching;
    }
    if (2 * matching > item.judge_choices.size()) ++agreed;
  }
  if (considered == 0) throw EmptyInput("no items remain after discarding all-zero votes");
  return 100.0 * static_cast<double>(agreed) / static_cast<double>(considered);
}

std::vector<GenerationJudgment> group_generation(const std::vector<GenerationRow>& rows,
                                                 const std::string& question) {
  // item_id -> judge_id -> rating; ordered maps keep output deterministic.
  std::map<std::string, std::map<std::string, int>> grouped;
  for (const GenerationRow& row : rows) {
    if (row.question != question) continue;
    if (row.rating < 0 || row.rating > 2)
      throw DomainError("rating for " + question + " must be in {0,1,2}: item " + row.item_id);
    auto [it, inserted] = grouped[row.item_id].emplace(row.judge_id, row.rating);
    if (!inserted)
      throw DomainError("duplicate rating for item " + row.item_id + " judge " + row.judge_id);
  }

  std::vector<GenerationJudgment> items;
  items.reserve(grouped.size());
  for (auto& [item_id, by_judge] : grouped) {
    if (by_judge.size() < 2)
      throw DomainError("item " + item_id + " needs at least two ratings");
    GenerationJudgment item;
    item.item_id = item_id;
    for (auto& [judge, rating] : by_judge) item.ratings.push_back(rating);
    items.push_back(std::move(item));
  }
  return items;
}

std::map<int, std::size_t> q3_distribution(const std::vector<GenerationRow>& rows) {
  std::map<int, std::size_t> distribution;
  for (const GenerationRow& row : rows) {
    if (row.question != "Q3") continue;
    if (row.rating < -1 || row.rating > 1)
      throw DomainError("Q3 rating must be in {-1,0,1}: item " + row.item_id);
    ++distribution[row.rating];
  }
  return distribution;
}

}  // namespace taglinegen
