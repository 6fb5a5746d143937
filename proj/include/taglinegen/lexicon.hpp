#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace taglinegen {

// Occupation title gazetteer. Titles are stored lowercase and
// whitespace-normalized; lookup buckets by first character keep spotting
// cheap for per-fragment rescans.
class OccupationLexicon {
 public:
  // Normalizes and deduplicates; throws EmptyLexicon when nothing remains
  // and DomainError on an empty title.
  explicit OccupationLexicon(const std::set<std::string>& titles);

  const std::vector<std::string>& titles() const { return titles_; }
  std::size_t size() const { return titles_.size(); }
  bool contains(const std::string& title) const;

  // Title indices starting with `initial` (lowercased), longest title first.
  const std::vector<std::uint32_t>& bucket(char initial) const;

 private:
  std::vector<std::string> titles_;  // sorted, canonical forms
  std::unordered_map<char, std::vector<std::uint32_t>> buckets_;
};

}  // namespace taglinegen
