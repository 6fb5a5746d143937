#include "taglinegen/lexicon.hpp"

#include <algorithm>

#include "taglinegen/errors.hpp"
#include "taglinegen/text_util.hpp"

namespace taglinegen {

OccupationLexicon::OccupationLexicon(const std::set<std::string>& titles) {
  std::set<std::string> canonical;
  for (const std::string& raw : titles) {
    std::string title = collapse_whitespace(lower_ascii(raw));
    if (title.empty()) throw DomainError("lexicon title must be non-empty");
    canonical.insert(std::move(title));
  }
  if (canonical.empty()) throw EmptyLexicon("lexicon contains no titles");
  titles_.assign(canonical.begin(), canonical.end());

  for (std::uint32_t i = 0; i < titles_.size(); ++i) {
    buckets_[titles_[i].front()].push_back(i);
  }
  // Longest-match-first: within a bucket, longer titles are tried first.
  for (auto& [initial, indices] : buckets_) {
    std::sort(indices.begin(), indices.end(), [this](std::uint32_t a, std::uint32_t b) {
      if (titles_[a].size() != titles_[b].size()) return titles_[a].size() > titles_[b].size();
      return titles_[a] < titles_[b];
    });
  }
}

bool OccupationLexicon::contains(const std::string& title) const {
  return std::binary_search(titles_.begin(), titles_.end(),
                            collapse_whitespace(lower_ascii(title)));
}

const std::vector<std::uint32_t>& OccupationLexicon::bucket(char initial) const {
  static const std::vector<std::uint32_t> empty;
  auto it = buckets_.find(to_lower_ascii(initial));
  return it == buckets_.end() ? empty : it->second;
}

}  // namespace taglinegen
