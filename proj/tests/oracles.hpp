// Independent brute-force reference implementations used as test oracles.
// These deliberately avoid the library's code paths for the logic under
// test; only trivial helpers (utf8_length) are shared.
#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "taglinegen/text_util.hpp"
#include "taglinegen/types.hpp"

namespace oracles {

// All contiguous windows joined with ", " that fit the budget, reduced to
// windows not strictly contained in another fitting window, deduplicated by
// text in start order.
inline std::vector<std::string> brute_force_windows(const std::vector<std::string>& fragments,
                                                    int max_chars) {
  struct Window {
    std::size_t begin;
    std::size_t end;  // inclusive
    std::string text;
  };
  std::vector<Window> fitting;
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    for (std::size_t j = i; j < fragments.size(); ++j) {
      std::string joined;
      for (std::size_t k = i; k <= j; ++k) {
        if (k > i) joined += ", ";
        joined += fragments[k];
      }
      if (taglinegen::utf8_length(joined) <= static_cast<std::size_t>(max_chars)) {
        fitting.push_back({i, j, joined});
      }
    }
  }
  std::vector<std::string> result;
  std::set<std::string> seen;
  std::stable_sort(fitting.begin(), fitting.end(),
                   [](const Window& a, const Window& b) { return a.begin < b.begin; });
  for (const Window& w : fitting) {
    bool contained = false;
    for (const Window& other : fitting) {
      if (&other == &w) continue;
      if (other.begin <= w.begin && w.end <= other.end &&
          (other.begin < w.begin || w.end < other.end)) {
        contained = true;
        break;
      }
    }
    if (!contained && seen.insert(w.text).second) result.push_back(w.text);
  }
  return result;
}

// Independent re-tokenization for the tf-idf oracle.
inline std::vector<std::string> oracle_terms(const std::string& text) {
  std::vector<std::string> terms;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    std::string lowered;
    for (char c : token) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    token.clear();
    if (lowered == "[link]") return;
    auto is_keep = [](unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; };
    std::size_t last = lowered.size();
    while (last > 0 && !is_keep(static_cast<unsigned char>(lowered[last - 1]))) --last;
    std::size_t first = 0;
    while (first < last && !is_keep(static_cast<unsigned char>(lowered[first])) &&
           lowered[first] != '@' && lowered[first] != '#')
      ++first;
    if (first < last) terms.push_back(lowered.substr(first, last - first));
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return terms;
}

struct OracleScore {
  double raw = 0.0;
  double boosted = 0.0;
};

// Steps 1-3 recomputed from the raw candidate strings.
inline std::vector<OracleScore> brute_force_scores(const std::vector<std::string>& docs,
                                                   int max_chars) {
  const std::size_t m = docs.size();
  std::map<std::string, std::set<std::size_t>> docs_containing;
  std::vector<std::vector<std::string>> tokenized(m);
  for (std::size_t d = 0; d < m; ++d) {
    tokenized[d] = oracle_terms(docs[d]);
    for (const std::string& t : tokenized[d]) docs_containing[t].insert(d);
  }
  std::vector<OracleScore> scores(m);
  for (std::size_t d = 0; d < m; ++d) {
    std::vector<std::pair<std::string, int>> freqs;  // first-occurrence order
    for (const std::string& t : tokenized[d]) {
      auto it = std::find_if(freqs.begin(), freqs.end(),
                             [&](const auto& e) { return e.first == t; });
      if (it == freqs.end()) {
        freqs.emplace_back(t, 1);
      } else {
        ++it->second;
      }
    }
    double sum = 0.0;
    for (const auto& [term, freq] : freqs) {
      sum += freq * std::log(static_cast<double>(m) /
                             static_cast<double>(docs_containing[term].size()));
    }
    std::size_t words = tokenized[d].size();
    scores[d].raw = words == 0 ? 0.0 : sum / static_cast<double>(words);
    scores[d].boosted = scores[d].raw *
                        static_cast<double>(taglinegen::utf8_length(docs[d])) /
                        static_cast<double>(max_chars);
  }
  return scores;
}

// Argmax over one user's documents with the library's tie chain, recomputed
// from raw strings. method_rank: lower wins ties.
inline std::size_t brute_force_select(const std::vector<std::string>& all_docs,
                                      const std::vector<std::size_t>& user_doc_ids,
                                      const std::vector<int>& method_rank, int max_chars) {
  std::vector<OracleScore> scores = brute_force_scores(all_docs, max_chars);
  std::size_t best = user_doc_ids.front();
  for (std::size_t id : user_doc_ids) {
    const double s = scores[id].boosted;
    const double b = scores[best].boosted;
    bool better = false;
    if (s != b) {
      better = s > b;
    } else {
      auto len = [&](std::size_t d) { return taglinegen::utf8_length(all_docs[d]); };
      if (len(id) != len(best)) {
        better = len(id) > len(best);
      } else if (method_rank[id] != method_rank[best]) {
        better = method_rank[id] < method_rank[best];
      } else {
        better = all_docs[id] < all_docs[best];
      }
    }
    if (better) best = id;
  }
  return best;
}

// Pairwise-agreement route to Fleiss kappa.
inline double brute_force_fleiss(const std::vector<std::vector<int>>& items, int categories) {
  const double n = static_cast<double>(items.front().size());
  double p_sum = 0.0;
  std::vector<double> category_counts(static_cast<std::size_t>(categories), 0.0);
  for (const auto& ratings : items) {
    double agreeing_pairs = 0.0;
    for (std::size_t a = 0; a < ratings.size(); ++a) {
      for (std::size_t b = 0; b < ratings.size(); ++b) {
        if (a != b && ratings[a] == ratings[b]) agreeing_pairs += 1.0;
      }
    }
    p_sum += agreeing_pairs / (n * (n - 1.0));
    for (int r : ratings) category_counts[static_cast<std::size_t>(r)] += 1.0;
  }
  const double n_items = static_cast<double>(items.size());
  const double p_bar = p_sum / n_items;
  double pe_bar = 0.0;
  for (double count : category_counts) {
    const double p = count / (n_items * n);
    pe_bar += p * p;
  }
  if (p_bar == 1.0) return 1.0;
  return (p_bar - pe_bar) / (1.0 - pe_bar);
}

}  // namespace oracles
