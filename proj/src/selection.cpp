#include "taglinegen/selection.hpp"

#include <algorithm>
#include <cmath>

#include "taglinegen/errors.hpp"
#include "taglinegen/text_util.hpp"

namespace taglinegen {

namespace {

bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_ascii_alnum(char c) { return is_ascii_alpha(c) || (c >= '0' && c <= '9'); }

}  // namespace

int count_syllables(std::string_view word) {
  std::string letters;
  letters.reserve(word.size());
  for (char c : word) {
    if (is_ascii_alpha(c)) letters.push_back(to_lower_ascii(c));
  }
  if (letters.empty()) return 1;

  int groups = 0;
  bool in_group = false;
  for (char c : letters) {
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  // Lone terminal 'e' (consonant before it) is silent when the word has
  // another vowel group.
  if (groups >= 2 && letters.back() == 'e' && letters.size() >= 2 &&
      !is_vowel(letters[letters.size() - 2])) {
    --groups;
  }
  return std::max(1, groups);
}

double flesch_score(std::string_view text) {
  std::int64_t words = 0;
  std::int64_t syllables = 0;
  for (std::string_view token : split_whitespace(text)) {
    bool has_alpha = false;
    for (char c : token) {
      if (is_ascii_alpha(c)) {
        has_alpha = true;
        break;
      }
    }
    if (!has_alpha) continue;
    ++words;
    syllables += count_syllables(token);
  }
  if (words == 0) return 0.0;

  std::int64_t sentences = 0;
  bool in_run = false;
  for (char c : text) {
    if (c == '.' || c == '!' || c == '?') {
      if (!in_run) ++sentences;
      in_run = true;
    } else {
      in_run = false;
    }
  }
  if (sentences == 0) sentences = 1;

  double score = 206.835 - 1.015 * (static_cast<double>(words) / static_cast<double>(sentences)) -
                 84.6 * (static_cast<double>(syllables) / static_cast<double>(words));
  return std::clamp(score, 0.0, 100.0);
}

std::vector<std::string> term_tokens(std::string_view text) {
  std::vector<std::string> terms;
  for (std::string_view raw : split_whitespace(text)) {
    std::string token = lower_ascii(raw);
    if (token == "[link]") continue;
    // Trailing punctuation always strips; leading strips except the '@' and
    // '#' prefixes that keep mentions and hashtags distinctive.
    std::size_t end = token.size();
    while (end > 0) {
      char c = token[end - 1];
      if (is_ascii_alnum(c) || static_cast<unsigned char>(c) >= 0x80) break;
      --end;
    }
    std::size_t begin = 0;
    while (begin < end) {
      char c = token[begin];
      if (is_ascii_alnum(c) || static_cast<unsigned char>(c) >= 0x80 || c == '@' || c == '#')
        break;
      ++begin;
    }
    if (begin < end) terms.push_back(token.substr(begin, end - begin));
  }
  return terms;
}

TermStats build_term_stats(const std::vector<Candidate>& candidates) {
  if (candidates.empty()) throw EmptyCorpus("no candidate documents");
  TermStats stats;
  stats.total_documents = static_cast<std::int64_t>(candidates.size());
  std::vector<std::string> unique;
  for (const Candidate& c : candidates) {
    unique.clear();
    for (std::string& term : term_tokens(c.text)) {
      if (std::find(unique.begin(), unique.end(), term) == unique.end())
        unique.push_back(std::move(term));
    }
    for (const std::string& term : unique) ++stats.df[term];
  }
  return stats;
}

ScoredCandidate score_candidate(const Candidate& c, const TermStats& stats, int max_chars) {
  std::vector<std::string> tokens = term_tokens(c.text);

  // Unique terms in first-occurrence order keep the summation reproducible.
  std::vector<std::pair<std::string, std::int64_t>> freqs;
  for (std::string& term : tokens) {
    auto it = std::find_if(freqs.begin(), freqs.end(),
                           [&](const auto& e) { return e.first == term; });
    if (it == freqs.end()) {
      freqs.emplace_back(std::move(term), 1);
    } else {
      ++it->second;
    }
  }

  double sum = 0.0;
  for (const auto& [term, freq] : freqs) {
    auto it = stats.df.find(term);
    if (it == stats.df.end()) throw UnknownTerm(term);
    sum += static_cast<double>(freq) *
           std::log(static_cast<double>(stats.total_documents) / static_cast<double>(it->second));
  }

  ScoredCandidate scored;
  scored.candidate = c;
  scored.word_count = static_cast<int>(tokens.size());
  scored.raw_score = tokens.empty() ? 0.0 : sum / static_cast<double>(tokens.size());
  scored.final_score =
      scored.raw_score * static_cast<double>(c.char_length) / static_cast<double>(max_chars);
  scored.candidate.score = scored.final_score;
  return scored;
}

namespace {

int method_priority(Method m) {
  switch (m) {
    case Method::occupation_pattern: return 0;
    case Method::link_triangulation: return 1;
    case Method::user_classification: return 2;
  }
  return 3;
}

bool better_than(const ScoredCandidate& a, const ScoredCandidate& b) {
  if (a.final_score != b.final_score) return a.final_score > b.final_score;
  if (a.candidate.char_length != b.candidate.char_length)
    return a.candidate.char_length > b.candidate.char_length;
  int pa = method_priority(a.candidate.method);
  int pb = method_priority(b.candidate.method);
  if (pa != pb) return pa < pb;
  return a.candidate.text < b.candidate.text;
}

}  // namespace

Tagline select_final(const std::vector<Candidate>& user_candidates, const TermStats& stats,
                     int max_chars, std::optional<double> min_readability) {
  if (user_candidates.empty()) throw NoCandidates("no candidates to select from");

  std::vector<ScoredCandidate> scored;
  scored.reserve(user_candidates.size());
  for (const Candidate& c : user_candidates) {
    ScoredCandidate sc = score_candidate(c, stats, max_chars);
    sc.candidate.readability = flesch_score(c.text);
    scored.push_back(std::move(sc));
  }

  std::vector<const ScoredCandidate*> pool;
  if (min_readability) {
    for (const ScoredCandidate& sc : scored) {
      if (*sc.candidate.readability >= *min_readability) pool.push_back(&sc);
    }
  }
  if (pool.empty()) {
    // No filter requested, or the filter would reject everything: waived.
    for (const ScoredCandidate& sc : scored) pool.push_back(&sc);
  }

  const ScoredCandidate* best = pool.front();
  for (const ScoredCandidate* sc : pool) {
    if (better_than(*sc, *best)) best = sc;
  }
  return {best->candidate.user_id, best->candidate.text, best->candidate.method,
          best->final_score};
}

}  // namespace taglinegen
