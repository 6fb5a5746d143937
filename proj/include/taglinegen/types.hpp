#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taglinegen {

// One expert record for a time slice. Counters are slice aggregates supplied
// by the input file, not computed here.
struct UserProfile {
  std::string user_id;
  std::string screen_name;
  std::string bio;
  std::optional<std::string> personal_url;
  std::int64_t tweets_count = 0;
  std::int64_t mentions_count = 0;
  std::int64_t retweeted_count = 0;
  double expert_score = 0.0;
};

// Throws InvalidProfile naming the offending field; returns p unchanged
// otherwise. Uniqueness of user_id is checked at batch load, not here.
const UserProfile& validate_profile(const UserProfile& p);

struct PipelineConfig {
  int max_chars = 70;
  double expert_fraction = 0.30;
  double percentile = 50.0;
  std::optional<double> min_readability;
};

// Throws DomainError on out-of-range settings.
void validate_config(const PipelineConfig& config);

enum class Method {
  occupation_pattern,
  link_triangulation,
  user_classification,
};

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

struct Candidate {
  std::string user_id;
  std::string text;
  Method method = Method::occupation_pattern;
  int char_length = 0;  // Unicode scalar values in text
  std::optional<double> readability;
  std::optional<double> score;
};

Candidate make_candidate(std::string user_id, std::string text, Method method);

struct Tagline {
  std::string user_id;
  std::string text;
  Method method = Method::user_classification;
  std::optional<double> score;
};

// Knowledge-base snapshot page. infobox_occupation holds the raw (possibly
// wikitext) value; it is parsed downstream.
struct KbPage {
  std::string title;
  std::vector<std::string> external_links;
  std::optional<std::string> infobox_occupation;
  std::optional<std::string> first_sentence;
};

}  // namespace taglinegen
