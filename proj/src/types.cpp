#include "taglinegen/types.hpp"

#include "taglinegen/errors.hpp"
#include "taglinegen/text_util.hpp"

namespace taglinegen {

const UserProfile& validate_profile(const UserProfile& p) {
  if (p.user_id.empty()) throw InvalidProfile("user_id", "must be non-empty");
  if (p.tweets_count < 0) throw InvalidProfile("tweets_count", "must be >= 0");
  if (p.mentions_count < 0) throw InvalidProfile("mentions_count", "must be >= 0");
  if (p.retweeted_count < 0) throw InvalidProfile("retweeted_count", "must be >= 0");
  if (p.expert_score < 0) throw InvalidProfile("expert_score", "must be >= 0");
  return p;
}

void validate_config(const PipelineConfig& config) {
  if (config.max_chars < 1) throw DomainError("max_chars must be >= 1");
  if (!(config.expert_fraction > 0.0 && config.expert_fraction <= 1.0))
    throw DomainError("expert_fraction must be in (0, 1]");
  if (!(config.percentile > 0.0 && config.percentile < 100.0))
    throw DomainError("percentile must be in (0, 100)");
  if (config.min_readability &&
      !(*config.min_readability >= 0.0 && *config.min_readability <= 100.0))
    throw DomainError("min_readability must be in [0, 100]");
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::occupation_pattern: return "occupation_pattern";
    case Method::link_triangulation: return "link_triangulation";
    case Method::user_classification: return "user_classification";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "occupation_pattern") return Method::occupation_pattern;
  if (name == "link_triangulation") return Method::link_triangulation;
  if (name == "user_classification") return Method::user_classification;
  throw DomainError("unknown method: " + std::string(name));
}

Candidate make_candidate(std::string user_id, std::string text, Method method) {
  Candidate c;
  c.char_length = static_cast<int>(utf8_length(text));
  c.user_id = std::move(user_id);
  c.text = std::move(text);
  c.method = method;
  return c;
}

}  // namespace taglinegen
