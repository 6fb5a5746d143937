#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "taglinegen/types.hpp"

namespace taglinegen {

// Log-normalized metrics, each in [0, 1].
struct MetricVector {
  double popularity = 0.0;  // from mentions_count
  double activity = 0.0;    // from tweets_count
  double diffusion = 0.0;   // from retweeted_count
};

// Population maxima of the raw counters over the expert batch.
struct MetricMaxima {
  std::int64_t mentions = 0;
  std::int64_t tweets = 0;
  std::int64_t retweets = 0;
};

struct MetricThresholds {
  double popularity = 0.0;
  double activity = 0.0;
  double diffusion = 0.0;
};

// log(V+1)/log(MaxV+1); 0 when the whole population sits at zero. The ratio
// is the same in any logarithm base. Throws DomainError when V < 0 or
// V > MaxV.
double normalize_metric(std::int64_t value, std::int64_t max_value);

MetricMaxima batch_maxima(const std::vector<UserProfile>& profiles);

MetricVector compute_metrics(const UserProfile& p, const MetricMaxima& maxima);

// Per-metric lower-value percentile (no interpolation): the sorted value at
// index floor((percentile/100) * (n-1)). Throws EmptyInput.
MetricThresholds compute_thresholds(const std::vector<MetricVector>& vectors, double percentile);

enum class Level : std::uint8_t { low, high };

// One of the 8 classes in the three-metric space. template_id is the HLL
// triple read as bits (popularity, activity, diffusion), so HHH = 7 and
// LLL = 0.
struct UserClass {
  Level popularity = Level::low;
  Level activity = Level::low;
  Level diffusion = Level::low;

  int template_id() const;
  std::string key() const;  // e.g. "HLH"
  static UserClass from_template_id(int id);
};

// High means strictly above the threshold; ties classify low.
UserClass classify(const MetricVector& v, const MetricThresholds& thresholds);

// The 8 class tagline formats, one per level triple. Keys run "LLL".."HHH"
// with letters in metric order popularity, activity, diffusion.
class TemplateTable {
 public:
  static const TemplateTable& defaults();

  // File format: 8 "KEY<TAB>text" lines, keys like HHH; '#' comments and
  // blank lines allowed. Throws ParseError on bad lines, duplicates, or a
  // missing class.
  static TemplateTable load(const std::string& path);

  const std::string& text_for(const UserClass& c) const;

 private:
  std::array<std::string, 8> texts_;
};

// The class template truncated at a word boundary to max_chars. user_id is
// filled by the caller.
Candidate default_tagline(const UserClass& c, const TemplateTable& templates, int max_chars);

}  // namespace taglinegen
