#include "taglinegen/classification.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "taglinegen/errors.hpp"
#include "taglinegen/text_util.hpp"

namespace taglinegen {

double normalize_metric(std::int64_t value, std::int64_t max_value) {
  if (value < 0) throw DomainError("metric value must be >= 0");
  if (value > max_value) throw DomainError("metric value exceeds population maximum");
  if (max_value == 0) return 0.0;
  return std::log(static_cast<double>(value) + 1.0) /
         std::log(static_cast<double>(max_value) + 1.0);
}

MetricMaxima batch_maxima(const std::vector<UserProfile>& profiles) {
  MetricMaxima maxima;
  for (const UserProfile& p : profiles) {
    maxima.mentions = std::max(maxima.mentions, p.mentions_count);
    maxima.tweets = std::max(maxima.tweets, p.tweets_count);
    maxima.retweets = std::max(maxima.retweets, p.retweeted_count);
  }
  return maxima;
}

MetricVector compute_metrics(const UserProfile& p, const MetricMaxima& maxima) {
  return {normalize_metric(p.mentions_count, maxima.mentions),
          normalize_metric(p.tweets_count, maxima.tweets),
          normalize_metric(p.retweeted_count, maxima.retweets)};
}

namespace {

double percentile_value(std::vector<double> values, double percentile) {
  std::sort(values.begin(), values.end());
  auto index = static_cast<std::size_t>(
      std::floor((percentile / 100.0) * static_cast<double>(values.size() - 1)));
  return values[index];
}

}  // namespace

MetricThresholds compute_thresholds(const std::vector<MetricVector>& vectors, double percentile) {
  if (vectors.empty()) throw EmptyInput("no metric vectors");
  if (!(percentile > 0.0 && percentile < 100.0))
    throw DomainError("percentile must be in (0, 100)");
  std::vector<double> pop, act, dif;
  pop.reserve(vectors.size());
  act.reserve(vectors.size());
  dif.reserve(vectors.size());
  for (const MetricVector& v : vectors) {
    pop.push_back(v.popularity);
    act.push_back(v.activity);
    dif.push_back(v.diffusion);
  }
  return {percentile_value(std::move(pop), percentile),
          percentile_value(std::move(act), percentile),
          percentile_value(std::move(dif), percentile)};
}

int UserClass::template_id() const {
  return (popularity == Level::high ? 4 : 0) + (activity == Level::high ? 2 : 0) +
         (diffusion == Level::high ? 1 : 0);
}

std::string UserClass::key() const {
  std::string k;
  k.push_back(popularity == Level::high ? 'H' : 'L');
  k.push_back(activity == Level::high ? 'H' : 'L');
  k.push_back(diffusion == Level::high ? 'H' : 'L');
  return k;
}

UserClass UserClass::from_template_id(int id) {
  if (id < 0 || id > 7) throw DomainError("template_id must be in [0, 7]");
  return {(id & 4) ? Level::high : Level::low, (id & 2) ? Level::high : Level::low,
          (id & 1) ? Level::high : Level::low};
}

UserClass classify(const MetricVector& v, const MetricThresholds& thresholds) {
  return {v.popularity > thresholds.popularity ? Level::high : Level::low,
          v.activity > thresholds.activity ? Level::high : Level::low,
          v.diffusion > thresholds.diffusion ? Level::high : Level::low};
}

const TemplateTable& TemplateTable::defaults() {
  static const TemplateTable table = [] {
    TemplateTable t;
    t.texts_[7] = "Popular and active voice whose posts are widely shared";  // HHH
    t.texts_[6] = "Popular and active voice in the community";               // HHL
    t.texts_[5] = "Popular voice whose posts are widely shared";             // HLH
    t.texts_[4] = "Popular voice in the community";                          // HLL
    t.texts_[3] = "Active voice whose posts are widely shared";              // LHH
    t.texts_[2] = "Active voice in the community";                           // LHL
    t.texts_[1] = "Voice whose posts are widely shared";                     // LLH
    t.texts_[0] = "Emerging voice in the community";                         // LLL
    return t;
  }();
  return table;
}

TemplateTable TemplateTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open template file: " + path);

  TemplateTable table;
  std::array<bool, 8> seen{};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    std::size_t tab = view.find('\t');
    if (tab == std::string_view::npos) throw ParseError(line_no, "expected KEY<TAB>text");
    std::string_view key = view.substr(0, tab);
    std::string_view text = trim(view.substr(tab + 1));
    if (key.size() != 3 || text.empty()) throw ParseError(line_no, "expected KEY<TAB>text");
    int id = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      char c = to_lower_ascii(key[i]);
      if (c != 'h' && c != 'l') throw ParseError(line_no, "class key letters must be H or L");
      id = id * 2 + (c == 'h' ? 1 : 0);
    }
    if (seen[id]) throw ParseError(line_no, "duplicate class key");
    seen[id] = true;
    table.texts_[id] = std::string(text);
  }
  for (int id = 0; id < 8; ++id) {
    if (!seen[id])
      throw ParseError(line_no, "missing template for class " + UserClass::from_template_id(id).key());
  }
  return table;
}

const std::string& TemplateTable::text_for(const UserClass& c) const {
  return texts_[static_cast<std::size_t>(c.template_id())];
}

namespace {

// Longest prefix of whole words within the budget; a single over-long word
// falls back to a hard character cut.
std::string truncate_at_word_boundary(const std::string& text, int max_chars) {
  if (utf8_length(text) <= static_cast<std::size_t>(max_chars)) return text;
  std::string best;
  std::string current;
  for (std::string_view word : split_whitespace(text)) {
    std::string attempt = current.empty() ? std::string(word) : current + " " + std::string(word);
    if (utf8_length(attempt) > static_cast<std::size_t>(max_chars)) break;
    current = std::move(attempt);
  }
  if (current.empty()) return utf8_truncate(text, static_cast<std::size_t>(max_chars));
  return current;
}

}  // namespace

Candidate default_tagline(const UserClass& c, const TemplateTable& templates, int max_chars) {
  std::string text = truncate_at_word_boundary(templates.text_for(c), max_chars);
  return make_candidate("", std::move(text), Method::user_classification);
}

}  // namespace taglinegen
