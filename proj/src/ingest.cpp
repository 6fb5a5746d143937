#include "taglinegen/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "taglinegen/errors.hpp"
#include "taglinegen/text_util.hpp"

namespace taglinegen {

namespace {

using nlohmann::json;

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  return in;
}

// Applies `fn` to each non-blank line with its 1-based number, wrapping
// json exceptions into ParseError.
template <typename Fn>
void for_each_record(const std::string& path, Fn&& fn) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(line_no, e.what());
    }
    if (!record.is_object()) throw ParseError(line_no, "record is not an object");
    try {
      fn(record, line_no);
    } catch (const json::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
}

std::string require_string(const json& record, const char* key, std::size_t line_no) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_string())
    throw ParseError(line_no, std::string("missing or non-string field: ") + key);
  return it->get<std::string>();
}

std::int64_t require_int(const json& record, const char* key, std::size_t line_no) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_number_integer())
    throw ParseError(line_no, std::string("missing or non-integer field: ") + key);
  return it->get<std::int64_t>();
}

double require_number(const json& record, const char* key, std::size_t line_no) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_number())
    throw ParseError(line_no, std::string("missing or non-numeric field: ") + key);
  return it->get<double>();
}

std::optional<std::string> optional_string(const json& record, const char* key,
                                           std::size_t line_no) {
  auto it = record.find(key);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw ParseError(line_no, std::string("non-string field: ") + key);
  return it->get<std::string>();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.emplace_back(trim(std::string_view(line).substr(start)));
      break;
    }
    fields.emplace_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

int parse_int_field(const std::string& value, std::size_t line_no, const char* name) {
  try {
    std::size_t consumed = 0;
    int parsed = std::stoi(value, &consumed);
    if (consumed != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("invalid integer for ") + name + ": " + value);
  }
}

void expect_header(std::ifstream& in, const std::string& expected, const std::string& path) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing CSV header in " + path);
  if (std::string(trim(line)) != expected)
    throw ParseError(1, "expected header \"" + expected + "\"");
}

}  // namespace

std::vector<UserProfile> load_profiles(const std::string& path) {
  std::vector<UserProfile> profiles;
  std::unordered_set<std::string> seen_ids;
  for_each_record(path, [&](const json& record, std::size_t line_no) {
    UserProfile p;
    p.user_id = require_string(record, "user_id", line_no);
    p.screen_name = require_string(record, "screen_name", line_no);
    p.bio = optional_string(record, "bio", line_no).value_or("");
    p.personal_url = optional_string(record, "url", line_no);
    p.tweets_count = require_int(record, "tweets_count", line_no);
    p.mentions_count = require_int(record, "mentions_count", line_no);
    p.retweeted_count = require_int(record, "retweeted_count", line_no);
    p.expert_score = require_number(record, "expert_score", line_no);
    validate_profile(p);
    if (!seen_ids.insert(p.user_id).second) throw DuplicateUser(p.user_id);
    profiles.push_back(std::move(p));
  });
  return profiles;
}

std::vector<UserProfile> select_experts(std::vector<UserProfile> profiles, double fraction) {
  if (profiles.empty()) throw EmptyInput("no profiles to rank");
  if (!(fraction > 0.0 && fraction <= 1.0)) throw DomainError("fraction must be in (0, 1]");
  std::sort(profiles.begin(), profiles.end(), [](const UserProfile& a, const UserProfile& b) {
    if (a.expert_score != b.expert_score) return a.expert_score > b.expert_score;
    return a.user_id < b.user_id;
  });
  auto keep = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(profiles.size())));
  keep = std::min(keep, profiles.size());
  profiles.resize(keep);
  return profiles;
}

OccupationLexicon load_lexicon(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::set<std::string> titles;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && line.size() >= 3 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    first = false;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    titles.insert(std::string(view));
  }
  if (titles.empty()) throw EmptyLexicon("no titles in " + path);
  return OccupationLexicon(titles);
}

std::vector<KbPage> load_kb(const std::string& path) {
  std::vector<KbPage> pages;
  for_each_record(path, [&](const json& record, std::size_t line_no) {
    KbPage page;
    page.title = require_string(record, "title", line_no);
    if (page.title.empty()) throw ParseError(line_no, "title must be non-empty");
    auto links = record.find("external_links");
    if (links == record.end() || !links->is_array())
      throw ParseError(line_no, "missing or non-array field: external_links");
    for (const json& link : *links) {
      if (!link.is_string()) throw ParseError(line_no, "external_links entries must be strings");
      page.external_links.push_back(link.get<std::string>());
    }
    page.infobox_occupation = optional_string(record, "infobox_occupation", line_no);
    page.first_sentence = optional_string(record, "first_sentence", line_no);
    pages.push_back(std::move(page));
  });
  return pages;
}

std::vector<GenerationRow> load_generation_rows(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  expect_header(in, "item_id,judge_id,question,rating", path);
  std::vector<GenerationRow> rows;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 4) throw ParseError(line_no, "expected 4 fields");
    GenerationRow row;
    row.item_id = fields[0];
    row.judge_id = fields[1];
    row.question = fields[2];
    if (row.question != "Q1" && row.question != "Q2" && row.question != "Q3")
      throw ParseError(line_no, "question must be Q1, Q2, or Q3");
    row.rating = parse_int_field(fields[3], line_no, "rating");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SelectionJudgment> load_selection_judgments(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  expect_header(in, "item_id,algorithmic_choice,judge_id,choice", path);

  struct RawItem {
    int algorithmic_choice = 0;
    std::map<std::string, int> by_judge;
  };
  std::map<std::string, RawItem> grouped;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 4) throw ParseError(line_no, "expected 4 fields");
    int algorithmic = parse_int_field(fields[1], line_no, "algorithmic_choice");
    if (algorithmic != 1 && algorithmic != 2)
      throw ParseError(line_no, "algorithmic_choice must be 1 or 2");
    int choice = parse_int_field(fields[3], line_no, "choice");
    if (choice < 0 || choice > 2) throw ParseError(line_no, "choice must be 0, 1, or 2");
    RawItem& item = grouped[fields[0]];
    if (item.by_judge.empty()) {
      item.algorithmic_choice = algorithmic;
    } else if (item.algorithmic_choice != algorithmic) {
      throw ParseError(line_no, "conflicting algorithmic_choice for item " + fields[0]);
    }
    if (!item.by_judge.emplace(fields[2], choice).second)
      throw ParseError(line_no, "duplicate judge " + fields[2] + " for item " + fields[0]);
  }

  std::vector<SelectionJudgment> items;
  items.reserve(grouped.size());
  for (auto& [item_id, raw] : grouped) {
    SelectionJudgment item;
    item.item_id = item_id;
    item.algorithmic_choice = raw.algorithmic_choice;
    for (auto& [judge, choice] : raw.by_judge) item.judge_choices.push_back(choice);
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<Candidate> load_candidates(const std::string& path,
                                       std::vector<std::string>* screen_names) {
  std::vector<Candidate> candidates;
  for_each_record(path, [&](const json& record, std::size_t line_no) {
    std::string user_id = require_string(record, "user_id", line_no);
    std::string text = require_string(record, "text", line_no);
    Method method;
    try {
      method = parse_method(require_string(record, "method", line_no));
    } catch (const DomainError& e) {
      throw ParseError(line_no, e.what());
    }
    Candidate c = make_candidate(std::move(user_id), std::move(text), method);
    if (auto it = record.find("char_length"); it != record.end()) {
      if (!it->is_number_integer() || it->get<std::int64_t>() != c.char_length)
        throw ParseError(line_no, "char_length does not match text");
    }
    if (screen_names)
      screen_names->push_back(optional_string(record, "screen_name", line_no).value_or(""));
    candidates.push_back(std::move(c));
  });
  return candidates;
}

}  // namespace taglinegen
