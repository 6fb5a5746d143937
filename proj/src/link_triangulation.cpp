#include "taglinegen/link_triangulation.hpp"

#include <algorithm>

#include "taglinegen/errors.hpp"
#include "taglinegen/occupation.hpp"
#include "taglinegen/text_util.hpp"

namespace taglinegen {

namespace {

bool is_host_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '.' || c == '-' ||
         c == '_' || c == ':';
}

std::string_view strip_scheme(std::string_view url) {
  std::size_t i = 0;
  if (i >= url.size() || !((url[i] >= 'a' && url[i] <= 'z') || (url[i] >= 'A' && url[i] <= 'Z')))
    return url;
  while (i < url.size() && (is_word_char(url[i]) || url[i] == '+' || url[i] == '.' || url[i] == '-'))
    ++i;
  if (i + 3 <= url.size() && url.substr(i, 3) == "://") return url.substr(i + 3);
  return url;
}

// Standalone-word test for "and" at offset i of text.
bool is_standalone_and(std::string_view text, std::size_t i) {
  if (i + 3 > text.size()) return false;
  if (to_lower_ascii(text[i]) != 'a' || to_lower_ascii(text[i + 1]) != 'n' ||
      to_lower_ascii(text[i + 2]) != 'd')
    return false;
  if (i > 0 && is_word_char(text[i - 1])) return false;
  if (i + 3 < text.size() && is_word_char(text[i + 3])) return false;
  return true;
}

std::string strip_wikitext(std::string_view raw) {
  std::string s(raw);

  // <br> variants are line breaks, so they must survive as separators.
  std::string with_breaks;
  with_breaks.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '<') {
      std::size_t close = s.find('>', i);
      if (close != std::string::npos) {
        std::string inner = lower_ascii(std::string_view(s).substr(i + 1, close - i - 1));
        inner.erase(std::remove_if(inner.begin(), inner.end(),
                                   [](char c) { return is_space_char(c) || c == '/'; }),
                    inner.end());
        with_breaks.push_back(inner == "br" ? '\n' : ' ');
        i = close + 1;
        continue;
      }
    }
    with_breaks.push_back(s[i++]);
  }
  s = std::move(with_breaks);

  // Innermost-first template expansion: {{name|a|b}} keeps its positional
  // arguments, {{name}} disappears.
  for (int guard = 0; guard < 64; ++guard) {
    std::size_t close = s.find("}}");
    if (close == std::string::npos) break;
    std::size_t open = s.rfind("{{", close);
    if (open == std::string::npos) {
      s.erase(close, 2);
      continue;
    }
    std::string inner = s.substr(open + 2, close - open - 2);
    std::string expansion;
    std::size_t start = inner.find('|');
    if (start != std::string::npos) {
      std::size_t pos = start + 1;
      while (pos <= inner.size()) {
        std::size_t next = inner.find('|', pos);
        std::string part = inner.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.find('=') == std::string::npos && !trim(part).empty()) {
          if (!expansion.empty()) expansion += ", ";
          expansion.append(trim(part));
        }
        if (next == std::string::npos) break;
        pos = next + 1;
      }
    }
    s = s.substr(0, open) + expansion + s.substr(close + 2);
  }

  // [[target|label]] keeps the label, [[target]] keeps the target.
  std::string unlinked;
  unlinked.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (i + 1 < s.size() && s[i] == '[' && s[i + 1] == '[') {
      std::size_t close = s.find("]]", i + 2);
      if (close != std::string::npos) {
        std::string inner = s.substr(i + 2, close - i - 2);
        std::size_t pipe = inner.rfind('|');
        unlinked.append(pipe == std::string::npos ? inner : inner.substr(pipe + 1));
        i = close + 2;
        continue;
      }
    }
    unlinked.push_back(s[i++]);
  }
  s = std::move(unlinked);

  // Emphasis quotes and leading list bullets.
  std::string plain;
  plain.reserve(s.size());
  bool at_line_start = true;
  for (std::size_t i = 0; i < s.size();) {
    if (at_line_start) {
      while (i < s.size() && (s[i] == '*' || s[i] == '#' || s[i] == ' ')) ++i;
      at_line_start = false;
      continue;
    }
    if (s[i] == '\'' && i + 1 < s.size() && s[i + 1] == '\'') {
      i += (i + 2 < s.size() && s[i + 2] == '\'') ? 3 : 2;
      continue;
    }
    if (s[i] == '\n') at_line_start = true;
    plain.push_back(s[i++]);
  }
  return plain;
}

// Splits stripped text on commas, line breaks, and standalone "and".
std::vector<std::string> split_occupation_tags(std::string_view text) {
  std::string stripped = strip_wikitext(text);
  std::vector<std::string> tags;
  std::string current;
  auto flush = [&]() {
    std::string tag = collapse_whitespace(current);
    if (!tag.empty()) tags.push_back(std::move(tag));
    current.clear();
  };
  for (std::size_t i = 0; i < stripped.size();) {
    char c = stripped[i];
    if (c == ',' || c == '\n') {
      flush();
      ++i;
    } else if (is_standalone_and(stripped, i)) {
      flush();
      i += 3;
    } else {
      current.push_back(c);
      ++i;
    }
  }
  flush();
  return tags;
}

}  // namespace

std::string normalize_url(std::string_view url) {
  std::string_view rest = trim(url);
  if (rest.empty()) throw MalformedUrl("empty URL");
  for (char c : rest) {
    if (is_space_char(c)) throw MalformedUrl("URL contains whitespace: " + std::string(url));
  }
  rest = strip_scheme(rest);
  std::size_t hash = rest.find('#');
  if (hash != std::string_view::npos) rest = rest.substr(0, hash);
  if (rest.empty()) throw MalformedUrl("URL has no host: " + std::string(url));

  std::size_t host_end = rest.find_first_of("/?");
  std::string host = lower_ascii(rest.substr(0, host_end));
  std::string_view tail = host_end == std::string_view::npos ? std::string_view{}
                                                             : rest.substr(host_end);

  if (host.empty()) throw MalformedUrl("URL has no host: " + std::string(url));
  for (char c : host) {
    if (!is_host_char(c)) throw MalformedUrl("invalid host character: " + std::string(url));
  }
  if (host.find('.') == std::string::npos)
    throw MalformedUrl("host is not dotted: " + std::string(url));

  // "www." strips repeatedly so the form is a fixed point, but never down to
  // a dotless name ("www.com" stays).
  while (host.rfind("www.", 0) == 0 && host.find('.', 4) != std::string::npos)
    host.erase(0, 4);

  std::string result = host;
  result.append(tail);
  while (!result.empty() && result.back() == '/') result.pop_back();
  return result;
}

const std::vector<std::size_t>* LinkIndex::find(const std::string& canonical_url) const {
  auto it = by_url_.find(canonical_url);
  return it == by_url_.end() ? nullptr : &it->second;
}

LinkIndex build_link_index(std::vector<KbPage> pages) {
  LinkIndex index;
  index.pages_ = std::move(pages);
  for (std::size_t i = 0; i < index.pages_.size(); ++i) {
    for (const std::string& link : index.pages_[i].external_links) {
      std::string canonical;
      try {
        canonical = normalize_url(link);
      } catch (const MalformedUrl&) {
        ++index.skipped_links_;
        continue;
      }
      auto& entries = index.by_url_[canonical];
      if (entries.empty() || entries.back() != i) entries.push_back(i);
    }
  }
  return index;
}

Resolution resolve_identity(const UserProfile& p, const LinkIndex& index) {
  if (!p.personal_url) return {};
  std::string canonical;
  try {
    canonical = normalize_url(*p.personal_url);
  } catch (const MalformedUrl&) {
    return {};
  }
  const std::vector<std::size_t>* entries = index.find(canonical);
  if (!entries) return {};
  if (entries->size() > 1) return {nullptr, true, entries->size()};
  return {&index.pages()[entries->front()], false, 1};
}

std::vector<std::string> parse_infobox_occupation(std::string_view raw) {
  return split_occupation_tags(raw);
}

std::vector<std::string> extract_first_sentence_occupation(std::string_view sentence) {
  std::size_t is_pos = sentence.find(" is ");
  if (is_pos == std::string_view::npos) return {};
  std::string_view tail = sentence.substr(is_pos + 4);
  std::size_t period = tail.find('.');
  if (period != std::string_view::npos) tail = tail.substr(0, period);
  tail = trim(tail);

  for (std::string_view article : {"a ", "an ", "the "}) {
    if (tail.size() > article.size() &&
        lower_ascii(tail.substr(0, article.size())) == article) {
      tail = tail.substr(article.size());
      break;
    }
  }
  return split_occupation_tags(tail);
}

std::vector<Candidate> kb_candidates_from_page(const UserProfile& p, const KbPage& page,
                                               int max_chars) {
  std::vector<std::string> tags;
  if (page.infobox_occupation) {
    tags = parse_infobox_occupation(*page.infobox_occupation);
  } else if (page.first_sentence) {
    tags = extract_first_sentence_occupation(*page.first_sentence);
  }
  if (tags.empty()) return {};

  std::vector<Candidate> candidates;
  for (std::string& text : maximal_windows(tags, max_chars)) {
    candidates.push_back(make_candidate(p.user_id, std::move(text), Method::link_triangulation));
  }
  return candidates;
}

std::vector<Candidate> generate_kb_candidates(const UserProfile& p, const LinkIndex& index,
                                              int max_chars) {
  Resolution res = resolve_identity(p, index);
  if (!res.page) return {};
  return kb_candidates_from_page(p, *res.page, max_chars);
}

}  // namespace taglinegen
