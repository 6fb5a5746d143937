#include "taglinegen/occupation.hpp"

#include <array>
#include <unordered_set>

#include "taglinegen/text_util.hpp"

namespace taglinegen {

namespace {

bool is_pause_char(char c) { return c == ',' || c == ';' || c == '.' || c == '/'; }

// Matches `title` (lowercase, single-spaced) at text[pos]. A space in the
// title consumes any whitespace run. Returns the end offset, or npos. The
// caller guarantees pos is a word start; the end must also be a boundary.
std::size_t match_title_at(std::string_view text, std::size_t pos, std::string_view title) {
  std::size_t i = pos;
  for (std::size_t t = 0; t < title.size(); ++t) {
    char c = title[t];
    if (c == ' ') {
      if (i >= text.size() || !is_space_char(text[i])) return std::string_view::npos;
      while (i < text.size() && is_space_char(text[i])) ++i;
    } else {
      if (i >= text.size() || to_lower_ascii(text[i]) != c) return std::string_view::npos;
      ++i;
    }
  }
  if (i < text.size() && is_word_char(text[i])) return std::string_view::npos;
  return i;
}

struct FragmentPiece {
  std::string_view text;
  std::string_view separator;  // the pause char or conjunction that ended it
};

// Shared splitter for tokenize_bio and the contact-indicator drop. A
// conjunction separates only as a standalone word.
std::vector<FragmentPiece> split_fragments(std::string_view text) {
  std::vector<FragmentPiece> pieces;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (is_pause_char(c)) {
      pieces.push_back({text.substr(start, i - start), text.substr(i, 1)});
      start = ++i;
      continue;
    }
    if (c == '&' && (i == 0 || is_space_char(text[i - 1])) &&
        (i + 1 == text.size() || is_space_char(text[i + 1]))) {
      pieces.push_back({text.substr(start, i - start), text.substr(i, 1)});
      start = ++i;
      continue;
    }
    if ((c == 'a' || c == 'A') && (i == 0 || !is_word_char(text[i - 1])) &&
        i + 3 <= text.size() && to_lower_ascii(text[i + 1]) == 'n' &&
        to_lower_ascii(text[i + 2]) == 'd' &&
        (i + 3 == text.size() || !is_word_char(text[i + 3]))) {
      pieces.push_back({text.substr(start, i - start), text.substr(i, 3)});
      start = i += 3;
      continue;
    }
    ++i;
  }
  pieces.push_back({text.substr(start), {}});
  return pieces;
}

bool looks_like_url(std::string_view token) {
  if (token.size() >= 4 && lower_ascii(token.substr(0, 4)) == "www." && token.size() > 4)
    return true;
  // scheme://rest
  std::size_t i = 0;
  if (i >= token.size() || !((token[i] >= 'a' && token[i] <= 'z') ||
                             (token[i] >= 'A' && token[i] <= 'Z')))
    return false;
  while (i < token.size() &&
         (is_word_char(token[i]) || token[i] == '+' || token[i] == '.' || token[i] == '-'))
    ++i;
  return i + 3 <= token.size() && token.substr(i, 3) == "://" && i + 3 < token.size();
}

bool looks_like_email(std::string_view token) {
  std::size_t at = token.find('@');
  if (at == 0 || at == std::string_view::npos) return false;
  std::string_view domain = token.substr(at + 1);
  if (domain.empty() || domain.find('@') != std::string_view::npos) return false;
  std::size_t dot = domain.find('.');
  return dot != std::string_view::npos && dot > 0 && dot + 1 < domain.size();
}

bool is_trailing_punct(char c) {
  return c == ',' || c == ';' || c == '.' || c == '!' || c == '?';
}

const std::array<std::string_view, 5> kContactIndicators = {
    "contact us", "email us", "booking info", "pr rep", "bookings"};

bool is_contact_fragment(std::string_view fragment) {
  std::string norm = collapse_whitespace(lower_ascii(fragment));
  for (std::string_view indicator : kContactIndicators) {
    if (norm == indicator) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> spot_occupations(std::string_view bio, const OccupationLexicon& lex) {
  std::vector<std::string> matches;
  std::size_t i = 0;
  while (i < bio.size()) {
    if (is_word_char(bio[i]) && (i == 0 || !is_word_char(bio[i - 1]))) {
      std::size_t matched_end = std::string_view::npos;
      std::uint32_t matched_title = 0;
      for (std::uint32_t idx : lex.bucket(bio[i])) {
        std::size_t end = match_title_at(bio, i, lex.titles()[idx]);
        if (end != std::string_view::npos) {
          matched_end = end;
          matched_title = idx;
          break;  // bucket is longest-first
        }
      }
      if (matched_end != std::string_view::npos) {
        matches.push_back(lex.titles()[matched_title]);
        i = matched_end;
        continue;
      }
    }
    ++i;
  }
  return matches;
}

std::string preprocess_bio(std::string_view bio) {
  // Newlines and other whitespace become plain spaces.
  std::string flat(bio);
  for (char& c : flat) {
    if (is_space_char(c)) c = ' ';
  }

  // URL tokens become the "[link]" proxy and e-mail tokens disappear, with
  // trailing pause punctuation kept so fragment boundaries survive.
  std::string replaced;
  replaced.reserve(flat.size());
  for (std::string_view token : split_whitespace(flat)) {
    std::size_t core_end = token.size();
    while (core_end > 0 && is_trailing_punct(token[core_end - 1])) --core_end;
    std::string_view core = token.substr(0, core_end);
    std::string_view suffix = token.substr(core_end);
    std::string out;
    if (looks_like_url(core)) {
      out = "[link]";
      out.append(suffix);
    } else if (looks_like_email(core)) {
      out.assign(suffix);
    } else {
      out.assign(token);
    }
    if (out.empty()) continue;
    if (!replaced.empty()) replaced.push_back(' ');
    replaced.append(out);
  }

  // Runs of two or more dots collapse to a single '.'.
  std::string dotted;
  dotted.reserve(replaced.size());
  for (std::size_t i = 0; i < replaced.size();) {
    if (replaced[i] == '.') {
      dotted.push_back('.');
      while (i < replaced.size() && replaced[i] == '.') ++i;
    } else {
      dotted.push_back(replaced[i++]);
    }
  }

  std::string collapsed = collapse_whitespace(dotted);

  // Drop fragments that are exactly a contact indicator (the indicator with
  // extra punctuation attached is kept).
  std::string result;
  for (const FragmentPiece& piece : split_fragments(collapsed)) {
    if (is_contact_fragment(trim(piece.text))) continue;
    result.append(piece.text);
    result.append(piece.separator);
  }
  return collapse_whitespace(result);
}

std::vector<NGram> tokenize_bio(std::string_view text) {
  std::vector<NGram> ngrams;
  int position = 0;
  for (const FragmentPiece& piece : split_fragments(text)) {
    std::string_view fragment = trim(piece.text);
    if (!fragment.empty()) {
      ngrams.push_back({std::string(fragment), position});
    }
    ++position;
  }
  return ngrams;
}

std::vector<NGram> filter_ngrams(const std::vector<NGram>& ngrams, const OccupationLexicon& lex) {
  std::vector<NGram> kept;
  for (const NGram& ng : ngrams) {
    if (!spot_occupations(ng.text, lex).empty()) kept.push_back(ng);
  }
  return kept;
}

std::vector<std::string> maximal_windows(const std::vector<std::string>& fragments,
                                         int max_chars) {
  if (max_chars <= 0) return {};
  const std::size_t n = fragments.size();
  std::vector<std::size_t> lens(n);
  for (std::size_t i = 0; i < n; ++i) lens[i] = utf8_length(fragments[i]);
  const std::size_t budget = static_cast<std::size_t>(max_chars);

  std::vector<std::string> windows;
  std::unordered_set<std::string> seen;
  for (std::size_t start = 0; start < n; ++start) {
    if (lens[start] > budget) continue;
    std::size_t total = lens[start];
    std::size_t end = start;
    while (end + 1 < n && total + 2 + lens[end + 1] <= budget) {
      total += 2 + lens[end + 1];
      ++end;
    }
    // Window must not be extendable to the left either.
    if (start > 0 && lens[start - 1] + 2 + total <= budget) continue;
    std::string joined = fragments[start];
    for (std::size_t k = start + 1; k <= end; ++k) {
      joined += ", ";
      joined += fragments[k];
    }
    if (seen.insert(joined).second) windows.push_back(std::move(joined));
  }
  return windows;
}

std::vector<Candidate> compose_candidates(const std::vector<NGram>& ngrams, int max_chars,
                                          const std::string& user_id, Method method) {
  std::vector<std::string> fragments;
  fragments.reserve(ngrams.size());
  for (const NGram& ng : ngrams) fragments.push_back(ng.text);

  std::vector<Candidate> candidates;
  for (std::string& text : maximal_windows(fragments, max_chars)) {
    candidates.push_back(make_candidate(user_id, std::move(text), method));
  }
  return candidates;
}

std::vector<Candidate> generate_occupation_candidates(const UserProfile& p,
                                                      const OccupationLexicon& lex,
                                                      int max_chars) {
  if (p.bio.empty()) return {};
  if (spot_occupations(p.bio, lex).empty()) return {};
  std::string cleaned = preprocess_bio(p.bio);
  std::vector<NGram> kept = filter_ngrams(tokenize_bio(cleaned), lex);
  if (kept.empty()) return {};
  return compose_candidates(kept, max_chars, p.user_id, Method::occupation_pattern);
}

}  // namespace taglinegen
