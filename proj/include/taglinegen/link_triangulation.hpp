#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "taglinegen/types.hpp"

namespace taglinegen {

// Canonical URL form: scheme stripped, host lowercased, leading "www."
// stripped, trailing '/' stripped, fragment stripped, path case preserved.
// Idempotent: normalize_url(normalize_url(u)) == normalize_url(u).
// Throws MalformedUrl.
std::string normalize_url(std::string_view url);

// Inverted index from canonical out-link to the KB pages listing it. Owns
// the page snapshot so lookups stay valid for the index lifetime.
class LinkIndex {
 public:
  LinkIndex() = default;

  const std::vector<KbPage>& pages() const { return pages_; }
  std::size_t key_count() const { return by_url_.size(); }
  std::size_t skipped_links() const { return skipped_links_; }

  // Page indices for a canonical URL; nullptr when absent.
  const std::vector<std::size_t>* find(const std::string& canonical_url) const;

 private:
  friend LinkIndex build_link_index(std::vector<KbPage> pages);
  std::vector<KbPage> pages_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_url_;
  std::size_t skipped_links_ = 0;
};

// Malformed links are skipped and counted, never fatal.
LinkIndex build_link_index(std::vector<KbPage> pages);

struct Resolution {
  const KbPage* page = nullptr;  // owned by the index
  bool ambiguous = false;
  std::size_t match_count = 0;
};

// Looks up the profile's personal URL in the index. Ambiguity (several
// pages sharing the link) resolves to no page with the flag set; a missing
// or malformed personal URL resolves to no page silently.
Resolution resolve_identity(const UserProfile& p, const LinkIndex& index);

// Strips wikitext markup (links, templates, emphasis quotes, HTML tags,
// list bullets) and splits on commas, line breaks, and standalone "and".
std::vector<std::string> parse_infobox_occupation(std::string_view raw);

// The phrase after the first " is " up to the sentence-ending period, with
// a leading article removed, split like an infobox value. Empty when the
// copula is absent.
std::vector<std::string> extract_first_sentence_occupation(std::string_view sentence);

// Occupation tags of the resolved page (infobox first, first sentence only
// when the infobox is absent), composed into windows like bio n-grams.
std::vector<Candidate> kb_candidates_from_page(const UserProfile& p, const KbPage& page,
                                               int max_chars);

std::vector<Candidate> generate_kb_candidates(const UserProfile& p, const LinkIndex& index,
                                              int max_chars);

}  // namespace taglinegen
