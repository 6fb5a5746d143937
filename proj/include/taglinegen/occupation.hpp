#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "taglinegen/lexicon.hpp"
#include "taglinegen/types.hpp"

namespace taglinegen {

// One bio fragment. position is the fragment's index in the bio's split
// sequence and is strictly increasing within a list.
struct NGram {
  std::string text;
  int position = 0;
};

// Case-insensitive word-boundary spotting of lexicon titles. Multi-word
// titles match contiguous word sequences; at each start position the longest
// title wins and scanning resumes past it. Returns canonical lexicon titles
// in bio order.
std::vector<std::string> spot_occupations(std::string_view bio, const OccupationLexicon& lex);

// Noise removal: newlines to spaces, URL tokens to the "[link]" proxy,
// e-mail tokens deleted, 2+ dot runs collapsed to one '.', whitespace
// collapsed, and fragments that are exactly a contact indicator dropped.
std::string preprocess_bio(std::string_view bio);

// Splits preprocessed text on the pause set { , ; . / } and on the
// standalone conjunctions "and" and "&".
std::vector<NGram> tokenize_bio(std::string_view text);

// Keeps exactly the fragments with at least one occupation match.
std::vector<NGram> filter_ngrams(const std::vector<NGram>& ngrams, const OccupationLexicon& lex);

// Every maximal contiguous window of `fragments` whose ", "-join fits in
// max_chars scalar values. Maximal: growing the window one fragment either
// way would exceed the budget or run off the list. Fragments individually
// longer than max_chars never appear. Duplicate texts are emitted once, in
// window start order.
std::vector<std::string> maximal_windows(const std::vector<std::string>& fragments,
                                         int max_chars);

std::vector<Candidate> compose_candidates(const std::vector<NGram>& ngrams, int max_chars,
                                          const std::string& user_id, Method method);

// Steps 2..6 composed: spot, preprocess, tokenize, filter, compose. Empty
// when the bio is empty or no occupation title is present.
std::vector<Candidate> generate_occupation_candidates(const UserProfile& p,
                                                      const OccupationLexicon& lex,
                                                      int max_chars);

}  // namespace taglinegen
