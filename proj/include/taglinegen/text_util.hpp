#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace taglinegen {

// Character counts throughout the library are Unicode scalar values of
// well-formed UTF-8, never bytes.
std::size_t utf8_length(std::string_view text);

// Longest prefix of `text` with at most `max_chars` scalar values.
std::string utf8_truncate(std::string_view text, std::size_t max_chars);

char to_lower_ascii(char c);
std::string lower_ascii(std::string_view text);

bool is_space_char(char c);

// Word characters: ASCII alphanumerics plus any non-ASCII byte. Hyphens and
// apostrophes are boundaries.
bool is_word_char(char c);

std::string_view trim(std::string_view text);

// Runs of whitespace become a single space; edges are trimmed.
std::string collapse_whitespace(std::string_view text);

std::vector<std::string_view> split_whitespace(std::string_view text);

}  // namespace taglinegen
