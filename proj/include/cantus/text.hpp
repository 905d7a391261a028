#ifndef CANTUS_TEXT_HPP_
#define CANTUS_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cantus {

// UTF-8 helpers. Invalid byte sequences decode to U+FFFD rather than
// throwing; corpus data in the wild is not always clean.

std::vector<char32_t> decode_utf8(std::string_view text);
std::string encode_utf8(const std::vector<char32_t>& codepoints);
std::string encode_utf8(char32_t cp);

// Splits into one string per codepoint.
std::vector<std::string> codepoint_strings(std::string_view text);

bool is_han(char32_t cp);
bool is_ascii_space(char32_t cp);

// Punctuation and symbol codepoints stripped by corpus normalization:
// ASCII punctuation, general punctuation, CJK symbols and fullwidth forms
// (except fullwidth letters and digits), and control characters.
bool is_symbol(char32_t cp);

std::vector<std::string> split_whitespace(std::string_view text);
std::string to_lower_ascii(std::string_view text);
std::string trim(std::string_view text);

}  // namespace cantus

#endif  // CANTUS_TEXT_HPP_
