#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace evex {

// Whitespace here is always ASCII space/tab/newline/CR/FF/VT.
std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

// trim + ASCII case-fold + collapse internal whitespace runs to one space.
// Used wherever two surface strings are compared for identity (scoring,
// dedup of predicted events).
std::string normalize_match(std::string_view s);

// Offsets throughout the code base count Unicode scalar values, not bytes.
std::size_t utf8_length(std::string_view s);

// Byte offset of the code point at index `cp`; s.size() when past the end.
std::size_t utf8_byte_offset(std::string_view s, std::size_t cp);

// Substring in code-point coordinates, [start, end).
std::string_view utf8_slice(std::string_view s, std::size_t start, std::size_t end);

// First max_cp code points of s.
std::string_view utf8_truncate(std::string_view s, std::size_t max_cp);

}  // namespace evex
