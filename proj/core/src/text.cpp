#include "evex/text.hpp"

#include <cctype>

namespace evex {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_continuation_byte(char c) {
    return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

}  // namespace

std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string normalize_match(std::string_view s) {
    std::string_view t = trim(s);
    std::string out;
    out.reserve(t.size());
    bool pending_space = false;
    for (char c : t) {
        if (is_space(c)) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

std::size_t utf8_length(std::string_view s) {
    std::size_t n = 0;
    for (char c : s) {
        if (!is_continuation_byte(c)) ++n;
    }
    return n;
}

std::size_t utf8_byte_offset(std::string_view s, std::size_t cp) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!is_continuation_byte(s[i])) {
            if (seen == cp) return i;
            ++seen;
        }
    }
    return s.size();
}

std::string_view utf8_slice(std::string_view s, std::size_t start, std::size_t end) {
    if (end < start) end = start;
    std::size_t b = utf8_byte_offset(s, start);
    std::size_t e = utf8_byte_offset(s, end);
    return s.substr(b, e - b);
}

std::string_view utf8_truncate(std::string_view s, std::size_t max_cp) {
    return s.substr(0, utf8_byte_offset(s, max_cp));
}

}  // namespace evex
