#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace evex {

/// Lowercase hex SHA-256 of the input bytes.
std::string sha256_hex(std::string_view data);

/// 64-bit FNV-1a. The local-hash embedder depends on this exact function.
constexpr std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (char c : data) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace evex
