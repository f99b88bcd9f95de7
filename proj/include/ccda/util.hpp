#pragma once

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ccda {

inline bool is_word_char(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

inline std::string to_upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

enum class CasePattern { Lower, Capitalized, AllCaps, Mixed };

CasePattern detect_case(std::string_view word);

// Re-applies the casing pattern of `model` onto lowercase `word`.
// Mixed-case models fall back to lowercase output.
std::string apply_case(std::string_view word_lower, CasePattern pattern);

// Splits text into lowercase alphanumeric-run tokens. Punctuation is dropped.
std::vector<std::string> word_tokens(std::string_view text);

// FNV-1a 64-bit. Used for manifests and cache keys; stability matters,
// collision resistance does not.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

std::string trim(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

}  // namespace ccda
