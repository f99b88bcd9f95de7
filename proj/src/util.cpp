#include "ccda/util.hpp"

#include <fstream>
#include <sstream>

#include "ccda/errors.hpp"

namespace ccda {

CasePattern detect_case(std::string_view word) {
    if (word.empty()) return CasePattern::Lower;
    bool first_upper = std::isupper(static_cast<unsigned char>(word[0])) != 0;
    bool rest_lower = true;
    bool all_upper = first_upper;
    for (size_t i = 1; i < word.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(word[i]);
        if (std::isupper(c) == 0) all_upper = false;
        if (std::islower(c) == 0) rest_lower = false;
    }
    if (!first_upper && rest_lower) return CasePattern::Lower;
    if (first_upper && word.size() == 1) return CasePattern::Capitalized;
    if (all_upper && word.size() > 1) return CasePattern::AllCaps;
    if (first_upper && rest_lower) return CasePattern::Capitalized;
    return CasePattern::Mixed;
}

std::string apply_case(std::string_view word_lower, CasePattern pattern) {
    std::string out(word_lower);
    switch (pattern) {
        case CasePattern::Lower:
        case CasePattern::Mixed:
            break;
        case CasePattern::Capitalized:
            if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
            break;
        case CasePattern::AllCaps:
            out = to_upper(out);
            break;
    }
    return out;
}

std::vector<std::string> word_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isalnum(c)) {
            size_t j = i;
            while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
            tokens.push_back(to_lower(text.substr(i, j - i)));
            i = j;
        } else {
            ++i;
        }
    }
    return tokens;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    out << content;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

}  // namespace ccda
