#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ccda {

enum class Gender { Male, Female };

// Bidirectional masculine<->feminine word-pair map. Entries are stored
// lowercase; casing is applied at flip time. Words in `ambiguous` have a
// role-dependent flip target and are resolved by an AmbiguityResolver
// instead of the pair map.
class GenderLexicon {
public:
    struct Pair {
        std::string masc;
        std::string fem;
    };

    // One pair per line: "masc<TAB>fem", optional third column listing the
    // comma-separated words of the pair whose flip target is role-dependent.
    static GenderLexicon load(const std::filesystem::path& path);
    static GenderLexicon from_pairs(std::vector<Pair> pairs,
                                    std::unordered_set<std::string> ambiguous = {});

    const std::vector<Pair>& pairs() const { return pairs_; }
    const std::unordered_set<std::string>& ambiguous() const { return ambiguous_; }

    bool contains(const std::string& word_lower) const;
    bool is_ambiguous(const std::string& word_lower) const;

    // Pair-map counterpart; empty for ambiguous or unknown words.
    std::optional<std::string> counterpart(const std::string& word_lower) const;

    // Pair-map counterpart ignoring ambiguity annotations. Fallback for
    // non-strict flipping when a resolver has no rule for a word.
    std::optional<std::string> raw_counterpart(const std::string& word_lower) const;

    std::optional<Gender> gender_of(const std::string& word_lower) const;

    // Words whose flip round-trips through the pair map alone: neither the
    // word nor its counterpart is ambiguous. The involution property
    // flip(flip(s)) == s is guaranteed only over this subset.
    std::vector<std::string> involutive_words() const;

    // Lexicon with every pair's sides exchanged (male words become female
    // words and vice versa). Ambiguity annotations carry over.
    GenderLexicon swapped() const;

    size_t size() const { return pairs_.size(); }

private:
    std::vector<Pair> pairs_;
    std::unordered_set<std::string> ambiguous_;
    std::unordered_map<std::string, std::string> flip_;    // both directions
    std::unordered_map<std::string, Gender> gender_;

    void index();
};

}  // namespace ccda
