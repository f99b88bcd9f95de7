#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ccda/corpus.hpp"
#include "ccda/lexicon.hpp"

namespace ccda {

// Decides the flip target of a role-ambiguous word given the lowercase
// following word ("" at end of sentence). Returns nullopt when the word is
// not covered, which is an error in strict mode.
using AmbiguityResolver =
    std::function<std::optional<std::string>(const std::string& word_lower, const std::string& next_word_lower)>;

// Default rule table. A word is resolved by whether the token after it looks
// like a noun: alphabetic and not in a short function-word stoplist.
//   her -> his before a noun, else him
//   his -> her before a noun, else hers
//   him -> her
AmbiguityResolver default_resolver();

enum class FlipMode { OneSided, TwoSided };

FlipMode parse_flip_mode(const std::string& s);

struct FlipOptions {
    AmbiguityResolver resolver = default_resolver();
    // Strict mode turns an unresolvable ambiguous word into an error instead
    // of falling back to the raw pair counterpart.
    bool strict = false;
};

// Replaces every lexicon word (case-insensitive, word-boundary matched) with
// its counterpart, preserving lower/Capitalized/ALLCAPS casing. Returns
// nullopt (the skip-marker) when the sentence has no gendered words.
std::optional<Counterfactual> flip_sentence(const CorpusExample& example, const GenderLexicon& lexicon,
                                            const FlipOptions& opts = {});

// Convenience overload used by property tests: flips a bare string.
std::optional<std::string> flip_text(const std::string& text, const GenderLexicon& lexicon,
                                     const FlipOptions& opts = {});

// OneSided emits only flipped records; TwoSided interleaves each original
// (as a record with no flips) with its flipped counterpart. Sentences
// without gendered words are skipped in both modes.
std::vector<Counterfactual> flip_corpus(const std::vector<CorpusExample>& corpus, const GenderLexicon& lexicon,
                                        FlipMode mode, const FlipOptions& opts = {});

// Serial reference for the OpenMP kernel above; output is identical.
std::vector<Counterfactual> flip_corpus_serial(const std::vector<CorpusExample>& corpus,
                                               const GenderLexicon& lexicon, FlipMode mode,
                                               const FlipOptions& opts = {});

}  // namespace ccda
