#include "ccda/flip.hpp"

#include "ccda/errors.hpp"
#include "ccda/threading.hpp"
#include "ccda/util.hpp"

namespace ccda {

namespace {

// Words that commonly follow an object pronoun; seeing one of these after
// "her"/"his" means the pronoun is probably not a determiner.
const std::unordered_set<std::string>& function_word_stoplist() {
    static const std::unordered_set<std::string> words = {
        "a",     "an",      "the",    "and",   "or",    "but",    "to",    "of",    "in",     "on",
        "at",    "by",      "for",    "with",  "about", "after",  "before", "because", "when", "while",
        "if",    "that",    "than",   "then",  "there", "here",   "again", "too",   "also",   "not",
        "now",   "very",    "so",     "as",    "from",  "into",   "over",  "under", "up",     "down",
        "out",   "off",     "away",   "back",  "is",    "was",    "were",  "be",    "been",   "being",
        "will",  "would",   "can",    "could", "may",   "might",  "must",  "shall", "should", "do",
        "does",  "did",     "has",    "have",  "had",   "said",   "says",  "today", "tomorrow",
        "yesterday"};
    return words;
}

bool looks_like_noun(const std::string& next_word_lower) {
    if (next_word_lower.empty()) return false;
    return function_word_stoplist().count(next_word_lower) == 0;
}

struct Token {
    size_t start;
    size_t end;
    std::string lower;
};

std::vector<Token> letter_runs(const std::string& text) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < text.size()) {
        if (is_word_char(text[i])) {
            size_t j = i;
            while (j < text.size() && is_word_char(text[j])) ++j;
            tokens.push_back({i, j, to_lower(std::string_view(text).substr(i, j - i))});
            i = j;
        } else {
            ++i;
        }
    }
    return tokens;
}

}  // namespace

AmbiguityResolver default_resolver() {
    // word -> {target before a noun, target otherwise}
    static const std::unordered_map<std::string, std::pair<std::string, std::string>> rules = {
        {"her", {"his", "him"}},
        {"his", {"her", "hers"}},
        {"him", {"her", "her"}},
    };
    return [](const std::string& word, const std::string& next_word) -> std::optional<std::string> {
        auto it = rules.find(word);
        if (it == rules.end()) return std::nullopt;
        return looks_like_noun(next_word) ? it->second.first : it->second.second;
    };
}

FlipMode parse_flip_mode(const std::string& s) {
    if (s == "one_sided") return FlipMode::OneSided;
    if (s == "two_sided") return FlipMode::TwoSided;
    throw ConfigError("unknown flip mode: " + s + " (expected one_sided or two_sided)");
}

std::optional<Counterfactual> flip_sentence(const CorpusExample& example, const GenderLexicon& lexicon,
                                            const FlipOptions& opts) {
    const std::string& text = example.text;
    auto tokens = letter_runs(text);

    Counterfactual cf;
    cf.original_id = example.id;
    cf.text.reserve(text.size());

    size_t copied = 0;  // bytes of input consumed so far
    bool any_flip = false;
    for (size_t t = 0; t < tokens.size(); ++t) {
        const Token& tok = tokens[t];
        if (!lexicon.contains(tok.lower)) continue;

        std::string target_lower;
        if (lexicon.is_ambiguous(tok.lower)) {
            std::string next = (t + 1 < tokens.size()) ? tokens[t + 1].lower : std::string();
            auto resolved = opts.resolver ? opts.resolver(tok.lower, next) : std::nullopt;
            if (resolved) {
                target_lower = *resolved;
            } else if (opts.strict) {
                throw DataError("unresolvable ambiguous token \"" + tok.lower + "\" in record " + example.id);
            } else {
                auto cp = lexicon.raw_counterpart(tok.lower);
                target_lower = cp ? *cp : tok.lower;
            }
        } else {
            target_lower = *lexicon.counterpart(tok.lower);
        }

        std::string_view surface(text.data() + tok.start, tok.end - tok.start);
        std::string replacement = apply_case(target_lower, detect_case(surface));

        cf.text.append(text, copied, tok.start - copied);
        FlipSpan span;
        span.start = cf.text.size();
        cf.text.append(replacement);
        span.end = cf.text.size();
        span.from = std::string(surface);
        span.to = replacement;
        cf.flips.push_back(std::move(span));
        copied = tok.end;
        any_flip = true;
    }
    if (!any_flip) return std::nullopt;
    cf.text.append(text, copied, text.size() - copied);
    return cf;
}

std::optional<std::string> flip_text(const std::string& text, const GenderLexicon& lexicon,
                                     const FlipOptions& opts) {
    CorpusExample ex{"_", text, "_"};
    auto cf = flip_sentence(ex, lexicon, opts);
    if (!cf) return std::nullopt;
    return cf->text;
}

namespace {

std::vector<Counterfactual> assemble(const std::vector<CorpusExample>& corpus,
                                     std::vector<std::optional<Counterfactual>>& flipped, FlipMode mode) {
    std::vector<Counterfactual> out;
    for (size_t i = 0; i < corpus.size(); ++i) {
        if (!flipped[i]) continue;  // no gendered words: skipped in both modes
        if (mode == FlipMode::TwoSided) {
            out.push_back(Counterfactual{corpus[i].id, corpus[i].text, {}});
        }
        out.push_back(std::move(*flipped[i]));
    }
    return out;
}

}  // namespace

std::vector<Counterfactual> flip_corpus_serial(const std::vector<CorpusExample>& corpus,
                                               const GenderLexicon& lexicon, FlipMode mode,
                                               const FlipOptions& opts) {
    std::vector<std::optional<Counterfactual>> flipped(corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i) flipped[i] = flip_sentence(corpus[i], lexicon, opts);
    return assemble(corpus, flipped, mode);
}

std::vector<Counterfactual> flip_corpus(const std::vector<CorpusExample>& corpus, const GenderLexicon& lexicon,
                                        FlipMode mode, const FlipOptions& opts) {
    std::vector<std::optional<Counterfactual>> flipped(corpus.size());
    std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(effective_threads())
#endif
    for (long long i = 0; i < static_cast<long long>(corpus.size()); ++i) {
        try {
            flipped[static_cast<size_t>(i)] = flip_sentence(corpus[static_cast<size_t>(i)], lexicon, opts);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return assemble(corpus, flipped, mode);
}

}  // namespace ccda
