#include "ccda/lexicon.hpp"

#include <algorithm>
#include <fstream>

#include "ccda/errors.hpp"
#include "ccda/util.hpp"

namespace ccda {

namespace {

bool valid_entry(const std::string& w) {
    if (w.empty()) return false;
    return std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::islower(c) != 0; });
}

}  // namespace

GenderLexicon GenderLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open lexicon: " + path.string());

    std::vector<Pair> pairs;
    std::unordered_set<std::string> ambiguous;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto cols = split(t, '\t');
        if (cols.size() < 2 || cols.size() > 3 || trim(cols[0]).empty() || trim(cols[1]).empty()) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": malformed line, expected masc<TAB>fem[<TAB>flags]");
        }
        Pair p{trim(cols[0]), trim(cols[1])};
        if (!valid_entry(p.masc) || !valid_entry(p.fem)) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": entries must be lowercase letters: " + p.masc + "/" + p.fem);
        }
        if (cols.size() == 3) {
            for (const auto& w : split(trim(cols[2]), ',')) {
                std::string word = trim(w);
                if (word != p.masc && word != p.fem) {
                    throw DataError(path.string() + ":" + std::to_string(lineno) + ": ambiguity flag '" + word + "' names a word not in the pair");
                }
                ambiguous.insert(word);
            }
        }
        pairs.push_back(std::move(p));
    }
    return from_pairs(std::move(pairs), std::move(ambiguous));
}

GenderLexicon GenderLexicon::from_pairs(std::vector<Pair> pairs, std::unordered_set<std::string> ambiguous) {
    GenderLexicon lex;
    lex.pairs_ = std::move(pairs);
    lex.ambiguous_ = std::move(ambiguous);
    lex.index();
    return lex;
}

void GenderLexicon::index() {
    flip_.clear();
    gender_.clear();
    for (const auto& p : pairs_) {
        if (!valid_entry(p.masc) || !valid_entry(p.fem)) {
            throw DataError("lexicon entries must be lowercase letters: " + p.masc + "/" + p.fem);
        }
        if (gender_.count(p.masc)) throw DataError("duplicate: " + p.masc);
        if (gender_.count(p.fem)) throw DataError("duplicate: " + p.fem);
        if (p.masc == p.fem) throw DataError("duplicate: " + p.masc);
        gender_[p.masc] = Gender::Male;
        gender_[p.fem] = Gender::Female;
        flip_[p.masc] = p.fem;
        flip_[p.fem] = p.masc;
    }
    for (const auto& w : ambiguous_) {
        if (!gender_.count(w)) throw DataError("ambiguous word not present in any pair: " + w);
    }
}

bool GenderLexicon::contains(const std::string& w) const { return gender_.count(w) > 0; }

bool GenderLexicon::is_ambiguous(const std::string& w) const { return ambiguous_.count(w) > 0; }

std::optional<std::string> GenderLexicon::counterpart(const std::string& w) const {
    if (is_ambiguous(w)) return std::nullopt;
    return raw_counterpart(w);
}

std::optional<std::string> GenderLexicon::raw_counterpart(const std::string& w) const {
    auto it = flip_.find(w);
    if (it == flip_.end()) return std::nullopt;
    return it->second;
}

std::optional<Gender> GenderLexicon::gender_of(const std::string& w) const {
    auto it = gender_.find(w);
    if (it == gender_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> GenderLexicon::involutive_words() const {
    std::vector<std::string> out;
    for (const auto& p : pairs_) {
        if (!is_ambiguous(p.masc) && !is_ambiguous(p.fem)) {
            out.push_back(p.masc);
            out.push_back(p.fem);
        }
    }
    return out;
}

GenderLexicon GenderLexicon::swapped() const {
    std::vector<Pair> sw;
    sw.reserve(pairs_.size());
    for (const auto& p : pairs_) sw.push_back({p.fem, p.masc});
    return from_pairs(std::move(sw), ambiguous_);
}

}  // namespace ccda
