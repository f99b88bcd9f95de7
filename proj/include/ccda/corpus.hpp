#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ccda/jsonl.hpp"

namespace ccda {

struct CorpusExample {
    std::string id;
    std::string text;
    std::string source;
};

// One word replacement inside Counterfactual::text. start/end are byte
// offsets of `to` in the flipped text; `from` is the original surface form.
struct FlipSpan {
    size_t start = 0;
    size_t end = 0;
    std::string from;
    std::string to;
};

struct Counterfactual {
    std::string original_id;
    std::string text;
    std::vector<FlipSpan> flips;
};

struct GenerationSample {
    std::string text;
    double logprob = 0.0;  // length-normalized; rescored by the entropy stage
};

struct AugmentedCounterfactual {
    std::string counterfactual_id;
    std::string text;
    std::vector<GenerationSample> samples;
    bool gender_drift = false;
};

std::vector<CorpusExample> load_corpus(const std::filesystem::path& path);
void save_corpus(const std::filesystem::path& path, const std::vector<CorpusExample>& recs);
ojson to_json(const CorpusExample& r);

std::vector<Counterfactual> load_counterfactuals(const std::filesystem::path& path);
void save_counterfactuals(const std::filesystem::path& path, const std::vector<Counterfactual>& recs);
ojson to_json(const Counterfactual& r);

std::vector<AugmentedCounterfactual> load_augmented(const std::filesystem::path& path);
void save_augmented(const std::filesystem::path& path, const std::vector<AugmentedCounterfactual>& recs);
ojson to_json(const AugmentedCounterfactual& r);
AugmentedCounterfactual augmented_from_json(const ojson& rec);

}  // namespace ccda
