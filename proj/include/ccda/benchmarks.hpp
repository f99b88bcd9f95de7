#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ccda/jsonl.hpp"

namespace ccda {

enum class CandidateLabel { Stereotype, AntiStereotype, Unrelated };

CandidateLabel parse_candidate_label(const std::string& s);
std::string label_name(CandidateLabel l);

// Intra-sentence instances carry exactly one BLANK in the context; the
// inter-sentence variant has none and candidates are continuation sentences.
struct StereoSetInstance {
    std::string id;
    std::string context;
    std::string stereotype;
    std::string anti_stereotype;
    std::string unrelated;
    std::string bias_type;

    bool intra_sentence() const;
};

struct CrowSPair {
    std::string id;
    std::string stereo_text;
    std::string antistereo_text;
    std::string bias_type;
};

inline constexpr const char* kBlank = "BLANK";

// Number of BLANK placeholders in a context string.
size_t count_blanks(const std::string& context);

std::vector<StereoSetInstance> load_stereoset(const std::filesystem::path& path, bool gender_only = true);
void save_stereoset(const std::filesystem::path& path, const std::vector<StereoSetInstance>& recs);
ojson to_json(const StereoSetInstance& r);

std::vector<CrowSPair> load_crows(const std::filesystem::path& path, bool gender_only = true);
void save_crows(const std::filesystem::path& path, const std::vector<CrowSPair>& recs);
ojson to_json(const CrowSPair& r);

}  // namespace ccda
