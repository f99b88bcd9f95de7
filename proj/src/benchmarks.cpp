#include "ccda/benchmarks.hpp"

#include "ccda/errors.hpp"
#include "ccda/util.hpp"

namespace ccda {

CandidateLabel parse_candidate_label(const std::string& s) {
    if (s == "stereotype") return CandidateLabel::Stereotype;
    if (s == "anti-stereotype" || s == "anti_stereotype") return CandidateLabel::AntiStereotype;
    if (s == "unrelated") return CandidateLabel::Unrelated;
    throw DataError("unknown candidate label: " + s);
}

std::string label_name(CandidateLabel l) {
    switch (l) {
        case CandidateLabel::Stereotype: return "stereotype";
        case CandidateLabel::AntiStereotype: return "anti-stereotype";
        case CandidateLabel::Unrelated: return "unrelated";
    }
    return "?";
}

size_t count_blanks(const std::string& context) {
    size_t n = 0;
    size_t pos = 0;
    const std::string needle = kBlank;
    while ((pos = context.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

bool StereoSetInstance::intra_sentence() const { return count_blanks(context) == 1; }

std::vector<StereoSetInstance> load_stereoset(const std::filesystem::path& path, bool gender_only) {
    std::vector<StereoSetInstance> out;
    for_each_jsonl(path, [&](size_t, const ojson& rec) {
        std::string id = rec.contains("id") && rec["id"].is_string() ? rec["id"].get<std::string>() : "<no id>";
        std::string where = path.string() + " record " + id;
        if (!rec.contains("id") || !rec.contains("context") || !rec.contains("candidates") || !rec.contains("bias_type")) {
            throw DataError(where + ": missing required field");
        }
        StereoSetInstance inst;
        inst.id = id;
        inst.context = rec["context"].get<std::string>();
        inst.bias_type = rec["bias_type"].get<std::string>();
        const auto& cands = rec["candidates"];
        if (!cands.is_array() || cands.size() != 3) {
            throw DataError(where + ": expected exactly 3 candidates, got " +
                            std::to_string(cands.is_array() ? cands.size() : 0));
        }
        int seen[3] = {0, 0, 0};
        for (const auto& c : cands) {
            CandidateLabel l = parse_candidate_label(c.at("label").get<std::string>());
            std::string text = c.at("text").get<std::string>();
            seen[static_cast<int>(l)]++;
            switch (l) {
                case CandidateLabel::Stereotype: inst.stereotype = text; break;
                case CandidateLabel::AntiStereotype: inst.anti_stereotype = text; break;
                case CandidateLabel::Unrelated: inst.unrelated = text; break;
            }
        }
        if (seen[0] != 1 || seen[1] != 1 || seen[2] != 1) {
            throw DataError(where + ": need exactly one candidate per label");
        }
        size_t blanks = count_blanks(inst.context);
        if (blanks > 1) throw DataError(where + ": more than one BLANK in context");
        if (gender_only && inst.bias_type != "gender") return;
        out.push_back(std::move(inst));
    });
    return out;
}

ojson to_json(const StereoSetInstance& r) {
    ojson cands = ojson::array();
    cands.push_back(ojson{{"text", r.stereotype}, {"label", "stereotype"}});
    cands.push_back(ojson{{"text", r.anti_stereotype}, {"label", "anti-stereotype"}});
    cands.push_back(ojson{{"text", r.unrelated}, {"label", "unrelated"}});
    return ojson{{"id", r.id}, {"context", r.context}, {"candidates", cands}, {"bias_type", r.bias_type}};
}

void save_stereoset(const std::filesystem::path& path, const std::vector<StereoSetInstance>& recs) {
    JsonlWriter w(path);
    for (const auto& r : recs) w.write(to_json(r));
}

std::vector<CrowSPair> load_crows(const std::filesystem::path& path, bool gender_only) {
    std::vector<CrowSPair> out;
    for_each_jsonl(path, [&](size_t, const ojson& rec) {
        std::string id = rec.contains("id") && rec["id"].is_string() ? rec["id"].get<std::string>() : "<no id>";
        std::string where = path.string() + " record " + id;
        if (!rec.contains("id") || !rec.contains("stereo") || !rec.contains("antistereo") || !rec.contains("bias_type")) {
            throw DataError(where + ": missing required field");
        }
        CrowSPair p;
        p.id = id;
        p.stereo_text = rec["stereo"].get<std::string>();
        p.antistereo_text = rec["antistereo"].get<std::string>();
        p.bias_type = rec["bias_type"].get<std::string>();
        if (word_tokens(p.stereo_text) == word_tokens(p.antistereo_text)) {
            throw DataError(where + ": sentence pair must differ in at least one token");
        }
        if (gender_only && p.bias_type != "gender") return;
        out.push_back(std::move(p));
    });
    return out;
}

ojson to_json(const CrowSPair& r) {
    return ojson{{"id", r.id}, {"stereo", r.stereo_text}, {"antistereo", r.antistereo_text}, {"bias_type", r.bias_type}};
}

void save_crows(const std::filesystem::path& path, const std::vector<CrowSPair>& recs) {
    JsonlWriter w(path);
    for (const auto& r : recs) w.write(to_json(r));
}

}  // namespace ccda
