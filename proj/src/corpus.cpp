#include "ccda/corpus.hpp"

#include <cmath>
#include <unordered_set>

#include "ccda/errors.hpp"

namespace ccda {

namespace {

std::string require_string(const ojson& rec, const char* key, const std::string& where) {
    if (!rec.contains(key) || !rec[key].is_string()) {
        throw DataError(where + ": missing or non-string field \"" + key + "\"");
    }
    return rec[key].get<std::string>();
}

std::string record_id(const ojson& rec, const char* key) {
    if (rec.contains(key) && rec[key].is_string()) return rec[key].get<std::string>();
    return "<no id>";
}

}  // namespace

std::vector<CorpusExample> load_corpus(const std::filesystem::path& path) {
    std::vector<CorpusExample> out;
    std::unordered_set<std::string> seen;
    for_each_jsonl(path, [&](size_t, const ojson& rec) {
        std::string where = path.string() + " record " + record_id(rec, "id");
        CorpusExample ex;
        ex.id = require_string(rec, "id", where);
        ex.text = require_string(rec, "text", where);
        ex.source = require_string(rec, "source", where);
        if (ex.text.empty()) throw DataError(where + ": empty text");
        if (!seen.insert(ex.id).second) throw DataError(where + ": duplicate id");
        out.push_back(std::move(ex));
    });
    return out;
}

ojson to_json(const CorpusExample& r) {
    return ojson{{"id", r.id}, {"text", r.text}, {"source", r.source}};
}

void save_corpus(const std::filesystem::path& path, const std::vector<CorpusExample>& recs) {
    JsonlWriter w(path);
    for (const auto& r : recs) w.write(to_json(r));
}

std::vector<Counterfactual> load_counterfactuals(const std::filesystem::path& path) {
    std::vector<Counterfactual> out;
    for_each_jsonl(path, [&](size_t, const ojson& rec) {
        std::string where = path.string() + " record " + record_id(rec, "original_id");
        Counterfactual cf;
        cf.original_id = require_string(rec, "original_id", where);
        cf.text = require_string(rec, "text", where);
        if (!rec.contains("flips") || !rec["flips"].is_array()) {
            throw DataError(where + ": missing \"flips\" array");
        }
        for (const auto& f : rec["flips"]) {
            FlipSpan fs;
            fs.start = f.at("start").get<size_t>();
            fs.end = f.at("end").get<size_t>();
            fs.from = f.at("from").get<std::string>();
            fs.to = f.at("to").get<std::string>();
            if (fs.end > cf.text.size() || fs.start > fs.end) {
                throw DataError(where + ": flip span out of bounds");
            }
            cf.flips.push_back(std::move(fs));
        }
        out.push_back(std::move(cf));
    });
    return out;
}

ojson to_json(const Counterfactual& r) {
    ojson flips = ojson::array();
    for (const auto& f : r.flips) {
        flips.push_back(ojson{{"start", f.start}, {"end", f.end}, {"from", f.from}, {"to", f.to}});
    }
    return ojson{{"original_id", r.original_id}, {"text", r.text}, {"flips", flips}};
}

void save_counterfactuals(const std::filesystem::path& path, const std::vector<Counterfactual>& recs) {
    JsonlWriter w(path);
    for (const auto& r : recs) w.write(to_json(r));
}

AugmentedCounterfactual augmented_from_json(const ojson& rec) {
    std::string where = "record " + record_id(rec, "counterfactual_id");
    AugmentedCounterfactual a;
    a.counterfactual_id = require_string(rec, "counterfactual_id", where);
    a.text = require_string(rec, "text", where);
    if (!rec.contains("samples") || !rec["samples"].is_array() || rec["samples"].empty()) {
        throw DataError(where + ": missing or empty \"samples\" array");
    }
    for (const auto& s : rec["samples"]) {
        GenerationSample gs;
        gs.text = s.at("text").get<std::string>();
        gs.logprob = s.at("logprob").get<double>();
        if (!std::isfinite(gs.logprob)) throw DataError(where + ": non-finite sample logprob");
        a.samples.push_back(std::move(gs));
    }
    a.gender_drift = rec.value("gender_drift", false);
    return a;
}

std::vector<AugmentedCounterfactual> load_augmented(const std::filesystem::path& path) {
    std::vector<AugmentedCounterfactual> out;
    for_each_jsonl(path, [&](size_t, const ojson& rec) { out.push_back(augmented_from_json(rec)); });
    return out;
}

ojson to_json(const AugmentedCounterfactual& r) {
    ojson samples = ojson::array();
    for (const auto& s : r.samples) samples.push_back(ojson{{"text", s.text}, {"logprob", s.logprob}});
    return ojson{{"counterfactual_id", r.counterfactual_id},
                 {"text", r.text},
                 {"samples", samples},
                 {"gender_drift", r.gender_drift}};
}

void save_augmented(const std::filesystem::path& path, const std::vector<AugmentedCounterfactual>& recs) {
    JsonlWriter w(path);
    for (const auto& r : recs) w.write(to_json(r));
}

}  // namespace ccda
