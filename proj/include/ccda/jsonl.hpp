#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include <json.hpp>

#include "ccda/errors.hpp"

namespace ccda {

// Field order is significant on output: records serialize with keys in
// schema order so that canonical files round-trip byte-identically.
using ojson = nlohmann::ordered_json;

// Calls fn(line_number, parsed) for every non-empty line.
inline void for_each_jsonl(const std::filesystem::path& path,
                           const std::function<void(size_t, const ojson&)>& fn) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path.string());
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ojson rec;
        try {
            rec = ojson::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": invalid JSON: " + e.what());
        }
        fn(lineno, rec);
    }
}

class JsonlWriter {
public:
    explicit JsonlWriter(const std::filesystem::path& path) {
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        out_.open(path);
        if (!out_) throw DataError("cannot write file: " + path.string());
    }

    void write(const ojson& rec) { out_ << rec.dump() << "\n"; }

private:
    std::ofstream out_;
};

}  // namespace ccda
