#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipair/rational.hpp"

namespace bipair {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "bipair.report/1";

using Json = nlohmann::ordered_json;

/// Structured result of one CLI invocation.  The text and LaTeX renderings
/// are pure functions of this data.
struct Report {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<std::string> warnings;
    std::optional<std::uint64_t> seed;
    int exit_code = 0;

    Json to_json() const {
        Json j;
        j["schema"] = kSchema;
        j["command"] = command;
        j["inputs"] = inputs;
        j["outputs"] = outputs;
        j["warnings"] = warnings;
        Json prov;
        prov["version"] = kVersion;
        if (seed) prov["seed"] = *seed;
        j["provenance"] = prov;
        return j;
    }

    static Report from_json(const Json& j) {
        Report r;
        r.command = j.at("command").get<std::string>();
        r.inputs = j.at("inputs");
        r.outputs = j.at("outputs");
        for (const auto& w : j.at("warnings")) r.warnings.push_back(w.get<std::string>());
        if (j.at("provenance").contains("seed")) r.seed = j["provenance"]["seed"].get<std::uint64_t>();
        return r;
    }
};

}  // namespace bipair
