// Run manifests: every CLI invocation records its arguments, tool version,
// the reduction polynomials of the fields it touched, wall time, and a
// content hash (FNV-1a 64) of every output file it wrote.

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace agcodes {

inline constexpr const char* kToolVersion = "1.0.0";

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

struct OutputRecord {
    std::string path;
    std::string digest;  // fnv1a64 of the file contents
    std::uint64_t bytes = 0;
};

struct RunManifest {
    std::string subcommand;
    std::vector<std::string> args;
    std::string version = kToolVersion;
    std::map<unsigned, std::string> fields_used;  // m -> reduction polynomial
    double elapsed_ms = 0;
    std::vector<OutputRecord> outputs;

    void record_output(const std::string& path) {
        std::ifstream is(path, std::ios::binary);
        std::stringstream ss;
        ss << is.rdbuf();
        const std::string data = ss.str();
        outputs.push_back({path, fnv1a64_hex(data), data.size()});
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["subcommand"] = subcommand;
        j["args"] = args;
        j["version"] = version;
        nlohmann::json fj = nlohmann::json::object();
        for (const auto& [m, red] : fields_used) fj[std::to_string(m)] = red;
        j["fields_used"] = fj;
        j["elapsed_ms"] = elapsed_ms;
        j["outputs"] = nlohmann::json::array();
        for (const auto& o : outputs)
            j["outputs"].push_back({{"path", o.path}, {"fnv1a64", o.digest}, {"bytes", o.bytes}});
        return j;
    }

    void write(const std::string& path) const {
        std::ofstream os(path);
        os << to_json().dump(2) << "\n";
    }
};

}  // namespace agcodes
