#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nbcss::cli {

// Reproducibility record written next to generated outputs. Two runs
// with the same manifest produce byte-identical output files.
struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<int> field_degree;
    std::optional<std::uint32_t> poly;
    std::optional<std::string> solver;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> outputs;
};

std::string manifest_json(const RunManifest& m);
void write_manifest(const RunManifest& m, const std::string& path);

std::string poly_hex(std::uint32_t poly);

} // namespace nbcss::cli
