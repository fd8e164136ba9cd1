#include "manifest.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "formats.hpp"

namespace nbcss::cli {

std::string poly_hex(std::uint32_t poly) {
    std::ostringstream os;
    os << "0x" << std::uppercase << std::hex << poly;
    return os.str();
}

std::string manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["command"] = m.command;
    j["inputs"] = m.inputs;
    if (m.field_degree) j["field_degree"] = *m.field_degree;
    if (m.poly) j["poly"] = poly_hex(*m.poly);
    if (m.solver) j["solver"] = *m.solver;
    if (m.seed) j["seed"] = *m.seed;
    j["outputs"] = m.outputs;
    return j.dump(2) + "\n";
}

void write_manifest(const RunManifest& m, const std::string& path) {
    write_text_file(path, manifest_json(m));
}

} // namespace nbcss::cli
