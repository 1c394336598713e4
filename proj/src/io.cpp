#include "ramsey/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ramsey {

nlohmann::json shape_to_json(const PartiteShape& shape) {
    return nlohmann::json{{"parts", shape.part_sizes()}};
}

PartiteShape shape_from_json(const nlohmann::json& j) {
    if (!j.contains("parts") || !j["parts"].is_array())
        throw std::runtime_error("shape descriptor needs a \"parts\" array");
    std::vector<int> parts;
    for (const auto& p : j["parts"]) {
        if (!p.is_number_integer()) throw std::runtime_error("part sizes must be integers");
        parts.push_back(p.get<int>());
    }
    return PartiteShape(parts);
}

nlohmann::json coloring_to_json(const Coloring& coloring) {
    nlohmann::json j;
    j["schema"] = "ramsey-coloring/1";
    j["shape"] = shape_to_json(coloring.shape);
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : coloring.red.edges()) edges.push_back({u, v});
    j["red_edges"] = edges;
    return j;
}

Coloring coloring_from_json(const nlohmann::json& j) {
    if (!j.contains("shape")) throw std::runtime_error("coloring file needs a \"shape\"");
    if (!j.contains("red_edges") || !j["red_edges"].is_array())
        throw std::runtime_error("coloring file needs a \"red_edges\" array");
    Coloring coloring{shape_from_json(j["shape"])};
    for (const auto& e : j["red_edges"]) {
        if (!e.is_array() || e.size() != 2) throw std::runtime_error("malformed red edge entry");
        coloring.red.add(e[0].get<int>(), e[1].get<int>());
    }
    return coloring;
}

nlohmann::json report_to_json(const GoodnessReport& report) {
    nlohmann::json j;
    j["nu_red"] = report.nu_red;
    nlohmann::json matching = nlohmann::json::array();
    for (auto [u, v] : report.red_matching.edges) matching.push_back({u, v});
    j["red_matching"] = matching;
    j["stripe_found"] = report.stripe_found;
    if (report.blue_cycle)
        j["blue_cycle"] = report.blue_cycle->vertices;
    else
        j["blue_cycle"] = nullptr;
    j["is_good"] = report.is_good;
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace ramsey
