#ifndef RAMSEY_IO_HPP
#define RAMSEY_IO_HPP

#include <string>

#include "json.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/host.hpp"

namespace ramsey {

// {"parts": [t, ...]}
nlohmann::json shape_to_json(const PartiteShape& shape);
PartiteShape shape_from_json(const nlohmann::json& j);

// {"schema": "ramsey-coloring/1", "shape": {...}, "red_edges": [[u,v], ...]}
nlohmann::json coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const GoodnessReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ramsey

#endif
