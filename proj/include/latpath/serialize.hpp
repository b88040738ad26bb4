#pragma once

#include <string>

#include "latpath/count.hpp"

namespace latpath {

// Polygon file: {"vertices": [[x, y], ...]}
std::string polygon_to_json(const std::vector<LatticePoint>& vertices);
std::vector<LatticePoint> polygon_from_json(const std::string& text);
LatticePolygon load_polygon_file(const std::string& path);

// Reports round-trip exactly; multiplicities are serialized as decimal
// strings because they are unbounded integers.
std::string report_to_json(const CountReport& report, int indent = 2);
CountReport report_from_json(const std::string& text);

// Registry file: a JSON array of cases, see README for the fields.
std::vector<RegistryCase> registry_from_json(const std::string& text);
std::string registry_to_json(const std::vector<RegistryCase>& cases, int indent = 2);
std::vector<RegistryCase> load_registry_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace latpath
