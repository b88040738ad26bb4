#include "latpath/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace latpath {

namespace {

using nlohmann::json;

json points_to_json(const std::vector<LatticePoint>& points) {
    json arr = json::array();
    for (LatticePoint p : points) arr.push_back(json::array({p.x, p.y}));
    return arr;
}

std::vector<LatticePoint> points_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw Error(std::string(what) + ": expected an array of [x,y] pairs");
    std::vector<LatticePoint> points;
    for (const json& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw Error(std::string(what) + ": expected an array of [x,y] pairs");
        }
        points.push_back({item[0].get<std::int64_t>(), item[1].get<std::int64_t>()});
    }
    return points;
}

json integer_to_json(const Integer& value) {
    return value.str();
}

Integer integer_from_json(const json& value, const char* what) {
    try {
        if (value.is_number_integer()) return Integer(value.get<std::int64_t>());
        if (value.is_string()) return Integer(value.get<std::string>());
    } catch (const std::exception&) {
    }
    throw Error(std::string(what) + ": expected an integer or a decimal string");
}

json contribution_to_json(const PathContribution& c, CountKind kind) {
    json j;
    j["points"] = points_to_json(c.path.points);
    j["mu_plus"] = integer_to_json(c.mu.mu_plus);
    j["mu_minus"] = integer_to_json(c.mu.mu_minus);
    j["mu"] = integer_to_json(c.mu.mu);
    if (kind == CountKind::real_curves) {
        j["mu_r_plus"] = integer_to_json(c.real.mu_r_plus);
        j["mu_r_minus"] = integer_to_json(c.real.mu_r_minus);
        j["mu_r"] = integer_to_json(c.real.mu_r);
    }
    if (kind == CountKind::welschinger) {
        j["nu_plus"] = integer_to_json(c.real.nu_plus);
        j["nu_minus"] = integer_to_json(c.real.nu_minus);
        j["nu"] = integer_to_json(c.real.nu);
    }
    j["contribution"] = integer_to_json(c.contribution);
    return j;
}

PathContribution contribution_from_json(const json& j, CountKind kind) {
    PathContribution c;
    c.path.points = points_from_json(j.at("points"), "path");
    c.mu.mu_plus = integer_from_json(j.at("mu_plus"), "mu_plus");
    c.mu.mu_minus = integer_from_json(j.at("mu_minus"), "mu_minus");
    c.mu.mu = integer_from_json(j.at("mu"), "mu");
    if (kind == CountKind::real_curves) {
        c.real.mu_r_plus = integer_from_json(j.at("mu_r_plus"), "mu_r_plus");
        c.real.mu_r_minus = integer_from_json(j.at("mu_r_minus"), "mu_r_minus");
        c.real.mu_r = integer_from_json(j.at("mu_r"), "mu_r");
    }
    if (kind == CountKind::welschinger) {
        c.real.nu_plus = integer_from_json(j.at("nu_plus"), "nu_plus");
        c.real.nu_minus = integer_from_json(j.at("nu_minus"), "nu_minus");
        c.real.nu = integer_from_json(j.at("nu"), "nu");
    }
    c.contribution = integer_from_json(j.at("contribution"), "contribution");
    return c;
}

json parse_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(std::string(what) + ": invalid JSON");
    return j;
}

} // namespace

std::string polygon_to_json(const std::vector<LatticePoint>& vertices) {
    json j;
    j["vertices"] = points_to_json(vertices);
    return j.dump(2) + "\n";
}

std::vector<LatticePoint> polygon_from_json(const std::string& text) {
    json j = parse_text(text, "polygon");
    if (!j.is_object() || !j.contains("vertices")) {
        throw Error("polygon: expected an object with a \"vertices\" array");
    }
    return points_from_json(j["vertices"], "polygon vertices");
}

LatticePolygon load_polygon_file(const std::string& path) {
    return make_polygon(polygon_from_json(read_text_file(path)));
}

std::string report_to_json(const CountReport& report, int indent) {
    json j;
    j["kind"] = to_string(report.kind);
    j["polygon"] = points_to_json(report.polygon);
    j["lambda"] = report.lambda;
    j["m"] = report.m;
    j["l"] = report.l;
    j["delta"] = report.delta;
    j["n"] = report.n;
    if (report.signs) j["signs"] = *report.signs;
    j["total"] = integer_to_json(report.total);
    j["enumerated"] = report.enumerated;
    j["nonzero"] = report.nonzero;
    j["elapsed_ms"] = report.elapsed_ms;
    json paths = json::array();
    for (const PathContribution& c : report.per_path) {
        paths.push_back(contribution_to_json(c, report.kind));
    }
    j["per_path"] = std::move(paths);
    return j.dump(indent) + "\n";
}

CountReport report_from_json(const std::string& text) {
    json j = parse_text(text, "report");
    CountReport report;
    report.kind = parse_count_kind(j.at("kind").get<std::string>());
    report.polygon = points_from_json(j.at("polygon"), "report polygon");
    report.lambda = j.at("lambda").get<std::string>();
    report.m = j.at("m").get<std::size_t>();
    report.l = j.at("l").get<std::size_t>();
    report.delta = j.at("delta").get<std::size_t>();
    report.n = j.at("n").get<std::size_t>();
    if (j.contains("signs")) report.signs = j["signs"].get<std::string>();
    report.total = integer_from_json(j.at("total"), "total");
    report.enumerated = j.at("enumerated").get<std::uint64_t>();
    report.nonzero = j.at("nonzero").get<std::uint64_t>();
    report.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    for (const json& item : j.at("per_path")) {
        report.per_path.push_back(contribution_from_json(item, report.kind));
    }
    return report;
}

std::vector<RegistryCase> registry_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw RegistryParseError(std::string("registry: ") + e.what());
    }
    if (!j.is_array()) throw RegistryParseError("registry: expected a JSON array of cases");
    std::vector<RegistryCase> cases;
    for (const json& item : j) {
        try {
            RegistryCase entry;
            entry.polygon = points_from_json(item.at("polygon"), "registry polygon");
            entry.delta = item.at("delta").get<std::size_t>();
            entry.lambda = item.at("lambda").get<std::string>();
            entry.kind = parse_count_kind(item.at("kind").get<std::string>());
            if (item.contains("signs")) entry.signs = item["signs"].get<std::string>();
            entry.expected = integer_from_json(item.at("expected"), "registry expected");
            if (item.contains("provenance")) {
                entry.provenance = item["provenance"].get<std::string>();
            }
            cases.push_back(std::move(entry));
        } catch (const RegistryParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw RegistryParseError(std::string("registry case: ") + e.what());
        }
    }
    return cases;
}

std::string registry_to_json(const std::vector<RegistryCase>& cases, int indent) {
    json arr = json::array();
    for (const RegistryCase& entry : cases) {
        json j;
        j["polygon"] = points_to_json(entry.polygon);
        j["delta"] = entry.delta;
        j["lambda"] = entry.lambda;
        j["kind"] = to_string(entry.kind);
        if (entry.signs) j["signs"] = *entry.signs;
        // expected values in shipped registries are small; keep them numeric
        j["expected"] = std::stoll(entry.expected.str());
        j["provenance"] = entry.provenance;
        arr.push_back(std::move(j));
    }
    return arr.dump(indent) + "\n";
}

std::vector<RegistryCase> load_registry_file(const std::string& path) {
    return registry_from_json(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("failed writing '" + path + "'");
}

} // namespace latpath
