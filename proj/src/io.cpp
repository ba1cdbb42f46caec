#include "umu/io.hpp"

#include <fstream>
#include <sstream>

namespace umu::io {

namespace {

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

const json& array(const json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
    return j;
}

std::vector<std::vector<Scale>> matrix_from_json(const json& j) {
    std::vector<std::vector<Scale>> rows;
    for (const auto& row : array(j, "dist")) {
        rows.emplace_back();
        for (const auto& v : array(row, "dist row")) rows.back().push_back(scale_from_json(v));
    }
    return rows;
}

json matrix_to_json(const ScaleMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string string_from_json(const json& j, const char* what) {
    if (!j.is_string()) throw FormatError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

}  // namespace

json to_json(const Scale& s) { return s.str(); }

json to_json(const RangeSet& s) {
    json out = json::array();
    for (const auto& e : s.elements()) out.push_back(to_json(e));
    return out;
}

json to_json(const FiniteUltraSpace& space) {
    return json{{"points", space.labels()}, {"dist", matrix_to_json(space.dist())}};
}

json to_json(const f::SupportMap& f) {
    json support = json::array();
    for (const auto& [key, value] : f.support()) support.push_back(json::array({to_json(key), value}));
    return json{{"support", std::move(support)}};
}

json to_json(const maps::CantorFunction& f) {
    json cells = json::array();
    for (const auto& [key, value] : f.cells()) cells.push_back(json::array({key, to_json(value)}));
    return json{{"cells", std::move(cells)}};
}

json to_json(const cpum::CantorPseudoUltrametric& d) {
    return json{{"cells", d.cells()}, {"dist", matrix_to_json(d.dist())}};
}

json to_json(const std::map<std::string, f::SupportMap>& embedding) {
    json out = json::object();
    for (const auto& [label, f] : embedding) out[label] = to_json(f);
    return out;
}

Scale scale_from_json(const json& j) {
    try {
        if (j.is_string()) return Scale::parse(j.get<std::string>());
        if (j.is_number_unsigned()) return Scale(static_cast<std::int64_t>(j.get<std::uint64_t>()));
        if (j.is_number_integer()) return Scale(j.get<std::int64_t>());
    } catch (const ScaleError& e) {
        throw FormatError(e.what());
    }
    throw FormatError("scale must be a \"p/q\" string or a non-negative integer, got " + j.dump());
}

RangeSet range_from_json(const json& j) {
    std::vector<Scale> out;
    for (const auto& e : array(j, "range set")) out.push_back(scale_from_json(e));
    return RangeSet(std::move(out));
}

FiniteUltraSpace space_from_json(const json& j) {
    std::vector<std::string> labels;
    for (const auto& p : array(member(j, "points"), "points")) labels.push_back(string_from_json(p, "point label"));
    const auto rows = matrix_from_json(member(j, "dist"));
    if (rows.size() != labels.size()) throw FormatError("dist has " + std::to_string(rows.size()) + " rows for " +
                                                         std::to_string(labels.size()) + " points");
    return FiniteUltraSpace::from_rows(std::move(labels), rows);
}

f::SupportMap support_map_from_json(const json& j) {
    f::SupportMap::Support support;
    for (const auto& entry : array(member(j, "support"), "support")) {
        if (!entry.is_array() || entry.size() != 2 || !entry[1].is_number_integer() || entry[1].get<std::int64_t>() < 0)
            throw FormatError("support entry must be [scale, non-negative integer], got " + entry.dump());
        const Scale key = scale_from_json(entry[0]);
        if (key.is_zero()) throw FormatError("support key must be positive");
        if (!support.emplace(key, entry[1].get<std::uint64_t>()).second)
            throw FormatError("duplicate support key " + key.str());
    }
    return f::SupportMap(std::move(support));
}

maps::CantorFunction cantor_function_from_json(const json& j) {
    maps::CantorFunction::Cells cells;
    for (const auto& entry : array(member(j, "cells"), "cells")) {
        if (!entry.is_array() || entry.size() != 2) throw FormatError("cell entry must be [prefix, scale]");
        const std::string key = string_from_json(entry[0], "cell prefix");
        if (!cells.emplace(key, scale_from_json(entry[1])).second) throw FormatError("duplicate cell '" + key + "'");
    }
    return maps::CantorFunction(std::move(cells));
}

cpum::CantorPseudoUltrametric cpum_from_json(const json& j) {
    std::vector<std::string> cells;
    for (const auto& c : array(member(j, "cells"), "cells")) cells.push_back(string_from_json(c, "cell prefix"));
    const auto rows = matrix_from_json(member(j, "dist"));
    ScaleMatrix m(rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        if (rows[a].size() != rows.size()) throw FormatError("dist must be square");
        for (std::size_t b = 0; b < rows.size(); ++b) m(a, b) = rows[a][b];
    }
    return cpum::CantorPseudoUltrametric(std::move(cells), m);
}

std::vector<json> anchor_list(const json& j) {
    const json& list = j.is_object() ? member(j, "anchors") : j;
    return array(list, "anchors").get<std::vector<json>>();
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(e.what());
    }
}

json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void write_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << dump(j);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace umu::io
