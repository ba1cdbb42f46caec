#pragma once

#include "umu/model_cpum.hpp"
#include "umu/model_f.hpp"
#include "umu/model_gh.hpp"
#include "umu/model_maps.hpp"
#include "umu/scales.hpp"
#include "umu/umspace.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace umu::io {

using json = nlohmann::json;

/// Malformed file content (shape or value errors).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json to_json(const Scale& s);
json to_json(const RangeSet& s);
json to_json(const FiniteUltraSpace& space);
json to_json(const f::SupportMap& f);
json to_json(const maps::CantorFunction& f);
json to_json(const cpum::CantorPseudoUltrametric& d);
json to_json(const std::map<std::string, f::SupportMap>& embedding);

Scale scale_from_json(const json& j);
RangeSet range_from_json(const json& j);
FiniteUltraSpace space_from_json(const json& j);
f::SupportMap support_map_from_json(const json& j);
maps::CantorFunction cantor_function_from_json(const json& j);
cpum::CantorPseudoUltrametric cpum_from_json(const json& j);

/// Either a bare array of model objects or {"anchors": [...]}.
std::vector<json> anchor_list(const json& j);

json parse(const std::string& text);
json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);
/// Two-space indent plus trailing newline.
std::string dump(const json& j);

}  // namespace umu::io
