#pragma once

/// JSON file formats. Matrices are arrays of rows of canonical scalar
/// strings; every loader validates shapes and rethrows JSON type errors as
/// FormatError.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "bhopf/braided_family.hpp"
#include "bhopf/diagram.hpp"
#include "bhopf/hopf.hpp"
#include "bhopf/tensor_product.hpp"

namespace bhopf::io {

using nlohmann::json;

json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const json& j);
/// The "field" member of a family or environment document; Q when absent.
FieldSpec optional_field(const json& j);

json matrix_to_json(const Morphism& m);
/// Requires exactly cod rows of dom entries each.
Morphism matrix_from_json(const json& j, const FieldSpec& field, std::size_t dom, std::size_t cod);

/// { "field", "dim", "basis", "mu", "eta", "delta", "eps", "braid", "antipode"? }
json bundle_to_json(const HopfBundle& b);
HopfBundle bundle_from_json(const json& j);

/// { "c_LH": matrix }; the inverse is recomputed on load.
json cross_braid_to_json(const CrossBraid& x);
CrossBraid cross_braid_from_json(const json& j, const HopfBundle& h, const HopfBundle& l);

/// { "field"?, "objects": [{"id","dim"}], "braids": [{"i","j","matrix"}],
///   "maps": [{"name","source","target","matrix"}] }
json family_to_json(const BraidedFamily& f);
BraidedFamily family_from_json(const json& j);

/// { "field"?, "objects": [{"id","dim"}], "generators": [{"name","dom","cod","matrix"}] }
json environment_to_json(const diagram::Environment& env);
diagram::Environment environment_from_json(const json& j);

/// Throws FormatError if the file cannot be read or parsed.
json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
/// Two-space indentation, trailing newline.
void write_json_file(const std::filesystem::path& path, const json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace bhopf::io
