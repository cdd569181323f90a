#pragma once

#include <string>

#include <json.hpp>

#include "codes.hpp"

namespace ringlcp::config {

using alg::Algebra;
using alg::AlgebraPtr;
using codes::LinearCode;

/// Parses a configuration document into a JSON object. `filename` seeds the
/// diagnostics and, via its extension, selects the format: ".toml" uses the
/// TOML subset below, ".json" uses JSON, anything else is sniffed (a leading
/// '{' means JSON).
///
/// TOML subset: `key = value` pairs, one-level `[section]` headers, `#`
/// comments, and values that are integers, booleans, double-quoted strings,
/// or (arbitrarily nested, multi-line) arrays thereof.
nlohmann::json parse_config_text(const std::string& text,
                                 const std::string& filename);

/// Builds a ring from a spec object:
///   {preset: "ut2(3)"}                                  -- preset reference
///   {field: {p, m?, modulus?}}                          -- the field itself
///   {field: {...}, custom: {dim, structure_constants, unity}}
/// plus an optional `name` (custom/field specs only). `structure_constants`
/// is a dim x dim x dim integer array with entry [i][j][k] the e_k
/// coefficient of e_i * e_j; integers are reduced into the field.
AlgebraPtr ring_from_json(const nlohmann::json& spec,
                          const std::string& context);
AlgebraPtr ring_from_text(const std::string& text, const std::string& filename);

/// Builds a code over `ring` from {ring?, n, generators}. Generator entries
/// are element literals (strings like "2u+1", bare integers, or coordinate
/// arrays [a0,...,a_{d-1}]). A `ring` member, when present, is resolved and
/// must present the same algebra as the one supplied.
LinearCode code_from_json(const AlgebraPtr& ring, const nlohmann::json& spec,
                          const std::string& context);
LinearCode code_from_text(const AlgebraPtr& ring, const std::string& text,
                          const std::string& filename);

/// Resolves a ring reference: a preset literal like "blockpair(2)" when it
/// has that shape, otherwise a path to a config file.
AlgebraPtr resolve_ring(const std::string& ref);

/// Reads a whole file, failing with a diagnostic on I/O errors.
std::string read_file(const std::string& path);

/// True when the two handles present the same ring: equal fields, dimensions,
/// structure constants, and unity.
bool same_presentation(const Algebra& a, const Algebra& b);

}  // namespace ringlcp::config
