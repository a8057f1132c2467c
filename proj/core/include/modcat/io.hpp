#pragma once

#include <string>

#include "modcat/fusion.hpp"

namespace modcat {

/// Largest rank the dense in-memory fusion tensor is sized for; loaders and
/// constructors reject anything bigger.
inline constexpr int max_supported_rank = 300;

/// Parses a category data file (JSON text, UTF-8) and returns finalized data.
/// The "fusion" array lists only nonzero coefficients; "S" is never read,
/// always recomputed. Throws InvalidData on malformed input.
PremodularData category_from_json_text(const std::string& text);

/// Serializes to the data file format: rationals as canonical "p"/"p/q"
/// strings, fusion as sorted nonzero triples. Byte-deterministic.
std::string category_to_json_text(const PremodularData& data);

PremodularData load_category_file(const std::string& path);
void save_category_file(const PremodularData& data, const std::string& path);

} // namespace modcat
