#pragma once

// Presentation files (JSON). Output is canonical: fixed key order, two-space
// indent, rationals always "p/q", trailing newline.

#include <string>
#include <string_view>

#include "tzeta/classes.hpp"
#include "tzeta/gamma.hpp"

namespace tzeta {

std::string dump_presentation(const BlockSum& s);
/// Throws SchemaViolation, InvalidCell, NonDisjointCells, GradeMismatch.
BlockSum parse_presentation(std::string_view text);

BlockSum load_presentation(const std::string& path);
void save_presentation(const std::string& path, const BlockSum& s);

std::string dump_gamma_set(const GammaSet& g);
GammaSet parse_gamma_set(std::string_view text);
GammaSet load_gamma_set(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace tzeta
