#pragma once

#include "cyclicsign/rational.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace cyclicsign {

enum class MatrixFormat { Csv, Json };

// CSV: one row per line, comma separated entries in any parse_rational form.
// Blank lines and lines starting with '#' are skipped.
MatrixQ parse_matrix_csv(std::string_view text);

// JSON: {"n": N, "rows": [[...], ...]} with entries given as strings or
// numbers. Floating-point JSON numbers are read through their shortest
// round-trip decimal spelling, so 0.1 becomes 1/10.
MatrixQ parse_matrix_json(std::string_view text);

MatrixQ parse_matrix(std::string_view text, MatrixFormat format);
MatrixQ read_matrix_file(const std::filesystem::path& path, MatrixFormat format);

// Canonical writers; entries use to_string(Rational).
std::string to_csv(const MatrixQ& m);
std::string to_json_text(const MatrixQ& m);

MatrixFormat parse_matrix_format(std::string_view name);

}  // namespace cyclicsign
