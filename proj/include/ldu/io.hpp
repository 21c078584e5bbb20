#pragma once

#include <string>
#include <variant>

#include "ldu/factorize.hpp"
#include "ldu/matrix.hpp"
#include "ldu/wperm.hpp"

namespace ldu {

// A parsed matrix is either over R or over F; commands that need R use
// require_ring to view it.
using MatrixValue = std::variant<IntMatrix, RatMatrix>;

// Reads JSON ({"rows", "cols", "entries"} with decimal or "p/q" strings) or
// CSV of decimal entries (R only). The format is detected from the content.
MatrixValue parse_matrix_file(const std::string& path);
MatrixValue parse_matrix_text(const std::string& text);

// R view of a parsed matrix; throws MixedKind on fractional entries.
IntMatrix require_ring(const MatrixValue& m);

std::string matrix_to_json(const IntMatrix& m);
std::string matrix_to_json(const RatMatrix& m);

// Factorization bundle round trip.
std::string bundle_to_json(const LduFactorization& f);
LduFactorization bundle_from_json(const std::string& text);
LduFactorization bundle_from_file(const std::string& path);

void write_file(const std::string& path, const std::string& content);

// Aligned human-readable rendering with "p/q" entries.
std::string format_matrix(const IntMatrix& m);
std::string format_matrix(const RatMatrix& m);

}  // namespace ldu
