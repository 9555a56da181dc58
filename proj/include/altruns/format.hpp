#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altruns/bigpoly.hpp"
#include "altruns/sequences.hpp"

namespace altruns {

enum class OutputFormat { Csv, Json, Bfile, Pretty };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Rows in table order, one line (csv), one array element (json), or a
/// 1-based running index over all cells (bfile). JSON values outside the
/// signed 64-bit range are written as decimal strings.
std::string format_table(const TriangularTable& table, OutputFormat format);

/// Coefficients in ascending order; `pretty` renders a signed sum such as
/// "16x + 40x^3 + 24x^5".
std::string format_poly(const IntPolynomial& poly, std::string_view family, unsigned n, char var,
                        OutputFormat format);

/// Parses "i v" lines with i = 1, 2, 3, ... and returns the values in order.
/// Throws DomainError on malformed lines or a broken index sequence.
std::vector<BigInt> parse_bfile(std::string_view text);

}  // namespace altruns
