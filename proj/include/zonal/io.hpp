#pragma once

#include <iosfwd>
#include <string>

#include "zonal/coefficients.hpp"
#include "zonal/mpoly.hpp"
#include "zonal/verify.hpp"
#include "zonal/wishart.hpp"

namespace zonal {

inline constexpr const char* kVersion = "0.1.0";

/// {"n": ..., "partitions": [[...]], "coefficients": [["p/q", ...], ...]},
/// rows and columns in descending lex order.
std::string table_to_json(CoeffTable& table, int indent = 2);

/// Plain text matrix in the layout of the printed tables: header row of
/// partitions, one row per kappa.
std::string table_to_text(CoeffTable& table);

/// List of {"exponents": [...], "coefficient": "p/q"} records in the
/// polynomial's deterministic term order.
std::string mpoly_to_json(const MPoly& f, int indent = 2);

/// "48/7*M[3,2] + ..." in descending lex order of the index partitions.
std::string symm_to_text(const SymM& f);
std::string symm_to_json(const SymM& f, int indent = 2);

std::string report_to_json(const VerifyReport& report, int indent = 2);
std::string mc_report_to_json(const McReport& report, int indent = 2);

/// Plain-text PBM (P1) zero-pattern bitmap for weight n: '1' (black) where
/// c_{kappa,lambda} = 0, rows/columns in descending lex order. Carries a
/// comment line with n and the tool version.
void write_zero_bitmap(int n, std::ostream& out);

/// Parses a comma-separated partition, canonicalizing out-of-order input;
/// `reordered` reports whether sorting was needed (the CLI warns then).
Partition parse_partition_arg(const std::string& text, bool* reordered = nullptr);

}  // namespace zonal
