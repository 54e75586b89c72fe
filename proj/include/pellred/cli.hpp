#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pellred/poly.hpp"

namespace pellred::cli {

enum class TableFormat { Text, JsonLines };

/// Rows n = 1..n_max of (N_n, D_n). Text starts with a "n\tN\tD" header;
/// JSON-lines emits one {"n", "N", "D"} object per row.
void emit_table(const IntPoly& alpha, const IntPoly& z, unsigned long n_max,
                TableFormat format, std::ostream& out);

/// Runs one subcommand. args excludes the program name.
/// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pellred::cli
