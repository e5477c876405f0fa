#pragma once

#include <string>

#include "tetra45/series.hpp"

namespace tetra45 {

// Human-readable fixture grammar, one term per line:
//   <rational> [* name[^exp]]*
// e.g. "-1/33264 * u6^11 * u5^2".  '#' starts a comment; blank lines ignored.
// Variable names must exist in the context.
Series load_series_fixture(const std::string& path, const VarContext* ctx);
Series parse_series_fixture(const std::string& text, const VarContext* ctx,
                            const std::string& what);

// Resolves a data file shipped with the library (compile-time default dir).
std::string data_path(const std::string& name);

}  // namespace tetra45
