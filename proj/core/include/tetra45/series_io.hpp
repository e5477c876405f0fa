#pragma once

#include <iosfwd>
#include <string>

#include "tetra45/series.hpp"

namespace tetra45 {

// Canonical text format, one term per line:
//   tetra45/series v1 ctx=<id> validity=<v|exact> terms=<n>
//   <num[/den]>\t<e1> <e2> ... <en>
// Terms in canonical order.  parse() reports the offending line on error.
std::string serialize(const Series& p);
Series parse_series(const std::string& text);

// Compact versioned binary cache of the same payload.
void write_binary(std::ostream& os, const Series& p);
Series read_binary(std::istream& is);

// Pretty printer for diagnostics: "3/4*u6^2*l4" style.
std::string pretty(const Series& p, size_t max_terms = 0);
std::string pretty_mono(const VarContext* ctx, const Mono& m);

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, int line = -1)
      : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")"
                                     : what),
        line_no(line) {}
  int line_no;
};

}  // namespace tetra45
