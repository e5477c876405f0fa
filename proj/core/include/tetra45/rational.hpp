#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace tetra45 {

// Exact rational coefficient. mpq_class keeps gcd(|num|,den)=1, den>0 and
// zero as 0/1 after every operation, which is exactly the invariant we need.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

std::string rat_to_string(const Rat& q);

// Parses "num", "-num/den" etc.  Empty optional on malformed input.
std::optional<Rat> rat_from_string(const std::string& s);

}  // namespace tetra45
