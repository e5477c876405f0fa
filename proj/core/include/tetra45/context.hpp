#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tetra45 {

// Every series lives in a variable context: an ordered list of named
// variables with Sato weights.  The "graded" prefix of the list is the part
// that truncation bounds refer to (u-, p- or xi-type variables, positive
// weight); the remaining variables (curve constants lambda_j, negative
// weight) are never truncated, their degree is bounded by homogeneity.
inline constexpr int kMaxVars = 18;

struct VarContext {
  std::string id;                          // short tag, goes into file headers
  int nvars = 0;
  int graded = 0;                          // vars [0, graded) carry the truncation grading
  std::array<int, kMaxVars> weight{};      // Sato weight per variable
  std::array<std::string, kMaxVars> name{};
  bool truncatable = true;

  int var_index(const std::string& n) const;
};

// The contexts used by the (4,5) build.  Pointers are stable singletons so
// series can compare contexts by address.
const VarContext* ctx_u45();        // u1..u6, l0..l4
const VarContext* ctx_uv45();       // u1..u6, v1..v6, l0..l4 (two-point)
const VarContext* ctx_powersum45(int m);  // p1..pm, l0..l4   (strata rows)
const VarContext* ctx_xyzw45();     // x,y,z,w, l0..l4 (curve-model algebra)

// Context for a general cyclic (n,s) curve: u1..ug (gap-number weights,
// descending: u1 carries the largest gap) and l0..l_{s-1} with
// wt(l_j) = -n(s-j).  Cached per (n,s).
const VarContext* ctx_cyclic(int n, int s);

// KP time variables t1..tk with wt(t_j) = j (Schur polynomial scratch space).
const VarContext* ctx_tspace(int k);

}  // namespace tetra45
