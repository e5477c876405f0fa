#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "tetra45/rational.hpp"
#include "tetra45/series.hpp"

namespace tetra45 {

// One linear constraint: sum coeff_i * unknown_i = rhs, with a provenance tag
// naming the residual monomial that produced the row.
struct LinRow {
  std::vector<std::pair<int, Rat>> lhs;  // (unknown index, coefficient), sorted
  Rat rhs = 0;
  std::string provenance;
};

struct SparseLinearSystem {
  std::vector<std::string> unknowns;
  std::vector<LinRow> rows;

  // canonical row order (sorted by provenance tag) so assembly is
  // reproducible regardless of worker count
  void canonicalize();
};

struct UniqueSolution {
  std::vector<Rat> values;  // one per unknown
};
struct ParametricSolution {
  std::vector<int> free_unknowns;
};
struct Inconsistency {
  std::string witness_provenance;  // provenance of a row reduced to 0 = nonzero
};

struct SolveVerdict {
  std::variant<UniqueSolution, ParametricSolution, Inconsistency> v;
  bool unique() const { return std::holds_alternative<UniqueSolution>(v); }
  bool parametric() const { return std::holds_alternative<ParametricSolution>(v); }
  bool inconsistent() const { return std::holds_alternative<Inconsistency>(v); }
  const UniqueSolution& unique_solution() const { return std::get<UniqueSolution>(v); }
  const ParametricSolution& parametric_solution() const {
    return std::get<ParametricSolution>(v);
  }
  const Inconsistency& inconsistency() const { return std::get<Inconsistency>(v); }
};

// Exact sparse Gaussian elimination, deterministic Markowitz-style pivoting:
// pick the live row of smallest support (lowest index on ties), then within
// it the column of smallest live support (lowest index on ties).
SolveVerdict solve(const SparseLinearSystem& sys);

// As `solve`, but also report which unknowns received forced values even in
// the parametric case (useful diagnostics for expansion failures).
SolveVerdict solve_with_partial(const SparseLinearSystem& sys,
                                std::vector<std::pair<int, Rat>>* pinned);

// A series whose coefficients are affine forms in named unknowns.  This is
// the assembly front-end: building one of these and calling `assemble` yields
// one row per monomial.
class LinearSeries {
 public:
  struct Affine {
    Rat constant = 0;
    std::vector<std::pair<int, Rat>> coeffs;  // sorted by unknown id
    bool zero() const { return constant == 0 && coeffs.empty(); }
  };

  explicit LinearSeries(const VarContext* ctx, int validity = kValidityExact)
      : ctx_(ctx), validity_(validity) {}

  const VarContext* ctx() const { return ctx_; }
  int validity() const { return validity_; }

  void add_constant_series(const Series& s);
  // adds unknown * s
  void add_unknown_series(int unknown, const Series& s);
  const std::unordered_map<Mono, Affine, MonoHash>& terms() const { return terms_; }

 private:
  const VarContext* ctx_;
  int validity_;
  std::unordered_map<Mono, Affine, MonoHash> terms_;
};

// One row per monomial of the residual; rows with no unknowns and zero
// constant are dropped; provenance = pretty monomial.
SparseLinearSystem assemble(const LinearSeries& residual,
                            const std::vector<std::string>& unknowns);

// Partitioned assembly: workers each assemble a slice of the monomial set;
// the merged system is canonicalized, so the output is byte-identical to the
// sequential result for any worker count.
SparseLinearSystem parallel_assemble(const LinearSeries& residual,
                                     const std::vector<std::string>& unknowns,
                                     int workers);

}  // namespace tetra45
