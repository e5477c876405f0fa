#pragma once

#include <cstdint>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tetra45/context.hpp"
#include "tetra45/rational.hpp"

namespace tetra45 {

struct Mono {
  std::array<uint8_t, kMaxVars> e{};

  bool operator==(const Mono& o) const { return e == o.e; }
  uint8_t operator[](int i) const { return e[i]; }

  Mono with(int var, int exp) const {
    Mono m = *this;
    m.e[var] = static_cast<uint8_t>(exp);
    return m;
  }
};

struct MonoHash {
  size_t operator()(const Mono& m) const {
    // three overlapping 64-bit reads over the 18 exponent bytes
    uint64_t a, b, c;
    std::memcpy(&a, m.e.data(), 8);
    std::memcpy(&b, m.e.data() + 8, 8);
    std::memcpy(&c, m.e.data() + 10, 8);
    uint64_t h = a * 0x9e3779b97f4a7c15ULL;
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= c + 0x517cc1b727220a95ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = a.e[i] + b.e[i];
    if (s > 255) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<uint8_t>(s);
  }
  return r;
}

int mono_graded_weight(const VarContext* ctx, const Mono& m);   // graded vars only
int mono_total_weight(const VarContext* ctx, const Mono& m);    // incl. lambda part
int mono_total_degree(const VarContext* ctx, const Mono& m);    // graded vars only
int mono_graded_min_possible();  // helper sentinel

// Canonical term order: ascending graded weight, then descending
// lexicographic on the exponent tuple in fixed variable order.
bool mono_canon_less(const VarContext* ctx, const Mono& a, const Mono& b);

inline constexpr int kValidityExact = std::numeric_limits<int>::max() / 4;

// Sparse multivariate series over exact rationals, graded by Sato weight and
// truncated: terms of graded weight above `validity` are unknown, not zero.
class Series {
 public:
  Series() : ctx_(nullptr), validity_(kValidityExact) {}
  explicit Series(const VarContext* ctx, int validity = kValidityExact)
      : ctx_(ctx), validity_(validity) {}

  const VarContext* ctx() const { return ctx_; }
  int validity() const { return validity_; }
  void set_validity(int v);
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  const std::unordered_map<Mono, Rat, MonoHash>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rat& c);  // accumulates; drops above validity
  Rat coeff(const Mono& m) const;

  int min_graded_weight() const;  // kValidityExact when empty
  int max_graded_weight() const;  // -1 when empty

  // ordered view for serialization / comparison
  std::vector<std::pair<Mono, Rat>> sorted_terms() const;

  bool identical(const Series& o) const;  // same ctx, same terms (validity ignored)

  static Series constant(const VarContext* ctx, const Rat& c);
  static Series monomial(const VarContext* ctx, const Mono& m, const Rat& c,
                         int validity = kValidityExact);

 private:
  const VarContext* ctx_;
  std::unordered_map<Mono, Rat, MonoHash> terms_;
  int validity_;
  friend Series operator*(const Series&, const Series&);
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rat& c, const Series& a);
Series operator-(const Series& a);

// Formal partial derivative; validity drops by wt(var).
Series poly_diff(const Series& p, int var);

// Combined weight if homogeneous; marker otherwise.
struct WeightResult {
  enum Kind { kHomogeneous, kInhomogeneous, kZero } kind;
  int weight = 0;  // valid for kHomogeneous
};
WeightResult poly_weight(const Series& p);

// Substitution: maps source variables to series in a common target context.
// Unassigned variables must exist (same name) in the target context.
// Assigned series carry their own validity; the result validity is the
// tightest sound bound.  Throws on substitutions that cannot stay polynomial.
Series poly_substitute(const Series& p, const VarContext* target,
                       const std::vector<std::pair<int, Series>>& assignment);

// Keep only terms whose graded weight lies in [lo, hi] (validity untouched).
Series graded_slice(const Series& p, int lo, int hi);

// Restrict to terms whose lambda part is exactly the given lambda monomial
// (exponents over the non-graded vars), dividing that monomial out is NOT
// done: terms keep their exponents.
Series lambda_sector(const Series& p, const Mono& lambda_mono);

}  // namespace tetra45
