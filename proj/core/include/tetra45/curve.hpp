#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetra45/series.hpp"

namespace tetra45 {

// Weierstrass gap sequence for coprime (n,s): the naturals not representable
// as a*n + b*s with a,b >= 0.  Length (n-1)(s-1)/2.
std::vector<int> gap_sequence(int n, int s);

struct WeightSystem {
  int wt_x, wt_y;
  std::vector<int> wt_u;       // u1..ug (descending gap numbers)
  std::vector<int> wt_lambda;  // l0..l_{s-1}
};

// A lambda value: exact rational or kept symbolic.
struct LambdaValue {
  bool symbolic = true;
  Rat value = 0;
};

struct CurveSpec {
  int n = 4, s = 5;
  std::vector<LambdaValue> lambdas;  // l0..l_{s-1}

  int genus() const { return (n - 1) * (s - 1) / 2; }
  WeightSystem weights() const;
  bool all_symbolic() const;

  static CurveSpec cyclic45_symbolic();
  static CurveSpec cyclic45(const std::vector<Rat>& l0_to_l4);

  // curve-spec file: line "curve <n> <s>" then one line per lambda,
  // "l<j> sym" or "l<j> <rational>"
  static CurveSpec load(const std::string& path);
  void save(const std::string& path) const;
};

// --- fixed algebra on the (4,5) model, all in ctx_xyzw45 ---

// numerators g1..g6 of the holomorphic differentials, as (x,y) polynomials
std::vector<Series> holomorphic_numerators();
// numerators h1..h6 of the meromorphic differentials, (x,y,lambda) polynomials
std::vector<Series> meromorphic_numerators();

// evaluate a stored (x,y)-polynomial at the second point (z,w)
Series at_second_point(const Series& p);

struct KernelF {
  Series F;  // polynomial in x,y,z,w,l0..l4
};

// The stored kernel polynomial with the spec's lambda values substituted
// (symbolic entries stay formal).  Throws for curves other than cyclic (4,5).
KernelF build_kernel_F(const CurveSpec& spec);

// F(x,y,z,w) - F(z,w,x,y) == 0 as a polynomial
bool check_kernel_symmetry(const KernelF& k);

// Reduce y^4 -> x^5 + l4 x^4 + ... + l0 and w^4 -> same in z.
Series reduce_curve(const Series& p);

// The meromorphic kernel Sigma((x,y),(z,w)) = num / (4 y^3 (x - z)).
struct SigmaKernel {
  Series numerator;       // y^3 + y^2 w + y w^2 + w^3
  int y_pole = 3;         // denominator 4 y^3 (x-z)
  Rat den_scale = 4;
};
SigmaKernel sigma_kernel(const CurveSpec& spec);

// Truncation bracket [f(z,w)/w^j]_w used by sigma_kernel: drops negative
// w-powers.  Exposed for the unit tests.
Series bracket_f_over_w(int j);

// Derived oracle: assembles the numerator of the symmetrised 2nd-kind kernel
// from sigma_kernel and the differential numerators; equals F after curve
// reduction.
Series assemble_kernel_numerator(const CurveSpec& spec);

}  // namespace tetra45
