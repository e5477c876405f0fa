#pragma once

#include <vector>

#include "tetra45/series.hpp"

namespace tetra45 {

// Partition attached to the gap sequence w_1 < ... < w_g:
// mu_i = w_{g+1-i} - (g - i).
std::vector<int> sw_partition(int n, int s);

// Complete-homogeneous generators h_0..h_k of exp(sum t_j z^j) as
// polynomials in t1..tk (wt(t_j)=j); h_m is weight-homogeneous of weight m.
std::vector<Series> elementary_schur(int k);

// Schur polynomial s_mu in the t-variables via Jacobi-Trudi.
Series schur_in_t(const std::vector<int>& mu);

// Schur-Weierstrass polynomial SW_{n,s} in u-variables: s_mu with
// t_{w_i} -> u_i (gap weights) and every other t_j -> 0, mapped into the
// curve's u-context.  Genus <= 6 only.
Series schur_weierstrass(int n, int s);

}  // namespace tetra45
