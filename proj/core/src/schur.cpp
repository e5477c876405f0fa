#include "tetra45/schur.hpp"

#include <stdexcept>

#include "tetra45/curve.hpp"

namespace tetra45 {

std::vector<int> sw_partition(int n, int s) {
  auto gaps = gap_sequence(n, s);
  int g = static_cast<int>(gaps.size());
  std::vector<int> mu(g);
  for (int i = 0; i < g; ++i) mu[i] = gaps[g - 1 - i] - (g - 1 - i);
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return mu;
}

std::vector<Series> elementary_schur(int k) {
  const VarContext* ctx = ctx_tspace(k);
  std::vector<Series> h;
  h.push_back(Series::constant(ctx, 1));
  // (m+1) h_{m+1} = sum_{j=0..m} (j+1) t_{j+1} h_{m-j}
  for (int m = 0; m < k; ++m) {
    Series acc(ctx);
    for (int j = 0; j <= m && j < k; ++j) {
      Mono t;
      t.e[j] = 1;
      acc = acc + Rat(j + 1) * (Series::monomial(ctx, t, 1) * h[m - j]);
    }
    h.push_back(Rat(1, m + 1) * acc);
  }
  return h;
}

Series schur_in_t(const std::vector<int>& mu) {
  int ell = static_cast<int>(mu.size());
  int hmax = ell == 0 ? 0 : mu[0] + ell - 1;
  const VarContext* ctx = ctx_tspace(std::max(hmax, 1));
  auto h = elementary_schur(std::max(hmax, 1));
  auto entry = [&](int i, int j) -> Series {
    int idx = mu[i] - (i + 1) + (j + 1);
    if (idx < 0) return Series(ctx);
    if (idx > hmax) throw std::logic_error("jacobi-trudi index overflow");
    return h[idx];
  };
  // cofactor expansion; ell <= 6 so this is cheap
  std::function<Series(std::vector<int>, int)> det = [&](std::vector<int> cols,
                                                         int row) -> Series {
    if (cols.size() == 1) return entry(row, cols[0]);
    Series acc(ctx);
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rest;
      for (size_t j = 0; j < cols.size(); ++j)
        if (j != k) rest.push_back(cols[j]);
      Series minor = det(rest, row + 1);
      Series term = entry(row, cols[k]) * minor;
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<int> cols(ell);
  for (int j = 0; j < ell; ++j) cols[j] = j;
  if (ell == 0) return Series::constant(ctx, 1);
  return det(cols, 0);
}

Series schur_weierstrass(int n, int s) {
  auto gaps = gap_sequence(n, s);
  int g = static_cast<int>(gaps.size());
  if (g > 6) throw std::runtime_error("schur_weierstrass: genus > 6 not implemented");
  Series st = schur_in_t(sw_partition(n, s));
  const VarContext* tctx = st.ctx();
  const VarContext* uctx = ctx_cyclic(n, s);

  // t_{w_i} -> u_i, all other t_j -> 0
  std::vector<int> t_to_u(tctx->nvars, -1);
  for (int i = 0; i < g; ++i) {
    int w = gaps[g - 1 - i];  // weight of u_{i+1}
    if (w - 1 < tctx->nvars) t_to_u[w - 1] = i;
  }
  Series out(uctx);
  for (const auto& [m, c] : st.terms()) {
    Mono um;
    bool dead = false;
    for (int j = 0; j < tctx->nvars; ++j) {
      if (!m.e[j]) continue;
      if (t_to_u[j] < 0) {
        dead = true;
        break;
      }
      um.e[t_to_u[j]] = m.e[j];
    }
    if (!dead) out.add_term(um, c);
  }
  return out;
}

}  // namespace tetra45
