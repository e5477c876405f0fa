#include "tetra45/linear_system.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "tetra45/series_io.hpp"

namespace tetra45 {

void SparseLinearSystem::canonicalize() {
  std::stable_sort(rows.begin(), rows.end(), [](const LinRow& a, const LinRow& b) {
    return a.provenance < b.provenance;
  });
}

namespace {

void merge_into(std::vector<std::pair<int, Rat>>& dst, int id, const Rat& c) {
  auto it = std::lower_bound(dst.begin(), dst.end(), id,
                             [](const auto& p, int v) { return p.first < v; });
  if (it != dst.end() && it->first == id) {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  } else {
    dst.insert(it, {id, c});
  }
}

}  // namespace

void LinearSeries::add_constant_series(const Series& s) {
  validity_ = std::min(validity_, s.validity());
  for (const auto& [m, c] : s.terms()) {
    auto& a = terms_[m];
    a.constant += c;
    if (a.zero()) terms_.erase(m);
  }
}

void LinearSeries::add_unknown_series(int unknown, const Series& s) {
  validity_ = std::min(validity_, s.validity());
  for (const auto& [m, c] : s.terms()) {
    auto& a = terms_[m];
    merge_into(a.coeffs, unknown, c);
    if (a.zero()) terms_.erase(m);
  }
}

SparseLinearSystem assemble(const LinearSeries& residual,
                            const std::vector<std::string>& unknowns) {
  return parallel_assemble(residual, unknowns, 1);
}

SparseLinearSystem parallel_assemble(const LinearSeries& residual,
                                     const std::vector<std::string>& unknowns,
                                     int workers) {
  if (workers < 1) workers = 1;
  std::vector<const std::pair<const Mono, LinearSeries::Affine>*> items;
  items.reserve(residual.terms().size());
  for (const auto& t : residual.terms()) items.push_back(&t);

  std::vector<std::vector<LinRow>> parts(workers);
  auto work = [&](int w) {
    for (size_t i = w; i < items.size(); i += workers) {
      const auto& [m, a] = *items[i];
      if (a.zero()) continue;
      LinRow row;
      row.lhs = a.coeffs;
      row.rhs = -a.constant;
      row.provenance = pretty_mono(residual.ctx(), m);
      parts[w].push_back(std::move(row));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  SparseLinearSystem sys;
  sys.unknowns = unknowns;
  for (auto& p : parts)
    for (auto& r : p) sys.rows.push_back(std::move(r));
  sys.canonicalize();
  return sys;
}

SolveVerdict solve(const SparseLinearSystem& sys) {
  return solve_with_partial(sys, nullptr);
}

SolveVerdict solve_with_partial(const SparseLinearSystem& sys,
                                std::vector<std::pair<int, Rat>>* pinned) {
  const int n = static_cast<int>(sys.unknowns.size());
  struct WorkRow {
    std::vector<std::pair<int, Rat>> lhs;
    Rat rhs;
    int origin;
  };
  std::vector<WorkRow> rows;
  rows.reserve(sys.rows.size());
  for (size_t i = 0; i < sys.rows.size(); ++i)
    rows.push_back({sys.rows[i].lhs, sys.rows[i].rhs, static_cast<int>(i)});

  std::vector<int> col_count(n, 0);
  for (const auto& r : rows)
    for (const auto& [c, q] : r.lhs) ++col_count[c];

  std::vector<bool> row_done(rows.size(), false);
  std::vector<int> pivot_col_of_row;   // elimination order
  std::vector<int> pivot_row_of_col(n, -1);

  for (;;) {
    // deterministic Markowitz-ish pivot: smallest live row support, lowest
    // row index on ties; in that row the column with smallest live support
    int best = -1;
    size_t best_sz = SIZE_MAX;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (row_done[i] || rows[i].lhs.empty()) continue;
      if (rows[i].lhs.size() < best_sz) {
        best_sz = rows[i].lhs.size();
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    auto& prow = rows[best];
    int pcol = -1, pcount = INT32_MAX;
    for (const auto& [c, q] : prow.lhs) {
      if (col_count[c] < pcount) {
        pcount = col_count[c];
        pcol = c;
      }
    }
    row_done[best] = true;
    pivot_col_of_row.push_back(best);
    pivot_row_of_col[pcol] = best;

    Rat piv = 0;
    for (const auto& [c, q] : prow.lhs)
      if (c == pcol) piv = q;
    // eliminate pcol from all other live rows
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == best || rows[i].lhs.empty()) continue;
      if (row_done[i]) continue;
      Rat coef = 0;
      for (const auto& [c, q] : rows[i].lhs)
        if (c == pcol) {
          coef = q;
          break;
        }
      if (coef == 0) continue;
      Rat f = coef / piv;
      // rows[i] -= f * prow
      std::vector<std::pair<int, Rat>> merged;
      merged.reserve(rows[i].lhs.size() + prow.lhs.size());
      auto a = rows[i].lhs.begin(), ae = rows[i].lhs.end();
      auto b = prow.lhs.begin(), be = prow.lhs.end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
          Rat v = -f * b->second;
          if (v != 0) merged.push_back({b->first, v});
          ++b;
        } else {
          Rat v = a->second - f * b->second;
          if (v != 0) merged.push_back({a->first, v});
          ++a;
          ++b;
        }
      }
      for (const auto& [c, q] : rows[i].lhs) --col_count[c];
      rows[i].lhs = std::move(merged);
      for (const auto& [c, q] : rows[i].lhs) ++col_count[c];
      rows[i].rhs -= f * prow.rhs;
    }
  }

  // inconsistency: a live empty row with nonzero rhs
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].lhs.empty() && rows[i].rhs != 0)
      return {Inconsistency{sys.rows[rows[i].origin].provenance}};

  // back substitution over pivot rows (reverse elimination order)
  std::vector<bool> has_value(n, false);
  std::vector<Rat> value(n, Rat(0));
  std::vector<int> free_unknowns;
  for (int c = 0; c < n; ++c)
    if (pivot_row_of_col[c] < 0) free_unknowns.push_back(c);

  if (!free_unknowns.empty()) {
    // still run back-substitution treating free unknowns as unresolved to
    // report pinned values where rows decouple
    if (pinned) {
      for (auto it = pivot_col_of_row.rbegin(); it != pivot_col_of_row.rend(); ++it) {
        const auto& r = rows[*it];
        // solvable only if exactly one unknown lacks a value
        int missing = -1;
        bool blocked = false;
        Rat acc = r.rhs;
        for (const auto& [c, q] : r.lhs) {
          if (has_value[c]) {
            acc -= q * value[c];
          } else if (missing < 0) {
            missing = c;
          } else {
            blocked = true;
            break;
          }
        }
        if (blocked || missing < 0) continue;
        if (std::find(free_unknowns.begin(), free_unknowns.end(), missing) !=
            free_unknowns.end())
          continue;
        Rat q = 0;
        for (const auto& [c, qq] : r.lhs)
          if (c == missing) q = qq;
        value[missing] = acc / q;
        has_value[missing] = true;
      }
      pinned->clear();
      for (int c = 0; c < n; ++c)
        if (has_value[c]) pinned->push_back({c, value[c]});
    }
    return {ParametricSolution{free_unknowns}};
  }

  for (auto it = pivot_col_of_row.rbegin(); it != pivot_col_of_row.rend(); ++it) {
    const auto& r = rows[*it];
    int pcol = -1;
    for (const auto& [c, q] : r.lhs)
      if (pivot_row_of_col[c] == *it) pcol = c;
    Rat acc = r.rhs;
    Rat piv = 0;
    for (const auto& [c, q] : r.lhs) {
      if (c == pcol) {
        piv = q;
      } else {
        acc -= q * value[c];
      }
    }
    value[pcol] = acc / piv;
    has_value[pcol] = true;
  }
  if (pinned) {
    pinned->clear();
    for (int c = 0; c < n; ++c) pinned->push_back({c, value[c]});
  }
  return {UniqueSolution{std::move(value)}};
}

}  // namespace tetra45
