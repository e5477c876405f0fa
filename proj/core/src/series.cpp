#include "tetra45/series.hpp"

#include <algorithm>

namespace tetra45 {

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::optional<Rat> rat_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  mpq_class q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return Rat(q);
}

int mono_graded_weight(const VarContext* ctx, const Mono& m) {
  int w = 0;
  for (int i = 0; i < ctx->graded; ++i) w += m.e[i] * ctx->weight[i];
  return w;
}

int mono_total_weight(const VarContext* ctx, const Mono& m) {
  int w = 0;
  for (int i = 0; i < ctx->nvars; ++i) w += m.e[i] * ctx->weight[i];
  return w;
}

int mono_total_degree(const VarContext* ctx, const Mono& m) {
  int d = 0;
  for (int i = 0; i < ctx->graded; ++i) d += m.e[i];
  return d;
}

bool mono_canon_less(const VarContext* ctx, const Mono& a, const Mono& b) {
  if (ctx->truncatable) {
    int wa = mono_graded_weight(ctx, a), wb = mono_graded_weight(ctx, b);
    if (wa != wb) return wa < wb;
  }
  for (int i = 0; i < ctx->nvars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

void Series::set_validity(int v) {
  validity_ = v;
  if (!ctx_ || !ctx_->truncatable || v >= kValidityExact) return;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (mono_graded_weight(ctx_, it->first) > v)
      it = terms_.erase(it);
    else
      ++it;
  }
}

void Series::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  if (ctx_->truncatable && mono_graded_weight(ctx_, m) > validity_) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Series::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Series::min_graded_weight() const {
  int w = kValidityExact;
  for (const auto& [m, c] : terms_) w = std::min(w, mono_graded_weight(ctx_, m));
  return w;
}

int Series::max_graded_weight() const {
  int w = -1;
  for (const auto& [m, c] : terms_) w = std::max(w, mono_graded_weight(ctx_, m));
  return w;
}

std::vector<std::pair<Mono, Rat>> Series::sorted_terms() const {
  std::vector<std::pair<Mono, Rat>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    return mono_canon_less(ctx_, a.first, b.first);
  });
  return v;
}

bool Series::identical(const Series& o) const {
  if (ctx_ != o.ctx_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    auto it = o.terms_.find(m);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

Series Series::constant(const VarContext* ctx, const Rat& c) {
  Series s(ctx);
  s.add_term(Mono{}, c);
  return s;
}

Series Series::monomial(const VarContext* ctx, const Mono& m, const Rat& c,
                        int validity) {
  Series s(ctx, validity);
  s.add_term(m, c);
  return s;
}

Series operator+(const Series& a, const Series& b) {
  Series r(a.ctx(), std::min(a.validity(), b.validity()));
  for (const auto& [m, c] : a.terms()) r.add_term(m, c);
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(a.ctx(), std::min(a.validity(), b.validity()));
  for (const auto& [m, c] : a.terms()) r.add_term(m, c);
  for (const auto& [m, c] : b.terms()) r.add_term(m, -c);
  return r;
}

Series operator-(const Series& a) {
  Series r(a.ctx(), a.validity());
  for (const auto& [m, c] : a.terms()) r.add_term(m, -c);
  return r;
}

Series operator*(const Rat& c, const Series& a) {
  Series r(a.ctx(), a.validity());
  if (c == 0) return r;
  for (const auto& [m, q] : a.terms()) r.add_term(m, c * q);
  return r;
}

Series operator*(const Series& a, const Series& b) {
  const VarContext* ctx = a.ctx() ? a.ctx() : b.ctx();
  // validity of a product: unknown terms of one factor first enter at its
  // validity+1 combined with the other factor's lowest term
  long va = kValidityExact, vb = kValidityExact;
  if (ctx->truncatable) {
    if (a.validity() < kValidityExact)
      va = static_cast<long>(a.validity()) + b.min_graded_weight();
    if (b.validity() < kValidityExact)
      vb = static_cast<long>(b.validity()) + a.min_graded_weight();
  }
  int validity = static_cast<int>(std::min<long>({va, vb, kValidityExact}));
  Series r(ctx, validity);
  if (a.empty() || b.empty()) return r;

  // bucket one factor by graded weight so truncation can skip whole blocks
  if (ctx->truncatable && validity < kValidityExact) {
    std::map<int, std::vector<const std::pair<const Mono, Rat>*>> blocks;
    for (const auto& t : b.terms())
      blocks[mono_graded_weight(ctx, t.first)].push_back(&t);
    for (const auto& [ma, ca] : a.terms()) {
      int wa = mono_graded_weight(ctx, ma);
      for (const auto& [wb, vec] : blocks) {
        if (wa + wb > validity) break;
        for (const auto* t : vec) r.add_term(mono_mul(ma, t->first), ca * t->second);
      }
    }
  } else {
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms())
        r.add_term(mono_mul(ma, mb), ca * cb);
  }
  return r;
}

Series poly_diff(const Series& p, int var) {
  const VarContext* ctx = p.ctx();
  int v = p.validity() >= kValidityExact ? kValidityExact
                                         : p.validity() - ctx->weight[var];
  Series r(ctx, v);
  for (const auto& [m, c] : p.terms()) {
    int e = m.e[var];
    if (e == 0) continue;
    r.add_term(m.with(var, e - 1), c * e);
  }
  return r;
}

WeightResult poly_weight(const Series& p) {
  if (p.empty()) return {WeightResult::kZero, 0};
  bool first = true;
  int w = 0;
  for (const auto& [m, c] : p.terms()) {
    int tw = mono_total_weight(p.ctx(), m);
    if (first) {
      w = tw;
      first = false;
    } else if (tw != w) {
      return {WeightResult::kInhomogeneous, 0};
    }
  }
  return {WeightResult::kHomogeneous, w};
}

Series poly_substitute(const Series& p, const VarContext* target,
                       const std::vector<std::pair<int, Series>>& assignment) {
  const VarContext* src = p.ctx();
  std::array<const Series*, kMaxVars> assigned{};
  for (const auto& [v, s] : assignment) {
    if (s.ctx() != target) throw std::invalid_argument("assignment context mismatch");
    assigned[v] = &s;
  }
  // identity mapping for unassigned variables (matched by name)
  std::array<int, kMaxVars> pass{};
  pass.fill(-1);
  for (int i = 0; i < src->nvars; ++i) {
    if (assigned[i]) continue;
    pass[i] = target->var_index(src->name[i]);
    if (pass[i] < 0)
      throw std::invalid_argument("substitute: variable " + src->name[i] +
                                  " missing in target context");
  }

  // sound validity bound: the first unknown term of assignment S_i enters a
  // monomial m (graded weight w_m, containing u_i) at weight
  // >= w_m - wt(u_i) + S_i.validity + 1
  long bound = p.validity() >= kValidityExact ? kValidityExact : -1;
  if (bound < 0) {
    // substitution may not preserve grading; conservative: validity maps
    // through only if every assignment is weight-homogeneous of the source
    // variable's weight.  Otherwise keep the minimum of assignment bounds.
    bound = p.validity();
    for (const auto& [v, s] : assignment) {
      auto wr = poly_weight(s);
      bool matches = (wr.kind == WeightResult::kZero) ||
                     (wr.kind == WeightResult::kHomogeneous &&
                      wr.weight == src->weight[v]);
      if (!matches) bound = 0;  // caller should slice manually in exotic cases
    }
  }
  for (const auto& [ma, ca] : p.terms()) {
    (void)ca;
    int wm = mono_graded_weight(src, ma);
    for (const auto& [v, s] : assignment) {
      if (ma.e[v] == 0 || s.validity() >= kValidityExact) continue;
      bound = std::min(bound, static_cast<long>(wm) - src->weight[v] + s.validity());
    }
  }
  int validity = static_cast<int>(std::min<long>(bound, kValidityExact));

  // power cache per assigned variable
  std::array<std::vector<Series>, kMaxVars> powers;
  for (const auto& [v, s] : assignment) {
    powers[v].push_back(Series::constant(target, 1));
    powers[v].push_back(s);
  }

  Series out(target, validity);
  for (const auto& [m, c] : p.terms()) {
    Series term = Series::constant(target, c);
    term.set_validity(validity);
    for (int i = 0; i < src->nvars; ++i) {
      int e = m.e[i];
      if (e == 0) continue;
      if (assigned[i]) {
        auto& pw = powers[i];
        while (static_cast<int>(pw.size()) <= e) {
          Series nxt = pw.back() * pw[1];
          // graded weights are positive in truncatable contexts, so terms of a
          // partial product above the final bound can never re-enter
          if (target->truncatable) nxt.set_validity(std::min(nxt.validity(), validity));
          pw.push_back(nxt);
        }
        term = term * pw[e];
      } else {
        Mono shift;
        shift.e[pass[i]] = static_cast<uint8_t>(e);
        term = term * Series::monomial(target, shift, 1);
      }
      if (term.empty()) break;
    }
    for (const auto& [mt, ct] : term.terms()) out.add_term(mt, ct);
  }
  return out;
}

Series graded_slice(const Series& p, int lo, int hi) {
  Series r(p.ctx(), p.validity());
  for (const auto& [m, c] : p.terms()) {
    int w = mono_graded_weight(p.ctx(), m);
    if (w >= lo && w <= hi) r.add_term(m, c);
  }
  return r;
}

Series lambda_sector(const Series& p, const Mono& lambda_mono) {
  const VarContext* ctx = p.ctx();
  Series r(ctx, p.validity());
  for (const auto& [m, c] : p.terms()) {
    bool match = true;
    for (int i = ctx->graded; i < ctx->nvars; ++i)
      if (m.e[i] != lambda_mono.e[i]) {
        match = false;
        break;
      }
    if (match) r.add_term(m, c);
  }
  return r;
}

}  // namespace tetra45
