#include "tetra45/curve.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tetra45/series_io.hpp"

namespace tetra45 {

std::vector<int> gap_sequence(int n, int s) {
  if (n < 2 || s < 2 || std::gcd(n, s) != 1)
    throw std::invalid_argument("gap_sequence: need coprime n,s >= 2");
  int bound = (n - 1) * (s - 1);  // Frobenius: all m >= (n-1)(s-1) representable
  std::vector<bool> rep(bound + 1, false);
  for (int a = 0; a * n <= bound; ++a)
    for (int b = 0; a * n + b * s <= bound; ++b) rep[a * n + b * s] = true;
  std::vector<int> gaps;
  for (int m = 1; m <= bound; ++m)
    if (!rep[m]) gaps.push_back(m);
  return gaps;
}

WeightSystem CurveSpec::weights() const {
  WeightSystem w;
  w.wt_x = -n;
  w.wt_y = -s;
  auto gaps = gap_sequence(n, s);
  w.wt_u.assign(gaps.rbegin(), gaps.rend());
  for (int j = 0; j < s; ++j) w.wt_lambda.push_back(-n * (s - j));
  return w;
}

bool CurveSpec::all_symbolic() const {
  for (const auto& l : lambdas)
    if (!l.symbolic) return false;
  return true;
}

CurveSpec CurveSpec::cyclic45_symbolic() {
  CurveSpec c;
  c.n = 4;
  c.s = 5;
  c.lambdas.assign(5, LambdaValue{});
  return c;
}

CurveSpec CurveSpec::cyclic45(const std::vector<Rat>& ls) {
  if (ls.size() != 5) throw std::invalid_argument("need l0..l4");
  CurveSpec c;
  c.n = 4;
  c.s = 5;
  for (const auto& v : ls) c.lambdas.push_back({false, v});
  return c;
}

CurveSpec CurveSpec::load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open curve file: " + path);
  std::string tag;
  CurveSpec c;
  is >> tag >> c.n >> c.s;
  if (tag != "curve") throw std::runtime_error("bad curve file header");
  c.lambdas.assign(c.s, LambdaValue{});
  std::string name, val;
  while (is >> name >> val) {
    if (name.size() < 2 || name[0] != 'l') throw std::runtime_error("bad lambda line");
    int j = std::stoi(name.substr(1));
    if (j < 0 || j >= c.s) throw std::runtime_error("lambda index out of range");
    if (val == "sym") {
      c.lambdas[j] = LambdaValue{};
    } else {
      auto q = rat_from_string(val);
      if (!q) throw std::runtime_error("bad lambda value: " + val);
      c.lambdas[j] = {false, *q};
    }
  }
  return c;
}

void CurveSpec::save(const std::string& path) const {
  std::ofstream os(path);
  os << "curve " << n << " " << s << "\n";
  for (size_t j = 0; j < lambdas.size(); ++j) {
    os << "l" << j << " ";
    if (lambdas[j].symbolic)
      os << "sym";
    else
      os << rat_to_string(lambdas[j].value);
    os << "\n";
  }
}

namespace {

constexpr int X = 0, Y = 1, Z = 2, W = 3, L0 = 4;

Mono xyzw(int x, int y, int z, int w, int l4 = 0, int l3 = 0, int l2 = 0,
          int l1 = 0, int l0 = 0) {
  Mono m;
  m.e[X] = x;
  m.e[Y] = y;
  m.e[Z] = z;
  m.e[W] = w;
  m.e[L0] = l0;
  m.e[L0 + 1] = l1;
  m.e[L0 + 2] = l2;
  m.e[L0 + 3] = l3;
  m.e[L0 + 4] = l4;
  return m;
}

Series xyzw_poly(std::initializer_list<std::pair<Mono, long>> terms) {
  Series s(ctx_xyzw45());
  for (const auto& [m, c] : terms) s.add_term(m, Rat(c));
  return s;
}

// x^5 + l4 x^4 + l3 x^3 + l2 x^2 + l1 x + l0 in the chosen variable slot
Series curve_rhs(int var) {
  Series s(ctx_xyzw45());
  auto mono = [&](int e, int lj) {
    Mono m;
    m.e[var] = e;
    if (lj >= 0) m.e[L0 + lj] = 1;
    return m;
  };
  s.add_term(mono(5, -1), 1);
  for (int j = 0; j <= 4; ++j) s.add_term(mono(j, j), 1);
  return s;
}

}  // namespace

std::vector<Series> holomorphic_numerators() {
  return {
      xyzw_poly({{xyzw(0, 0, 0, 0), 1}}),  // 1
      xyzw_poly({{xyzw(1, 0, 0, 0), 1}}),  // x
      xyzw_poly({{xyzw(0, 1, 0, 0), 1}}),  // y
      xyzw_poly({{xyzw(2, 0, 0, 0), 1}}),  // x^2
      xyzw_poly({{xyzw(1, 1, 0, 0), 1}}),  // xy
      xyzw_poly({{xyzw(0, 2, 0, 0), 1}}),  // y^2
  };
}

std::vector<Series> meromorphic_numerators() {
  // h1 = -y^2 (8 x^2 l4 + 11 x^3 + 5 x l3 + 2 l2)
  Series h1 = xyzw_poly({{xyzw(2, 2, 0, 0, 1), -8},
                         {xyzw(3, 2, 0, 0), -11},
                         {xyzw(1, 2, 0, 0, 0, 1), -5},
                         {xyzw(0, 2, 0, 0, 0, 0, 1), -2}});
  // h2 = -y^2 (l3 + 4 x l4 + 7 x^2)
  Series h2 = xyzw_poly({{xyzw(0, 2, 0, 0, 0, 1), -1},
                         {xyzw(1, 2, 0, 0, 1), -4},
                         {xyzw(2, 2, 0, 0), -7}});
  // h3 = -2 x y (l3 + 3 x^2 + 2 x l4)
  Series h3 = xyzw_poly({{xyzw(1, 1, 0, 0, 0, 1), -2},
                         {xyzw(3, 1, 0, 0), -6},
                         {xyzw(2, 1, 0, 0, 1), -4}});
  Series h4 = xyzw_poly({{xyzw(1, 2, 0, 0), -3}});
  Series h5 = xyzw_poly({{xyzw(2, 1, 0, 0), -2}});
  Series h6 = xyzw_poly({{xyzw(3, 0, 0, 0), -1}});
  return {h1, h2, h3, h4, h5, h6};
}

Series at_second_point(const Series& p) {
  const VarContext* ctx = ctx_xyzw45();
  Series r(ctx);
  for (const auto& [m, c] : p.terms()) {
    Mono t = m;
    if (t.e[Z] || t.e[W]) throw std::invalid_argument("already a two-point poly");
    t.e[Z] = t.e[X];
    t.e[W] = t.e[Y];
    t.e[X] = 0;
    t.e[Y] = 0;
    r.add_term(t, c);
  }
  return r;
}

namespace {

// Eq-level fixture: the kernel polynomial with symbolic lambda.
Series stored_F() {
  Series F(ctx_xyzw45());
  auto add = [&](long c, const Mono& m) { F.add_term(m, Rat(c)); };
  // 4 y^3 w^3
  add(4, xyzw(0, 3, 0, 3));
  // y^2 block
  add(3, xyzw(1, 2, 4, 0));
  add(1, xyzw(0, 2, 3, 0, 0, 1));
  add(1, xyzw(2, 2, 3, 0));
  add(2, xyzw(0, 2, 2, 0, 0, 0, 1));
  add(3, xyzw(1, 2, 2, 0, 0, 1));
  add(4, xyzw(1, 2, 3, 0, 1));
  add(4, xyzw(0, 2, 0, 0, 0, 0, 0, 0, 1));
  add(1, xyzw(1, 2, 0, 0, 0, 0, 0, 1));
  add(2, xyzw(1, 2, 1, 0, 0, 0, 1));
  add(3, xyzw(0, 2, 1, 0, 0, 0, 0, 1));
  // w y block
  add(2, xyzw(0, 1, 1, 1, 0, 0, 0, 1));
  add(4, xyzw(1, 1, 1, 1, 0, 0, 1));
  add(4, xyzw(0, 1, 0, 1, 0, 0, 0, 0, 1));
  add(2, xyzw(1, 1, 0, 1, 0, 0, 0, 1));
  add(4, xyzw(2, 1, 2, 1, 1));
  add(2, xyzw(2, 1, 1, 1, 0, 1));
  add(2, xyzw(3, 1, 2, 1));
  add(2, xyzw(2, 1, 3, 1));
  add(2, xyzw(1, 1, 2, 1, 0, 1));
  // w^2 block
  add(1, xyzw(3, 0, 0, 2, 0, 1));
  add(4, xyzw(0, 0, 0, 2, 0, 0, 0, 0, 1));
  add(3, xyzw(1, 0, 0, 2, 0, 0, 0, 1));
  add(2, xyzw(2, 0, 0, 2, 0, 0, 1));
  add(1, xyzw(0, 0, 1, 2, 0, 0, 0, 1));
  add(1, xyzw(3, 0, 2, 2));
  add(3, xyzw(4, 0, 1, 2));
  add(2, xyzw(1, 0, 1, 2, 0, 0, 1));
  add(3, xyzw(2, 0, 1, 2, 0, 1));
  add(4, xyzw(3, 0, 1, 2, 1));
  return F;
}

Series substitute_lambdas(const Series& p, const CurveSpec& spec) {
  bool any = false;
  for (const auto& l : spec.lambdas)
    if (!l.symbolic) any = true;
  if (!any) return p;
  Series r(p.ctx());
  for (const auto& [m, c] : p.terms()) {
    Rat coeff = c;
    Mono t = m;
    for (int j = 0; j < 5; ++j) {
      if (spec.lambdas[j].symbolic) continue;
      for (int e = 0; e < m.e[L0 + j]; ++e) coeff *= spec.lambdas[j].value;
      t.e[L0 + j] = 0;
    }
    r.add_term(t, coeff);
  }
  return r;
}

}  // namespace

KernelF build_kernel_F(const CurveSpec& spec) {
  if (spec.n != 4 || spec.s != 5)
    throw std::runtime_error("kernel F: only the cyclic (4,5) curve is wired");
  return {substitute_lambdas(stored_F(), spec)};
}

bool check_kernel_symmetry(const KernelF& k) {
  Series swapped(ctx_xyzw45());
  for (const auto& [m, c] : k.F.terms()) {
    Mono t = m;
    std::swap(t.e[X], t.e[Z]);
    std::swap(t.e[Y], t.e[W]);
    swapped.add_term(t, c);
  }
  return (k.F - swapped).empty();
}

Series reduce_curve(const Series& p) {
  Series cur = p;
  Series px = curve_rhs(X);
  Series pz = curve_rhs(Z);
  for (;;) {
    bool changed = false;
    Series next(ctx_xyzw45());
    for (const auto& [m, c] : cur.terms()) {
      if (m.e[Y] >= 4) {
        Mono t = m;
        t.e[Y] -= 4;
        next = next + (c * (Series::monomial(ctx_xyzw45(), t, 1) * px));
        changed = true;
      } else if (m.e[W] >= 4) {
        Mono t = m;
        t.e[W] -= 4;
        next = next + (c * (Series::monomial(ctx_xyzw45(), t, 1) * pz));
        changed = true;
      } else {
        next.add_term(m, c);
      }
    }
    cur = next;
    if (!changed) return cur;
  }
}

Series bracket_f_over_w(int j) {
  // f(z,w) = w^4 - (z^5 + l4 z^4 + ... + l0); dividing by w^j and dropping
  // negative w-powers leaves w^(4-j) for j <= 4 (the z-part is all negative).
  if (j < 1 || j > 4) throw std::invalid_argument("bracket: j in 1..4");
  Series s(ctx_xyzw45());
  s.add_term(xyzw(0, 0, 0, 4 - j), 1);
  return s;
}

SigmaKernel sigma_kernel(const CurveSpec& spec) {
  if (spec.n != 4 || spec.s != 5)
    throw std::runtime_error("sigma kernel: only the cyclic (4,5) curve is wired");
  SigmaKernel k;
  Series num(ctx_xyzw45());
  for (int kk = 1; kk <= 4; ++kk) {
    Mono ypow;
    ypow.e[Y] = 4 - kk;
    num = num + Series::monomial(ctx_xyzw45(), ypow, 1) * bracket_f_over_w(5 - kk);
  }
  k.numerator = num;  // y^3 + y^2 w + y w^2 + w^3
  return k;
}

Series assemble_kernel_numerator(const CurveSpec& spec) {
  SigmaKernel sk = sigma_kernel(spec);
  const VarContext* ctx = ctx_xyzw45();

  // d/dz of the numerator along the curve: dN/dw * p'(z) / (4 w^3); the
  // global denominator is 16 y^3 w^3 (x-z)^2, matching (x-z)^2 f_y f_w.
  Series dNdw = poly_diff(sk.numerator, W);
  Series pz = curve_rhs(Z);
  Series dpz = poly_diff(pz, Z);

  Series x_minus_z = xyzw_poly({{xyzw(1, 0, 0, 0), 1}, {xyzw(0, 0, 1, 0), -1}});
  Series w3 = xyzw_poly({{xyzw(0, 0, 0, 3), 1}});

  // [dN/dz * (x-z) + N] * 4 w^3  with dN/dz = dN/dw * p'(z)/(4 w^3)
  Series part1 = dNdw * dpz * x_minus_z + Rat(4) * (w3 * sk.numerator);

  auto g = holomorphic_numerators();
  auto h = meromorphic_numerators();
  Series gh(ctx);
  for (int i = 0; i < 6; ++i) gh = gh + g[i] * at_second_point(h[i]);

  Series T = part1 - x_minus_z * x_minus_z * gh;
  return substitute_lambdas(reduce_curve(T), spec);
}

}  // namespace tetra45
