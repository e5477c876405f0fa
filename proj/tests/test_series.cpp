#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tetra45/fixtures.hpp"
#include "tetra45/series.hpp"
#include "tetra45/series_io.hpp"

using namespace tetra45;

namespace {

Mono u(int i, int e = 1) {
  Mono m;
  m.e[i - 1] = e;
  return m;
}

Series term(const char* spec) {
  return parse_series_fixture(spec, ctx_u45(), "inline");
}

std::mt19937 rng(20260809);

Series random_poly(int max_terms = 6, int max_exp = 3) {
  Series s(ctx_u45());
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  int n = nt(rng);
  for (int t = 0; t < n; ++t) {
    Mono m;
    for (int v = 0; v < 11; ++v) m.e[v] = (v < 6 ? ex(rng) : ex(rng) % 2);
    s.add_term(m, Rat(num(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("poly_weight on paper examples") {
  // u6^15 has weight +15
  auto p = Series::monomial(ctx_u45(), u(6, 15), Rat(1, 8382528));
  auto w = poly_weight(p);
  CHECK(w.kind == WeightResult::kHomogeneous);
  CHECK(w.weight == 15);

  // constant has weight 0
  w = poly_weight(Series::constant(ctx_u45(), 1));
  CHECK(w.weight == 0);

  // l4 * u6^16 * u4 -> -4 + 16 + 3 = 15
  w = poly_weight(term("1 * l4 * u6^16 * u4"));
  CHECK(w.kind == WeightResult::kHomogeneous);
  CHECK(w.weight == 15);

  // zero polynomial -> distinguished result
  CHECK(poly_weight(Series(ctx_u45())).kind == WeightResult::kZero);

  CHECK(poly_weight(term("1*u6\n1*u5")).kind == WeightResult::kInhomogeneous);
}

TEST_CASE("poly_mul basics") {
  auto u6 = term("1*u6");
  CHECK((u6 * u6).identical(term("1*u6^2")));

  auto a = term("1*u4\n1*u5^2");
  auto b = term("1*u4\n-1*u5^2");
  CHECK((a * b).identical(term("1*u4^2\n-1*u5^4")));
}

TEST_CASE("validity propagation in products") {
  // a known through weight 10 with min weight 2; b exact with min weight 3
  Series a(ctx_u45(), 10);
  a.add_term(u(5), 1);          // weight 2
  a.add_term(u(5, 5), Rat(1));  // weight 10
  Series b(ctx_u45());
  b.add_term(u(4), 1);  // weight 3
  auto p = a * b;
  CHECK(p.validity() == 13);  // 10 + 3
  // truncations of the same exact series agree on the shared validity range
  Series a2 = a;
  a2.set_validity(6);
  auto p2 = a2 * b;
  for (const auto& [m, c] : p2.terms()) CHECK(p.coeff(m) == c);
}

TEST_CASE("poly_diff drops weight and validity by wt(var)") {
  auto p = Series::monomial(ctx_u45(), u(6, 15), Rat(1, 8382528));
  auto d = poly_diff(p, 5);  // d/du6
  CHECK(d.identical(Series::monomial(ctx_u45(), u(6, 14), Rat(15, 8382528))));
  CHECK(Rat(15, 8382528) == Rat(5, 2794176));

  CHECK(poly_diff(term("1*u6"), 0).empty());  // d/du1 u6 = 0
  CHECK(poly_diff(term("1*u4*u6*u1"), 3).identical(term("1*u6*u1")));

  Series q(ctx_u45(), 20);
  q.add_term(u(6, 2), 1);
  CHECK(poly_diff(q, 0).validity() == 9);  // wt(u1) = 11
}

TEST_CASE("ring axioms on random polynomials") {
  for (int i = 0; i < 40; ++i) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(((a * b) * c).identical(a * (b * c)));
    CHECK((a * (b + c)).identical(a * b + a * c));
    CHECK((a * b).identical(b * a));
    CHECK((a + b).identical(b + a));
  }
}

TEST_CASE("homogeneous products add weights") {
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(3), b = random_poly(3);
    auto wa = poly_weight(a), wb = poly_weight(b);
    if (wa.kind != WeightResult::kHomogeneous || wb.kind != WeightResult::kHomogeneous)
      continue;
    auto wp = poly_weight(a * b);
    if (wp.kind == WeightResult::kZero) continue;  // cancellation
    CHECK(wp.kind == WeightResult::kHomogeneous);
    CHECK(wp.weight == wa.weight + wb.weight);
  }
}

TEST_CASE("substitution: paper examples") {
  // p = u6^2 with u6 -> -xi gives xi^2;  model xi by the weight-1 slot p1
  const VarContext* pw = ctx_powersum45(1);
  Mono xi;
  xi.e[0] = 1;
  Series minus_xi = Series::monomial(pw, xi, -1);
  auto p = term("1*u6^2");
  auto r = poly_substitute(p, pw, {{5, minus_xi}});
  CHECK(r.identical(Series::monomial(pw, xi.with(0, 2), 1)));

  // identity assignment keeps p
  auto id = poly_substitute(p, ctx_u45(), {});
  CHECK(id.identical(p));

  // p = u5*u6, u5 -> -xi^2/2, u6 -> -xi  ==>  xi^3/2
  Series m2 = Series::monomial(pw, xi.with(0, 2), Rat(-1, 2));
  auto r2 = poly_substitute(term("1*u5*u6"), pw, {{4, m2}, {5, minus_xi}});
  CHECK(r2.identical(Series::monomial(pw, xi.with(0, 3), Rat(1, 2))));
}

TEST_CASE("serialization round trip") {
  CHECK(parse_series(serialize(Series(ctx_u45()))).identical(Series(ctx_u45())));
  for (int i = 0; i < 25; ++i) {
    auto p = random_poly(8);
    auto q = parse_series(serialize(p));
    CHECK(q.identical(p));
    CHECK(q.validity() == p.validity());
    CHECK(serialize(q) == serialize(p));
  }
  auto sw = load_series_fixture(data_path("sw45.txt"), ctx_u45());
  CHECK(parse_series(serialize(sw)).identical(sw));
  // explicit sign and exponents for -u2^2*u6
  CHECK(serialize(term("-1*u2^2*u6")).find("-1\t0 2 0 0 0 1 0 0 0 0 0") !=
        std::string::npos);
}

TEST_CASE("parse errors carry position") {
  CHECK_THROWS_AS(parse_series("garbage"), ParseError);
  CHECK_THROWS_AS(
      parse_series("tetra45/series v1 ctx=u45 validity=exact terms=1\nnotanum\t0 0 "
                   "0 0 0 0 0 0 0 0 0\n"),
      ParseError);
}

TEST_CASE("binary cache round trip") {
  auto sw = load_series_fixture(data_path("sw45.txt"), ctx_u45());
  std::stringstream ss;
  write_binary(ss, sw);
  auto back = read_binary(ss);
  CHECK(back.identical(sw));
}
