#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tetra45/fixtures.hpp"
#include "tetra45/schur.hpp"
#include "tetra45/series_io.hpp"

using namespace tetra45;

TEST_CASE("sw partition for (4,5)") {
  auto mu = sw_partition(4, 5);
  CHECK(mu == std::vector<int>({6, 3, 3, 1, 1, 1}));
  CHECK(sw_partition(2, 3) == std::vector<int>({1}));
}

TEST_CASE("SW_{4,5} matches the fixture exactly") {
  auto sw = schur_weierstrass(4, 5);
  auto fixture = load_series_fixture(data_path("sw45.txt"), ctx_u45());
  CHECK(sw.size() == 33);
  CHECK(sw.identical(fixture));
  // spot values
  Mono u6_15;
  u6_15.e[5] = 15;
  CHECK(sw.coeff(u6_15) == Rat(1, 8382528));
  Mono u4_5;
  u4_5.e[3] = 5;
  CHECK(sw.coeff(u4_5) == Rat(1, 4));
  Mono u2u2u6;
  u2u2u6.e[1] = 2;
  u2u2u6.e[5] = 1;
  CHECK(sw.coeff(u2u2u6) == Rat(-1));
}

TEST_CASE("SW is odd and homogeneous of weight 15") {
  auto sw = schur_weierstrass(4, 5);
  auto w = poly_weight(sw);
  CHECK(w.kind == WeightResult::kHomogeneous);
  CHECK(w.weight == 15);
  for (const auto& [m, c] : sw.terms())
    CHECK(mono_total_degree(ctx_u45(), m) % 2 == 1);
}

TEST_CASE("elliptic SW_{2,3} is u") {
  auto sw = schur_weierstrass(2, 3);
  CHECK(sw.size() == 1);
  Mono u1;
  u1.e[0] = 1;
  CHECK(sw.coeff(u1) == 1);
}

TEST_CASE("(3,4) SW is weight-5 odd") {
  auto sw = schur_weierstrass(3, 4);
  auto w = poly_weight(sw);
  CHECK(w.kind == WeightResult::kHomogeneous);
  CHECK(w.weight == 5);
}

TEST_CASE("genus > 6 refused") { CHECK_THROWS(schur_weierstrass(4, 7)); }
