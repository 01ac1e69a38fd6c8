#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "ratsurf/map_family.hpp"

using namespace ratsurf;

namespace {

MapParams params(int n, int k, std::map<int, Complex> a = {}) {
  MapParams p = default_params(n, k);
  p.a = std::move(a);
  return p;
}

ProjPoint<Complex> lift(const AffinePoint& q) { return {Complex(1), q.x, q.y}; }

}  // namespace

TEST_CASE("admissible constants") {
  const auto c4 = candidate_c(4);
  REQUIRE(c4.size() == 2);
  CHECK(c4[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(c4[1] == doctest::Approx(-std::sqrt(2.0)));
  CHECK(compute_C_n(4).size() == 2);

  const auto c2 = compute_C_n(2);
  REQUIRE(c2.size() == 1);
  CHECK(std::abs(c2[0].value) < 1e-15);

  // Odd n: only the members with w_* = 1 survive.
  const auto c3 = compute_C_n(3);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].value == doctest::Approx(1.0));
}

TEST_CASE("orbit at infinity reaches w = 0 at step n-1") {
  const InfinityOrbit o = orbit_w(params(4, 2));
  REQUIRE(o.w.size() == 3);
  CHECK(std::abs(o.w[0] - std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(o.w[1] - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(o.w[2]) < 1e-14);

  const InfinityOrbit o3 = orbit_w(params(3, 2));
  REQUIRE(o3.w_star);
  CHECK(std::abs(*o3.w_star - 1.0) < 1e-14);
}

TEST_CASE("validation rejects malformed parameters") {
  CHECK_THROWS_AS(validate(params(2, 4, {{3, 1.0}})), InvalidArgument);  // odd index
  CHECK_THROWS_AS(validate(params(2, 4, {{4, 1.0}})), InvalidArgument);  // l = k
  MapParams odd_k = default_params(2, 4);
  odd_k.k = 3;
  CHECK_THROWS_AS(validate(odd_k), InvalidArgument);
  MapParams zero_entropy = default_params(2, 4);
  zero_entropy.k = 2;
  CHECK_THROWS_AS(validate(zero_entropy), InvalidArgument);
  MapParams bad_c = default_params(3, 2);
  bad_c.c = CSpec::explicit_value(0.5);
  CHECK_THROWS_AS(validate(bad_c), PeriodicityError);
  CHECK_NOTHROW(validate(figure1_params()));
}

TEST_CASE("f and its inverse") {
  const MapParams p = figure1_params();
  const AffinePoint q{Complex(0.3, 0.1), Complex(-0.7, 0.2)};
  const AffinePoint fq = eval_f(p, q);
  CHECK(fq.x == q.y);
  const AffinePoint back = eval_f_inverse(p, fq);
  CHECK(std::abs(back.x - q.x) < 1e-13);
  CHECK(std::abs(back.y - q.y) < 1e-13);
  CHECK_THROWS_AS(eval_f(p, {Complex(1), Complex(0)}), PoleError);
}

TEST_CASE("the swap (x,y) -> (y,x) reverses f") {
  for (const auto& p : {figure1_params(), params(3, 2), params(4, 2), params(2, 6, {{2, {0.4, -0.3}}, {4, 1.1}})}) {
    const AffinePoint q{Complex(0.41, -0.2), Complex(0.9, 0.35)};
    const AffinePoint fq = eval_f(p, q);
    const AffinePoint lhs = eval_f_inverse(p, {q.y, q.x});
    CHECK(std::abs(lhs.x - fq.y) < 1e-12);
    CHECK(std::abs(lhs.y - fq.x) < 1e-12);
  }
}

TEST_CASE("real parameters keep real points exactly real") {
  const MapParams p = figure1_params();
  AffinePoint q{Complex(0.1), Complex(-0.6)};
  for (int i = 0; i < 200; ++i) {
    q = eval_f(p, q);
    REQUIRE(q.x.imag() == 0.0);
    REQUIRE(q.y.imag() == 0.0);
  }
}

TEST_CASE("homogeneous form agrees with the affine map") {
  const MapParams p = params(2, 6, {{2, {0.4, -0.3}}, {4, 1.1}});
  const AffinePoint q{Complex(0.2, 0.5), Complex(-1.3, 0.4)};
  CHECK(proj_equal(eval_f_proj(p, lift(q)), lift(eval_f(p, q))));
  CHECK_THROWS_AS(eval_f_proj(p, {Complex(0), Complex(1), Complex(0)}), IndeterminacyError);
}

TEST_CASE("series y^k / q(x,y)") {
  for (const auto& p : {figure1_params(), params(3, 4, {{2, 0.7}}), params(4, 2)}) {
    const BCoefficients b = b_coefficients(p);
    CHECK(b.b.size() == static_cast<std::size_t>(2 * p.k + 1));
    CHECK(b.b[static_cast<std::size_t>(p.k)] == Complex(1));
    CHECK(b.bx[static_cast<std::size_t>(2 * p.k)] == Complex(1));
    CHECK(b_series_residual(p, b) < 1e-12);
  }
}

TEST_CASE("parameter JSON round trip and the preset file") {
  const MapParams p = params(2, 6, {{2, {0.4, -0.3}}, {4, 1.1}});
  const MapParams q = params_from_json(params_to_json(p));
  CHECK(q.n == p.n);
  CHECK(q.k == p.k);
  CHECK(q.a == p.a);
  CHECK(c_value<double>(q) == c_value<double>(p));

  std::ifstream in(RATSURF_DATA_DIR "/figure1.json");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  const MapParams f = params_from_json(ss.str());
  const MapParams g = figure1_params();
  CHECK(f.n == g.n);
  CHECK(f.k == g.k);
  CHECK(f.a == g.a);
  CHECK(c_value<double>(f) == c_value<double>(g));

  CHECK_THROWS_AS(params_from_json("{\"n\": 2"), InvalidArgument);
  CHECK_THROWS_AS(params_from_json("{\"n\": 2, \"k\": 4, \"a\": {\"x\": 1}}"), InvalidArgument);
}
