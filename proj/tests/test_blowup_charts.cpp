#include <doctest.h>

#include "ratsurf/blowup_charts.hpp"

using namespace ratsurf;

namespace {

const std::vector<double> kEps{1e-4, 1e-5, 1e-6};

double err(const HpComplex& a, const HpComplex& b) { return magnitude(HpComplex(a - b)); }

HpComplex hp(double re, double im = 0) { return HpComplex(HpReal(re), HpReal(im)); }

}  // namespace

TEST_CASE("scheme targets") {
  // Along the limbs.
  SchemeTarget t = scheme_target(3, 4, 0, 5);
  CHECK(t.to.s == 1);
  CHECK(t.to.j == 5);
  // Flip out of the last limb: F^1 -> F^1_0, F^j -> F^{2k+2-j}_0.
  t = scheme_target(3, 4, 2, 1);
  CHECK(t.to.s == 0);
  CHECK(t.to.j == 1);
  t = scheme_target(3, 4, 2, 3);
  CHECK(t.to.s == 0);
  CHECK(t.to.j == 7);
  CHECK(scheme_target(3, 4, 2, 9).is_sigma1);
}

TEST_CASE("chart embedding round trip") {
  const ChartAtlas at(default_params(3, 2));
  for (int s = 0; s < 3; ++s)
    for (int j = 1; j <= 5; ++j) {
      const ChartId id{s, j, false};
      const ChartPoint pt{hp(0.3, -0.2), hp(1e-3, 2e-4)};
      const ChartPoint back = at.plane_to_chart(id, at.chart_to_plane(id, pt));
      CHECK(err(back.u, pt.u) < 1e-40);
      CHECK(err(back.v, pt.v) < 1e-40);
    }
}

TEST_CASE("fiber transitions: closed form against the numeric limit") {
  for (const auto& p : {figure1_params(), default_params(3, 2), default_params(4, 2)}) {
    const ChartAtlas at(p);
    CAPTURE(p.n);
    CAPTURE(p.k);
    const HpComplex xi = hp(0.27, 0.13);
    for (int s = 0; s < p.n; ++s)
      for (int j = 1; j <= 2 * p.k + 1; ++j) {
        CAPTURE(s);
        CAPTURE(j);
        const FiberImage closed = fiber_transition_closed(at, s, j, xi);
        const NumericTransition num = fiber_transition_numeric(at, s, j, xi, kEps);
        CHECK(closed.target.to == num.image.target.to);
        CHECK(err(closed.xi, num.image.xi) < 1e-6);
      }
    const HpComplex x = hp(-0.4, 0.3);
    CHECK(err(sigma2_entry_closed(at, x), sigma2_entry_numeric(at, x, kEps).image.xi) < 1e-6);
  }
}

TEST_CASE("centers are carried to centers along each limb") {
  const ChartAtlas at(figure1_params());
  for (int j = 2; j <= 2 * at.k(); ++j) {
    const FiberImage img = fiber_transition_closed(at, 0, j, at.center(0, j));
    CHECK(err(img.xi, at.center(1, j)) < 1e-40);
  }
}

TEST_CASE("swap involution on fibers") {
  const ChartAtlas at(default_params(4, 2));
  const HpComplex xi = hp(0.31, -0.12);
  for (int s = 0; s < 4; ++s)
    for (int j = 1; j <= 5; ++j) {
      const FiberImage closed = rho_fiber_closed(at, s, j, xi);
      CHECK(closed.target.to.s == 3 - s);
      CHECK(closed.target.to.j == j);
      CHECK(err(closed.xi, rho_fiber_numeric(at, s, j, xi, kEps).image.xi) < 1e-6);
    }
}

TEST_CASE("parabolic behaviour of f^{2n}") {
  const ChartAtlas at(figure1_params());
  const ParabolicResult sigma0 = parabolic_check(at, ChartId{0, 0, true}, ChartPoint{hp(0.2, 0.1), hp(0)});
  CHECK(sigma0.fix_error < 1e-8);
  CHECK(sigma0.max_deviation < 1e-6);
  for (int j : {1, 3, 5, 7}) {
    const ParabolicResult r = parabolic_check(at, ChartId{1, j, false}, ChartPoint{hp(0.15, -0.05), hp(0)});
    CAPTURE(j);
    CHECK(r.fix_error < 1e-8);
    CHECK(r.max_deviation < 1e-6);
    CHECK(r.route_matches_scheme);
  }
}

TEST_CASE("the chart layer needs delta = 1") {
  MapParams p = figure1_params();
  p.delta = Complex(0.5);
  CHECK_THROWS_AS(ChartAtlas{p}, InvalidArgument);
}

TEST_CASE("a tampered center breaks the transitions") {
  ChartAtlas at(figure1_params());
  at.tamper_center(0, 3, at.center(0, 3) + hp(1e-3));
  bool broken = false;
  try {
    const HpComplex xi = hp(0.27, 0.13);
    const NumericTransition num = fiber_transition_numeric(at, 0, 5, xi, kEps);
    broken = err(num.image.xi, fiber_transition_closed(at, 0, 5, xi).xi) > 1e-6;
  } catch (const ExtrapolationError&) {
    broken = true;
  }
  CHECK(broken);
}
