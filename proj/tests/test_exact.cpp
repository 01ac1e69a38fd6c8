#include <doctest.h>

#include "ratsurf/exact.hpp"
#include "ratsurf/numeric.hpp"

using namespace ratsurf;

TEST_CASE("integer polynomial arithmetic and division") {
  const IntPoly a{1, -2, -2, 1};  // x^3 - 2x^2 - 2x + 1
  const IntPoly b{1, 1};
  const IntDivision d = divide(a, b);
  CHECK(d.remainder.is_zero());
  CHECK(d.quotient == IntPoly{1, -3, 1});
  CHECK(d.quotient * b == a);
  CHECK(to_string(a) == "x^3 - 2x^2 - 2x + 1");
}

TEST_CASE("characteristic polynomial of small integer matrices") {
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  CHECK(char_poly(m) == IntPoly{1, -3, 1});
  CHECK(determinant(m) == 1);

  // Companion matrix of x^3 - 2x^2 - 2x + 1 reproduces it.
  IntMatrix c(3, 3);
  c(1, 0) = 1;
  c(2, 1) = 1;
  c(0, 2) = -1;
  c(1, 2) = 2;
  c(2, 2) = 2;
  CHECK(char_poly(c) == IntPoly{1, -2, -2, 1});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(2) == IntPoly{1, 1});
  CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
}

TEST_CASE("leading principal minors and exact inverse") {
  IntMatrix m(3, 3);
  m(0, 0) = -2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = -2;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(2, 2) = -2;
  const auto minors = leading_principal_minors(m);
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == -2);
  CHECK(minors[1] == 3);
  CHECK(minors[2] == -4);
  const RatMatrix inv = inverse(to_rational(m));
  CHECK(to_rational(m) * inv == RatMatrix::identity(3));
}

TEST_CASE("largest real root and Aberth roots") {
  CHECK(largest_real_root(IntPoly{1, -3, 1}) == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  const auto roots = polynomial_roots({Complex(-1), Complex(0), Complex(0), Complex(1)});
  REQUIRE(roots.size() == 3);
  for (const auto& r : roots) CHECK(std::abs(r * r * r - 1.0) < 1e-13);
}

TEST_CASE("Hungarian assignment picks the cheapest matching") {
  const std::vector<std::vector<double>> cost{{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  const auto a = hungarian(cost);
  double total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += cost[i][a[i]];
  CHECK(total == 5);
}

TEST_CASE("dual numbers differentiate products and quotients") {
  using D = Dual<double, 1>;
  const D x = D::variable(3.0, 0);
  const D y = x * x / (x + D(1.0));  // x^2/(x+1), derivative (x^2+2x)/(x+1)^2
  CHECK(y.val == doctest::Approx(9.0 / 4.0));
  CHECK(y.d[0] == doctest::Approx(15.0 / 16.0));
  CHECK(ipow(x, 3).d[0] == doctest::Approx(27.0));
}
