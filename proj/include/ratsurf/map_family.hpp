#ifndef RATSURF_MAP_FAMILY_HPP
#define RATSURF_MAP_FAMILY_HPP

// The family f(x,y) = (y, -delta x + c y + sum a_l y^-l + y^-k) and its data at infinity.

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ratsurf/errors.hpp"
#include "ratsurf/numeric.hpp"

namespace ratsurf {

/// The constant c, either symbolic sign * 2cos(j pi / n) or an explicit real value.
struct CSpec {
  bool symbolic = true;
  int j = 1;
  int sign = 1;
  double value = 0.0;

  static CSpec cosine(int j, int sign = 1) { return CSpec{true, j, sign, 0.0}; }
  static CSpec explicit_value(double v) { return CSpec{false, 0, 1, v}; }
};

struct MapParams {
  int n = 2;
  int k = 4;
  CSpec c = CSpec::cosine(1);
  std::map<int, Complex> a;  // even index l in [2, k-2]
  Complex delta{1.0, 0.0};
};

/// Default tolerances of the affine layer.
struct MapTolerances {
  double pole = 1e-12;        // |y| below this is a pole of f
  double magnitude_cap = 1e100;
  double membership = 1e-9;   // C_n and periodicity tests
};

/// Evaluate c at the precision of R (double or HpReal).
template <class R>
R c_value(const MapParams& p) {
  if (!p.c.symbolic) return R(p.c.value);
  const R pi = boost::math::constants::pi<R>();
  using std::cos;
  R v = R(2 * p.c.sign) * cos(pi * R(p.c.j) / R(p.n));
  // 2cos(pi/2) is exactly zero; remove the rounding residue.
  if (2 * p.c.j == p.n) v = R(0);
  return v;
}

/// Map coefficients converted to a scalar type C (Complex or HpComplex).
template <class C>
struct MapCoefficients {
  int n = 2, k = 4;
  C c, delta;
  std::vector<std::pair<int, C>> a;  // (l, a_l), nonzero only
};

template <class C>
MapCoefficients<C> coefficients(const MapParams& p) {
  using R = typename C::value_type;
  MapCoefficients<C> m;
  m.n = p.n;
  m.k = p.k;
  m.c = C(c_value<R>(p), R(0));
  m.delta = C(R(p.delta.real()), R(p.delta.imag()));
  for (const auto& [l, v] : p.a)
    if (v != Complex(0)) m.a.emplace_back(l, C(R(v.real()), R(v.imag())));
  return m;
}

/// Throws InvalidArgument for malformed parameters and PeriodicityError when c is not admissible.
void validate(const MapParams& p, const MapTolerances& tol = {});

struct AffinePoint {
  Complex x, y;
};

template <class S>
struct ProjPoint {
  S x0, x1, x2;
};

/// Cross-product equality of projective points.
bool proj_equal(const ProjPoint<Complex>& a, const ProjPoint<Complex>& b, double tol = 1e-9);

AffinePoint eval_f(const MapParams& p, const AffinePoint& pt, const MapTolerances& tol = {});
AffinePoint eval_f_inverse(const MapParams& p, const AffinePoint& pt, const MapTolerances& tol = {});

/// Homogeneous form of degree k+1. S may be a plain or dual scalar over C. The result is divided
/// by its largest-modulus coordinate. Raises IndeterminacyError when the image vanishes, or when the
/// input lies within indeterminacy_tol of e_1 = [0:1:0] (pass 0 to test only exact coincidence).
template <class S, class C>
ProjPoint<S> eval_f_proj(const MapCoefficients<C>& m, const ProjPoint<S>& pt, double indeterminacy_tol = 0.0) {
  const auto a0 = modulus(value_of(pt.x0)), a1 = modulus(value_of(pt.x1)), a2 = modulus(value_of(pt.x2));
  using Real = std::remove_cv_t<decltype(a0)>;
  const Real rest = a0 > a2 ? a0 : a2;
  if (rest == 0 || rest <= Real(indeterminacy_tol) * a1)
    throw IndeterminacyError("eval_f_proj: point at the indeterminacy point [0:1:0]");
  const unsigned k = static_cast<unsigned>(m.k);
  const S x2k = ipow(pt.x2, k);
  const S x2k1 = x2k * pt.x2;
  S y0 = pt.x0 * x2k;
  S y1 = x2k1;
  S y2 = S(-m.delta) * pt.x1 * x2k + S(m.c) * x2k1 + ipow(pt.x0, k + 1);
  for (const auto& [l, al] : m.a)
    y2 += S(al) * ipow(pt.x0, static_cast<unsigned>(l + 1)) * ipow(pt.x2, k - static_cast<unsigned>(l));
  const auto b0 = modulus(value_of(y0)), b1 = modulus(value_of(y1)), b2 = modulus(value_of(y2));
  if (b0 == 0 && b1 == 0 && b2 == 0) throw IndeterminacyError("eval_f_proj: image coordinates vanish");
  const S scale = (b0 >= b1 && b0 >= b2) ? y0 : (b1 >= b2 ? y1 : y2);
  return {y0 / scale, y1 / scale, y2 / scale};
}

ProjPoint<Complex> eval_f_proj(const MapParams& p, const ProjPoint<Complex>& pt, double indeterminacy_tol = 1e-12);

/// Distinct values 2cos(j pi/n), 0<j<n, gcd(j,n)=1, ordered by j.
std::vector<double> candidate_c(int n);

struct CMember {
  int j;
  double value;
};
/// Admissible constants: all candidates for even n, those with w_* = 1 for odd n.
std::vector<CMember> compute_C_n(int n, double tol = 1e-9);

template <class C>
struct InfinityOrbitT {
  std::vector<C> w;             // w_1 .. w_{n-1}
  std::optional<C> w_star;      // w_{(n-1)/2} for odd n
};
using InfinityOrbit = InfinityOrbitT<Complex>;

/// Orbit of c under g(w) = c - delta/w. With exact_terminal the last entry is set to 0 after the
/// periodicity test (used by the chart layer so the limb n-1 base point is exactly e_1).
template <class C>
InfinityOrbitT<C> orbit_w(const MapCoefficients<C>& m, double tol, bool exact_terminal = false) {
  InfinityOrbitT<C> o;
  C cur = m.c;
  for (int s = 1; s <= m.n - 1; ++s) {
    o.w.push_back(cur);
    if (s == m.n - 1) break;
    if (magnitude(cur) < tol) throw PeriodicityError("orbit at infinity hits w = 0 before step n-1");
    cur = m.c - m.delta / cur;
  }
  const double scale = std::max(1.0, magnitude(m.c));
  if (magnitude(o.w.back()) >= tol * scale)
    throw PeriodicityError("orbit at infinity is not periodic: |w_{n-1}| = " + std::to_string(magnitude(o.w.back())));
  if (exact_terminal) o.w.back() = C(0);
  if (m.n % 2 == 1 && m.n >= 3) o.w_star = o.w[static_cast<std::size_t>((m.n - 1) / 2 - 1)];
  return o;
}

InfinityOrbit orbit_w(const MapParams& p, double tol = 1e-9);

Complex q_poly(const MapParams& p, Complex x, Complex y);

/// Coefficients of y^k / q(x,y) through order 2k: b (constant parts) and bx (x-linear parts).
template <class C>
struct BCoefficientsT {
  std::vector<C> b;   // b_0 .. b_{2k}
  std::vector<C> bx;  // x-linear parts, zero except bx[2k] = 1
};
using BCoefficients = BCoefficientsT<Complex>;

template <class C>
BCoefficientsT<C> b_coefficients(const MapCoefficients<C>& m) {
  const int k = m.k;
  // q = sum_i (qc_i + x qx_i) y^i; invert 1/q as a series with (constant, x-linear) pairs.
  std::vector<C> qc(static_cast<std::size_t>(k + 2), C(0)), qx(static_cast<std::size_t>(k + 2), C(0));
  qc[0] = C(1);
  for (const auto& [l, al] : m.a) qc[static_cast<std::size_t>(k - l)] += al;
  qc[static_cast<std::size_t>(k + 1)] += m.c;
  qx[static_cast<std::size_t>(k)] = C(-1);
  std::vector<C> inv(static_cast<std::size_t>(k + 1), C(0)), invx(static_cast<std::size_t>(k + 1), C(0));
  inv[0] = C(1);
  for (int i = 1; i <= k; ++i) {
    C s(0), sx(0);
    for (int j = 1; j <= i && j <= k + 1; ++j) {
      s += qc[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(i - j)];
      sx += qc[static_cast<std::size_t>(j)] * invx[static_cast<std::size_t>(i - j)] +
            qx[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(i - j)];
    }
    inv[static_cast<std::size_t>(i)] = -s;
    invx[static_cast<std::size_t>(i)] = -sx;
  }
  BCoefficientsT<C> out;
  out.b.assign(static_cast<std::size_t>(2 * k + 1), C(0));
  out.bx.assign(static_cast<std::size_t>(2 * k + 1), C(0));
  for (int i = k; i <= 2 * k; ++i) {
    out.b[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(i - k)];
    out.bx[static_cast<std::size_t>(i)] = invx[static_cast<std::size_t>(i - k)];
  }
  return out;
}

BCoefficients b_coefficients(const MapParams& p);

/// Residual of q * (sum (b_i + x bx_i) y^i) - y^k through order 2k, max over constant and x-linear
/// parts of each order.
double b_series_residual(const MapParams& p, const BCoefficients& b);

/// Parse / emit the parameter-file JSON shape.
MapParams params_from_json(const std::string& text);
std::string params_to_json(const MapParams& p);

/// (n, k) with the first admissible c and a = 0.
MapParams default_params(int n, int k);

/// The preset used for phase-portrait data: n=2, k=4, c=0, a_2=-2.64.
MapParams figure1_params();

}  // namespace ratsurf

#endif  // RATSURF_MAP_FAMILY_HPP
