#ifndef RATSURF_NUMERIC_HPP
#define RATSURF_NUMERIC_HPP

#include <boost/multiprecision/cpp_complex.hpp>

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "ratsurf/exact.hpp"

namespace ratsurf {

using Complex = std::complex<double>;

/// Working precision for chart numerics near the exceptional fibers (decimal digits).
inline constexpr unsigned hp_digits = 200;
using HpComplex = boost::multiprecision::cpp_complex<hp_digits>;
using HpReal = HpComplex::value_type;

inline double to_double(const HpReal& x) { return static_cast<double>(x); }
inline Complex to_complex(const HpComplex& z) { return {to_double(z.real()), to_double(z.imag())}; }
inline HpComplex to_hp(const Complex& z) { return HpComplex(HpReal(z.real()), HpReal(z.imag())); }

inline double magnitude(const Complex& z) { return std::abs(z); }
inline double magnitude(const HpComplex& z) { return to_double(abs(z)); }

/// Modulus in the scalar's own real type; unlike magnitude() it cannot underflow to zero.
inline double modulus(const Complex& z) { return std::abs(z); }
inline HpReal modulus(const HpComplex& z) { return abs(z); }

/// Forward-mode dual number with N tangent directions.
template <class T, std::size_t N>
struct Dual {
  T val{};
  std::array<T, N> d{};

  Dual() : val(0) { d.fill(T(0)); }
  Dual(const T& v) : val(v) { d.fill(T(0)); }  // NOLINT(google-explicit-constructor)

  static Dual variable(const T& v, std::size_t i) {
    Dual r(v);
    r.d[i] = T(1);
    return r;
  }

  Dual& operator+=(const Dual& o) {
    val += o.val;
    for (std::size_t i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    val -= o.val;
    for (std::size_t i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    for (std::size_t i = 0; i < N; ++i) d[i] = d[i] * o.val + val * o.d[i];
    val *= o.val;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    const T inv = T(1) / o.val;
    val *= inv;
    for (std::size_t i = 0; i < N; ++i) d[i] = (d[i] - val * o.d[i]) * inv;
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend Dual operator-(Dual a) {
    a.val = -a.val;
    for (auto& x : a.d) x = -x;
    return a;
  }
};

template <class T>
struct is_dual : std::false_type {};
template <class T, std::size_t N>
struct is_dual<Dual<T, N>> : std::true_type {};

/// Underlying value of a plain or dual scalar.
template <class T>
const T& value_of(const T& x) {
  return x;
}
template <class T, std::size_t N>
const T& value_of(const Dual<T, N>& x) {
  return x.val;
}

/// Integer power by repeated squaring; works for any ring-like scalar.
template <class S>
S ipow(S base, unsigned e) {
  S result(1);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

/// All complex roots of a polynomial (coefficients lowest degree first) by Aberth-Ehrlich
/// iteration, each polished by Newton steps. Leading coefficient must be nonzero.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, double tol = 1e-14, int max_iter = 500);

/// Largest real root of an integer polynomial: numeric candidate, exact sign-change bracket,
/// Descartes test for roots beyond the bracket, then bisection with Newton steps.
double largest_real_root(const IntPoly& p, double tol = 1e-13);

/// Evaluate an integer polynomial at a rational point exactly.
Rational evaluate(const IntPoly& p, const Rational& x);

/// Taylor shift p(x + a) with rational a (coefficients lowest first).
RatPoly taylor_shift(const RatPoly& p, const Rational& a);

/// Richardson extrapolation on a sequence sampled at eps, eps/r, eps/r^2, ... assuming an error
/// expansion in integer powers of eps. Returns the table diagonal (last entry is the best estimate).
template <class S>
std::vector<S> richardson_diagonal(std::vector<S> samples, double ratio) {
  std::vector<S> diag{samples.back()};
  double factor = 1.0;
  while (samples.size() > 1) {
    factor *= ratio;
    std::vector<S> next;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
      next.push_back((samples[i + 1] * S(factor) - samples[i]) / S(factor - 1.0));
    samples = std::move(next);
    diag.push_back(samples.back());
  }
  return diag;
}

/// Minimum-cost perfect matching on a square cost matrix (Hungarian algorithm).
/// Returns assignment[row] = column.
std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost);

/// Singular values of a complex matrix given row-major, descending.
std::vector<double> singular_values(const std::vector<std::vector<Complex>>& m);

/// Numerical rank: count of singular values above rel_tol * sigma_max.
std::size_t numerical_rank(const std::vector<std::vector<Complex>>& m, double rel_tol = 1e-8);

}  // namespace ratsurf

#endif  // RATSURF_NUMERIC_HPP
