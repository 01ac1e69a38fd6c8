#include "ratsurf/numeric.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ratsurf {

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> derivative(const std::vector<Complex>& c) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
  return d;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("non-finite value has no rational form");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational r(scaled);
  exp -= 53;
  const Integer pow2 = Integer(1) << std::abs(exp);
  if (exp >= 0) return r * pow2;
  return r / pow2;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, double tol, int max_iter) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  if (c.size() < 2) return {};
  const std::size_t deg = c.size() - 1;
  // Strip roots at zero so the initial circle has positive radius.
  std::size_t zeros = 0;
  while (zeros < deg && c[zeros] == Complex(0)) ++zeros;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  std::vector<Complex> roots(zeros, Complex(0));
  const std::size_t m = c.size() - 1;
  if (m == 0) return roots;

  const auto dc = derivative(c);
  const double lead = std::abs(c.back());
  double radius = 0;
  for (std::size_t i = 0; i < m; ++i)
    radius = std::max(radius, std::pow(std::abs(c[i]) / lead, 1.0 / static_cast<double>(m - i)));
  radius = std::max(radius, 1e-3);

  std::vector<Complex> z(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double ang = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m) + 0.4;
    z[i] = std::polar(radius, ang);
  }
  for (int it = 0; it < max_iter; ++it) {
    double worst = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Complex pv = horner(c, z[i]);
      if (pv == Complex(0)) continue;
      const Complex ratio = pv / horner(dc, z[i]);
      Complex sum = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const Complex step = ratio / (1.0 - ratio * sum);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < tol) break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      const Complex d = horner(dc, r);
      if (std::abs(d) == 0) break;
      const Complex step = horner(c, r) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      r -= step;
    }
    roots.push_back(r);
  }
  return roots;
}

Rational evaluate(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

RatPoly taylor_shift(const RatPoly& p, const Rational& a) {
  RatPoly acc;
  const RatPoly lin{a, Rational(1)};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * lin + RatPoly{*it};
  return acc;
}

double largest_real_root(const IntPoly& p, double tol) {
  if (p.degree() < 1) throw DegenerateError("constant polynomial has no roots");
  std::vector<Complex> c;
  for (const auto& x : p.coeffs()) c.emplace_back(static_cast<double>(x), 0.0);
  const auto roots = polynomial_roots(c);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& r : roots)
    if (std::abs(r.imag()) <= 1e-7 * std::max(1.0, std::abs(r))) best = std::max(best, r.real());
  if (!std::isfinite(best)) throw DegenerateError("polynomial has no real root");

  const double h = 1e-7 * std::max(1.0, std::abs(best));
  double lo = best - h, hi = best + h;
  const Rational hi_q = exact_rational(hi);
  auto sign_at = [&](double x) { return evaluate(p, exact_rational(x)).sign(); };
  int s_lo = sign_at(lo);
  const int s_hi = sign_at(hi);
  if (s_lo == 0) return lo;
  if (s_hi == 0) return hi;
  if (s_lo == s_hi) throw DegenerateError("largest real root not bracketed by a sign change");
  const RatPoly shifted = taylor_shift(to_rational(p), hi_q);
  int changes = 0, last = 0;
  for (const auto& q : shifted.coeffs()) {
    const int s = q.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  // Descartes: no sign changes in p(x + hi) means no real root above hi.
  if (changes != 0) throw DegenerateError("real roots remain beyond the bracketed candidate");

  const auto dc = derivative(c);
  while (hi - lo > tol * std::max(1.0, std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    double x = mid - horner(c, mid).real() / horner(dc, mid).real();
    if (!(x > lo && x < hi)) x = mid;
    const int s = sign_at(x);
    if (s == 0) return x;
    if (s == s_lo) {
      lo = x;
    } else {
      hi = x;
    }
    if (x != mid) {
      // Tighten the other side so the bracket shrinks even when Newton overshoots from one end.
      const double y = s == s_lo ? std::min(hi, x + tol * std::max(1.0, std::abs(x))) : std::max(lo, x - tol * std::max(1.0, std::abs(x)));
      const int sy = sign_at(y);
      if (sy == 0) return y;
      if (sy == s_lo) {
        lo = y;
      } else {
        hi = y;
      }
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  for (const auto& row : cost)
    if (row.size() != n) throw InvalidArgument("hungarian: cost matrix must be square");
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials formulation.
  std::vector<double> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j)
    if (p[j] != 0) assignment[p[j] - 1] = j - 1;
  return assignment;
}

std::vector<double> singular_values(const std::vector<std::vector<Complex>>& m) {
  if (m.empty() || m.front().empty()) return {};
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.front().size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

std::size_t numerical_rank(const std::vector<std::vector<Complex>>& m, double rel_tol) {
  const auto s = singular_values(m);
  if (s.empty() || s.front() == 0) return 0;
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double x) { return x > rel_tol * s.front(); }));
}

}  // namespace ratsurf
