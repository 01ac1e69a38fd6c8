#include "ratsurf/blowup_charts.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ratsurf {

namespace {

template <class S>
S checked_div(const S& num, const S& den, double div_tol, const char* what) {
  const auto m = modulus(value_of(den));
  if (m == 0 || m <= decltype(m)(div_tol)) throw ChartDomainError(std::string("plane_to_chart: division by ") + what + " at the fiber");
  return num / den;
}

}  // namespace

ChartAtlas::ChartAtlas(const MapParams& p) : params_(p) {
  validate(p);
  if (p.delta != Complex(1.0, 0.0)) throw InvalidArgument("chart layer supports delta = 1 only");
  coeffs_ = coefficients<HpComplex>(p);
  b_ = b_coefficients(coeffs_);
  const auto orbit = orbit_w(coeffs_, 1e-60, true);
  w_.assign(1, HpComplex(0));
  w_.insert(w_.end(), orbit.w.begin(), orbit.w.end());
  const int n = p.n, k = p.k;
  centers_.assign(static_cast<std::size_t>(n), std::vector<HpComplex>(static_cast<std::size_t>(2 * k + 1), HpComplex(0)));
  for (int s = 0; s < n; ++s)
    for (int j = 2; j <= 2 * k; ++j) {
      HpComplex scale(1);
      if (s >= 1) {
        if ((1 - j) % 2 != 0) scale = -scale;
        for (int t = 1; t < s; ++t) scale *= ipow(w_[static_cast<std::size_t>(t)], static_cast<unsigned>(j - 2));
      }
      centers_[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] = scale * b_.b[static_cast<std::size_t>(j - 1)];
    }
}

const HpComplex& ChartAtlas::w(int s) const {
  if (s < 1 || s > n() - 1) throw InvalidArgument("w_s requires 1 <= s <= n-1");
  return w_[static_cast<std::size_t>(s)];
}

const HpComplex& ChartAtlas::center(int s, int j) const {
  if (s < 0 || s >= n() || j < 1 || j > 2 * k()) throw InvalidArgument("center index out of range");
  return centers_[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
}

void ChartAtlas::tamper_center(int s, int j, const HpComplex& value) {
  if (s < 0 || s >= n() || j < 1 || j > 2 * k()) throw InvalidArgument("center index out of range");
  centers_[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] = value;
}

void ChartAtlas::check_id(const ChartId& id) const {
  if (id.s < 0 || id.s >= n()) throw InvalidArgument("chart limb index out of range");
  if (!id.base && (id.j < 1 || id.j > 2 * k() + 1)) throw InvalidArgument("chart level out of range");
}

template <class S>
ProjPoint<S> ChartAtlas::chart_to_plane(const ChartId& id, const ChartPointT<S>& pt) const {
  check_id(id);
  if (id.base) {
    if (id.s == 0) return {pt.v, pt.u, S(HpComplex(1))};
    return {pt.v, S(HpComplex(1)), pt.u};
  }
  S t, eta;
  if (id.j == 1) {
    t = pt.v;
    eta = pt.u;
  } else {
    S xi = pt.u;
    const S& x = pt.v;
    for (int m = id.j; m >= 2; --m) xi = xi * x + S(center(id.s, m - 1));
    t = xi;
    eta = x;
  }
  const S r = t * eta;
  if (id.s == 0) return {t, r, S(HpComplex(1))};
  return {t, S(HpComplex(1)), S(w_[static_cast<std::size_t>(id.s)]) + r};
}

template <class S>
ChartPointT<S> ChartAtlas::plane_to_chart(const ChartId& id, const ProjPoint<S>& pt, double div_tol) const {
  check_id(id);
  S t, r;
  if (id.s == 0) {
    t = checked_div(pt.x0, pt.x2, div_tol, "x2");
    r = checked_div(pt.x1, pt.x2, div_tol, "x2");
  } else {
    t = checked_div(pt.x0, pt.x1, div_tol, "x1");
    r = checked_div(pt.x2, pt.x1, div_tol, "x1");
    if (!id.base) r = r - S(w_[static_cast<std::size_t>(id.s)]);
  }
  if (id.base) return {r, t};
  const S eta = checked_div(r, t, div_tol, "the level-1 transverse coordinate");
  if (id.j == 1) return {eta, t};
  S xi = t;
  for (int m = 2; m <= id.j; ++m) xi = checked_div(xi - S(center(id.s, m - 1)), eta, div_tol, "the transverse coordinate");
  return {xi, eta};
}

template <class S>
ProjPoint<S> ChartAtlas::f(const ProjPoint<S>& pt) const {
  return eval_f_proj(coeffs_, pt, 0.0);
}

template ProjPoint<HpComplex> ChartAtlas::chart_to_plane(const ChartId&, const ChartPointT<HpComplex>&) const;
template ProjPoint<HpDual> ChartAtlas::chart_to_plane(const ChartId&, const ChartPointT<HpDual>&) const;
template ChartPointT<HpComplex> ChartAtlas::plane_to_chart(const ChartId&, const ProjPoint<HpComplex>&, double) const;
template ChartPointT<HpDual> ChartAtlas::plane_to_chart(const ChartId&, const ProjPoint<HpDual>&, double) const;
template ProjPoint<HpComplex> ChartAtlas::f(const ProjPoint<HpComplex>&) const;
template ProjPoint<HpDual> ChartAtlas::f(const ProjPoint<HpDual>&) const;

ChartId ChartAtlas::locate(const ProjPoint<HpComplex>& pt, const RoutingOptions& opt) const {
  int best_s = -1;
  double best_d = std::numeric_limits<double>::infinity();
  HpComplex best_t, best_r;
  for (int s = 0; s < n(); ++s) {
    const HpComplex& den = s == 0 ? pt.x2 : pt.x1;
    if (modulus(den) == 0) continue;
    const HpComplex t = pt.x0 / den;
    const HpComplex r = (s == 0 ? pt.x1 : pt.x2) / den - (s == 0 ? HpComplex(0) : w_[static_cast<std::size_t>(s)]);
    const double d = std::max(magnitude(t), magnitude(r));
    if (d < best_d) {
      best_d = d;
      best_s = s;
      best_t = t;
      best_r = r;
    }
  }
  if (best_s < 0 || best_d > opt.near) {
    const bool use_x2 = modulus(pt.x2) >= modulus(pt.x1);
    return ChartId{use_x2 ? 0 : 1, 0, true};
  }
  const ChartId base{best_s, 0, true};
  if (modulus(best_t) == 0 || magnitude(best_t) > opt.v_max) return base;
  const HpComplex eta = best_r / best_t;
  if (magnitude(eta) > opt.u_max) return base;
  int level = 1;
  HpComplex xi = best_t;
  if (modulus(eta) != 0) {
    for (int m = 2; m <= 2 * k() + 1; ++m) {
      if (magnitude(eta) > opt.v_max) break;
      xi = (xi - center(best_s, m - 1)) / eta;
      if (magnitude(xi) > opt.u_max) break;
      level = m;
    }
  }
  return ChartId{best_s, level, false};
}

SchemeTarget scheme_target(int n, int k, int s, int j) {
  if (s < 0 || s >= n || j < 1 || j > 2 * k + 1) throw InvalidArgument("fiber index out of range");
  if (s < n - 1) return {ChartId{s + 1, j, false}, false};
  if (j == 1) return {ChartId{0, 1, false}, false};
  if (j == 2 * k + 1) return {ChartId{0, 0, true}, true};
  return {ChartId{0, 2 * k + 2 - j, false}, false};
}

namespace {

HpComplex checked_inverse(const HpComplex& d, double pole_tol, const char* what) {
  if (magnitude(d) <= pole_tol) throw PoleError(std::string("fiber transition pole: ") + what);
  return HpComplex(1) / d;
}

}  // namespace

FiberImage fiber_transition_closed(const ChartAtlas& atlas, int s, int j, const HpComplex& xi, double pole_tol) {
  const int n = atlas.n(), k = atlas.k();
  const SchemeTarget target = scheme_target(n, k, s, j);
  const auto& b = atlas.b().b;
  HpComplex out;
  if (s == 0) {
    // Limb 0 to limb 1: level 1 flips sign, level j scales by (-1)^{1-j}.
    out = (j == 1 || (1 - j) % 2 != 0) ? HpComplex(-xi) : xi;
  } else if (s < n - 1) {
    const HpComplex& ws = atlas.w(s);
    out = j == 1 ? HpComplex(xi * checked_inverse(ws, pole_tol, "w_s = 0")) : HpComplex(xi * ipow(ws, static_cast<unsigned>(j - 2)));
  } else if (j == 1) {
    out = xi;
  } else if (j == k + 1) {
    out = xi * checked_inverse(xi - HpComplex(1), pole_tol, "xi = 1 on the middle fiber");
  } else if (j < k + 1) {
    const int l = k + 1 - j;
    out = b[static_cast<std::size_t>(k + l)] + checked_inverse(xi, pole_tol, "xi = 0");
  } else if (j <= 2 * k) {
    const int l = j - k - 1;
    out = checked_inverse(xi - b[static_cast<std::size_t>(k + l)], pole_tol, "xi = b_{k+l}");
  } else {
    out = xi - b[static_cast<std::size_t>(2 * k)];
  }
  return {target, out};
}

HpComplex sigma2_entry_closed(const ChartAtlas& atlas, const HpComplex& x) {
  return x + atlas.b().b[static_cast<std::size_t>(2 * atlas.k())];
}

namespace {

double geometric_ratio(const std::vector<double>& eps) {
  if (eps.size() < 2) throw InvalidArgument("eps sequence needs at least two entries");
  const double ratio = eps[0] / eps[1];
  if (!(ratio > 1)) throw InvalidArgument("eps sequence must decrease");
  for (std::size_t i = 1; i + 1 < eps.size(); ++i)
    if (std::abs(eps[i] / eps[i + 1] - ratio) > 1e-9 * ratio) throw InvalidArgument("eps sequence must be geometric");
  for (double e : eps)
    if (!(e > 0)) throw InvalidArgument("eps must be positive");
  return ratio;
}

template <class Sample>
NumericTransition extrapolate(FiberImage image, const std::vector<double>& eps, double conv_tol, Sample sample) {
  const double ratio = geometric_ratio(eps);
  NumericTransition out;
  for (double e : eps) out.samples.push_back(sample(HpComplex(HpReal(e))));
  const auto diag = richardson_diagonal(out.samples, ratio);
  image.xi = diag.back();
  out.step_change = magnitude(diag.back() - diag[diag.size() - 2]);
  out.image = image;
  if (!(out.step_change <= conv_tol * std::max(1.0, magnitude(image.xi))))
    throw ExtrapolationError("transition limit did not converge: successive extrapolants differ by " + std::to_string(out.step_change));
  return out;
}

}  // namespace

NumericTransition fiber_transition_numeric(const ChartAtlas& atlas, int s, int j, const HpComplex& xi,
                                           const std::vector<double>& eps_seq, double conv_tol) {
  const SchemeTarget target = scheme_target(atlas.n(), atlas.k(), s, j);
  const ChartId from{s, j, false};
  return extrapolate(FiberImage{target, HpComplex(0)}, eps_seq, conv_tol, [&](const HpComplex& eps) {
    const auto image = atlas.f(atlas.chart_to_plane(from, ChartPoint{xi, eps}));
    if (target.is_sigma1) {
      if (modulus(image.x0) == 0) throw ChartDomainError("exit image has x0 = 0");
      return HpComplex(image.x2 / image.x0);
    }
    return atlas.plane_to_chart(target.to, image).u;
  });
}

NumericTransition sigma2_entry_numeric(const ChartAtlas& atlas, const HpComplex& x, const std::vector<double>& eps_seq,
                                       double conv_tol) {
  const ChartId to{0, 2 * atlas.k() + 1, false};
  return extrapolate(FiberImage{SchemeTarget{to, false}, HpComplex(0)}, eps_seq, conv_tol, [&](const HpComplex& eps) {
    const ProjPoint<HpComplex> p{HpComplex(1), x, eps};
    return atlas.plane_to_chart(to, atlas.f(p)).u;
  });
}

FiberImage rho_fiber_closed(const ChartAtlas& atlas, int s, int j, const HpComplex& xi) {
  const int n = atlas.n();
  scheme_target(n, atlas.k(), s, j);  // range check
  const SchemeTarget target{ChartId{n - 1 - s, j, false}, false};
  if (s == 0 || s == n - 1) return {target, xi};
  const HpComplex& ws = atlas.w(s);
  if (j == 1) return {target, -xi / ws};
  return {target, -ipow(HpComplex(-ws), static_cast<unsigned>(j - 2)) * xi};
}

NumericTransition rho_fiber_numeric(const ChartAtlas& atlas, int s, int j, const HpComplex& xi,
                                    const std::vector<double>& eps_seq, double conv_tol) {
  const int n = atlas.n();
  scheme_target(n, atlas.k(), s, j);
  const ChartId from{s, j, false}, to{n - 1 - s, j, false};
  return extrapolate(FiberImage{SchemeTarget{to, false}, HpComplex(0)}, eps_seq, conv_tol, [&](const HpComplex& eps) {
    const auto q = atlas.chart_to_plane(from, ChartPoint{xi, eps});
    return atlas.plane_to_chart(to, ProjPoint<HpComplex>{q.x0, q.x2, q.x1}).u;
  });
}

ChartOrbit iterate_in_charts(const ChartAtlas& atlas, const ChartId& start, const ChartPoint& pt, int steps,
                             const RoutingOptions& opt) {
  ChartOrbit orbit;
  ChartPointT<HpDual> cur{HpDual::variable(pt.u, 0), HpDual::variable(pt.v, 1)};
  ChartId id = start;
  orbit.route.push_back(start);
  orbit.expected.push_back(start);
  for (int step = 0; step < steps; ++step) {
    const auto image = atlas.f(atlas.chart_to_plane(id, cur));
    const ChartId next = atlas.locate(ProjPoint<HpComplex>{image.x0.val, image.x1.val, image.x2.val}, opt);
    ChartId expected = next;
    if (!id.base) {
      const auto target = scheme_target(atlas.n(), atlas.k(), id.s, id.j);
      expected = target.to;
      if (target.is_sigma1 || !(next == expected)) orbit.route_matches_scheme = false;
    } else if (!next.base) {
      orbit.route_matches_scheme = false;
    }
    orbit.expected.push_back(expected);
    orbit.route.push_back(next);
    cur = atlas.plane_to_chart(next, image);
    id = next;
  }
  if (start.base && id.base && !(id == start)) {
    cur = atlas.plane_to_chart(start, atlas.chart_to_plane(id, cur));
    orbit.route.back() = start;
  }
  orbit.end = ChartPoint{cur.u.val, cur.v.val};
  orbit.jacobian = {{{to_complex(cur.u.d[0]), to_complex(cur.u.d[1])}, {to_complex(cur.v.d[0]), to_complex(cur.v.d[1])}}};
  return orbit;
}

double default_transverse_offset(int k) { return std::pow(10.0, -std::floor(150.0 / (2.0 * k + 2.0))); }

ParabolicResult parabolic_check(const ChartAtlas& atlas, const ChartId& id, const ChartPoint& pt, double transverse_offset) {
  ParabolicResult res;
  res.chart = id;
  res.point = pt;
  if (!id.base && modulus(pt.v) == 0) {
    const double off = transverse_offset > 0 ? transverse_offset : default_transverse_offset(atlas.k());
    res.point.v = HpComplex(HpReal(off));
  }
  const auto orbit = iterate_in_charts(atlas, id, res.point, 2 * atlas.n());
  res.fix_error = std::max(magnitude(orbit.end.u - res.point.u), magnitude(orbit.end.v - res.point.v));
  res.jacobian = orbit.jacobian;
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      res.max_deviation = std::max(res.max_deviation, std::abs(orbit.jacobian[a][c] - Complex(a == c ? 1.0 : 0.0)));
  res.route_matches_scheme = orbit.route_matches_scheme && orbit.route.back() == id;
  return res;
}

}  // namespace ratsurf
