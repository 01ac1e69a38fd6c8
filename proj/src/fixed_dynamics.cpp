#include "ratsurf/fixed_dynamics.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ratsurf {

const char* to_string(FixedPointType t) {
  switch (t) {
    case FixedPointType::saddle: return "saddle";
    case FixedPointType::elliptic: return "elliptic";
    case FixedPointType::parabolic: return "parabolic";
    case FixedPointType::complex: return "complex";
  }
  return "?";
}

const char* to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::completed: return "completed";
    case OrbitStatus::escaped: return "escaped";
    case OrbitStatus::pole: return "pole";
  }
  return "?";
}

std::vector<Complex> fixed_point_polynomial(const MapParams& p) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(p.k + 2), Complex(0));
  coeffs[0] = -1.0;
  for (const auto& [l, al] : p.a) coeffs[static_cast<std::size_t>(p.k - l)] -= al;
  coeffs[static_cast<std::size_t>(p.k + 1)] = 1.0 + p.delta - c_value<double>(p);
  return coeffs;
}

bool has_real_coefficients(const MapParams& p) {
  if (p.delta.imag() != 0) return false;
  return std::all_of(p.a.begin(), p.a.end(), [](const auto& kv) { return kv.second.imag() == 0; });
}

namespace {

double real_newton(const std::vector<Complex>& c, double x) {
  std::vector<double> rc, dc;
  for (const auto& v : c) rc.push_back(v.real());
  for (std::size_t i = 1; i < rc.size(); ++i) dc.push_back(static_cast<double>(i) * rc[i]);
  auto eval = [](const std::vector<double>& q, double t) {
    double acc = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  for (int it = 0; it < 8; ++it) {
    const double d = eval(dc, x);
    if (d == 0) break;
    const double step = eval(rc, x) / d;
    x -= step;
    if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

Complex pole_derivative(const MapParams& p, Complex y) {
  const Complex inv = 1.0 / y;
  Complex d = -static_cast<double>(p.k) * ipow(inv, static_cast<unsigned>(p.k + 1));
  for (const auto& [l, al] : p.a) d -= static_cast<double>(l) * al * ipow(inv, static_cast<unsigned>(l + 1));
  return c_value<double>(p) + d;
}

}  // namespace

Jacobian jacobian(const MapParams& p, const AffinePoint& pt, const MapTolerances& tol) {
  if (std::abs(pt.y) < tol.pole) throw PoleError("jacobian: y is at the pole line y = 0");
  return {{{Complex(0), Complex(1)}, {-p.delta, pole_derivative(p, pt.y)}}};
}

Jacobian jacobian_dual(const MapParams& p, const AffinePoint& pt, const MapTolerances& tol) {
  if (std::abs(pt.y) < tol.pole) throw PoleError("jacobian_dual: y is at the pole line y = 0");
  using D = Dual<Complex, 2>;
  const D x = D::variable(pt.x, 0), y = D::variable(pt.y, 1);
  const D inv = D(Complex(1)) / y;
  D second = D(-p.delta) * x + D(Complex(c_value<double>(p))) * y + ipow(inv, static_cast<unsigned>(p.k));
  for (const auto& [l, al] : p.a) second += D(al) * ipow(inv, static_cast<unsigned>(l));
  const D first = y;
  return {{{first.d[0], first.d[1]}, {second.d[0], second.d[1]}}};
}

std::vector<FixedPointRecord> fixed_points(const MapParams& p, const MapTolerances& tol) {
  const auto coeffs = fixed_point_polynomial(p);
  const Complex lead = coeffs.back();
  if (std::abs(lead) <= 1e-14) throw DegenerateError("fixed_points: leading coefficient 1 + delta - c vanishes");
  std::vector<Complex> roots = polynomial_roots(coeffs);
  const bool real = has_real_coefficients(p);
  if (real) {
    for (auto& z : roots)
      if (std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z))) z = Complex(real_newton(coeffs, z.real()), 0.0);
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  std::vector<FixedPointRecord> out;
  for (const auto& z : roots) {
    FixedPointRecord r;
    r.zeta = z;
    for (const auto& w : roots)
      if (&w != &z && std::abs(w - z) < 1e-7) ++r.multiplicity;
    const AffinePoint pt{z, z};
    const AffinePoint img = eval_f(p, pt, tol);
    r.residual = std::max(std::abs(img.x - z), std::abs(img.y - z));
    const Jacobian J = jacobian(p, pt, tol);
    r.trace = J[0][0] + J[1][1];
    const Complex det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    r.det_error = std::abs(det - p.delta);
    const Complex disc = std::sqrt(r.trace * r.trace - 4.0 * det);
    r.eigenvalues = {(r.trace + disc) / 2.0, (r.trace - disc) / 2.0};
    if (std::abs(r.eigenvalues[1]) > std::abs(r.eigenvalues[0])) std::swap(r.eigenvalues[0], r.eigenvalues[1]);
    if (!real || z.imag() != 0) {
      r.type = FixedPointType::complex;
    } else {
      const double t = std::abs(r.trace.real());
      r.type = t < 2 - 1e-9 ? FixedPointType::elliptic : (t > 2 + 1e-9 ? FixedPointType::saddle : FixedPointType::parabolic);
      if (r.type == FixedPointType::saddle)
        for (auto& e : r.eigenvalues) e = Complex(e.real(), 0.0);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<Complex> trace_set(const MapParams& p) {
  std::vector<Complex> out;
  for (const auto& r : fixed_points(p)) out.push_back(r.trace);
  return out;
}

namespace {

// Reorder b to best match a (Hungarian on |a_i - b_j|).
std::vector<Complex> matched(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) cost[i][j] = std::abs(a[i] - b[j]);
  const auto assign = hungarian(cost);
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[assign[i]];
  return out;
}

}  // namespace

TraceRankReport trace_map_rank(const MapParams& p0, double step, double rank_tol) {
  for (const auto& [l, al] : p0.a)
    if (al != Complex(0)) throw InvalidArgument("trace_map_rank: requires a = 0");
  TraceRankReport rep;
  const int k = p0.k;
  for (int l = 2; l <= k - 2; l += 2) rep.parameters.push_back(l);
  rep.expected = rep.parameters.size();
  MapParams base = p0;
  base.a.clear();
  for (const auto& r : fixed_points(base)) rep.zeta.push_back(r.zeta);
  const std::size_t rows = rep.zeta.size(), cols = rep.parameters.size();
  rep.analytic.assign(rows, std::vector<Complex>(cols));
  rep.finite_difference.assign(rows, std::vector<Complex>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    const int l = rep.parameters[j];
    for (std::size_t i = 0; i < rows; ++i)
      rep.analytic[i][j] = static_cast<double>(k - l) / ipow(rep.zeta[i], static_cast<unsigned>(l + 1));
    // Perturbed fixed points are matched to the base ones, then their traces differenced.
    std::vector<Complex> side[2];
    for (int sgn = 0; sgn < 2; ++sgn) {
      MapParams q = base;
      q.a[l] = Complex(sgn == 0 ? step : -step, 0.0);
      std::vector<Complex> z, t;
      for (const auto& r : fixed_points(q)) {
        z.push_back(r.zeta);
        t.push_back(r.trace);
      }
      std::vector<std::vector<double>> cost(rows, std::vector<double>(rows));
      for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t b = 0; b < rows; ++b) cost[a][b] = std::abs(rep.zeta[a] - z[b]);
      const auto assign = hungarian(cost);
      for (std::size_t a = 0; a < rows; ++a) side[sgn].push_back(t[assign[a]]);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      rep.finite_difference[i][j] = (side[0][i] - side[1][i]) / (2.0 * step);
      rep.max_difference = std::max(rep.max_difference, std::abs(rep.finite_difference[i][j] - rep.analytic[i][j]));
    }
  }
  if (cols > 0) {
    rep.singular_values = singular_values(rep.analytic);
    rep.rank = numerical_rank(rep.analytic, rank_tol);
    rep.rank_fd = numerical_rank(rep.finite_difference, rank_tol);
  }
  return rep;
}

double trace_set_distance(const MapParams& p, const MapParams& q) {
  const auto a = trace_set(p);
  const auto b = matched(a, trace_set(q));
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool trace_set_separation(const MapParams& p, const MapParams& q, double tol) {
  if (p.n != q.n || p.k != q.k || c_value<double>(p) != c_value<double>(q))
    throw InvalidArgument("trace_set_separation: (n, k, c) must agree");
  return trace_set_distance(p, q) > tol;
}

Orbit iterate_orbit(const MapParams& p, const AffinePoint& start, std::size_t m, bool inverse,
                    const MapTolerances& tol) {
  Orbit o;
  o.points.reserve(m + 1);
  o.points.push_back(start);
  AffinePoint cur = start;
  for (std::size_t i = 0; i < m; ++i) {
    try {
      cur = inverse ? eval_f_inverse(p, cur, tol) : eval_f(p, cur, tol);
    } catch (const PoleError&) {
      o.status = OrbitStatus::pole;
      return o;
    } catch (const OverflowError&) {
      o.status = OrbitStatus::escaped;
      return o;
    }
    o.points.push_back(cur);
  }
  return o;
}

namespace {

using P2 = std::array<double, 2>;

double dist(const P2& a, const P2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

struct Grower {
  const MapParams& p;
  MapTolerances tol;
  P2 base, dir;
  int period;  // 1, or 2 when the unstable eigenvalue is negative

  // g^iter applied to the seed point base + t dir; false at a pole or overflow.
  bool image(double t, int iter, P2& out) const {
    AffinePoint q{Complex(base[0] + t * dir[0], 0.0), Complex(base[1] + t * dir[1], 0.0)};
    try {
      for (int i = 0; i < iter * period; ++i) q = eval_f(p, q, tol);
    } catch (const Error&) {
      return false;
    }
    out = {q.x.real(), q.y.real()};
    return true;
  }
};

}  // namespace

Polyline unstable_manifold(const MapParams& p, const FixedPointRecord& fp, const ManifoldOptions& opt, int branch) {
  if (fp.type != FixedPointType::saddle) throw NotSaddleError("unstable_manifold: fixed point is not a real saddle");
  if (!has_real_coefficients(p)) throw InvalidArgument("unstable_manifold: map coefficients must be real");
  if (!(opt.spacing > 0) || !(opt.seed_length > 0) || opt.samples < 2)
    throw InvalidArgument("unstable_manifold: spacing, seed length and samples must be positive");
  const double lambda = fp.eigenvalues[0].real();
  const double z = fp.zeta.real();
  const double norm = std::hypot(1.0, lambda);
  const double sgn = branch >= 0 ? 1.0 : -1.0;
  Grower g{p, MapTolerances{}, {z, z}, {sgn / norm, sgn * lambda / norm}, lambda < 0 ? 2 : 1};
  g.tol.magnitude_cap = opt.escape_radius * 10;
  const double mu = lambda < 0 ? lambda * lambda : lambda;

  Polyline line;
  line.kind = "unstable";
  line.branch = branch >= 0 ? 1 : -1;
  line.zeta = fp.zeta;
  line.eigenvalue = lambda;
  line.spacing = opt.spacing;
  line.period = g.period;

  // Fundamental domain [eps, eps*mu] on the eigenvector, sampled geometrically.
  std::vector<double> ts;
  for (std::size_t i = 0; i < opt.samples; ++i)
    ts.push_back(opt.seed_length * std::pow(mu, static_cast<double>(i) / static_cast<double>(opt.samples - 1)));

  double total = 0;
  auto push = [&](const P2& q, int iter) {
    if (!line.points.empty()) total += dist(line.points.back(), q);
    line.points.push_back(q);
    line.arclength.push_back(total);
    line.generation.push_back(iter);
  };
  for (int iter = 0;; ++iter) {
    std::vector<std::pair<double, P2>> seg;
    for (double t : ts) {
      P2 q;
      if (!g.image(t, iter, q)) {
        line.escaped = true;
        break;
      }
      seg.emplace_back(t, q);
    }
    if (line.escaped && seg.size() < 2) break;
    // Refine in seed space where consecutive images are too far apart.
    std::vector<std::pair<double, P2>> refined{seg.front()};
    for (std::size_t i = 1; i < seg.size(); ++i) {
      std::vector<std::pair<double, P2>> stack{seg[i]};
      while (!stack.empty()) {
        const auto& a = refined.back();
        const auto b = stack.back();
        if (dist(a.second, b.second) <= opt.spacing || b.first - a.first <= 1e-15 * b.first) {
          refined.push_back(b);
          stack.pop_back();
          continue;
        }
        const double tm = 0.5 * (a.first + b.first);
        P2 q;
        if (!g.image(tm, iter, q)) {
          line.escaped = true;
          stack.clear();
          break;
        }
        stack.emplace_back(tm, q);
        if (refined.size() + stack.size() + line.points.size() > opt.max_points) {
          line.capped = true;
          break;
        }
      }
      if (line.escaped || line.capped) break;
    }
    for (std::size_t i = (iter == 0 ? 0 : 1); i < refined.size(); ++i) {
      const P2& q = refined[i].second;
      if (std::hypot(q[0], q[1]) > opt.escape_radius) {
        line.escaped = true;
        break;
      }
      push(q, iter);
      if (total >= opt.arclength || line.points.size() >= opt.max_points) break;
    }
    if (line.points.size() >= opt.max_points) line.capped = true;
    if (line.escaped || line.capped || total >= opt.arclength) break;
  }
  return line;
}

Polyline stable_from_unstable(const Polyline& unstable) {
  Polyline s = unstable;
  s.kind = "stable";
  for (auto& q : s.points) std::swap(q[0], q[1]);
  return s;
}

double distance_to_polyline(const Polyline& line, const std::array<double, 2>& q) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < line.points.size(); ++i) {
    const auto& a = line.points[i];
    const auto& b = line.points[i + 1];
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((q[0] - a[0]) * dx + (q[1] - a[1]) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::hypot(q[0] - a[0] - t * dx, q[1] - a[1] - t * dy));
  }
  if (line.points.size() == 1) best = dist(line.points[0], q);
  return best;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

std::string orbits_to_csv(const std::vector<Orbit>& orbits) {
  std::ostringstream os;
  os << "seed_id,step,x,y\n";
  for (std::size_t s = 0; s < orbits.size(); ++s)
    for (std::size_t i = 0; i < orbits[s].points.size(); ++i)
      os << s << ',' << i << ',' << fmt(orbits[s].points[i].x.real()) << ',' << fmt(orbits[s].points[i].y.real()) << '\n';
  return os.str();
}

std::string polylines_to_csv(const std::vector<Polyline>& lines) {
  std::ostringstream os;
  os << "seed_id,step,x,y\n";
  for (std::size_t s = 0; s < lines.size(); ++s)
    for (std::size_t i = 0; i < lines[s].points.size(); ++i)
      os << s << ',' << i << ',' << fmt(lines[s].points[i][0]) << ',' << fmt(lines[s].points[i][1]) << '\n';
  return os.str();
}

std::string polyline_to_json(const Polyline& line) {
  nlohmann::json j;
  j["metadata"] = {{"kind", line.kind},
                   {"branch", line.branch},
                   {"fixed_point", complex_json(line.zeta)},
                   {"eigenvalue", line.eigenvalue},
                   {"spacing", line.spacing},
                   {"period", line.period},
                   {"arclength", line.arclength.empty() ? 0.0 : line.arclength.back()},
                   {"points", line.points.size()},
                   {"escaped", line.escaped},
                   {"capped", line.capped}};
  j["points"] = line.points;
  return j.dump();
}

std::string fixed_points_to_json(const std::vector<FixedPointRecord>& fps) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : fps)
    arr.push_back({{"zeta", complex_json(r.zeta)},
                   {"trace", complex_json(r.trace)},
                   {"eigenvalues", {complex_json(r.eigenvalues[0]), complex_json(r.eigenvalues[1])}},
                   {"type", to_string(r.type)},
                   {"multiplicity", r.multiplicity},
                   {"residual", r.residual},
                   {"det_error", r.det_error}});
  return arr.dump();
}

}  // namespace ratsurf
