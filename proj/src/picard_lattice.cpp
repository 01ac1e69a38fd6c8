#include "ratsurf/picard_lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ratsurf/numeric.hpp"

namespace ratsurf {

void validate_nk(int n, int k) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  if (k < 2 || k % 2 != 0) throw InvalidArgument("k must be an even integer >= 2");
  if (n * k <= k + 2) throw InvalidArgument("(n,k) must satisfy nk > k+2; (2,2) has zero entropy");
}

std::size_t Lattice::index(int s, int j) const {
  if (s < 0 || s >= n || j < 1 || j > 2 * k + 1) throw InvalidArgument("basis index out of range");
  return 1 + static_cast<std::size_t>(s) * static_cast<std::size_t>(2 * k + 1) + static_cast<std::size_t>(j - 1);
}

IntVector Lattice::unit(std::size_t i) const {
  IntVector v(dim, 0);
  v.at(i) = 1;
  return v;
}

IntMatrix Lattice::s_basis() const {
  std::vector<IntVector> cols{sigma0};
  for (int s = 0; s < n; ++s)
    for (int j = 1; j <= 2 * k; ++j) cols.push_back(F[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]);
  return IntMatrix::from_columns(cols);
}

IntMatrix Lattice::strict_basis() const {
  std::vector<IntVector> cols{sigma0};
  for (int s = 0; s < n; ++s)
    for (int j = 1; j <= 2 * k + 1; ++j) cols.push_back(F[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]);
  return IntMatrix::from_columns(cols);
}

std::size_t Lattice::strict_index(int s, int j) const { return index(s, j); }

Lattice build_lattice(int n, int k) {
  validate_nk(n, k);
  Lattice lat;
  lat.n = n;
  lat.k = k;
  lat.dim = 1 + static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * k + 1);
  lat.Q = IntMatrix::identity(lat.dim);
  for (std::size_t i = 1; i < lat.dim; ++i) lat.Q(i, i) = -1;
  lat.K.assign(lat.dim, 1);
  lat.K[0] = -3;

  lat.sigma0 = lat.unit(0);
  for (int s = 0; s < n; ++s) lat.sigma0[lat.index(s, 1)] -= 1;

  lat.F.assign(static_cast<std::size_t>(n), std::vector<IntVector>(static_cast<std::size_t>(2 * k + 2)));
  for (int s = 0; s < n; ++s) {
    auto& limb = lat.F[static_cast<std::size_t>(s)];
    // F^2..F^{k+1} are centered on F^1, the rest form a chain.
    limb[1] = lat.unit(lat.index(s, 1));
    for (int j = 2; j <= k + 1; ++j) limb[1][lat.index(s, j)] -= 1;
    for (int j = 2; j <= 2 * k; ++j) {
      limb[static_cast<std::size_t>(j)] = lat.unit(lat.index(s, j));
      limb[static_cast<std::size_t>(j)][lat.index(s, j + 1)] = -1;
    }
    limb[static_cast<std::size_t>(2 * k + 1)] = lat.unit(lat.index(s, 2 * k + 1));

    IntVector l = lat.unit(0);
    l[lat.index(s, 1)] = -1;
    l[lat.index(s, 2)] = -1;
    lat.L.push_back(l);
  }
  return lat;
}

IntMatrix limb_gram_expected(int k) {
  const std::size_t m = static_cast<std::size_t>(2 * k);
  IntMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i) a(i, i) = -2;
  a(0, 0) = -(k + 1);
  for (std::size_t i = 1; i + 1 < m; ++i) a(i, i + 1) = a(i + 1, i) = 1;
  a(0, static_cast<std::size_t>(k)) = a(static_cast<std::size_t>(k), 0) = 1;
  return a;
}

LatticeSummary summarize(const Lattice& lat) {
  LatticeSummary out;
  const int n = lat.n, k = lat.k;
  const IntMatrix expected = limb_gram_expected(k);
  out.limb_gram_ok = true;
  for (int s = 0; s < n; ++s)
    for (int i = 1; i <= 2 * k; ++i)
      for (int j = 1; j <= 2 * k; ++j)
        if (lat.dot(lat.F[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)],
                    lat.F[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]) !=
            expected(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)))
          out.limb_gram_ok = false;
  out.sigma0_ok = lat.dot(lat.sigma0, lat.sigma0) == 1 - n;
  for (int s = 0; s < n; ++s)
    if (lat.dot(lat.sigma0, lat.F[static_cast<std::size_t>(s)][1]) != 1) out.sigma0_ok = false;

  const IntMatrix g = gram(lat.s_basis(), lat.Q);
  out.s_minors = leading_principal_minors(g);
  out.negative_definite = true;
  for (std::size_t i = 0; i < out.s_minors.size(); ++i) {
    // Negative definite iff the r-th leading minor has sign (-1)^r.
    const int want = (i % 2 == 0) ? -1 : 1;
    if (out.s_minors[i].sign() != want) out.negative_definite = false;
  }
  out.det_s = out.s_minors.back();
  Integer pk = 1;
  for (int s = 0; s < n; ++s) pk *= Integer((k + 2) * k);
  out.det_formula = (Rational(1) - Rational(n * k, k + 2)) * Rational(pk);
  out.k_squared = lat.dot(lat.K, lat.K);
  return out;
}

std::vector<int> anticanonical_limb_coefficients(int k) {
  std::vector<int> c(static_cast<std::size_t>(2 * k));
  c[0] = 2;
  for (int j = 2; j <= k + 1; ++j) c[static_cast<std::size_t>(j - 1)] = j - 1;
  for (int j = k + 2; j <= 2 * k; ++j) c[static_cast<std::size_t>(j - 1)] = 2 * k + 1 - j;
  return c;
}

IntVector anticanonical_from_strict(const Lattice& lat) {
  IntVector v(lat.dim, 0);
  for (std::size_t i = 0; i < lat.dim; ++i) v[i] += 3 * lat.sigma0[i];
  const auto coeff = anticanonical_limb_coefficients(lat.k);
  for (int s = 0; s < lat.n; ++s)
    for (int j = 1; j <= 2 * lat.k; ++j) {
      const auto& f = lat.F[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < lat.dim; ++i) v[i] += coeff[static_cast<std::size_t>(j - 1)] * f[i];
    }
  return v;
}

namespace {

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1) throw DegenerateError("matrix has a non-integral entry");
      out(i, j) = numerator(m(i, j));
    }
  return out;
}

}  // namespace

IntMatrix pushforward_matrix(int n, int k) {
  const Lattice lat = build_lattice(n, k);
  // Images of the strict-transform basis, column by column in strict_basis() order.
  std::vector<IntVector> img{lat.sigma0};
  for (int s = 0; s < n; ++s)
    for (int j = 1; j <= 2 * k + 1; ++j) {
      if (s < n - 1)
        img.push_back(lat.F[static_cast<std::size_t>(s + 1)][static_cast<std::size_t>(j)]);
      else if (j == 1)
        img.push_back(lat.F[0][1]);
      else if (j == 2 * k + 1)
        img.push_back(lat.L[0]);
      else
        img.push_back(lat.F[0][static_cast<std::size_t>(2 * k + 2 - j)]);
    }
  const RatMatrix m = to_rational(IntMatrix::from_columns(img)) * inverse(to_rational(lat.strict_basis()));
  return to_integer(m);
}

IntMatrix pushforward_matrix(const MapParams& p) { return pushforward_matrix(p.n, p.k); }

IntPoly chi_poly(int n, int k) {
  validate_nk(n, k);
  std::vector<Integer> c(static_cast<std::size_t>(n + 1), Integer(-k));
  c.front() = 1;
  c.back() = 1;
  return IntPoly(std::move(c));
}

namespace {

unsigned euler_phi(unsigned d) {
  unsigned result = d;
  for (unsigned p = 2; p * p <= d; ++p)
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      result -= result / p;
    }
  if (d > 1) result -= result / d;
  return result;
}

}  // namespace

SpectrumReport spectrum(int n, int k) {
  SpectrumReport r;
  r.chi = chi_poly(n, k);
  r.char_poly = char_poly(pushforward_matrix(n, k));
  const auto div = divide(r.char_poly, r.chi);
  r.divisible = div.remainder.is_zero();
  r.cofactor = div.quotient;

  IntPoly rest = r.cofactor;
  const unsigned deg = static_cast<unsigned>(std::max(0, rest.degree()));
  const unsigned bound = 2 * deg * deg + 2;
  for (unsigned d = 1; d <= bound && rest.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<unsigned>(rest.degree())) continue;
    const IntPoly phi = cyclotomic(d);
    unsigned mult = 0;
    while (rest.degree() >= phi.degree()) {
      const auto q = divide(rest, phi);
      if (!q.remainder.is_zero()) break;
      rest = q.quotient;
      ++mult;
    }
    if (mult > 0) r.cyclotomic.push_back({d, mult});
  }
  r.cyclotomic_remainder = rest;

  if (r.cofactor.degree() > 0) {
    const RatPoly sq = squarefree_part(to_rational(r.cofactor));
    std::vector<Complex> c;
    for (const auto& x : sq.coeffs()) c.emplace_back(static_cast<double>(x), 0.0);
    for (const auto& z : polynomial_roots(c)) r.max_unit_deviation = std::max(r.max_unit_deviation, std::abs(std::abs(z) - 1.0));
  }
  r.lambda = largest_real_root(r.chi);
  r.entropy = std::log(r.lambda);
  return r;
}

double spectral_radius(int n, int k) { return largest_real_root(chi_poly(n, k)); }

TProjection t_projection(const Lattice& lat) {
  TProjection tp;
  tp.n = lat.n;
  tp.k = lat.k;
  const RatMatrix q = to_rational(lat.Q);
  const RatMatrix bs = to_rational(lat.s_basis());
  const RatMatrix gs_inv = inverse(bs.transpose() * q * bs);
  tp.projector = RatMatrix::identity(lat.dim) - bs * gs_inv * bs.transpose() * q;
  std::vector<RatVector> cols;
  for (int s = 0; s < lat.n; ++s) cols.push_back(tp.projector.column(lat.index(s, 2 * lat.k + 1)));
  tp.gamma = RatMatrix::from_columns(cols);
  tp.gram = tp.gamma.transpose() * q * tp.gamma;
  tp.gram_inverse = inverse(tp.gram);
  return tp;
}

RatVector project_to_T(const Lattice& lat, const TProjection& tp, const RatVector& v) {
  const RatVector t = tp.projector.apply(v);
  const RatVector qt = to_rational(lat.Q).apply(t);
  return tp.gram_inverse.apply(tp.gamma.transpose().apply(qt));
}

RatVector project_to_T(const Lattice& lat, const TProjection& tp, const IntVector& v) {
  return project_to_T(lat, tp, to_rational(v));
}

IntMatrix restricted_action_T(int n, int k) {
  validate_nk(n, k);
  const std::size_t m = static_cast<std::size_t>(n);
  IntMatrix c(m, m);
  for (std::size_t s = 0; s + 1 < m; ++s) c(s + 1, s) = 1;
  c(0, m - 1) = -1;
  for (std::size_t s = 1; s < m; ++s) c(s, m - 1) = k;
  return c;
}

RatMatrix restricted_action_from_lattice(const Lattice& lat, const TProjection& tp, const IntMatrix& M) {
  const RatMatrix mr = to_rational(M);
  std::vector<RatVector> cols;
  for (int s = 0; s < lat.n; ++s) cols.push_back(project_to_T(lat, tp, mr.apply(tp.gamma.column(static_cast<std::size_t>(s)))));
  return RatMatrix::from_columns(cols);
}

GramProportionality gamma_gram_proportionality(const TProjection& tp) {
  GramProportionality g;
  g.delta = Rational(2 - (tp.n - 2) * tp.k);
  g.epsilon = Rational(tp.k);
  g.scale = tp.gram(0, 1) / g.epsilon;
  g.proportional = true;
  for (std::size_t i = 0; i < tp.gram.rows(); ++i)
    for (std::size_t j = 0; j < tp.gram.cols(); ++j)
      if (tp.gram(i, j) != g.scale * (i == j ? g.delta : g.epsilon)) g.proportional = false;
  return g;
}

GammaClosedForm gamma_closed_form(const Lattice& lat, const TProjection& tp, int s) {
  const int n = lat.n, k = lat.k;
  if (s < 0 || s >= n) throw InvalidArgument("limb index out of range");
  if (k == 2 * n - 2) throw DegenerateError("closed form for gamma_s has a vanishing denominator at k = 2n-2");
  GammaClosedForm out;
  out.s = s;
  const int t = (s + 1) % n;
  const Rational d = Rational(k * (k + 2) * (k - 2 * n + 2));
  out.displayed = {Rational(-4 * (k * (n - 3) + 2 * (n - 2))) / d, Rational(-2 * (4 - k * k)) / d,
                   Rational(2 * (k - (n - 2) * (k * k + 2 * k - 1))) / (d * k), Rational(2 * (4 * k - 2 - k * k * k)) / (d * k)};

  const RatMatrix strict = to_rational(lat.strict_basis());
  const RatVector gamma_s = tp.gamma.column(static_cast<std::size_t>(s));
  const RatVector coords = solve(strict, gamma_s);
  out.exact = {coords[lat.strict_index(s, 2 * k + 1)], coords[lat.strict_index(t, 2 * k + 1)], coords[lat.strict_index(s, 2 * k)],
               coords[lat.strict_index(t, 2 * k)]};
  out.matches = out.displayed == out.exact;

  const RatMatrix q = to_rational(lat.Q);
  auto dot = [&](const RatVector& a, const RatVector& b) { return pairing(a, q, b); };
  auto fr = [&](int u, int j) { return to_rational(lat.F[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)]); };
  auto axpy = [](RatVector& y, const Rational& a, const RatVector& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  };
  auto v_cls = [&](int u) {
    RatVector v = fr(u, 1);
    for (int i = 2; i <= k; ++i) axpy(v, Rational(i - 1), fr(u, i));
    for (int i = k + 1; i <= 2 * k; ++i) axpy(v, Rational(k), fr(u, i));
    return v;
  };
  auto u_cls = [&](int u) {
    RatVector v(lat.dim, 0);
    for (int i = 2; i <= 2 * k; ++i) axpy(v, Rational(i - 1), fr(u, i));
    return v;
  };
  auto varpi = [&](int u) {
    RatVector v = to_rational(lat.sigma0);
    for (int i = 0; i < n; ++i)
      if (i != u) axpy(v, 1, v_cls(i));
    for (auto& x : v) x *= -k;
    axpy(v, 1, u_cls(u));
    return v;
  };
  auto varrho = [&](int u) {
    RatVector v = varpi(u);
    for (int i = 0; i < n; ++i)
      if (i != u) axpy(v, Rational(-k * k), fr(i, 2 * k + 1));
    axpy(v, Rational(2 * k), fr(u, 2 * k + 1));
    return v;
  };

  const RatVector rho_s = varrho(s), pi_s = varpi(s);
  out.varrho_in_T = dot(rho_s, to_rational(lat.sigma0)) == 0;
  for (int u = 0; u < n; ++u)
    for (int j = 1; j <= 2 * k; ++j)
      if (dot(rho_s, fr(u, j)) != 0) out.varrho_in_T = false;
  const RatVector pi_t = tp.projector.apply(pi_s);
  out.varpi_in_S = std::all_of(pi_t.begin(), pi_t.end(), [](const Rational& x) { return x == 0; });

  const Rational a = Rational(k / 2 + 2 - n);
  RatVector lhs(lat.dim, 0);
  axpy(lhs, Rational(k * k * (k / 2 + 1) * (k / 2 + 1 - n)), fr(s, 2 * k + 1));
  RatVector rhs(lat.dim, 0);
  axpy(rhs, a, rho_s);
  axpy(rhs, -a, pi_s);
  for (int j = 0; j < n; ++j)
    if (j != s) {
      axpy(rhs, 1, varrho(j));
      axpy(rhs, -1, varpi(j));
    }
  out.bracket_identity = lhs == rhs;

  const Rational pd = d * k;
  out.displayed_products = {Rational(2 * ((n - 4) * k * k + (2 * n - 3) * k + n - 2)) / pd,
                            Rational(-4 * (k * k * k - 4 * k + 1)) / pd};
  const RatVector gamma0 = tp.gamma.column(0);
  out.exact_products = {dot(fr(0, 2 * k), gamma0), dot(fr(1 % n, 2 * k), gamma0)};
  return out;
}

std::vector<Integer> degree_sequence(const IntMatrix& M, int count) {
  std::vector<Integer> d;
  IntVector v(M.cols(), 0);
  v[0] = 1;
  for (int m = 0; m < count; ++m) {
    d.push_back(v[0]);
    v = M.apply(v);
  }
  return d;
}

DegreeReport degree_report(int n, int k, int m) {
  if (m < 1) throw InvalidArgument("degree count must be positive");
  const IntMatrix M = pushforward_matrix(n, k);
  DegreeReport r;
  r.degrees = degree_sequence(M, m + 2);
  const IntPoly p = char_poly(M);
  const auto& c = p.coeffs();
  const std::size_t deg = static_cast<std::size_t>(p.degree());
  r.recurrence_holds = true;
  for (std::size_t start = 0; start + deg < r.degrees.size(); ++start) {
    Integer acc = 0;
    for (std::size_t i = 0; i <= deg; ++i) acc += c[i] * r.degrees[start + i];
    if (acc != 0) r.recurrence_holds = false;
  }
  const std::size_t last = r.degrees.size() - 1;
  r.last_ratio = static_cast<double>(Rational(r.degrees[last], r.degrees[last - 1]));
  r.lambda = spectral_radius(n, k);
  return r;
}

MinimalityData minimality_data(const Lattice& lat) {
  MinimalityData md;
  md.curves.push_back({"Sigma0", lat.dot(lat.sigma0, lat.sigma0)});
  for (int s = 0; s < lat.n; ++s)
    for (int j = 1; j <= 2 * lat.k; ++j) {
      const auto& f = lat.F[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
      md.curves.push_back({"F^" + std::to_string(j) + "_" + std::to_string(s), lat.dot(f, f)});
    }
  md.minimal = std::all_of(md.curves.begin(), md.curves.end(), [](const auto& c) { return c.square <= -2; });
  if (lat.n == 2) {
    md.contractible_sigma0 = md.curves.front().square == -1;
    // Blowing down a (-1)-curve E raises C^2 by (C.E)^2.
    const Integer m = lat.dot(lat.sigma0, lat.F[0][1]);
    md.f1_after_contraction = lat.dot(lat.F[0][1], lat.F[0][1]) + m * m;
    md.contraction_stops = true;
    for (int s = 0; s < lat.n; ++s)
      for (int j = 1; j <= 2 * lat.k; ++j) {
        const auto& f = lat.F[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
        const Integer e = lat.dot(lat.sigma0, f);
        if (lat.dot(f, f) + e * e > -2) md.contraction_stops = false;
      }
  }
  return md;
}

Rational restricted_fixed_determinant(int n, int k) {
  const IntMatrix c = restricted_action_T(n, k);
  return Rational(determinant(c - IntMatrix::identity(c.rows())));
}

std::string matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows.dump();
}

std::string poly_to_json(const IntPoly& p) {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.str());
  return c.dump();
}

}  // namespace ratsurf
