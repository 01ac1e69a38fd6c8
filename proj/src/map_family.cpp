#include "ratsurf/map_family.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>

namespace ratsurf {

using json = nlohmann::json;

void validate(const MapParams& p, const MapTolerances& tol) {
  if (p.n < 2) throw InvalidArgument("n must be at least 2");
  if (p.k < 2 || p.k % 2 != 0) throw InvalidArgument("k must be an even integer >= 2");
  if (p.n * p.k <= p.k + 2) throw InvalidArgument("(n,k) must satisfy nk > k+2; (2,2) has zero entropy");
  for (const auto& [l, v] : p.a) {
    if (l % 2 != 0 || l < 2 || l > p.k - 2)
      throw InvalidArgument("coefficient a_" + std::to_string(l) + " is not an even index in [2, k-2]");
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw InvalidArgument("non-finite coefficient");
  }
  if (!std::isfinite(p.delta.real()) || !std::isfinite(p.delta.imag()) || p.delta == Complex(0))
    throw InvalidArgument("delta must be finite and nonzero");
  if (p.c.symbolic) {
    if (p.c.j <= 0 || p.c.j >= p.n) throw InvalidArgument("c index j must satisfy 0 < j < n");
    if (std::gcd(p.c.j, p.n) != 1) throw InvalidArgument("c index j must be coprime to n");
    if (p.c.sign != 1 && p.c.sign != -1) throw InvalidArgument("c sign must be +1 or -1");
  } else if (!std::isfinite(p.c.value)) {
    throw InvalidArgument("c must be finite");
  }
  const auto orbit = orbit_w(p, tol.membership);
  if (p.delta == Complex(1) && orbit.w_star && std::abs(*orbit.w_star - Complex(1)) >= tol.membership)
    throw PeriodicityError("c is not in C_n: w_* != 1 for odd n");
}

bool proj_equal(const ProjPoint<Complex>& a, const ProjPoint<Complex>& b, double tol) {
  const double na = std::max({std::abs(a.x0), std::abs(a.x1), std::abs(a.x2)});
  const double nb = std::max({std::abs(b.x0), std::abs(b.x1), std::abs(b.x2)});
  if (na == 0 || nb == 0) throw InvalidArgument("zero vector is not a projective point");
  const double scale = na * nb;
  return std::abs(a.x0 * b.x1 - a.x1 * b.x0) <= tol * scale && std::abs(a.x0 * b.x2 - a.x2 * b.x0) <= tol * scale &&
         std::abs(a.x1 * b.x2 - a.x2 * b.x1) <= tol * scale;
}

namespace {

Complex pole_terms(const MapParams& p, Complex y) {
  const Complex inv = 1.0 / y;
  // ipow keeps real inputs exactly real.
  Complex sum = ipow(inv, static_cast<unsigned>(p.k));
  for (const auto& [l, al] : p.a) sum += al * ipow(inv, static_cast<unsigned>(l));
  return sum;
}

void check_cap(const AffinePoint& q, const MapTolerances& tol) {
  if (!(std::abs(q.x) <= tol.magnitude_cap && std::abs(q.y) <= tol.magnitude_cap))
    throw OverflowError("image exceeds magnitude cap");
}

}  // namespace

AffinePoint eval_f(const MapParams& p, const AffinePoint& pt, const MapTolerances& tol) {
  if (std::abs(pt.y) < tol.pole) throw PoleError("eval_f: y is at the pole line y = 0");
  const Complex c = c_value<double>(p);
  AffinePoint q{pt.y, -p.delta * pt.x + c * pt.y + pole_terms(p, pt.y)};
  check_cap(q, tol);
  return q;
}

AffinePoint eval_f_inverse(const MapParams& p, const AffinePoint& pt, const MapTolerances& tol) {
  if (std::abs(pt.x) < tol.pole) throw PoleError("eval_f_inverse: x is at the pole line x = 0");
  const Complex c = c_value<double>(p);
  AffinePoint q{(c * pt.x + pole_terms(p, pt.x) - pt.y) / p.delta, pt.x};
  check_cap(q, tol);
  return q;
}

ProjPoint<Complex> eval_f_proj(const MapParams& p, const ProjPoint<Complex>& pt, double indeterminacy_tol) {
  return eval_f_proj(coefficients<Complex>(p), pt, indeterminacy_tol);
}

std::vector<double> candidate_c(int n) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  std::vector<double> out;
  for (int j = 1; j < n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    MapParams p;
    p.n = n;
    p.c = CSpec::cosine(j);
    const double v = c_value<double>(p);
    bool dup = false;
    for (double u : out) dup = dup || std::abs(u - v) < 1e-12;
    if (!dup) out.push_back(v);
  }
  return out;
}

std::vector<CMember> compute_C_n(int n, double tol) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  std::vector<CMember> out;
  for (int j = 1; j < n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    MapParams p;
    p.n = n;
    p.c = CSpec::cosine(j);
    if (n % 2 == 1) {
      InfinityOrbit o;
      try {
        o = orbit_w(coefficients<Complex>(p), tol);
      } catch (const PeriodicityError&) {
        continue;
      }
      if (!o.w_star || std::abs(*o.w_star - Complex(1)) >= tol) continue;
    }
    out.push_back({j, c_value<double>(p)});
  }
  return out;
}

InfinityOrbit orbit_w(const MapParams& p, double tol) { return orbit_w(coefficients<Complex>(p), tol); }

Complex q_poly(const MapParams& p, Complex x, Complex y) {
  const Complex c = c_value<double>(p);
  Complex q = 1.0 - x * std::pow(y, p.k) + c * std::pow(y, p.k + 1);
  for (const auto& [l, al] : p.a)
    if (l % 2 == 0 && l >= 2 && l <= p.k - 2) q += al * std::pow(y, p.k - l);
  return q;
}

BCoefficients b_coefficients(const MapParams& p) { return b_coefficients(coefficients<Complex>(p)); }

double b_series_residual(const MapParams& p, const BCoefficients& b) {
  const int k = p.k;
  const Complex c = c_value<double>(p);
  std::vector<Complex> qc(static_cast<std::size_t>(2 * k + 1), 0.0), qx(static_cast<std::size_t>(2 * k + 1), 0.0);
  qc[0] = 1.0;
  for (const auto& [l, al] : p.a) qc[static_cast<std::size_t>(k - l)] += al;
  if (k + 1 <= 2 * k) qc[static_cast<std::size_t>(k + 1)] += c;
  qx[static_cast<std::size_t>(k)] = -1.0;
  double worst = 0;
  for (int i = 0; i <= 2 * k; ++i) {
    Complex cc = 0, cx = 0;
    for (int j = 0; j <= i; ++j) {
      cc += qc[static_cast<std::size_t>(j)] * b.b[static_cast<std::size_t>(i - j)];
      cx += qc[static_cast<std::size_t>(j)] * b.bx[static_cast<std::size_t>(i - j)] +
            qx[static_cast<std::size_t>(j)] * b.b[static_cast<std::size_t>(i - j)];
    }
    if (i == k) cc -= 1.0;
    worst = std::max({worst, std::abs(cc), std::abs(cx)});
  }
  return worst;
}

namespace {

Complex complex_from_json(const json& v, const char* what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw InvalidArgument(std::string(what) + " must be a number or [re, im]");
}

}  // namespace

MapParams params_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("parameter JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("parameter JSON must be an object");
  MapParams p;
  try {
    p.n = j.at("n").get<int>();
    p.k = j.at("k").get<int>();
    if (j.contains("c")) {
      const auto& c = j["c"];
      if (c.is_number()) {
        p.c = CSpec::explicit_value(c.get<double>());
      } else if (c.is_object()) {
        const std::string sign = c.value("sign", std::string("+"));
        if (sign != "+" && sign != "-") throw InvalidArgument("c.sign must be \"+\" or \"-\"");
        p.c = CSpec::cosine(c.at("j").get<int>(), sign == "+" ? 1 : -1);
      } else {
        throw InvalidArgument("c must be a number or {\"j\", \"sign\"}");
      }
    }
    if (j.contains("a")) {
      if (!j["a"].is_object()) throw InvalidArgument("a must be an object keyed by index");
      for (const auto& [key, v] : j["a"].items()) p.a[std::stoi(key)] = complex_from_json(v, "a entry");
    }
    if (j.contains("delta")) p.delta = complex_from_json(j["delta"], "delta");
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("parameter JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("parameter JSON: a keys must be integers");
  }
  return p;
}

std::string params_to_json(const MapParams& p) {
  json j;
  j["n"] = p.n;
  j["k"] = p.k;
  if (p.c.symbolic)
    j["c"] = {{"j", p.c.j}, {"sign", p.c.sign > 0 ? "+" : "-"}};
  else
    j["c"] = p.c.value;
  j["a"] = json::object();
  for (const auto& [l, v] : p.a) j["a"][std::to_string(l)] = {v.real(), v.imag()};
  j["delta"] = {p.delta.real(), p.delta.imag()};
  return j.dump();
}

MapParams default_params(int n, int k) {
  const auto cs = compute_C_n(n);
  if (cs.empty()) throw PeriodicityError("no admissible c for n = " + std::to_string(n));
  MapParams p;
  p.n = n;
  p.k = k;
  p.c = CSpec::cosine(cs.front().j);
  validate(p);
  return p;
}

MapParams figure1_params() {
  MapParams p;
  p.n = 2;
  p.k = 4;
  p.c = CSpec::cosine(1);
  p.a[2] = Complex(-2.64, 0.0);
  return p;
}

}  // namespace ratsurf
