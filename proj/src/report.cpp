#include "ratsurf/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ratsurf/blowup_charts.hpp"
#include "ratsurf/fixed_dynamics.hpp"
#include "ratsurf/picard_lattice.hpp"
#include "ratsurf/reflection_groups.hpp"

namespace ratsurf {

using nlohmann::json;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::report: return "report";
  }
  return "?";
}

bool VerdictReport::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

void VerdictReport::exact(const std::string& id, bool ok, const std::string& detail) {
  checks.push_back({id, ok ? CheckStatus::pass : CheckStatus::fail, ok ? 0.0 : 1.0, 0.0, detail});
}

void VerdictReport::bounded(const std::string& id, double residual, double bound, const std::string& detail) {
  const bool ok = residual <= bound;  // false for NaN
  checks.push_back({id, ok ? CheckStatus::pass : CheckStatus::fail, residual, bound, detail});
}

void VerdictReport::note(const std::string& id, const std::string& detail, double residual) {
  checks.push_back({id, CheckStatus::report, residual, 0.0, detail});
}

void VerdictReport::append(const VerdictReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

json report_json(const VerdictReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"id", c.id}, {"status", to_string(c.status)}, {"residual", c.residual}, {"bound", c.bound}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return {{"suite", r.suite}, {"status", r.pass() ? "pass" : "fail"}, {"checks", checks}};
}

std::string fiber_tag(int s, int j) { return "F" + std::to_string(j) + "_" + std::to_string(s); }

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

std::string VerdictReport::to_json() const { return report_json(*this).dump(); }

std::string reports_to_json(const std::vector<VerdictReport>& reports) {
  json arr = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(report_json(r));
    ok = ok && r.pass();
  }
  return json{{"status", ok ? "pass" : "fail"}, {"suites", arr}}.dump();
}

std::vector<Complex> sample_points(int m, double radius, Complex center) {
  std::vector<Complex> out;
  for (int i = 0; i < m; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / m + 0.3;
    out.push_back(center + radius * Complex(std::cos(theta), std::sin(theta)));
  }
  return out;
}

VerdictReport spectrum_suite(int n, int k, const SuiteOptions& opt) {
  validate_nk(n, k);
  VerdictReport r;
  r.suite = "spectrum";
  const SpectrumReport sp = spectrum(n, k);
  r.note("chi", to_string(sp.chi));
  if (n == 3 && k == 2) {
    r.bounded("lambda_closed_form", rel_err(sp.lambda, (3 + std::sqrt(5.0)) / 2), opt.unit_tol, "(3+sqrt5)/2");
    r.exact("chi_factorization", sp.chi == IntPoly{1, 1} * IntPoly{1, -3, 1}, "(x+1)(x^2-3x+1)");
  }
  if (n == 2) {
    const double closed = (k + std::sqrt(static_cast<double>(k * k - 4))) / 2;
    r.bounded("lambda_closed_form", rel_err(sp.lambda, closed), opt.unit_tol, "(k+sqrt(k^2-4))/2");
  }
  r.exact("chi_root_is_root", std::abs(sp.lambda) > 1, "lambda > 1");
  r.bounded("entropy_log_lambda", std::abs(sp.entropy - std::log(sp.lambda)), 1e-15);
  // Largest modulus among all roots of the full char poly must be lambda.
  std::vector<Complex> c;
  for (const auto& x : sp.char_poly.coeffs()) c.emplace_back(static_cast<double>(x), 0.0);
  double rho = 0;
  for (const auto& z : polynomial_roots(c)) rho = std::max(rho, std::abs(z));
  r.bounded("spectral_radius", rel_err(rho, sp.lambda), 1e-6, "max |root| of char_poly(f_*)");
  std::ostringstream lam;
  lam.precision(13);
  lam << sp.lambda;
  r.note("lambda", lam.str(), sp.lambda);
  return r;
}

VerdictReport lattice_suite(int n, int k, const SuiteOptions& opt) {
  validate_nk(n, k);
  const Lattice lat = build_lattice(n, k);
  VerdictReport r;
  r.suite = "lattice";

  const LatticeSummary sm = summarize(lat);
  r.exact("limb_gram", sm.limb_gram_ok);
  r.exact("sigma0_intersections", sm.sigma0_ok);
  r.exact("gram_S_negative_definite", sm.negative_definite, "leading principal minors alternate in sign");
  r.exact("det_gram_S", Rational(sm.det_s) == sm.det_formula,
          "det = " + sm.det_s.str() + ", formula = " + to_string(sm.det_formula));
  r.exact("K_squared", sm.k_squared == 9 - static_cast<int>(lat.dim - 1), "K.K = " + sm.k_squared.str());
  r.exact("anticanonical_from_strict", anticanonical_from_strict(lat) == [&] {
    IntVector m = lat.K;
    for (auto& x : m) x = -x;
    return m;
  }());

  const IntMatrix M = pushforward_matrix(n, k);
  r.exact("isometry", M.transpose() * lat.Q * M == lat.Q);
  r.exact("preserves_K", M.apply(lat.K) == lat.K);
  const Integer det = determinant(M);
  r.exact("unimodular", det == 1 || det == -1, "det = " + det.str());

  const SpectrumReport sp = spectrum(n, k);
  r.exact("chi_divides_char_poly", sp.divisible);
  r.exact("cofactor_cyclotomic", sp.cyclotomic_remainder == IntPoly{1});
  r.bounded("cofactor_unit_roots", sp.max_unit_deviation, opt.unit_tol);

  const TProjection tp = t_projection(lat);
  bool ls_ok = true;
  for (int s = 0; s < n; ++s) {
    RatVector want(static_cast<std::size_t>(n), Rational(k));
    want[static_cast<std::size_t>(s)] = -1;
    if (project_to_T(lat, tp, lat.L[static_cast<std::size_t>(s)]) != want) ls_ok = false;
  }
  r.exact("project_L_s", ls_ok, "pi_T(L_s) = -gamma_s + k sum_{t!=s} gamma_t");
  const IntPoly rc = char_poly(restricted_action_T(n, k));
  const IntPoly chi = chi_poly(n, k);
  r.exact("restricted_char_poly", rc == chi || rc == -chi, to_string(rc));
  r.exact("restricted_matches_lattice", restricted_action_from_lattice(lat, tp, M) == to_rational(restricted_action_T(n, k)));
  const GramProportionality gp = gamma_gram_proportionality(tp);
  r.exact("gamma_gram_proportional", gp.proportional, "scale = " + to_string(gp.scale));
  r.exact("no_invariant_class_in_T", restricted_fixed_determinant(n, k) != 0);

  for (int s = 0; s < n; ++s) {
    const std::string id = "gamma_closed_form_" + std::to_string(s);
    try {
      const GammaClosedForm g = gamma_closed_form(lat, tp, s);
      std::ostringstream os;
      os << "displayed (" << to_string(g.displayed[0]) << ", " << to_string(g.displayed[1]) << ", "
         << to_string(g.displayed[2]) << ", " << to_string(g.displayed[3]) << ") exact (" << to_string(g.exact[0]) << ", "
         << to_string(g.exact[1]) << ", " << to_string(g.exact[2]) << ", " << to_string(g.exact[3])
         << "); bracket identity " << (g.bracket_identity ? "holds" : "fails") << "; F2k.gamma displayed ("
         << to_string(g.displayed_products[0]) << ", " << to_string(g.displayed_products[1]) << ") exact ("
         << to_string(g.exact_products[0]) << ", " << to_string(g.exact_products[1]) << ")";
      r.note(id, os.str(), g.matches ? 0.0 : 1.0);
      r.exact("varrho_in_T_" + std::to_string(s), g.varrho_in_T);
      r.exact("varpi_in_S_" + std::to_string(s), g.varpi_in_S);
    } catch (const DegenerateError& e) {
      r.note(id, e.what(), 1.0);
    }
  }

  const MinimalityData md = minimality_data(lat);
  if (n > 2) {
    r.exact("minimal", md.minimal, "no curve of square -1 among Sigma_0, F^j_s (j <= 2k)");
  } else {
    r.exact("sigma0_contractible", md.contractible_sigma0);
    r.exact("contraction_stops", md.contraction_stops, "F1_s^2 after contraction = " + md.f1_after_contraction.str());
  }
  return r;
}

VerdictReport degree_suite(int n, int k, const SuiteOptions& opt) {
  validate_nk(n, k);
  VerdictReport r;
  r.suite = "degrees";
  const DegreeReport d = degree_report(n, k, opt.degree_terms);
  r.exact("recurrence", d.recurrence_holds, "char_poly(f_*) annihilates d_m");
  r.exact("d1", d.degrees.size() > 1 && d.degrees[1] == k + 1, "d_1 = " + d.degrees.at(1).str());
  r.bounded("growth_ratio", std::abs(d.last_ratio - d.lambda), 1e-6,
            "d_{m+1}/d_m at m = " + std::to_string(opt.degree_terms));
  return r;
}

VerdictReport factorization_suite(int n, int k, const SuiteOptions&) {
  validate_nk(n, k);
  VerdictReport r;
  r.suite = "factorization";
  const WeylCheck w = weyl_factorization_check(n, k);
  {
    std::ostringstream os;
    for (const auto& pl : w.literal)
      os << "limb " << pl.limb << ": " << (pl.identity ? "equal" : "differs") << " (" << pl.mismatched_entries
         << " entries); ";
    if (w.literal_identity) {
      r.exact("weyl_literal", true, os.str());
    } else {
      os << "repair: exponent " << w.repaired_exponent << ", phi on limb 0 solved exactly";
      if (w.repaired_phi) {
        os << " with cycles";
        for (const auto& cyc : cycles_of(*w.repaired_phi)) {
          os << " (";
          for (std::size_t i = 0; i < cyc.size(); ++i) os << (i ? " " : "") << cyc[i];
          os << ")";
        }
      }
      r.note("weyl_literal", os.str(), 1.0);
    }
  }
  r.exact("weyl_generators_isometries", std::all_of(w.literal.begin(), w.literal.end(),
                                                    [](const WeylPlacement& p) { return p.composed_is_isometry; }));
  if (!w.literal_identity) {
    r.exact("weyl_repaired_level_permutation", w.repaired_is_level_permutation);
    r.exact("weyl_repaired_phi_reversal", w.repaired_matches_intended, "reversal of 3..k+1 and of k+3..2k+1");
  }
  r.exact("weyl_repaired_identity", w.repaired_identity, "phi J (tau J)^{k-1} sigma = f_*");
  r.exact("weyl_char_poly", w.char_poly_equal);

  const CoxeterCheck c = coxeter_factorization_check(n, k);
  r.exact("coxeter_rho_last", c.rho_last_matches);
  r.exact("coxeter_involutions", c.involutions);
  r.exact("coxeter_tau_transpositions", c.tau_are_transpositions);
  r.exact("coxeter_reflections_isometries", c.reflections_are_isometries);
  r.exact("coxeter_cartan", c.cartan_matches, "2 on the diagonal, -k elsewhere");
  r.exact("coxeter_identity", c.product_is_f, "tau_0 ... tau_{n-2} rho_{n-1} = f_* on T");
  r.note("coxeter_literal_order", c.literal_word_is_inverse ? "rho_{n-1} tau_{n-2} ... tau_0 = f_*^{-1} on T"
                                                            : "rho_{n-1} tau_{n-2} ... tau_0 is not f_*^{-1}");

  const RhoCheck rho = rho_check(n, k);
  r.exact("rho_involution", rho.involution);
  r.exact("rho_isometry", rho.isometry);
  r.exact("rho_preserves_K", rho.preserves_K);
  r.exact("rho_permutes_curves", rho.permutes_strict);
  r.exact("rho_reverses_f", rho.reverses_f, "rho f rho = f^{-1}");
  r.exact("dihedral", rho.dihedral, "rho^2 = (rho f)^2 = Id");
  return r;
}

namespace {

HpComplex hp(Complex z) { return to_hp(z); }

ChartAtlas make_atlas(const MapParams& p, const SuiteOptions& opt) {
  validate(p);
  ChartAtlas at(p);
  if (opt.tamper_center) {
    const auto [s, j] = *opt.tamper_center;
    at.tamper_center(s, j, at.center(s, j) + HpComplex(HpReal(1e-3)));
  }
  return at;
}

}  // namespace

VerdictReport chart_suite(const MapParams& p, const SuiteOptions& opt) {
  const ChartAtlas at = make_atlas(p, opt);
  const int n = p.n, k = p.k;
  VerdictReport r;
  r.suite = "chart";
  const auto xs = sample_points(opt.chart_samples);

  for (int s = 0; s < n; ++s)
    for (int j = 1; j <= 2 * k + 1; ++j) {
      double worst = 0;
      int used = 0, skipped = 0;
      std::string failure;
      for (const auto& x : xs) {
        try {
          const FiberImage closed = fiber_transition_closed(at, s, j, hp(x));
          const NumericTransition num = fiber_transition_numeric(at, s, j, hp(x), opt.eps_seq);
          worst = std::max(worst, magnitude(closed.xi - num.image.xi));
          ++used;
        } catch (const PoleError&) {
          ++skipped;
        } catch (const Error& e) {
          failure = e.what();
          worst = std::numeric_limits<double>::infinity();
        }
      }
      const SchemeTarget t = scheme_target(n, k, s, j);
      const std::string dest = t.is_sigma1 ? "Sigma_1" : fiber_tag(t.to.s, t.to.j);
      std::string detail = "-> " + dest + ", " + std::to_string(used) + " points";
      if (skipped) detail += ", " + std::to_string(skipped) + " at poles";
      if (!failure.empty()) detail += ", " + failure;
      r.bounded("transition_" + fiber_tag(s, j), worst, opt.transition_tol, detail);
    }

  {
    double worst = 0;
    std::string detail = "Sigma_2 -> F" + std::to_string(2 * k + 1) + "_0";
    for (const auto& x : xs) {
      try {
        const auto num = sigma2_entry_numeric(at, hp(x), opt.eps_seq);
        worst = std::max(worst, magnitude(num.image.xi - sigma2_entry_closed(at, hp(x))));
      } catch (const Error& e) {
        worst = std::numeric_limits<double>::infinity();
        detail = detail + ", " + e.what();
        break;
      }
    }
    r.bounded("sigma2_entry", worst, opt.transition_tol, detail);
  }

  // Centers go to centers along the limbs; the flip out of limb n-1 sends them to infinity.
  {
    double worst = 0;
    bool flip_ok = true;
    for (int s = 0; s < n; ++s)
      for (int j = 1; j <= 2 * k; ++j) {
        const HpComplex c = at.center(s, j);
        if (s < n - 1 || j == 1) {
          try {
            const FiberImage im = fiber_transition_closed(at, s, j, c);
            worst = std::max(worst, magnitude(im.xi - at.center(im.target.to.s, im.target.to.j)));
          } catch (const PoleError&) {
            worst = std::numeric_limits<double>::infinity();
          }
        } else {
          try {
            const FiberImage im = fiber_transition_closed(at, s, j, c);
            flip_ok = flip_ok && magnitude(im.xi) > 1e12;
          } catch (const PoleError&) {
          }
        }
      }
    r.bounded("centers_mapped", worst, opt.closure_tol, "center(s,j) -> center(s+1,j)");
    r.exact("centers_flip_to_infinity", flip_ok);
  }

  {
    HpComplex closed(1), numeric(1);
    double worst = 0;
    try {
      for (int s = 0; s < n - 1; ++s) {
        closed = fiber_transition_closed(at, s, k + 1, closed).xi;
        numeric = fiber_transition_numeric(at, s, k + 1, numeric, opt.eps_seq).image.xi;
      }
      worst = std::max(magnitude(closed - HpComplex(1)), magnitude(numeric - HpComplex(1)));
    } catch (const Error&) {
      worst = std::numeric_limits<double>::infinity();
    }
    r.bounded("center_orbit_closes", worst, opt.closure_tol, "b_k = 1 on F" + std::to_string(k + 1) + " after n-1 steps");
  }

  {
    double worst = 0;
    for (int s = 0; s < n; ++s)
      for (int j = 1; j <= 2 * k + 1; ++j)
        for (int i = 0; i < 3; ++i) {
          const HpComplex x = hp(xs[static_cast<std::size_t>(i) % xs.size()]);
          try {
            const auto num = rho_fiber_numeric(at, s, j, x, opt.eps_seq);
            worst = std::max(worst, magnitude(num.image.xi - rho_fiber_closed(at, s, j, x).xi));
          } catch (const Error&) {
            worst = std::numeric_limits<double>::infinity();
          }
        }
    r.bounded("rho_on_fibers", worst, opt.transition_tol, "(x,y) -> (y,x) maps F^j_s to F^j_{n-1-s}");
  }
  return r;
}

namespace {

struct ParabolicSample {
  ChartId chart;
  Complex point;
  ParabolicResult result;
  std::string error;
};

std::vector<ParabolicSample> parabolic_samples(const ChartAtlas& at, const SuiteOptions& opt, bool include_off_set) {
  const int n = at.n(), k = at.k();
  std::vector<ChartId> charts{ChartId{0, 1, true}};
  for (int s = 0; s < n; ++s)
    for (int j = 1; j <= 2 * k + 1; ++j) {
      const bool in_set = j == 1 || (j >= 3 && j <= 2 * k - 1);
      if (in_set || include_off_set) charts.push_back(ChartId{s, j, false});
    }
  std::vector<ParabolicSample> out;
  for (const auto& id : charts)
    for (const auto& x : sample_points(opt.parabolic_samples)) {
      ParabolicSample ps{id, x, {}, {}};
      try {
        ps.result = parabolic_check(at, id, ChartPoint{to_hp(x), HpComplex(0)});
      } catch (const Error& e) {
        ps.error = e.what();
      }
      out.push_back(ps);
    }
  return out;
}

std::string chart_label(const ChartId& id) { return id.base ? "Sigma_0" : fiber_tag(id.s, id.j); }

}  // namespace

VerdictReport parabolic_suite(const MapParams& p, const SuiteOptions& opt) {
  const ChartAtlas at = make_atlas(p, opt);
  VerdictReport r;
  r.suite = "parabolic";
  const auto samples = parabolic_samples(at, opt, false);
  for (std::size_t i = 0; i < samples.size();) {
    const ChartId id = samples[i].chart;
    double fix = 0, dev = 0;
    bool route = true;
    std::string err;
    for (; i < samples.size() && samples[i].chart == id; ++i) {
      if (!samples[i].error.empty()) {
        err = samples[i].error;
        fix = dev = std::numeric_limits<double>::infinity();
        continue;
      }
      fix = std::max(fix, samples[i].result.fix_error);
      dev = std::max(dev, samples[i].result.max_deviation);
      route = route && samples[i].result.route_matches_scheme;
    }
    const std::string label = chart_label(id);
    r.bounded("fixed_" + label, fix, opt.fix_tol, err);
    r.bounded("tangent_identity_" + label, dev, opt.parabolic_tol);
    r.exact("route_" + label, route, "chart sequence follows the fiber scheme");
  }

  // Df^n on Sigma_0 in (x, t) coordinates: diag(1, +-1).
  double off = 0;
  std::string sign_detail;
  for (const auto& x : sample_points(opt.parabolic_samples)) {
    try {
      const ChartOrbit o = iterate_in_charts(at, ChartId{0, 1, true}, ChartPoint{to_hp(x), HpComplex(0)}, p.n);
      const auto& J = o.jacobian;
      const double sgn = J[1][1].real() >= 0 ? 1.0 : -1.0;
      off = std::max({off, std::abs(J[0][1]), std::abs(J[1][0]), std::abs(J[0][0] - 1.0), std::abs(J[1][1] - sgn)});
      if (sign_detail.empty()) sign_detail = sgn > 0 ? "diag(1, 1)" : "diag(1, -1)";
    } catch (const Error& e) {
      off = std::numeric_limits<double>::infinity();
      sign_detail = e.what();
    }
  }
  r.bounded("sigma0_Df_n_diagonal", off, opt.parabolic_tol, sign_detail);

  // Fibers outside the parabolic set: deviation recorded, not required to vanish.
  const Complex probe = sample_points(opt.parabolic_samples).front();
  for (int s = 0; s < p.n; ++s)
    for (int j : {2, 2 * p.k, 2 * p.k + 1}) {
      const ChartId id{s, j, false};
      try {
        const ParabolicResult pr = parabolic_check(at, id, ChartPoint{to_hp(probe), HpComplex(0)});
        r.note("off_set_" + chart_label(id), "max |Df^{2n} - Id| = " + std::to_string(pr.max_deviation), pr.max_deviation);
      } catch (const Error& e) {
        r.note("off_set_" + chart_label(id), e.what());
      }
    }
  return r;
}

VerdictReport fixed_point_suite(const MapParams& p, const SuiteOptions& opt) {
  validate(p);
  VerdictReport r;
  r.suite = "fixed_points";
  const auto fps = fixed_points(p);
  r.exact("count", fps.size() == static_cast<std::size_t>(p.k + 1), std::to_string(fps.size()) + " roots");
  double res = 0, det = 0, jac = 0;
  int real = 0, saddles = 0, elliptic = 0;
  for (const auto& fp : fps) {
    res = std::max(res, fp.residual);
    det = std::max(det, fp.det_error);
    const AffinePoint pt{fp.zeta, fp.zeta};
    const Jacobian a = jacobian(p, pt), b = jacobian_dual(p, pt);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) jac = std::max(jac, std::abs(a[i][j] - b[i][j]));
    if (fp.type != FixedPointType::complex) ++real;
    if (fp.type == FixedPointType::saddle) ++saddles;
    if (fp.type == FixedPointType::elliptic) ++elliptic;
  }
  r.bounded("fixed_residual", res, opt.fixed_point_tol, "|f(p) - p|");
  r.bounded("det_Df", det, 1e-9, "|det Df - delta|");
  r.bounded("jacobian_dual", jac, 1e-10, "closed form vs forward-mode");
  r.note("real_fixed_points", std::to_string(real) + " real: " + std::to_string(saddles) + " saddle, " +
                                  std::to_string(elliptic) + " elliptic");
  const MapParams fig = figure1_params();
  if (p.n == fig.n && p.k == fig.k && c_value<double>(p) == c_value<double>(fig) && p.a == fig.a && p.delta == fig.delta) {
    r.exact("figure1_real_count", real == 3, std::to_string(real) + " real");
    r.exact("figure1_types", saddles == 2 && elliptic == 1);
  }
  MapParams zero = p;
  zero.a.clear();
  const TraceRankReport tr = trace_map_rank(zero);
  r.exact("trace_map_rank", tr.rank == tr.expected && tr.rank_fd == tr.expected,
          "rank " + std::to_string(tr.rank) + ", expected k/2-1 = " + std::to_string(tr.expected));
  r.bounded("trace_derivative_fd", tr.max_difference, 1e-5, "analytic vs central differences, step 1e-6");
  return r;
}

std::vector<VerdictReport> verify_all(const MapParams& p, const SuiteOptions& opt) {
  validate(p);
  return {lattice_suite(p.n, p.k, opt), chart_suite(p, opt), factorization_suite(p.n, p.k, opt), parabolic_suite(p, opt)};
}

namespace {

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

std::string chart_records_json(const MapParams& p, const SuiteOptions& opt) {
  const ChartAtlas at = make_atlas(p, opt);
  json arr = json::array();
  for (int s = 0; s < p.n; ++s)
    for (int j = 1; j <= 2 * p.k + 1; ++j)
      for (const auto& x : sample_points(opt.chart_samples)) {
        json rec{{"chart", {s, j}}, {"xi", cjson(x)}};
        try {
          const FiberImage closed = fiber_transition_closed(at, s, j, hp(x));
          const NumericTransition num = fiber_transition_numeric(at, s, j, hp(x), opt.eps_seq);
          rec["target"] = closed.target.is_sigma1 ? json("Sigma_1") : json({closed.target.to.s, closed.target.to.j});
          rec["closed"] = cjson(to_complex(closed.xi));
          rec["numeric"] = cjson(to_complex(num.image.xi));
          rec["abs_err"] = magnitude(closed.xi - num.image.xi);
        } catch (const Error& e) {
          rec["error"] = e.what();
        }
        arr.push_back(rec);
      }
  return arr.dump();
}

std::string parabolic_records_json(const MapParams& p, const SuiteOptions& opt) {
  const ChartAtlas at = make_atlas(p, opt);
  json arr = json::array();
  for (const auto& ps : parabolic_samples(at, opt, true)) {
    json rec{{"chart", ps.chart.base ? json("Sigma_0") : json({ps.chart.s, ps.chart.j})}, {"point", cjson(ps.point)}};
    if (ps.error.empty()) {
      rec["fix_error"] = ps.result.fix_error;
      rec["max_deviation"] = ps.result.max_deviation;
      rec["route_matches"] = ps.result.route_matches_scheme;
    } else {
      rec["error"] = ps.error;
    }
    arr.push_back(rec);
  }
  return arr.dump();
}

}  // namespace ratsurf
