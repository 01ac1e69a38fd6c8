#include "ratsurf/ratsurf.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "ratsurf/fixed_dynamics.hpp"
#include "ratsurf/picard_lattice.hpp"
#include "ratsurf/reflection_groups.hpp"
#include "ratsurf/report.hpp"

struct ratsurf_params {
  ratsurf::MapParams p;
};

struct ratsurf_lattice {
  ratsurf::Lattice lat;
  ratsurf::IntMatrix pushforward;
};

namespace {

thread_local std::string last_error;

ratsurf_status fail(ratsurf_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs body, translating exceptions into status codes.
template <class F>
ratsurf_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return RATSURF_OK;
  } catch (const ratsurf::Error& e) {
    return fail(static_cast<ratsurf_status>(static_cast<int>(e.code())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(RATSURF_E_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RATSURF_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RATSURF_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* ptr, const char* what) {
  if (!ptr) throw ratsurf::InvalidArgument(std::string(what) + " must not be null");
}

ratsurf::SuiteOptions suite_options(const ratsurf_suite_options* o) {
  ratsurf::SuiteOptions s;
  if (!o) return s;
  for (double v : {o->transition_tol, o->closure_tol, o->fix_tol, o->parabolic_tol, o->fixed_point_tol, o->unit_tol})
    if (!(v > 0)) throw ratsurf::InvalidArgument("tolerances must be positive");
  if (o->chart_samples < 1 || o->parabolic_samples < 1 || o->degree_terms < 1)
    throw ratsurf::InvalidArgument("sample counts must be positive");
  s.transition_tol = o->transition_tol;
  s.closure_tol = o->closure_tol;
  s.fix_tol = o->fix_tol;
  s.parabolic_tol = o->parabolic_tol;
  s.fixed_point_tol = o->fixed_point_tol;
  s.unit_tol = o->unit_tol;
  s.chart_samples = o->chart_samples;
  s.parabolic_samples = o->parabolic_samples;
  s.degree_terms = o->degree_terms;
  if (o->tamper_s >= 0) s.tamper_center = std::make_pair(o->tamper_s, o->tamper_j);
  return s;
}

nlohmann::json int_strings(const ratsurf::IntVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

nlohmann::json int_strings(const ratsurf::IntPoly& p) { return int_strings(p.coeffs()); }

nlohmann::json int_strings(const ratsurf::IntMatrix& m) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    a.push_back(row);
  }
  return a;
}

std::vector<ratsurf::AffinePoint> default_seeds(const ratsurf::MapParams& p) {
  std::vector<ratsurf::AffinePoint> seeds;
  for (const auto& fp : ratsurf::fixed_points(p)) {
    if (fp.type == ratsurf::FixedPointType::complex) continue;
    for (int m = 1; m <= 5; ++m) seeds.push_back({fp.zeta + 0.02 * m, fp.zeta});
  }
  return seeds;
}

}  // namespace

extern "C" {

const char* ratsurf_version(void) { return "1.0.0"; }

const char* ratsurf_last_error(void) { return last_error.c_str(); }

const char* ratsurf_status_name(ratsurf_status status) {
  switch (status) {
    case RATSURF_OK: return "ok";
    case RATSURF_E_INVALID_ARGUMENT: return "invalid_argument";
    case RATSURF_E_POLE: return "pole";
    case RATSURF_E_OVERFLOW: return "overflow";
    case RATSURF_E_INDETERMINACY: return "indeterminacy";
    case RATSURF_E_PERIODICITY: return "periodicity";
    case RATSURF_E_CHART_DOMAIN: return "chart_domain";
    case RATSURF_E_EXTRAPOLATION: return "extrapolation";
    case RATSURF_E_DEGENERATE: return "degenerate";
    case RATSURF_E_NOT_SADDLE: return "not_saddle";
    case RATSURF_E_IO: return "io";
    case RATSURF_E_INTERNAL: return "internal";
  }
  return "unknown";
}

void ratsurf_string_free(char* s) { std::free(s); }

ratsurf_status ratsurf_params_create(int n, int k, ratsurf_params** out) {
  return guarded([&] {
    need(out, "out");
    ratsurf::validate_nk(n, k);
    *out = new ratsurf_params{ratsurf::default_params(n, k)};
  });
}

ratsurf_status ratsurf_params_figure1(ratsurf_params** out) {
  return guarded([&] {
    need(out, "out");
    *out = new ratsurf_params{ratsurf::figure1_params()};
  });
}

ratsurf_status ratsurf_params_from_json(const char* json, ratsurf_params** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new ratsurf_params{ratsurf::params_from_json(json)};
  });
}

ratsurf_status ratsurf_params_clone(const ratsurf_params* p, ratsurf_params** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    *out = new ratsurf_params{p->p};
  });
}

void ratsurf_params_destroy(ratsurf_params* p) { delete p; }

ratsurf_status ratsurf_params_set_nk(ratsurf_params* p, int n, int k) {
  return guarded([&] {
    need(p, "params");
    p->p.n = n;
    p->p.k = k;
  });
}

ratsurf_status ratsurf_params_set_c_symbolic(ratsurf_params* p, int j, int sign) {
  return guarded([&] {
    need(p, "params");
    if (sign != 1 && sign != -1) throw ratsurf::InvalidArgument("sign must be +1 or -1");
    p->p.c = ratsurf::CSpec::cosine(j, sign);
  });
}

ratsurf_status ratsurf_params_set_c_value(ratsurf_params* p, double c) {
  return guarded([&] {
    need(p, "params");
    p->p.c = ratsurf::CSpec::explicit_value(c);
  });
}

ratsurf_status ratsurf_params_set_a(ratsurf_params* p, int l, double re, double im) {
  return guarded([&] {
    need(p, "params");
    p->p.a[l] = ratsurf::Complex(re, im);
  });
}

ratsurf_status ratsurf_params_clear_a(ratsurf_params* p) {
  return guarded([&] {
    need(p, "params");
    p->p.a.clear();
  });
}

ratsurf_status ratsurf_params_set_delta(ratsurf_params* p, double re, double im) {
  return guarded([&] {
    need(p, "params");
    p->p.delta = ratsurf::Complex(re, im);
  });
}

ratsurf_status ratsurf_params_get_nk(const ratsurf_params* p, int* n, int* k) {
  return guarded([&] {
    need(p, "params");
    if (n) *n = p->p.n;
    if (k) *k = p->p.k;
  });
}

ratsurf_status ratsurf_params_c_value(const ratsurf_params* p, double* c) {
  return guarded([&] {
    need(p, "params");
    need(c, "c");
    *c = ratsurf::c_value<double>(p->p);
  });
}

ratsurf_status ratsurf_params_validate(const ratsurf_params* p) {
  return guarded([&] {
    need(p, "params");
    ratsurf::validate(p->p);
  });
}

ratsurf_status ratsurf_params_to_json(const ratsurf_params* p, char** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    *out = dup(ratsurf::params_to_json(p->p));
  });
}

ratsurf_status ratsurf_lattice_create(int n, int k, ratsurf_lattice** out) {
  return guarded([&] {
    need(out, "out");
    ratsurf::validate_nk(n, k);
    *out = new ratsurf_lattice{ratsurf::build_lattice(n, k), ratsurf::pushforward_matrix(n, k)};
  });
}

void ratsurf_lattice_destroy(ratsurf_lattice* l) { delete l; }

ratsurf_status ratsurf_lattice_dim(const ratsurf_lattice* l, size_t* dim) {
  return guarded([&] {
    need(l, "lattice");
    need(dim, "dim");
    *dim = l->lat.dim;
  });
}

ratsurf_status ratsurf_lattice_pushforward_entry(const ratsurf_lattice* l, size_t row, size_t col, long long* value) {
  return guarded([&] {
    need(l, "lattice");
    need(value, "value");
    if (row >= l->lat.dim || col >= l->lat.dim) throw ratsurf::InvalidArgument("index out of range");
    const ratsurf::Integer& v = l->pushforward(row, col);
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
      throw ratsurf::OverflowError("entry does not fit in long long");
    *value = static_cast<long long>(v);
  });
}

ratsurf_status ratsurf_lattice_json(const ratsurf_lattice* l, char** out) {
  return guarded([&] {
    need(l, "lattice");
    need(out, "out");
    nlohmann::json j{{"n", l->lat.n},
                     {"k", l->lat.k},
                     {"dim", l->lat.dim},
                     {"pushforward", int_strings(l->pushforward)},
                     {"intersection_form", int_strings(l->lat.Q)},
                     {"canonical", int_strings(l->lat.K)}};
    *out = dup(j.dump());
  });
}

ratsurf_status ratsurf_spectral_radius(int n, int k, double* lambda) {
  return guarded([&] {
    need(lambda, "lambda");
    ratsurf::validate_nk(n, k);
    *lambda = ratsurf::spectral_radius(n, k);
  });
}

ratsurf_status ratsurf_spectrum_json(int n, int k, char** out) {
  return guarded([&] {
    need(out, "out");
    ratsurf::validate_nk(n, k);
    const ratsurf::SpectrumReport sp = ratsurf::spectrum(n, k);
    nlohmann::json cyc = nlohmann::json::array();
    for (const auto& c : sp.cyclotomic) cyc.push_back({{"order", c.order}, {"multiplicity", c.multiplicity}});
    nlohmann::json j{{"n", n},
                     {"k", k},
                     {"chi", int_strings(sp.chi)},
                     {"chi_text", ratsurf::to_string(sp.chi)},
                     {"lambda", sp.lambda},
                     {"entropy", sp.entropy},
                     {"char_poly", int_strings(sp.char_poly)},
                     {"char_poly_text", ratsurf::to_string(sp.char_poly)},
                     {"divisible", sp.divisible},
                     {"cofactor", int_strings(sp.cofactor)},
                     {"cofactor_text", ratsurf::to_string(sp.cofactor)},
                     {"cyclotomic", cyc},
                     {"cyclotomic_remainder", int_strings(sp.cyclotomic_remainder)},
                     {"max_unit_deviation", sp.max_unit_deviation}};
    *out = dup(j.dump());
  });
}

ratsurf_status ratsurf_admissible_c_json(int n, char** out) {
  return guarded([&] {
    need(out, "out");
    nlohmann::json adm = nlohmann::json::array();
    for (const auto& m : ratsurf::compute_C_n(n)) adm.push_back({{"j", m.j}, {"value", m.value}});
    *out = dup(nlohmann::json{{"n", n}, {"candidates", ratsurf::candidate_c(n)}, {"admissible", adm}}.dump());
  });
}

ratsurf_status ratsurf_degrees_json(int n, int k, int m, char** out) {
  return guarded([&] {
    need(out, "out");
    ratsurf::validate_nk(n, k);
    const ratsurf::DegreeReport d = ratsurf::degree_report(n, k, m);
    nlohmann::json j{{"n", n},
                     {"k", k},
                     {"degrees", int_strings(d.degrees)},
                     {"ratio", d.last_ratio},
                     {"lambda", d.lambda},
                     {"recurrence_holds", d.recurrence_holds}};
    *out = dup(j.dump());
  });
}

ratsurf_status ratsurf_weyl_json(int n, int k, char** out) {
  return guarded([&] {
    need(out, "out");
    ratsurf::validate_nk(n, k);
    *out = dup(ratsurf::weyl_report_json(n, k));
  });
}

ratsurf_status ratsurf_fixed_points_json(const ratsurf_params* p, char** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    ratsurf::validate(p->p);
    *out = dup(ratsurf::fixed_points_to_json(ratsurf::fixed_points(p->p)));
  });
}

ratsurf_status ratsurf_orbits(const ratsurf_params* p, const double* seeds, size_t nseeds, size_t steps,
                              ratsurf_format format, char** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    if (nseeds > 0) need(seeds, "seeds");
    ratsurf::validate(p->p);
    std::vector<ratsurf::AffinePoint> starts;
    for (size_t i = 0; i < nseeds; ++i) starts.push_back({seeds[2 * i], seeds[2 * i + 1]});
    if (starts.empty()) starts = default_seeds(p->p);
    std::vector<ratsurf::Orbit> orbits;
    for (const auto& s : starts) orbits.push_back(ratsurf::iterate_orbit(p->p, s, steps));
    if (format == RATSURF_FORMAT_CSV) {
      *out = dup(ratsurf::orbits_to_csv(orbits));
      return;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      nlohmann::json pts = nlohmann::json::array();
      for (const auto& q : orbits[i].points) pts.push_back({q.x.real(), q.y.real()});
      arr.push_back({{"seed_id", i}, {"status", ratsurf::to_string(orbits[i].status)}, {"points", pts}});
    }
    *out = dup(arr.dump());
  });
}

void ratsurf_manifold_options_default(ratsurf_manifold_options* opt) {
  if (!opt) return;
  const ratsurf::ManifoldOptions d;
  opt->arclength = d.arclength;
  opt->spacing = d.spacing;
  opt->seed_length = d.seed_length;
  opt->samples = d.samples;
  opt->max_points = d.max_points;
  opt->escape_radius = d.escape_radius;
  opt->include_stable = 1;
}

ratsurf_status ratsurf_unstable_manifolds(const ratsurf_params* p, const ratsurf_manifold_options* opt,
                                          ratsurf_format format, char** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    ratsurf::validate(p->p);
    ratsurf::ManifoldOptions mo;
    bool stable = true;
    if (opt) {
      mo.arclength = opt->arclength;
      mo.spacing = opt->spacing;
      mo.seed_length = opt->seed_length;
      mo.samples = opt->samples;
      mo.max_points = opt->max_points;
      mo.escape_radius = opt->escape_radius;
      stable = opt->include_stable != 0;
    }
    std::vector<ratsurf::Polyline> lines;
    for (const auto& fp : ratsurf::fixed_points(p->p)) {
      if (fp.type != ratsurf::FixedPointType::saddle) continue;
      for (int branch : {1, -1}) {
        lines.push_back(ratsurf::unstable_manifold(p->p, fp, mo, branch));
        if (stable && p->p.delta == ratsurf::Complex(1.0)) lines.push_back(ratsurf::stable_from_unstable(lines.back()));
      }
    }
    if (format == RATSURF_FORMAT_CSV) {
      *out = dup(ratsurf::polylines_to_csv(lines));
      return;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& l : lines) arr.push_back(nlohmann::json::parse(ratsurf::polyline_to_json(l)));
    *out = dup(arr.dump());
  });
}

void ratsurf_suite_options_default(ratsurf_suite_options* opt) {
  if (!opt) return;
  const ratsurf::SuiteOptions d;
  opt->transition_tol = d.transition_tol;
  opt->closure_tol = d.closure_tol;
  opt->fix_tol = d.fix_tol;
  opt->parabolic_tol = d.parabolic_tol;
  opt->fixed_point_tol = d.fixed_point_tol;
  opt->unit_tol = d.unit_tol;
  opt->chart_samples = d.chart_samples;
  opt->parabolic_samples = d.parabolic_samples;
  opt->degree_terms = d.degree_terms;
  opt->tamper_s = -1;
  opt->tamper_j = 0;
}

ratsurf_status ratsurf_run_suite(const char* suite, const ratsurf_params* p, const ratsurf_suite_options* opt,
                                 char** json_out, int* passed) {
  return guarded([&] {
    need(suite, "suite");
    need(p, "params");
    const ratsurf::SuiteOptions so = suite_options(opt);
    const std::string name = suite;
    const int n = p->p.n, k = p->p.k;
    std::vector<ratsurf::VerdictReport> reports;
    if (name == "spectrum") {
      reports.push_back(ratsurf::spectrum_suite(n, k, so));
    } else if (name == "lattice") {
      reports.push_back(ratsurf::lattice_suite(n, k, so));
    } else if (name == "degrees") {
      reports.push_back(ratsurf::degree_suite(n, k, so));
    } else if (name == "factorization") {
      reports.push_back(ratsurf::factorization_suite(n, k, so));
    } else if (name == "chart") {
      reports.push_back(ratsurf::chart_suite(p->p, so));
    } else if (name == "parabolic") {
      reports.push_back(ratsurf::parabolic_suite(p->p, so));
    } else if (name == "fixed_points") {
      reports.push_back(ratsurf::fixed_point_suite(p->p, so));
    } else if (name == "verify") {
      ratsurf::validate_nk(n, k);
      reports = ratsurf::verify_all(p->p, so);
    } else {
      throw ratsurf::InvalidArgument("unknown suite '" + name + "'");
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.pass();
    if (passed) *passed = ok ? 1 : 0;
    if (json_out) *json_out = dup(ratsurf::reports_to_json(reports));
  });
}

ratsurf_status ratsurf_chart_records_json(const ratsurf_params* p, const ratsurf_suite_options* opt, char** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    *out = dup(ratsurf::chart_records_json(p->p, suite_options(opt)));
  });
}

ratsurf_status ratsurf_parabolic_records_json(const ratsurf_params* p, const ratsurf_suite_options* opt, char** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    *out = dup(ratsurf::parabolic_records_json(p->p, suite_options(opt)));
  });
}

}  // extern "C"
