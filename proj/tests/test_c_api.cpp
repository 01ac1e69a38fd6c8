// Exercises the exported C interface only.
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <string>

#include "ratsurf/ratsurf.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ratsurf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parameter handles") {
  ratsurf_params* p = nullptr;
  REQUIRE(ratsurf_params_figure1(&p) == RATSURF_OK);
  int n = 0, k = 0;
  CHECK(ratsurf_params_get_nk(p, &n, &k) == RATSURF_OK);
  CHECK(n == 2);
  CHECK(k == 4);
  double c = 1;
  CHECK(ratsurf_params_c_value(p, &c) == RATSURF_OK);
  CHECK(std::abs(c) < 1e-15);

  ratsurf_params* q = nullptr;
  REQUIRE(ratsurf_params_clone(p, &q) == RATSURF_OK);
  CHECK(ratsurf_params_set_a(q, 3, 1.0, 0.0) == RATSURF_OK);
  CHECK(ratsurf_params_validate(q) == RATSURF_E_INVALID_ARGUMENT);
  CHECK(std::string(ratsurf_last_error()).size() > 0);
  CHECK(ratsurf_params_clear_a(q) == RATSURF_OK);
  CHECK(ratsurf_params_set_c_value(q, 0.5) == RATSURF_OK);
  CHECK(ratsurf_params_validate(q) == RATSURF_E_PERIODICITY);

  char* text = nullptr;
  REQUIRE(ratsurf_params_to_json(p, &text) == RATSURF_OK);
  ratsurf_params* r = nullptr;
  CHECK(ratsurf_params_from_json(text, &r) == RATSURF_OK);
  ratsurf_string_free(text);
  CHECK(ratsurf_params_validate(r) == RATSURF_OK);

  ratsurf_params_destroy(p);
  ratsurf_params_destroy(q);
  ratsurf_params_destroy(r);
  ratsurf_params_destroy(nullptr);
}

TEST_CASE("argument errors map to status codes") {
  ratsurf_params* p = nullptr;
  CHECK(ratsurf_params_create(2, 2, &p) == RATSURF_E_INVALID_ARGUMENT);
  CHECK(p == nullptr);
  CHECK(ratsurf_params_create(2, 4, nullptr) == RATSURF_E_INVALID_ARGUMENT);
  CHECK(ratsurf_params_from_json("{", &p) == RATSURF_E_INVALID_ARGUMENT);
  CHECK(std::string(ratsurf_status_name(RATSURF_E_POLE)) == "pole");
  double lambda = 0;
  CHECK(ratsurf_spectral_radius(3, 3, &lambda) == RATSURF_E_INVALID_ARGUMENT);
}

TEST_CASE("lattice handle") {
  ratsurf_lattice* l = nullptr;
  REQUIRE(ratsurf_lattice_create(3, 2, &l) == RATSURF_OK);
  size_t dim = 0;
  CHECK(ratsurf_lattice_dim(l, &dim) == RATSURF_OK);
  CHECK(dim == 16);
  long long v = 0;
  CHECK(ratsurf_lattice_pushforward_entry(l, 0, 0, &v) == RATSURF_OK);
  CHECK(v == 3);  // d_1 = k + 1
  CHECK(ratsurf_lattice_pushforward_entry(l, dim, 0, &v) == RATSURF_E_INVALID_ARGUMENT);
  char* out = nullptr;
  REQUIRE(ratsurf_lattice_json(l, &out) == RATSURF_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["pushforward"].size() == dim);
  ratsurf_lattice_destroy(l);
}

TEST_CASE("data entry points") {
  double lambda = 0;
  CHECK(ratsurf_spectral_radius(3, 2, &lambda) == RATSURF_OK);
  CHECK(std::abs(lambda - (3 + std::sqrt(5.0)) / 2) < 1e-12);

  char* out = nullptr;
  REQUIRE(ratsurf_admissible_c_json(4, &out) == RATSURF_OK);
  CHECK(nlohmann::json::parse(take(out))["admissible"].size() == 2);

  REQUIRE(ratsurf_degrees_json(3, 2, 12, &out) == RATSURF_OK);
  const auto d = nlohmann::json::parse(take(out));
  CHECK(d["degrees"][1] == "3");
  CHECK(d["recurrence_holds"] == true);

  REQUIRE(ratsurf_weyl_json(2, 6, &out) == RATSURF_OK);
  const auto w = nlohmann::json::parse(take(out));
  CHECK(w["coxeter_identity"] == true);

  ratsurf_params* p = nullptr;
  REQUIRE(ratsurf_params_figure1(&p) == RATSURF_OK);
  REQUIRE(ratsurf_fixed_points_json(p, &out) == RATSURF_OK);
  CHECK(nlohmann::json::parse(take(out)).size() == 5);

  const double seeds[] = {-0.85, -0.87, 0.1, 0.1};
  REQUIRE(ratsurf_orbits(p, seeds, 2, 5, RATSURF_FORMAT_CSV, &out) == RATSURF_OK);
  const std::string csv = take(out);
  CHECK(csv.rfind("seed_id,step,x,y\n", 0) == 0);
  REQUIRE(ratsurf_orbits(p, seeds, 2, 5, RATSURF_FORMAT_JSON, &out) == RATSURF_OK);
  CHECK(nlohmann::json::parse(take(out)).size() == 2);
  CHECK(ratsurf_orbits(p, nullptr, 1, 5, RATSURF_FORMAT_CSV, &out) == RATSURF_E_INVALID_ARGUMENT);

  ratsurf_manifold_options mo;
  ratsurf_manifold_options_default(&mo);
  mo.arclength = 2.0;
  mo.include_stable = 1;
  REQUIRE(ratsurf_unstable_manifolds(p, &mo, RATSURF_FORMAT_JSON, &out) == RATSURF_OK);
  CHECK(nlohmann::json::parse(take(out)).size() == 8);  // 2 saddles x 2 branches x {unstable, stable}
  ratsurf_params_destroy(p);
}

TEST_CASE("suites through the C interface") {
  ratsurf_params* p = nullptr;
  REQUIRE(ratsurf_params_figure1(&p) == RATSURF_OK);
  ratsurf_suite_options so;
  ratsurf_suite_options_default(&so);
  char* out = nullptr;
  int passed = 0;
  REQUIRE(ratsurf_run_suite("verify", p, &so, &out, &passed) == RATSURF_OK);
  CHECK(passed == 1);
  CHECK(nlohmann::json::parse(take(out))["suites"].size() == 4);

  so.tamper_s = 0;
  so.tamper_j = 3;
  REQUIRE(ratsurf_run_suite("chart", p, &so, &out, &passed) == RATSURF_OK);
  ratsurf_string_free(out);
  CHECK(passed == 0);

  so.transition_tol = -1;
  CHECK(ratsurf_run_suite("chart", p, &so, &out, &passed) == RATSURF_E_INVALID_ARGUMENT);
  ratsurf_suite_options_default(&so);
  CHECK(ratsurf_run_suite("nonsense", p, &so, &out, &passed) == RATSURF_E_INVALID_ARGUMENT);

  ratsurf_params_set_delta(p, 0.5, 0.0);
  CHECK(ratsurf_run_suite("chart", p, &so, &out, &passed) == RATSURF_E_INVALID_ARGUMENT);
  ratsurf_params_destroy(p);
}
