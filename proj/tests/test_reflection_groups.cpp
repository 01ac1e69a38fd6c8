#include <doctest.h>

#include <utility>

#include "ratsurf/reflection_groups.hpp"

using namespace ratsurf;

namespace {

const std::pair<int, int> kPairs[] = {{2, 4}, {2, 6}, {3, 2}, {3, 4}, {4, 2}, {2, 8}, {5, 2}, {4, 4}};

}  // namespace

TEST_CASE("reflections are involutive isometries") {
  const Lattice lat = build_lattice(2, 4);
  IntVector a(lat.dim, 0);
  a[lat.index(0, 1)] = 1;
  a[lat.index(0, 2)] = -1;
  const IntMatrix r = reflection_matrix(a, lat.Q);
  CHECK(r * r == IntMatrix::identity(lat.dim));
  CHECK(r.transpose() * lat.Q * r == lat.Q);
}

TEST_CASE("level permutations") {
  const LevelPermutation tau = tau_levels(4);
  // (9 8 7 6) and (5 4 3 2)
  CHECK(tau[9] == 8);
  CHECK(tau[6] == 9);
  CHECK(tau[5] == 4);
  CHECK(tau[2] == 5);
  CHECK(tau[1] == 1);

  const auto cycles = cycles_of(phi_levels_intended(6));
  const std::vector<std::vector<int>> expected{{3, 7}, {4, 6}, {9, 13}, {10, 12}};
  CHECK(cycles == expected);
}

TEST_CASE("Weyl factorization is either literal or repaired") {
  for (const auto& [n, k] : kPairs) {
    CAPTURE(n);
    CAPTURE(k);
    const WeylCheck w = weyl_factorization_check(n, k);
    if (w.literal_identity) {
      CHECK_FALSE(w.repaired_phi.has_value());
    } else {
      REQUIRE(w.repaired_phi.has_value());
      CHECK(w.repaired_is_level_permutation);
      CHECK(w.repaired_matches_intended);
      CHECK(w.repaired_identity);
      CHECK(w.repaired_exponent == k - 1);
    }
    CHECK(w.char_poly_equal);
  }
}

TEST_CASE("Coxeter element on T") {
  for (const auto& [n, k] : kPairs) {
    CAPTURE(n);
    CAPTURE(k);
    const CoxeterCheck c = coxeter_factorization_check(n, k);
    CHECK(c.rho_last_matches);
    CHECK(c.involutions);
    CHECK(c.tau_are_transpositions);
    CHECK(c.reflections_are_isometries);
    CHECK(c.cartan_matches);
    CHECK(c.product_is_f);
    CHECK(c.literal_word_is_inverse);
  }
}

TEST_CASE("the swap involution on the lattice") {
  for (const auto& [n, k] : kPairs) {
    CAPTURE(n);
    CAPTURE(k);
    const RhoCheck r = rho_check(n, k);
    CHECK(r.involution);
    CHECK(r.isometry);
    CHECK(r.preserves_K);
    CHECK(r.permutes_strict);
    CHECK(r.reverses_f);
    CHECK(r.dihedral);
  }
}

TEST_CASE("n = 2: rho_1 tau_0 has trace k") {
  for (int k : {4, 6, 8}) {
    const CoxeterCheck c = coxeter_factorization_check(2, k);
    const RatMatrix prod = c.tau[0] * c.rho[1];
    CHECK(prod(0, 0) + prod(1, 1) == Rational(k));
  }
}
