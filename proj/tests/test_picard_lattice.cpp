#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracle_values.hpp"
#include "ratsurf/picard_lattice.hpp"

using namespace ratsurf;

namespace {

IntPoly chi_from_oracle(const char* text) {
  // Highest degree first, space separated.
  std::istringstream in(text);
  std::vector<Integer> hi;
  long v = 0;
  while (in >> v) hi.emplace_back(v);
  return IntPoly(std::vector<Integer>(hi.rbegin(), hi.rend()));
}

template <std::size_t N>
std::vector<Integer> to_integers(const std::int64_t (&a)[N]) {
  return {std::begin(a), std::end(a)};
}

std::vector<Integer> oracle_degrees(int n, int k) {
  if (n == 2 && k == 4) return to_integers(oracle::kDegrees_2_4);
  if (n == 2 && k == 6) return to_integers(oracle::kDegrees_2_6);
  if (n == 3 && k == 2) return to_integers(oracle::kDegrees_3_2);
  if (n == 3 && k == 4) return to_integers(oracle::kDegrees_3_4);
  return to_integers(oracle::kDegrees_4_2);
}

}  // namespace

TEST_CASE("chi and lambda against the oracle") {
  for (const auto& inst : oracle::kInstances) {
    CAPTURE(inst.n);
    CAPTURE(inst.k);
    CHECK(chi_poly(inst.n, inst.k) == chi_from_oracle(inst.chi));
    CHECK(std::abs(spectral_radius(inst.n, inst.k) - inst.lambda) < 1e-12);
  }
  CHECK(chi_poly(3, 2) == IntPoly{1, 1} * IntPoly{1, -3, 1});
}

TEST_CASE("chi(1) = 2 - k(n-1) is never zero on admissible pairs") {
  for (const auto& inst : oracle::kInstances) {
    const IntPoly chi = chi_poly(inst.n, inst.k);
    CHECK(evaluate(chi, Rational(1)) == Rational(2 - inst.k * (inst.n - 1)));
    CHECK(evaluate(chi, Rational(1)) != 0);
  }
}

TEST_CASE("lattice structure") {
  for (const auto& inst : oracle::kInstances) {
    CAPTURE(inst.n);
    CAPTURE(inst.k);
    const Lattice lat = build_lattice(inst.n, inst.k);
    CHECK(lat.dim == static_cast<std::size_t>(1 + inst.n * (2 * inst.k + 1)));
    const LatticeSummary s = summarize(lat);
    CHECK(s.limb_gram_ok);
    CHECK(s.sigma0_ok);
    CHECK(s.negative_definite);
    CHECK(s.det_s == inst.det_gram_s);
    CHECK(s.det_formula == Rational(inst.det_gram_s));
    CHECK(s.k_squared == 9 - static_cast<long>(lat.dim - 1));
    CHECK(anticanonical_from_strict(lat) == [&] {
      IntVector minus_k = lat.K;
      for (auto& x : minus_k) x = -x;
      return minus_k;
    }());
  }
}

TEST_CASE("pushforward is an isometry fixing K") {
  for (const auto& inst : oracle::kInstances) {
    const Lattice lat = build_lattice(inst.n, inst.k);
    const IntMatrix M = pushforward_matrix(inst.n, inst.k);
    CHECK(M.transpose() * lat.Q * M == lat.Q);
    CHECK(M * IntMatrix::from_columns({lat.K}) == IntMatrix::from_columns({lat.K}));
    const Integer det = determinant(M);
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("spectral factorization") {
  for (const auto& inst : oracle::kInstances) {
    const SpectrumReport sp = spectrum(inst.n, inst.k);
    CHECK(sp.divisible);
    CHECK(sp.cofactor * sp.chi == sp.char_poly);
    CHECK(sp.cyclotomic_remainder == IntPoly{1});
    CHECK(sp.max_unit_deviation < 1e-9);
    CHECK(sp.entropy == doctest::Approx(std::log(inst.lambda)).epsilon(1e-12));
  }
}

TEST_CASE("degree sequence matches iterates of the map") {
  for (const auto& inst : oracle::kInstances) {
    CAPTURE(inst.n);
    CAPTURE(inst.k);
    const auto expected = oracle_degrees(inst.n, inst.k);
    const auto d = degree_sequence(pushforward_matrix(inst.n, inst.k), static_cast<int>(expected.size()));
    CHECK(d == expected);
    const DegreeReport r = degree_report(inst.n, inst.k, 40);
    CHECK(r.recurrence_holds);
    CHECK(r.degrees[1] == inst.k + 1);
    CHECK(std::abs(r.last_ratio - inst.lambda) < 1e-6);
  }
}

TEST_CASE("projection to T and the restricted action") {
  for (const auto& inst : oracle::kInstances) {
    const int n = inst.n, k = inst.k;
    CAPTURE(n);
    CAPTURE(k);
    const Lattice lat = build_lattice(n, k);
    const TProjection tp = t_projection(lat);
    for (int s = 0; s < n; ++s) {
      const RatVector got = project_to_T(lat, tp, lat.L[static_cast<std::size_t>(s)]);
      for (int t = 0; t < n; ++t) CHECK(got[static_cast<std::size_t>(t)] == (t == s ? Rational(-1) : Rational(k)));
    }
    const IntPoly restricted = char_poly(restricted_action_T(n, k));
    const IntPoly chi = chi_poly(n, k);
    CHECK((restricted == chi || restricted == -chi));
    CHECK(restricted_action_from_lattice(lat, tp, pushforward_matrix(n, k)) == to_rational(restricted_action_T(n, k)));
    const GramProportionality g = gamma_gram_proportionality(tp);
    CHECK(g.proportional);
    CHECK(g.delta == Rational(2 - (n - 2) * k));
    CHECK(g.epsilon == Rational(k));
    CHECK(restricted_fixed_determinant(n, k) != 0);
  }
}

TEST_CASE("minimality data") {
  const MinimalityData two = minimality_data(build_lattice(2, 4));
  CHECK(two.contractible_sigma0);
  CHECK(two.contraction_stops);
  const MinimalityData three = minimality_data(build_lattice(3, 2));
  CHECK(three.minimal);
}

TEST_CASE("invalid pairs") {
  CHECK_THROWS_AS(build_lattice(2, 2), InvalidArgument);
  CHECK_THROWS_AS(build_lattice(3, 3), InvalidArgument);
  CHECK_THROWS_AS(build_lattice(1, 4), InvalidArgument);
}
