#include "ratsurf/reflection_groups.hpp"

#include <json.hpp>

#include <algorithm>

namespace ratsurf {

IntMatrix reflection_matrix(const IntVector& a, const IntMatrix& q) {
  const Integer aa = pairing(a, q, a);
  if (aa == 0 || 2 % aa != 0) throw InvalidArgument("reflection root must have square +-1 or +-2");
  const Integer factor = 2 / aa;
  const IntVector qa = q.apply(a);
  IntMatrix r = IntMatrix::identity(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) -= factor * a[i] * qa[j];
  return r;
}

IntMatrix limb_shift(int n, int k) {
  const Lattice lat = build_lattice(n, k);
  IntMatrix p(lat.dim, lat.dim);
  p(0, 0) = 1;
  for (int s = 0; s < n; ++s)
    for (int j = 1; j <= 2 * k + 1; ++j) p(lat.index((s + 1) % n, j), lat.index(s, j)) = 1;
  return p;
}

IntMatrix level_permutation_matrix(int n, int k, int limb, const LevelPermutation& perm) {
  const Lattice lat = build_lattice(n, k);
  if (limb < 0 || limb >= n) throw InvalidArgument("limb index out of range");
  if (perm.size() != static_cast<std::size_t>(2 * k + 2)) throw InvalidArgument("level permutation has the wrong size");
  IntMatrix p(lat.dim, lat.dim);
  p(0, 0) = 1;
  for (int s = 0; s < n; ++s)
    for (int j = 1; j <= 2 * k + 1; ++j) {
      const int to = s == limb ? perm[static_cast<std::size_t>(j)] : j;
      p(lat.index(s, to), lat.index(s, j)) = 1;
    }
  return p;
}

namespace {

LevelPermutation identity_levels(int k) {
  LevelPermutation p(static_cast<std::size_t>(2 * k + 2));
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = static_cast<int>(j);
  return p;
}

// a o b: apply b first.
LevelPermutation compose(const LevelPermutation& a, const LevelPermutation& b) {
  LevelPermutation c(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) c[j] = a[static_cast<std::size_t>(b[j])];
  return c;
}

LevelPermutation transposition(int k, int a, int b) {
  LevelPermutation p = identity_levels(k);
  std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
  return p;
}

LevelPermutation reversal(int k, int lo, int hi) {
  LevelPermutation p = identity_levels(k);
  for (int j = lo; j <= hi; ++j) p[static_cast<std::size_t>(j)] = lo + hi - j;
  return p;
}

}  // namespace

LevelPermutation tau_levels(int k) {
  LevelPermutation p = identity_levels(k);
  for (int j = k + 3; j <= 2 * k + 1; ++j) p[static_cast<std::size_t>(j)] = j - 1;
  p[static_cast<std::size_t>(k + 2)] = 2 * k + 1;
  for (int j = 3; j <= k + 1; ++j) p[static_cast<std::size_t>(j)] = j - 1;
  p[2] = k + 1;
  return p;
}

LevelPermutation phi_levels_literal(int k) {
  // phi_1 = (3 k+1)(4 k)...; phi_2 = (2k+1 k+3)(2k k+2)(2k k+2)(2k-1 k+5)...
  LevelPermutation phi1 = identity_levels(k);
  for (int i = 0; 3 + i < k + 1 - i; ++i) phi1 = compose(phi1, transposition(k, 3 + i, k + 1 - i));
  std::vector<std::pair<int, int>> pairs{{2 * k + 1, k + 3}, {2 * k, k + 2}, {2 * k, k + 2}};
  for (int i = 2; 2 * k + 1 - i > k + 3 + i; ++i) pairs.emplace_back(2 * k + 1 - i, k + 3 + i);
  LevelPermutation phi2 = identity_levels(k);
  for (const auto& [a, b] : pairs)
    if (a != b) phi2 = compose(phi2, transposition(k, a, b));
  return compose(phi1, phi2);
}

LevelPermutation phi_levels_intended(int k) { return compose(reversal(k, 3, k + 1), reversal(k, k + 3, 2 * k + 1)); }

std::vector<std::vector<int>> cycles_of(const LevelPermutation& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t j = 1; j < perm.size(); ++j) {
    if (seen[j] || perm[j] == static_cast<int>(j)) continue;
    std::vector<int> cyc;
    for (std::size_t c = j; !seen[c]; c = static_cast<std::size_t>(perm[c])) {
      seen[c] = true;
      cyc.push_back(static_cast<int>(c));
    }
    out.push_back(cyc);
  }
  return out;
}

namespace {

IntVector weyl_root(const Lattice& lat) {
  IntVector a = lat.unit(0);
  a[lat.index(0, 1)] = -1;
  a[lat.index(0, lat.k + 1)] = -1;
  a[lat.index(0, 2 * lat.k + 1)] = -1;
  return a;
}

std::size_t count_mismatches(const IntMatrix& a, const IntMatrix& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) ++c;
  return c;
}

// J (tau_v J)^e sigma_h
IntMatrix weyl_word(const IntMatrix& J, const IntMatrix& tau, const IntMatrix& sigma, int e) {
  return J * (tau * J).power(static_cast<unsigned>(e)) * sigma;
}

}  // namespace

std::vector<NamedIsometry> weyl_generators(int n, int k, int limb) {
  const Lattice lat = build_lattice(n, k);
  return {{"J", reflection_matrix(weyl_root(lat), lat.Q)},
          {"sigma_h", limb_shift(n, k)},
          {"tau_v", level_permutation_matrix(n, k, limb, tau_levels(k))},
          {"phi_v", level_permutation_matrix(n, k, limb, phi_levels_literal(k))}};
}

WeylCheck weyl_factorization_check(int n, int k) {
  const Lattice lat = build_lattice(n, k);
  const IntMatrix M = pushforward_matrix(n, k);
  const IntMatrix J = reflection_matrix(weyl_root(lat), lat.Q);
  const IntMatrix sigma = limb_shift(n, k);
  WeylCheck out;
  for (int limb : {0, n - 1}) {
    const IntMatrix tau = level_permutation_matrix(n, k, limb, tau_levels(k));
    const IntMatrix phi = level_permutation_matrix(n, k, limb, phi_levels_literal(k));
    const IntMatrix x = phi * weyl_word(J, tau, sigma, k / 2);
    WeylPlacement pl;
    pl.limb = limb;
    pl.identity = x == M;
    pl.mismatched_entries = count_mismatches(x, M);
    pl.composed_is_isometry = x.transpose() * lat.Q * x == lat.Q;
    out.literal_identity = out.literal_identity || pl.identity;
    out.literal.push_back(pl);
  }

  out.repaired_exponent = k - 1;
  const IntMatrix tau0 = level_permutation_matrix(n, k, 0, tau_levels(k));
  const IntMatrix y = weyl_word(J, tau0, sigma, out.repaired_exponent);
  // Permutation matrices are orthogonal and J is an involution.
  const IntMatrix y_inv = sigma.transpose() * (J * tau0.transpose()).power(static_cast<unsigned>(out.repaired_exponent)) * J;
  const IntMatrix phi = M * y_inv;

  LevelPermutation perm = identity_levels(k);
  bool is_perm = phi(0, 0) == 1;
  for (std::size_t c = 0; c < lat.dim && is_perm; ++c) {
    std::size_t ones = 0, row = 0;
    for (std::size_t r = 0; r < lat.dim; ++r) {
      if (phi(r, c) == 1) {
        ++ones;
        row = r;
      } else if (phi(r, c) != 0) {
        is_perm = false;
      }
    }
    if (ones != 1) is_perm = false;
    if (!is_perm || c == 0) continue;
    const std::size_t width = static_cast<std::size_t>(2 * k + 1);
    const std::size_t limb_c = (c - 1) / width, limb_r = (row - 1) / width;
    if (row == 0 || limb_c != limb_r || (limb_c != 0 && row != c)) {
      is_perm = false;
    } else if (limb_c == 0) {
      perm[(c - 1) % width + 1] = static_cast<int>((row - 1) % width + 1);
    }
  }
  out.repaired_is_level_permutation = is_perm;
  out.repaired_matches_intended = is_perm && perm == phi_levels_intended(k);
  const IntMatrix repaired = level_permutation_matrix(n, k, 0, phi_levels_intended(k)) * y;
  out.repaired_identity = repaired == M;
  out.char_poly_equal = char_poly(repaired) == char_poly(M);
  if (!out.literal_identity && is_perm) out.repaired_phi = perm;
  return out;
}

CoxeterCheck coxeter_factorization_check(int n, int k) {
  const Lattice lat = build_lattice(n, k);
  const TProjection tp = t_projection(lat);
  CoxeterCheck out;
  out.gram = tp.gram;
  const std::size_t m = static_cast<std::size_t>(n);
  const RatMatrix id = RatMatrix::identity(m);
  auto reflect = [&](const RatVector& a) {
    const RatVector ga = tp.gram.apply(a);
    Rational aa = 0;
    for (std::size_t i = 0; i < m; ++i) aa += a[i] * ga[i];
    RatMatrix r = id;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) r(i, j) -= 2 * a[i] * ga[j] / aa;
    return r;
  };
  std::vector<RatVector> alpha;
  for (std::size_t s = 0; s < m; ++s) {
    RatVector a(m, Rational(k));
    a[s] = -2;
    alpha.push_back(a);
    out.rho.push_back(reflect(a));
  }
  for (std::size_t s = 0; s + 1 < m; ++s) {
    RatVector b(m, 0);
    b[s] = 1;
    b[s + 1] = -1;
    out.tau.push_back(reflect(b));
  }

  RatMatrix expected_rho = id;
  for (std::size_t i = 0; i + 1 < m; ++i) expected_rho(i, m - 1) = k;
  expected_rho(m - 1, m - 1) = -1;
  out.rho_last_matches = out.rho.back() == expected_rho;

  out.involutions = true;
  out.reflections_are_isometries = true;
  for (const auto* group : {&out.rho, &out.tau})
    for (const auto& r : *group) {
      if (!(r * r == id)) out.involutions = false;
      if (!(r.transpose() * tp.gram * r == tp.gram)) out.reflections_are_isometries = false;
    }
  out.tau_are_transpositions = true;
  for (std::size_t s = 0; s < out.tau.size(); ++s) {
    RatMatrix p = id;
    p(s, s) = p(s + 1, s + 1) = 0;
    p(s, s + 1) = p(s + 1, s) = 1;
    if (!(out.tau[s] == p)) out.tau_are_transpositions = false;
  }

  RatMatrix word = id, literal = out.rho.back();
  for (const auto& t : out.tau) word = word * t;
  word = word * out.rho.back();
  for (auto it = out.tau.rbegin(); it != out.tau.rend(); ++it) literal = literal * *it;
  const RatMatrix f_t = to_rational(restricted_action_T(n, k));
  out.product_is_f = word == f_t;
  out.literal_word_is_inverse = literal * f_t == id;

  out.cartan = RatMatrix(m, m);
  out.cartan_matches = true;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational ii = pairing(alpha[i], tp.gram, alpha[i]);
    for (std::size_t j = 0; j < m; ++j) {
      out.cartan(i, j) = 2 * pairing(alpha[i], tp.gram, alpha[j]) / ii;
      if (out.cartan(i, j) != (i == j ? Rational(2) : Rational(-k))) out.cartan_matches = false;
    }
  }
  return out;
}

IntMatrix rho_pushforward(int n, int k) {
  const Lattice lat = build_lattice(n, k);
  IntMatrix p(lat.dim, lat.dim);
  p(0, 0) = 1;
  for (int s = 0; s < n; ++s)
    for (int j = 1; j <= 2 * k + 1; ++j) p(lat.index(n - 1 - s, j), lat.index(s, j)) = 1;
  return p;
}

RhoCheck rho_check(int n, int k) {
  const Lattice lat = build_lattice(n, k);
  const IntMatrix r = rho_pushforward(n, k);
  const IntMatrix M = pushforward_matrix(n, k);
  const IntMatrix id = IntMatrix::identity(lat.dim);
  RhoCheck out;
  out.involution = r * r == id;
  out.isometry = r.transpose() * lat.Q * r == lat.Q;
  out.preserves_K = r.apply(lat.K) == lat.K;
  out.permutes_strict = r.apply(lat.sigma0) == lat.sigma0 && r.apply(lat.L[0]) == lat.L[static_cast<std::size_t>(n - 1)] &&
                        r.apply(lat.L[static_cast<std::size_t>(n - 1)]) == lat.L[0];
  for (int s = 0; s < n; ++s)
    for (int j = 1; j <= 2 * k + 1; ++j)
      if (r.apply(lat.F[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]) !=
          lat.F[static_cast<std::size_t>(n - 1 - s)][static_cast<std::size_t>(j)])
        out.permutes_strict = false;
  out.reverses_f = r * M * r * M == id;
  const IntMatrix rf = r * M;
  out.dihedral = out.involution && rf * rf == id;
  return out;
}

std::string weyl_report_json(int n, int k) {
  using nlohmann::json;
  const WeylCheck w = weyl_factorization_check(n, k);
  const CoxeterCheck c = coxeter_factorization_check(n, k);
  const RhoCheck r = rho_check(n, k);
  json j;
  j["n"] = n;
  j["k"] = k;
  j["literal_identity"] = w.literal_identity;
  json placements = json::array();
  for (const auto& p : w.literal)
    placements.push_back({{"limb", p.limb}, {"identity", p.identity}, {"mismatched_entries", p.mismatched_entries}});
  j["literal_placements"] = placements;
  j["repaired_phi"] = w.repaired_phi ? json(cycles_of(*w.repaired_phi)) : json(nullptr);
  j["repaired_exponent"] = w.repaired_exponent;
  j["repaired_identity"] = w.repaired_identity;
  j["repaired_matches_intended"] = w.repaired_matches_intended;
  j["coxeter_identity"] = c.product_is_f && c.rho_last_matches && c.cartan_matches;
  j["coxeter_literal_word_is_inverse"] = c.literal_word_is_inverse;
  j["dihedral"] = r.dihedral && r.reverses_f;
  return j.dump();
}

}  // namespace ratsurf
