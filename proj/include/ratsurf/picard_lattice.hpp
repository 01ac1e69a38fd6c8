#ifndef RATSURF_PICARD_LATTICE_HPP
#define RATSURF_PICARD_LATTICE_HPP

// Exact model of the Picard lattice of the blowup surface and the action of f on it.
//
// Basis order: e_0, then for s = 0..n-1 the classes e_s^1 .. e_s^{2k+1}.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ratsurf/exact.hpp"
#include "ratsurf/map_family.hpp"

namespace ratsurf {

/// Throws InvalidArgument unless n >= 2, k >= 2 is even and nk > k+2.
void validate_nk(int n, int k);

struct Lattice {
  int n = 0, k = 0;
  std::size_t dim = 0;  // 1 + n(2k+1)
  IntMatrix Q;          // diag(1, -1, ..., -1)
  IntVector K;          // -3 e_0 + sum e_s^j

  IntVector sigma0;                    // e_0 - sum_s e_s^1
  std::vector<IntVector> L;            // L_s = e_0 - e_s^1 - e_s^2; Sigma_1 = L_0, Sigma_2 = L_{n-1}
  std::vector<std::vector<IntVector>> F;  // F[s][j], 1 <= j <= 2k+1 (index 0 unused)

  std::size_t index(int s, int j) const;
  IntVector unit(std::size_t i) const;
  /// Columns Sigma_0, F^1_0 .. F^{2k}_0, F^1_1, ... : a basis of S.
  IntMatrix s_basis() const;
  /// Columns Sigma_0 and every F^j_s (j <= 2k+1) in basis order: a basis of Pic.
  IntMatrix strict_basis() const;
  /// Index of F^j_s as a column of strict_basis().
  std::size_t strict_index(int s, int j) const;
  Integer dot(const IntVector& a, const IntVector& b) const { return pairing(a, Q, b); }
};

Lattice build_lattice(int n, int k);

/// Limb Gram matrix A_k of F^1..F^{2k}: diagonal (-k-1, -2, ..., -2), chain adjacencies and the
/// extra 1 at (F^1, F^{k+1}).
IntMatrix limb_gram_expected(int k);

struct LatticeSummary {
  bool limb_gram_ok = false;
  bool sigma0_ok = false;              // Sigma_0^2 = 1-n, Sigma_0.F^1_s = 1
  std::vector<Integer> s_minors;       // leading principal minors of Gram(S)
  bool negative_definite = false;
  Integer det_s;
  Rational det_formula;                // (1 - nk/(k+2)) ((k+2)k)^n
  Integer k_squared;                   // K.K, expected 9 - N
};
LatticeSummary summarize(const Lattice& lat);

/// -K expressed through strict transforms: 3 Sigma_0 + sum_s (2F^1 + F^2 + 2F^3 + ... + kF^{k+1}
/// + (k-1)F^{k+2} + ... + F^{2k}), returned in the geometric basis.
IntVector anticanonical_from_strict(const Lattice& lat);
/// Coefficients of -K on (F^1_s, ..., F^{2k}_s).
std::vector<int> anticanonical_limb_coefficients(int k);

/// f_* in the geometric basis (column i is the image of basis vector i).
IntMatrix pushforward_matrix(int n, int k);
IntMatrix pushforward_matrix(const MapParams& p);

/// chi_{n,k}(x) = 1 - k(x + ... + x^{n-1}) + x^n.
IntPoly chi_poly(int n, int k);

struct CyclotomicFactor {
  unsigned order;
  unsigned multiplicity;
};

struct SpectrumReport {
  IntPoly char_poly;
  IntPoly chi;
  IntPoly cofactor;                        // char_poly / chi
  bool divisible = false;
  std::vector<CyclotomicFactor> cyclotomic;  // factorization of the cofactor
  IntPoly cyclotomic_remainder;            // 1 when the cofactor is fully cyclotomic
  double max_unit_deviation = 0;           // max ||root| - 1| over roots of the cofactor's squarefree part
  double lambda = 0;
  double entropy = 0;
};
SpectrumReport spectrum(int n, int k);

/// Largest real root of chi_{n,k}.
double spectral_radius(int n, int k);

/// Orthogonal projection onto T = S^perp, with gamma_s the projection of F^{2k+1}_s.
struct TProjection {
  int n = 0, k = 0;
  RatMatrix projector;  // dim x dim, geometric basis
  RatMatrix gamma;      // dim x n, columns gamma_s
  RatMatrix gram;       // n x n, gamma_s . gamma_t
  RatMatrix gram_inverse;
};
TProjection t_projection(const Lattice& lat);

/// gamma-coordinates of the T-component of v.
RatVector project_to_T(const Lattice& lat, const TProjection& tp, const IntVector& v);
RatVector project_to_T(const Lattice& lat, const TProjection& tp, const RatVector& v);

/// Companion-type matrix gamma_s -> gamma_{s+1}, gamma_{n-1} -> (-1, k, ..., k).
IntMatrix restricted_action_T(int n, int k);
/// Matrix of f_* on T computed from the lattice action and the projection.
RatMatrix restricted_action_from_lattice(const Lattice& lat, const TProjection& tp, const IntMatrix& M);

struct GramProportionality {
  Rational delta, epsilon;  // 2 - (n-2)k and k
  Rational scale;           // gram = scale * (delta on the diagonal, epsilon elsewhere)
  bool proportional = false;
};
GramProportionality gamma_gram_proportionality(const TProjection& tp);

/// The long closed formula for gamma_s: its four displayed coefficients against the exact values.
struct GammaClosedForm {
  int s = 0;
  // Displayed: F^{2k+1}_s, F^{2k+1}_{t != s}, F^{2k}_s, F^{2k}_{t != s}.
  std::array<Rational, 4> displayed;
  std::array<Rational, 4> exact;  // coordinates of gamma_s in the strict-transform basis
  bool matches = false;
  bool varrho_in_T = false;
  bool varpi_in_S = false;
  bool bracket_identity = false;  // k^2(k/2+1)(k/2+1-n) F^{2k+1}_s = [..varrho..] - [..varpi..]
  // Intersection numbers F^{2k}_0.gamma_0 and F^{2k}_1.gamma_0 (displayed vs exact).
  std::array<Rational, 2> displayed_products;
  std::array<Rational, 2> exact_products;
};
/// DegenerateError when k = 2n-2.
GammaClosedForm gamma_closed_form(const Lattice& lat, const TProjection& tp, int s);

/// d_m = (M^m e_0) . e_0 for m = 0..count-1.
std::vector<Integer> degree_sequence(const IntMatrix& M, int count);

struct DegreeReport {
  std::vector<Integer> degrees;  // d_0 .. d_{m+1}
  bool recurrence_holds = false; // char_poly(M) annihilates the sequence
  double last_ratio = 0;         // d_{m+1} / d_m
  double lambda = 0;
};
DegreeReport degree_report(int n, int k, int m = 40);

struct CurveSelfIntersection {
  std::string label;
  Integer square;
};
struct MinimalityData {
  std::vector<CurveSelfIntersection> curves;  // Sigma_0 and F^j_s, j <= 2k
  bool minimal = false;                       // all <= -2 (n > 2)
  bool contractible_sigma0 = false;           // n = 2: Sigma_0^2 = -1
  Integer f1_after_contraction;               // n = 2: F^1_s^2 after blowing down Sigma_0
  bool contraction_stops = false;             // n = 2: everything left is <= -2
};
MinimalityData minimality_data(const Lattice& lat);

/// det(f_*|_T - I) computed exactly; nonzero means no invariant classes in T.
Rational restricted_fixed_determinant(int n, int k);

/// JSON dumps: integers as decimal strings.
std::string matrix_to_json(const IntMatrix& m);
std::string poly_to_json(const IntPoly& p);

}  // namespace ratsurf

#endif  // RATSURF_PICARD_LATTICE_HPP
