#ifndef RATSURF_REFLECTION_GROUPS_HPP
#define RATSURF_REFLECTION_GROUPS_HPP

// f_* as a product of reflections: in the Weyl group W_N on Pic and as a Coxeter element on T.
// Also the lattice action of the involution (x,y) -> (y,x).

#include <optional>
#include <string>
#include <vector>

#include "ratsurf/picard_lattice.hpp"

namespace ratsurf {

/// Permutation of blowup levels: perm[j] is the image of level j (index 0 unused, perm[0] = 0).
using LevelPermutation = std::vector<int>;

/// Reflection x -> x - 2 (a.x)/(a.a) a; requires 2/(a.a) to be an integer.
IntMatrix reflection_matrix(const IntVector& a, const IntMatrix& q);

/// e_s^j -> e_{s+1}^j.
IntMatrix limb_shift(int n, int k);
/// e_limb^j -> e_limb^{perm[j]}, other limbs fixed.
IntMatrix level_permutation_matrix(int n, int k, int limb, const LevelPermutation& perm);

/// tau: cycles (2k+1 -> 2k -> ... -> k+2) and (k+1 -> k -> ... -> 2).
LevelPermutation tau_levels(int k);
/// phi as printed, transpositions taken at face value (the repeated pair cancels).
LevelPermutation phi_levels_literal(int k);
/// Reversal of 3..k+1 combined with the reversal of k+3..2k+1.
LevelPermutation phi_levels_intended(int k);
/// Nontrivial cycles, each starting at its smallest element.
std::vector<std::vector<int>> cycles_of(const LevelPermutation& perm);

struct NamedIsometry {
  std::string label;
  IntMatrix matrix;
};

/// J, sigma_h, tau_v and phi_v (literal phi), with tau_v, phi_v acting on the given limb.
std::vector<NamedIsometry> weyl_generators(int n, int k, int limb = 0);

struct WeylPlacement {
  int limb = 0;
  bool identity = false;
  std::size_t mismatched_entries = 0;
  bool composed_is_isometry = false;
};

struct WeylCheck {
  std::vector<WeylPlacement> literal;  // phi_v J (tau_v J)^{k/2} sigma_h for limb 0 and n-1
  bool literal_identity = false;
  // Repair: exponent k-1 on limb 0 with phi solved from f_* X^{-1}; set only when the literal
  // reading fails.
  std::optional<LevelPermutation> repaired_phi;
  int repaired_exponent = 0;
  bool repaired_is_level_permutation = false;
  bool repaired_matches_intended = false;
  bool repaired_identity = false;
  bool char_poly_equal = false;
};
WeylCheck weyl_factorization_check(int n, int k);

struct CoxeterCheck {
  RatMatrix gram;                      // gamma Gram matrix
  std::vector<RatMatrix> rho, tau;     // rho_0..rho_{n-1}, tau_0..tau_{n-2} in gamma coordinates
  bool rho_last_matches = false;       // rho_{n-1}: identity with last column (k, ..., k, -1)
  bool involutions = false;
  bool tau_are_transpositions = false;
  bool product_is_f = false;           // tau_0 ... tau_{n-2} rho_{n-1} = f_*|_T
  bool literal_word_is_inverse = false;  // rho_{n-1} tau_{n-2} ... tau_0 = f_*^{-1}|_T
  RatMatrix cartan;
  bool cartan_matches = false;         // 2 on the diagonal, -k elsewhere
  bool reflections_are_isometries = false;
};
CoxeterCheck coxeter_factorization_check(int n, int k);

/// Action of (x,y) -> (y,x): e_0 fixed, e_s^j <-> e_{n-1-s}^j.
IntMatrix rho_pushforward(int n, int k);

struct RhoCheck {
  bool involution = false;
  bool isometry = false;
  bool preserves_K = false;
  bool permutes_strict = false;   // Sigma_0 fixed, L_0 <-> L_{n-1}, F^j_s <-> F^j_{n-1-s}
  bool reverses_f = false;        // rho f rho = f^{-1}
  bool dihedral = false;          // rho^2 = (rho f)^2 = I
};
RhoCheck rho_check(int n, int k);

/// JSON verdict {literal_identity, repaired_phi, coxeter_identity, dihedral, ...}.
std::string weyl_report_json(int n, int k);

}  // namespace ratsurf

#endif  // RATSURF_REFLECTION_GROUPS_HPP
