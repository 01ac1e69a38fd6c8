#ifndef RATSURF_BLOWUP_CHARTS_HPP
#define RATSURF_BLOWUP_CHARTS_HPP

// Charts on the iterated blowup over the orbit of e_2 = [0:0:1] at infinity.
//
// Limb s sits over f^s e_2 = [0:1:w_s] (s >= 1, w_{n-1} = 0) or e_2 (s = 0). Base charts are
// (t,x) -> [t:x:1] on limb 0 and (t,y) -> [t:1:y] on the other limbs. Level 1 is
// (eta, t) -> base point + (t, t*eta). Level j >= 2 uses (xi_j, x_j) with
// xi_{j-1} = xi_j x_j + center(s, j-1), x_{j-1} = x_j, where (xi_1, x_1) = (t, eta).

#include <array>
#include <vector>

#include "ratsurf/map_family.hpp"
#include "ratsurf/numeric.hpp"

namespace ratsurf {

struct ChartId {
  int s = 0;
  int j = 1;          // blowup level 1..2k+1, ignored for base charts
  bool base = false;  // pre-blowup chart of limb s

  friend bool operator==(const ChartId& a, const ChartId& b) {
    return a.s == b.s && a.base == b.base && (a.base || a.j == b.j);
  }
};

/// u is the fiber coordinate (xi_j, or eta on level 1, or the coordinate along the line at
/// infinity for base charts); v is transverse (v = 0 on the fiber, resp. on the line at infinity).
template <class S>
struct ChartPointT {
  S u, v;
};
using ChartPoint = ChartPointT<HpComplex>;
using HpDual = Dual<HpComplex, 2>;

struct RoutingOptions {
  double near = 1e-2;   // a limb is entered when the base coordinates are this close to its base point
  double u_max = 1e4;   // fiber coordinates beyond this reject the level
  double v_max = 1e-3;  // transverse coordinates beyond this reject the level
};

class ChartAtlas {
 public:
  /// Requires validated parameters with delta = 1.
  explicit ChartAtlas(const MapParams& p);

  const MapParams& params() const noexcept { return params_; }
  int n() const noexcept { return params_.n; }
  int k() const noexcept { return params_.k; }
  const MapCoefficients<HpComplex>& coeffs() const noexcept { return coeffs_; }
  const BCoefficientsT<HpComplex>& b() const noexcept { return b_; }
  /// w_s for 1 <= s <= n-1 (w_{n-1} is exactly 0).
  const HpComplex& w(int s) const;

  /// Point on F^j_s where F^{j+1}_s is attached (1 <= j <= 2k). Zero on level 1; otherwise
  /// (-1)^{1-j} (w_1 ... w_{s-1})^{j-2} b_{j-1} for s >= 1 and b_{j-1} for s = 0.
  const HpComplex& center(int s, int j) const;

  /// Test hook: overwrite one center, leaving the map itself untouched.
  void tamper_center(int s, int j, const HpComplex& value);

  template <class S>
  ProjPoint<S> chart_to_plane(const ChartId& id, const ChartPointT<S>& pt) const;

  /// Raises ChartDomainError when a divisor has modulus <= div_tol.
  template <class S>
  ChartPointT<S> plane_to_chart(const ChartId& id, const ProjPoint<S>& pt, double div_tol = 0.0) const;

  template <class S>
  ProjPoint<S> f(const ProjPoint<S>& pt) const;

  /// Chart with the best inversion margin for a plane point: nearest limb, deepest level whose
  /// coordinates stay within the routing bounds, or a base chart away from the limb base points.
  ChartId locate(const ProjPoint<HpComplex>& pt, const RoutingOptions& opt = {}) const;

 private:
  void check_id(const ChartId& id) const;

  MapParams params_;
  MapCoefficients<HpComplex> coeffs_;
  BCoefficientsT<HpComplex> b_;
  std::vector<HpComplex> w_;                    // index s, w_[0] unused
  std::vector<std::vector<HpComplex>> centers_;  // [s][j]
};

/// Fiber the scheme sends F^j_s to: (s+1, j) for s < n-1, (0, 1) and (0, 2k+2-j) from limb n-1.
/// F^{2k+1}_{n-1} goes to the line Sigma_1 and has no fiber image; is_sigma1 is set then.
struct SchemeTarget {
  ChartId to;
  bool is_sigma1 = false;
};
SchemeTarget scheme_target(int n, int k, int s, int j);

struct FiberImage {
  SchemeTarget target;
  HpComplex xi;  // fiber coordinate, or x2/x0 on Sigma_1 for the exit
};

/// Closed-form fiber maps. Raises PoleError within pole_tol of an isolated pole.
FiberImage fiber_transition_closed(const ChartAtlas& atlas, int s, int j, const HpComplex& xi, double pole_tol = 1e-12);

/// Sigma_2 = {x2 = 0} point [1:x:0] lands on F^{2k+1}_0 at xi = x + b_{2k}.
HpComplex sigma2_entry_closed(const ChartAtlas& atlas, const HpComplex& x);

struct NumericTransition {
  FiberImage image;
  std::vector<HpComplex> samples;  // one per eps
  double step_change = 0;          // |last two extrapolants|
};

/// Lift to transverse offsets eps, apply f, read the target chart, and Richardson-extrapolate to
/// eps = 0. eps_seq must be geometric and decreasing. ExtrapolationError when successive
/// extrapolants differ by more than conv_tol * max(1, |value|).
NumericTransition fiber_transition_numeric(const ChartAtlas& atlas, int s, int j, const HpComplex& xi,
                                           const std::vector<double>& eps_seq = {1e-3, 1e-4, 1e-5},
                                           double conv_tol = 1e-8);
NumericTransition sigma2_entry_numeric(const ChartAtlas& atlas, const HpComplex& x,
                                       const std::vector<double>& eps_seq = {1e-3, 1e-4, 1e-5},
                                       double conv_tol = 1e-8);

/// The involution (x,y) -> (y,x) on fibers: F^j_s -> F^j_{n-1-s}. Identity on limbs 0 and n-1;
/// on a middle limb xi -> -xi/w_s at level 1 and xi -> -(-w_s)^{j-2} xi for j >= 2.
FiberImage rho_fiber_closed(const ChartAtlas& atlas, int s, int j, const HpComplex& xi);
NumericTransition rho_fiber_numeric(const ChartAtlas& atlas, int s, int j, const HpComplex& xi,
                                    const std::vector<double>& eps_seq = {1e-3, 1e-4, 1e-5}, double conv_tol = 1e-8);

/// Result of iterating f through charts with forward-mode derivatives.
struct ChartOrbit {
  std::vector<ChartId> route;            // chart after each step (route[0] is the start)
  std::vector<ChartId> expected;         // scheme prediction for fiber charts, start otherwise
  bool route_matches_scheme = true;
  ChartPoint end;
  std::array<std::array<Complex, 2>, 2> jacobian{};  // d(u',v')/d(u,v)
};

ChartOrbit iterate_in_charts(const ChartAtlas& atlas, const ChartId& start, const ChartPoint& pt, int steps,
                             const RoutingOptions& opt = {});

/// Transverse offset used for points on a fiber: 10^-floor(150/(2k+2)).
double default_transverse_offset(int k);

struct ParabolicResult {
  ChartId chart;
  ChartPoint point;             // evaluation point (transverse offset applied)
  double fix_error = 0;         // max |f^{2n}(pt) - pt| over the two chart coordinates
  double max_deviation = 0;     // max |Df^{2n} - Id| entrywise
  bool route_matches_scheme = true;
  std::array<std::array<Complex, 2>, 2> jacobian{};
};

/// Df^{2n} at a point of a fiber (v = 0 is replaced by the default offset) or of the line at
/// infinity in a base chart (evaluated exactly there).
ParabolicResult parabolic_check(const ChartAtlas& atlas, const ChartId& id, const ChartPoint& pt,
                                double transverse_offset = 0.0);

}  // namespace ratsurf

#endif  // RATSURF_BLOWUP_CHARTS_HPP
