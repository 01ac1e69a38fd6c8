#ifndef RATSURF_FIXED_DYNAMICS_HPP
#define RATSURF_FIXED_DYNAMICS_HPP

// Finite fixed points, their multipliers, orbits and invariant manifolds in the affine plane.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ratsurf/map_family.hpp"

namespace ratsurf {

enum class FixedPointType { saddle, elliptic, parabolic, complex };
const char* to_string(FixedPointType t);

struct FixedPointRecord {
  Complex zeta;  // the point is (zeta, zeta)
  Complex trace;
  std::array<Complex, 2> eigenvalues;  // |eigenvalues[0]| >= |eigenvalues[1]|
  FixedPointType type = FixedPointType::complex;
  int multiplicity = 1;
  double residual = 0;   // |f(p) - p|
  double det_error = 0;  // |det Df(p) - delta|
};

using Jacobian = std::array<std::array<Complex, 2>, 2>;

/// Coefficients (lowest degree first) of (1 + delta - c) z^{k+1} - sum a_l z^{k-l} - 1.
std::vector<Complex> fixed_point_polynomial(const MapParams& p);
/// True when c, delta and every a_l are real.
bool has_real_coefficients(const MapParams& p);

/// The k+1 fixed points with multiplicity, sorted by (Re, Im). DegenerateError when 1 + delta = c.
std::vector<FixedPointRecord> fixed_points(const MapParams& p, const MapTolerances& tol = {});

/// [[0, 1], [-delta, c - sum l a_l y^{-l-1} - k y^{-k-1}]]. PoleError when y = 0.
Jacobian jacobian(const MapParams& p, const AffinePoint& pt, const MapTolerances& tol = {});
/// The same matrix obtained by forward-mode differentiation of f.
Jacobian jacobian_dual(const MapParams& p, const AffinePoint& pt, const MapTolerances& tol = {});

/// Traces of Df at the fixed points, in fixed_points order.
std::vector<Complex> trace_set(const MapParams& p);

struct TraceRankReport {
  std::vector<int> parameters;                      // even l in [2, k-2]
  std::vector<Complex> zeta;                        // fixed points at a = 0
  std::vector<std::vector<Complex>> analytic;       // (k+1) x (k/2-1): (k-l)/zeta^{l+1}
  std::vector<std::vector<Complex>> finite_difference;
  std::vector<double> singular_values;              // of the analytic matrix
  std::size_t rank = 0;                             // analytic
  std::size_t rank_fd = 0;
  std::size_t expected = 0;                         // k/2 - 1
  double max_difference = 0;                        // entrywise analytic vs finite difference
};
/// Derivative of the trace set with respect to a at a = 0. InvalidArgument if some a_l != 0.
TraceRankReport trace_map_rank(const MapParams& p0, double step = 1e-6, double rank_tol = 1e-8);

/// Optimal matching distance (max over matched pairs) between the trace multisets.
double trace_set_distance(const MapParams& p, const MapParams& q);
/// Whether the trace multisets differ by more than tol. InvalidArgument unless (n, k, c) agree.
bool trace_set_separation(const MapParams& p, const MapParams& q, double tol = 1e-8);

enum class OrbitStatus { completed, escaped, pole };
const char* to_string(OrbitStatus s);

struct Orbit {
  std::vector<AffinePoint> points;  // starts with the seed
  OrbitStatus status = OrbitStatus::completed;
};
/// m forward steps (backward with inverse = true), stopping early at a pole or past the cap.
Orbit iterate_orbit(const MapParams& p, const AffinePoint& start, std::size_t m, bool inverse = false,
                    const MapTolerances& tol = {});

struct ManifoldOptions {
  double arclength = 20.0;
  double spacing = 1e-2;      // max distance between consecutive output points
  double seed_length = 1e-6;  // offset of the first point along the eigenvector
  std::size_t samples = 64;   // points in the seed fundamental domain
  std::size_t max_points = 1000000;
  double escape_radius = 1e3;
};

struct Polyline {
  std::string kind;  // "unstable" or "stable"
  int branch = 1;    // +1 / -1 side of the eigenvector
  Complex zeta;
  double eigenvalue = 0;
  double spacing = 0;
  std::vector<std::array<double, 2>> points;
  std::vector<double> arclength;  // cumulative, starting at 0
  std::vector<int> generation;    // point = g^generation(seed), g = f^period
  int period = 1;                 // 2 when the unstable eigenvalue is negative
  bool escaped = false;
  bool capped = false;
};

/// One branch of the unstable manifold of a real saddle, grown from a fundamental domain of the
/// linearization. NotSaddleError unless fp is a saddle; InvalidArgument for complex coefficients.
Polyline unstable_manifold(const MapParams& p, const FixedPointRecord& fp, const ManifoldOptions& opt = {},
                           int branch = 1);
/// Image under (x, y) -> (y, x); for delta = 1 this is the stable manifold.
Polyline stable_from_unstable(const Polyline& unstable);
/// Distance from q to the polyline (segments).
double distance_to_polyline(const Polyline& line, const std::array<double, 2>& q);

/// CSV rows: seed_id,step,x,y.
std::string orbits_to_csv(const std::vector<Orbit>& orbits);
std::string polylines_to_csv(const std::vector<Polyline>& lines);
std::string polyline_to_json(const Polyline& line);
std::string fixed_points_to_json(const std::vector<FixedPointRecord>& fps);

}  // namespace ratsurf

#endif  // RATSURF_FIXED_DYNAMICS_HPP
