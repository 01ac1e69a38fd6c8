#ifndef RATSURF_REPORT_HPP
#define RATSURF_REPORT_HPP

// Verification suites and their verdict records.

#include <optional>
#include <string>
#include <vector>

#include "ratsurf/map_family.hpp"

namespace ratsurf {

enum class CheckStatus { pass, fail, report };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  double residual = 0;  // measured; 0/1 for exact checks
  double bound = 0;
  std::string detail;
};

/// Overall pass iff no check fails; report-status checks never fail a suite.
struct VerdictReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  /// Exact check: residual 0 on success, 1 on failure.
  void exact(const std::string& id, bool ok, const std::string& detail = "");
  /// Numeric check: passes when residual <= bound (NaN fails).
  void bounded(const std::string& id, double residual, double bound, const std::string& detail = "");
  void note(const std::string& id, const std::string& detail, double residual = 0);
  void append(const VerdictReport& other);
  std::string to_json() const;
};

struct SuiteOptions {
  double transition_tol = 1e-6;   // closed vs numeric fiber maps
  double closure_tol = 1e-8;      // center orbit
  double fix_tol = 1e-8;          // f^{2n} fixes parabolic points
  double parabolic_tol = 1e-6;    // |Df^{2n} - Id|, diagonal form of Df^n on Sigma_0
  double fixed_point_tol = 1e-10; // |f(p) - p|
  double unit_tol = 1e-9;         // cofactor roots on the unit circle, lambda closed forms
  // Transverse offsets for the numeric fiber maps. One decade below the library default: with
  // 1e-3 the gap between the last two extrapolants on the flip fibers reaches ~5e-8.
  std::vector<double> eps_seq{1e-4, 1e-5, 1e-6};
  int chart_samples = 20;
  int parabolic_samples = 10;
  int degree_terms = 40;
  /// Test hook: perturb this center (s, j) by 1e-3 before running the chart suite.
  std::optional<std::pair<int, int>> tamper_center;
};

/// lambda and entropy against closed forms where known; chi factorization.
VerdictReport spectrum_suite(int n, int k, const SuiteOptions& opt = {});
/// Exact lattice checks: Gram(S), isometry, K, det, char poly, T-projection, Gram of gamma.
VerdictReport lattice_suite(int n, int k, const SuiteOptions& opt = {});
/// d_m recurrence, d_1 and growth ratio.
VerdictReport degree_suite(int n, int k, const SuiteOptions& opt = {});
/// Weyl and Coxeter factorizations, the involution rho, the anticanonical class.
VerdictReport factorization_suite(int n, int k, const SuiteOptions& opt = {});
/// Fiber transitions (closed vs numeric), Sigma_2 entry, centers, rho on fibers. Requires delta = 1.
VerdictReport chart_suite(const MapParams& p, const SuiteOptions& opt = {});
/// f^{2n} tangent to the identity on Sigma_0 and the fibers F^1, F^3..F^{2k-1}. Requires delta = 1.
VerdictReport parabolic_suite(const MapParams& p, const SuiteOptions& opt = {});
/// Fixed points, multipliers and the trace-map rank at a = 0.
VerdictReport fixed_point_suite(const MapParams& p, const SuiteOptions& opt = {});

/// lattice + chart + factorization + parabolic.
std::vector<VerdictReport> verify_all(const MapParams& p, const SuiteOptions& opt = {});
std::string reports_to_json(const std::vector<VerdictReport>& reports);

/// Data records {chart, xi, closed, numeric, abs_err} for every fiber transition.
std::string chart_records_json(const MapParams& p, const SuiteOptions& opt = {});
/// Data records {chart, point, fix_error, max_deviation, route_matches}.
std::string parabolic_records_json(const MapParams& p, const SuiteOptions& opt = {});

/// Sample fiber coordinates: m points on a small circle avoiding 0 and 1.
std::vector<Complex> sample_points(int m, double radius = 0.35, Complex center = {0.1, 0.05});

}  // namespace ratsurf

#endif  // RATSURF_REPORT_HPP
