#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nullpar/geometry.hpp"
#include "nullpar/walker.hpp"

namespace nullpar::verify {

enum class Verdict { pass, fail };

/// Outcome of one claim over a set of points. verdict == pass exactly when
/// max_residual <= tolerance.
struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int points_checked = 0;
  Verdict verdict = Verdict::pass;
  std::string claim;   // the identity being checked
  std::string detail;  // worst offender or extra observations

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

CheckResult make_result(std::string name, double residual, double tolerance, int points,
                        std::string claim, std::string detail = {});

/// Residual normalizer at a point: max(1, |g|_inf, |Gamma|_inf).
double residual_scale(const LocalGeometry& lg);

// Individual checks. Residuals are scale-normalized per point.

CheckResult check_null(const MetricField& g, const Distribution& d, std::span<const Point> points,
                       double tol);
CheckResult check_parallel(const MetricField& g, const Distribution& d,
                           std::span<const Point> points, double tol);
/// Requires g in Walker form with d = span(d_1..d_r); otherwise throws
/// Error{Errc::unsupported}. The complement is spanned by d_1..d_{n-r}.
CheckResult check_orthocomplement_parallel(const MetricField& g, const Distribution& d,
                                           std::span<const Point> points, double tol);
/// r <= min(i-, i+), D inside its orthogonal complement, r <= n/2.
CheckResult check_inclusions_and_bounds(const MetricField& g, const Distribution& d,
                                        std::span<const Point> points, double tol);

enum class CurvatureRelation {
  p_pperp,       // R(P, P^perp, -, -) = 0
  p_p,           // R(P, P, -, -) = 0
  pperp_pperp_p  // R(P^perp, P^perp, P, -) = 0
};

/// Requires Walker form as for check_orthocomplement_parallel.
CheckResult check_curvature_relation(const MetricField& g, const Distribution& d,
                                     CurvatureRelation which, std::span<const Point> points,
                                     double tol);
/// Maximum over the three relations.
CheckResult check_curvature_relations(const MetricField& g, const Distribution& d,
                                      std::span<const Point> points, double tol);

CheckResult check_metric_compatibility(const MetricField& g, std::span<const Point> points, double tol);
CheckResult check_curvature_symmetries(const MetricField& g, std::span<const Point> points, double tol);
CheckResult check_first_bianchi(const MetricField& g, std::span<const Point> points, double tol);

struct ReportConfig {
  std::uint64_t seed = 1;
  int samples = 25;
  double tol = 1e-9;
  int form_samples = 8;
};

struct SkippedCheck {
  std::string name;
  std::string reason;
};

struct VerificationReport {
  std::string fingerprint;  // FNV-1a 64 of the metric's canonical text
  std::uint64_t seed = 0;
  int n = 0;
  int r = 0;
  int skipped_points = 0;
  std::vector<Point> points;
  std::vector<CheckResult> checks;  // sorted by name
  std::vector<SkippedCheck> skipped;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Index and sign conventions used by every report.
const std::vector<std::pair<std::string, std::string>>& conventions();

/// Runs the Walker form check, every claim check and the curvature/connection
/// identities. Per-check errors are collected as skipped entries; the report
/// passes only if every check passes and nothing was skipped.
VerificationReport run_full_report(const MetricField& g, const Distribution& d,
                                   const ReportConfig& config);

std::string fingerprint(const MetricField& g);

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

// ---------------------------------------------------------------------------
// Extension freedom demonstration

struct ExtensionReport {
  int n = 0;
  int r = 0;
  int k = 0;  // codim of C' in C   = n - 2r
  int l = 0;  // codim of D' in D   = r
  int m = 1;  // fibre dim of E
  int pairing_params = 0;   // klm = (n-2r) r
  int metric_params = 0;    // r(r+1)/2
  int pairing_rank = 0;     // measured rank of the parameter map
  int metric_rank = 0;
  int points = 0;
  int pointwise_variants = 0;
  double max_null_residual = 0.0;     // |g(P,P)| over all pointwise extensions
  double max_complement_angle = 0.0;  // angle(P^perp, P') over all extensions
  bool all_nondegenerate = true;
  double reproduce_pairing = 0.0;  // |ext(H(x)) - [[0 I],[A H]]|
  double reproduce_metric = 0.0;   // |ext(B(x)) - g(x)|
  std::vector<std::string> field_variants;  // one line per assembled variant
  int failed_field_variants = 0;

  bool passed() const;
};

ExtensionReport run_extension_demo(const walker::WalkerData& data, const ReportConfig& config,
                                   int variants = 3);

std::string to_json(const ExtensionReport& report);
std::string to_text(const ExtensionReport& report);

}  // namespace nullpar::verify
