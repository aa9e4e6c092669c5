#include "nullpar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <utility>

#include "nullpar/errors.hpp"
#include "nullpar/linalg.hpp"

namespace nullpar::verify {

using Eigen::MatrixXd;

CheckResult make_result(std::string name, double residual, double tolerance, int points,
                        std::string claim, std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.max_residual = residual;
  c.tolerance = tolerance;
  c.points_checked = points;
  c.verdict = residual <= tolerance ? Verdict::pass : Verdict::fail;
  c.claim = std::move(claim);
  c.detail = std::move(detail);
  return c;
}

double residual_scale(const LocalGeometry& lg) {
  return std::max({1.0, linalg::max_abs(lg.g), lg.connection.max_abs()});
}

namespace {

const char* kNullClaim = "g(v_a, v_b) = 0 for all spanning fields v_a, v_b of D";
const char* kParallelClaim =
    "g(nabla_{d_i} v, u) = 0 for v spanning D and u spanning the g-orthogonal complement of D";
const char* kPerpClaim =
    "the g-orthogonal complement of D (spanned by d_1..d_{n-r}) is parallel";
const char* kBoundsClaim = "r <= min(i-, i+), D contained in its g-orthogonal complement, r <= n/2";
const char* kRelationClaims[] = {
    "R(P, P^perp, -, -) = 0",
    "R(P, P, -, -) = 0",
    "R(P^perp, P^perp, P, -) = 0",
};
const char* kRelationNames[] = {
    "curvature_relation_p_pperp",
    "curvature_relation_p_p",
    "curvature_relation_pperp_pperp_p",
};

struct Prepared {
  std::span<const Point> points;
  std::vector<LocalGeometry> geo;
};

Prepared prepare(const MetricField& g, std::span<const Point> points, bool with_curvature) {
  Prepared p{points, {}};
  p.geo.reserve(points.size());
  for (const auto& x : points) p.geo.push_back(local_geometry(g, x, with_curvature));
  return p;
}

int npoints(const Prepared& p) { return static_cast<int>(p.points.size()); }

/// Throws unsupported unless g shows the Walker block pattern for r = rank(d)
/// and d is span(d_1..d_r) at every point.
void require_walker_form(const Prepared& p, const Distribution& d) {
  const int n = d.dim();
  const int r = d.rank();
  if (2 * r > n) throw Error(Errc::unsupported, "rank of D exceeds n/2: no Walker form");
  const MatrixXd canon = MatrixXd::Identity(n, n).leftCols(r);
  for (std::size_t q = 0; q < p.points.size(); ++q) {
    if (d.basis_at(p.points[q]) != canon) {
      throw Error(Errc::unsupported, "D is not spanned by d_1..d_r; orthogonal complement fields unknown");
    }
    const MatrixXd& g = p.geo[q].g;
    for (int a = 0; a < r; ++a) {
      for (int j = 0; j < n; ++j) {
        const double want = (j == n - r + a) ? 1.0 : 0.0;
        if (j < n - r && g(a, j) != 0.0) {
          throw Error(Errc::unsupported, "metric is not in Walker form (zero block)");
        }
        if (j >= n - r && g(a, j) != want) {
          throw Error(Errc::unsupported, "metric is not in Walker form (identity block)");
        }
      }
    }
  }
}

/// max over points, spanning fields v and coordinate directions of
/// |g(nabla_{d_i} v, u)| with u spanning the g-complement of the fields.
double parallel_residual(const Prepared& p, const std::vector<VectorField>& fields, int n) {
  const Distribution span(n, fields);
  double worst = 0.0;
  for (std::size_t q = 0; q < p.points.size(); ++q) {
    const Point& x = p.points[q];
    const LocalGeometry& lg = p.geo[q];
    const MatrixXd u = orthogonal_complement(lg.g, span.basis_at(x));
    if (u.cols() == 0) continue;
    const double scale = residual_scale(lg);
    for (const auto& v : span.fields()) {
      const MatrixXd dv = coordinate_derivatives(lg.connection, v, x);
      const MatrixXd pairing = u.transpose() * lg.g * dv;
      worst = std::max(worst, linalg::max_abs(pairing) / scale);
    }
  }
  return worst;
}

CheckResult null_impl(const Prepared& p, const Distribution& d, double tol) {
  double worst = 0.0;
  for (std::size_t q = 0; q < p.points.size(); ++q) {
    const MatrixXd v = d.basis_at(p.points[q]);
    const MatrixXd gram = v.transpose() * p.geo[q].g * v;
    worst = std::max(worst, linalg::max_abs(gram) / residual_scale(p.geo[q]));
  }
  return make_result("null", worst, tol, npoints(p), kNullClaim);
}

CheckResult parallel_impl(const Prepared& p, const Distribution& d, double tol) {
  return make_result("parallel", parallel_residual(p, d.fields(), d.dim()), tol, npoints(p),
                     kParallelClaim);
}

CheckResult perp_impl(const Prepared& p, const Distribution& d, double tol) {
  require_walker_form(p, d);
  const int n = d.dim();
  const Distribution perp = Distribution::coordinate(n, n - d.rank());
  return make_result("orthocomplement_parallel", parallel_residual(p, perp.fields(), n), tol,
                     npoints(p), kPerpClaim);
}

CheckResult bounds_impl(const Prepared& p, const Distribution& d, double tol) {
  const int n = d.dim();
  double worst = 0.0;
  std::map<std::pair<int, int>, int> seen;
  std::string violations;
  for (std::size_t q = 0; q < p.points.size(); ++q) {
    const MatrixXd v = d.basis_at(p.points[q]);
    const int r = linalg::numerical_rank(v);
    const Signature sig = signature(p.geo[q].g);
    ++seen[{sig.minus, sig.plus}];
    const MatrixXd perp = orthogonal_complement(p.geo[q].g, v);
    const double incl = linalg::inclusion_residual(v, perp);
    const double a = std::max(0, r - std::min(sig.minus, sig.plus));
    const double c = std::max(0, 2 * r - n);
    if (a > 0 && violations.find("(a)") == std::string::npos) violations += " r <= min(i-,i+) violated (a);";
    if (c > 0 && violations.find("(c)") == std::string::npos) violations += " r <= n/2 violated (c);";
    worst = std::max({worst, incl, a, c});
  }
  std::string detail = "signatures (i-,i+):";
  for (const auto& [sig, count] : seen) {
    detail += " (" + std::to_string(sig.first) + "," + std::to_string(sig.second) + ")x" +
              std::to_string(count);
  }
  detail += violations;
  return make_result("inclusions_and_bounds", worst, tol, npoints(p), kBoundsClaim, detail);
}

CheckResult relation_impl(const Prepared& p, const Distribution& d, CurvatureRelation which,
                          double tol) {
  require_walker_form(p, d);
  const int n = d.dim();
  const int r = d.rank();
  const int f = n - r;  // P^perp = span(d_1..d_{n-r})
  double worst = 0.0;
  std::string detail;
  for (std::size_t q = 0; q < p.points.size(); ++q) {
    const CurvatureAtPoint& R = p.geo[q].curvature;
    const double scale = residual_scale(p.geo[q]);
    auto consider = [&](int i, int j, int k, int l) {
      const double v = std::abs(R(i, j, k, l)) / scale;
      if (v > worst) {
        worst = v;
        detail = "worst component R_" + std::to_string(i + 1) + std::to_string(j + 1) +
                 std::to_string(k + 1) + std::to_string(l + 1);
      }
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            switch (which) {
              case CurvatureRelation::p_pperp:
                if (i < r && j < f) consider(i, j, k, l);
                break;
              case CurvatureRelation::p_p:
                if (i < r && j < r) consider(i, j, k, l);
                break;
              case CurvatureRelation::pperp_pperp_p:
                if (i < f && j < f && k < r) consider(i, j, k, l);
                break;
            }
          }
        }
      }
    }
  }
  const auto w = static_cast<std::size_t>(which);
  return make_result(kRelationNames[w], worst, tol, npoints(p), kRelationClaims[w], detail);
}

CheckResult compatibility_impl(const Prepared& p, int n, double tol) {
  double worst = 0.0;
  for (const auto& lg : p.geo) {
    const double scale = residual_scale(lg);
    auto idx = [n](int i, int j) {
      if (i > j) std::swap(i, j);
      return static_cast<std::size_t>(i * n - i * (i - 1) / 2 + (j - i));
    };
    // Lower the raised symbols again so the identity exercises g^{-1} too.
    auto lowered = [&](int i, int j, int k) {
      double s = 0.0;
      for (int m = 0; m < n; ++m) s += lg.g(k, m) * lg.connection(m, i, j);
      return s;
    };
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double lhs = lg.jets[idx(i, j)].grad(static_cast<std::size_t>(k));
          const double rhs = lowered(k, i, j) + lowered(k, j, i);
          worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
      }
    }
  }
  return make_result("metric_compatibility", worst, tol, npoints(p),
                     "d_k g_ij = Gamma_ki,j + Gamma_kj,i");
}

CheckResult symmetries_impl(const Prepared& p, int n, double tol) {
  double worst = 0.0;
  for (const auto& lg : p.geo) {
    const CurvatureAtPoint& R = lg.curvature;
    const double scale = residual_scale(lg);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            const double v = R(i, j, k, l);
            worst = std::max({worst, std::abs(v + R(j, i, k, l)) / scale,
                              std::abs(v + R(i, j, l, k)) / scale,
                              std::abs(v - R(k, l, i, j)) / scale});
          }
        }
      }
    }
  }
  return make_result("curvature_symmetries", worst, tol, npoints(p),
                     "R_ijkl = -R_jikl = -R_ijlk = R_klij");
}

CheckResult bianchi_impl(const Prepared& p, int n, double tol) {
  double worst = 0.0;
  for (const auto& lg : p.geo) {
    const CurvatureAtPoint& R = lg.curvature;
    const double scale = residual_scale(lg);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            worst = std::max(worst, std::abs(R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l)) / scale);
          }
        }
      }
    }
  }
  return make_result("first_bianchi", worst, tol, npoints(p), "R_ijkl + R_jkil + R_kijl = 0");
}

}  // namespace

CheckResult check_null(const MetricField& g, const Distribution& d, std::span<const Point> points,
                       double tol) {
  return null_impl(prepare(g, points, false), d, tol);
}

CheckResult check_parallel(const MetricField& g, const Distribution& d,
                           std::span<const Point> points, double tol) {
  return parallel_impl(prepare(g, points, false), d, tol);
}

CheckResult check_orthocomplement_parallel(const MetricField& g, const Distribution& d,
                                           std::span<const Point> points, double tol) {
  return perp_impl(prepare(g, points, false), d, tol);
}

CheckResult check_inclusions_and_bounds(const MetricField& g, const Distribution& d,
                                        std::span<const Point> points, double tol) {
  return bounds_impl(prepare(g, points, false), d, tol);
}

CheckResult check_curvature_relation(const MetricField& g, const Distribution& d,
                                     CurvatureRelation which, std::span<const Point> points,
                                     double tol) {
  return relation_impl(prepare(g, points, true), d, which, tol);
}

CheckResult check_curvature_relations(const MetricField& g, const Distribution& d,
                                      std::span<const Point> points, double tol) {
  const Prepared p = prepare(g, points, true);
  CheckResult worst;
  for (auto which : {CurvatureRelation::p_pperp, CurvatureRelation::p_p,
                     CurvatureRelation::pperp_pperp_p}) {
    CheckResult c = relation_impl(p, d, which, tol);
    if (c.max_residual >= worst.max_residual) {
      worst.detail = c.name + ": " + c.detail;
      worst.max_residual = c.max_residual;
    }
  }
  return make_result("curvature_relations", worst.max_residual, tol, npoints(p),
                     "R(P,P^perp,-,-) = R(P,P,-,-) = R(P^perp,P^perp,P,-) = 0", worst.detail);
}

CheckResult check_metric_compatibility(const MetricField& g, std::span<const Point> points, double tol) {
  return compatibility_impl(prepare(g, points, false), g.dim(), tol);
}

CheckResult check_curvature_symmetries(const MetricField& g, std::span<const Point> points, double tol) {
  return symmetries_impl(prepare(g, points, true), g.dim(), tol);
}

CheckResult check_first_bianchi(const MetricField& g, std::span<const Point> points, double tol) {
  return bianchi_impl(prepare(g, points, true), g.dim(), tol);
}

// ---------------------------------------------------------------------------
// Full report

bool VerificationReport::passed() const {
  return skipped.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<std::pair<std::string, std::string>>& conventions() {
  static const std::vector<std::pair<std::string, std::string>> c = {
      {"indices", "1-based coordinates x1..xn; d_i is the i-th coordinate field"},
      {"christoffel",
       "Gamma_ij,k = (d_i g_jk + d_j g_ik - d_k g_ij)/2, Gamma^k_ij = g^km Gamma_ij,m"},
      {"curvature_operator", "R(u,v) = nabla_v nabla_u - nabla_u nabla_v + nabla_[u,v]"},
      {"curvature_components", "R_ijkl = g(R(d_i,d_j) d_k, d_l); unit sphere has R_1212 = +det g"},
      {"residual_scale", "residuals divided by max(1, max|g_ij|, max|Gamma^k_ij|) per point"},
      {"walker_blocks", "rows/cols grouped 1..r | r+1..n-r | n-r+1..n as [[0,0,I],[0,A,H],[I,H',B]]"},
  };
  return c;
}

std::string fingerprint(const MetricField& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : g.canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string s = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) s += hex[(h >> shift) & 0xF];
  return s;
}

VerificationReport run_full_report(const MetricField& g, const Distribution& d,
                                   const ReportConfig& config) {
  VerificationReport rep;
  rep.fingerprint = fingerprint(g);
  rep.seed = config.seed;
  rep.n = g.dim();
  rep.r = d.rank();

  auto guarded = [&rep](const std::string& name, const std::function<CheckResult()>& run) {
    try {
      rep.checks.push_back(run());
    } catch (const Error& e) {
      rep.skipped.push_back({name, e.what()});
    }
  };

  try {
    const walker::FormCheckReport form =
        walker::walker_form_check(g, rep.r, config.form_samples, config.seed);
    for (const auto& item : form.items) {
      rep.checks.push_back(make_result("walker_form." + item.name, item.residual, item.tolerance,
                                       form.points, "Walker block form: " + item.name, item.detail));
    }
  } catch (const Error& e) {
    rep.skipped.push_back({"walker_form", e.what()});
  }

  static const char* metric_checks[] = {
      "null", "parallel", "orthocomplement_parallel", "inclusions_and_bounds",
      kRelationNames[0], kRelationNames[1], kRelationNames[2],
      "metric_compatibility", "curvature_symmetries", "first_bianchi"};

  SampleSet samples;
  try {
    samples = sample_nondegenerate(g, config.samples, config.seed);
  } catch (const Error& e) {
    for (const char* name : metric_checks) rep.skipped.push_back({name, e.what()});
  }
  if (!samples.points.empty()) {
    rep.points = samples.points;
    rep.skipped_points = samples.skipped;
    std::optional<Prepared> prepared;
    try {
      prepared = prepare(g, rep.points, true);
    } catch (const Error& e) {
      for (const char* name : metric_checks) rep.skipped.push_back({name, e.what()});
    }
    if (prepared) {
      const Prepared& p = *prepared;
      const double tol = config.tol;
      const int n = rep.n;
      guarded("null", [&] { return null_impl(p, d, tol); });
      guarded("parallel", [&] { return parallel_impl(p, d, tol); });
      guarded("orthocomplement_parallel", [&] { return perp_impl(p, d, tol); });
      guarded("inclusions_and_bounds", [&] { return bounds_impl(p, d, tol); });
      for (auto which : {CurvatureRelation::p_pperp, CurvatureRelation::p_p,
                         CurvatureRelation::pperp_pperp_p}) {
        guarded(kRelationNames[static_cast<int>(which)],
                [&] { return relation_impl(p, d, which, tol); });
      }
      guarded("metric_compatibility", [&] { return compatibility_impl(p, n, tol); });
      guarded("curvature_symmetries", [&] { return symmetries_impl(p, n, tol); });
      guarded("first_bianchi", [&] { return bianchi_impl(p, n, tol); });
    }
  }

  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  std::sort(rep.skipped.begin(), rep.skipped.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  return rep;
}

}  // namespace nullpar::verify
