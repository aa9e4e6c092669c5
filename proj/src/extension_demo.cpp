#include <algorithm>
#include <random>

#include "nullpar/errors.hpp"
#include "nullpar/linalg.hpp"
#include "nullpar/verify.hpp"

namespace nullpar::verify {

using Eigen::MatrixXd;

namespace {

constexpr int kDemoPoints = 5;

MatrixXd random_symmetric(int size, std::mt19937_64& engine) {
  MatrixXd m(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = i; j < size; ++j) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      m(i, j) = m(j, i) = 2.0 * u - 1.0;
    }
  }
  return m;
}

}  // namespace

bool ExtensionReport::passed() const {
  return pairing_rank == pairing_params && metric_rank == metric_params && all_nondegenerate &&
         max_null_residual <= 1e-12 && max_complement_angle <= 1e-10 &&
         reproduce_pairing <= 1e-12 && reproduce_metric <= 1e-12 && failed_field_variants == 0;
}

ExtensionReport run_extension_demo(const walker::WalkerData& data, const ReportConfig& config,
                                   int variants) {
  walker::validate(data, config.form_samples, config.seed);
  const int n = data.n;
  const int r = data.r;

  ExtensionReport rep;
  rep.n = n;
  rep.r = r;
  rep.k = n - 2 * r;
  rep.l = r;
  rep.m = 1;
  rep.pairing_params = rep.k * rep.l * rep.m;
  rep.metric_params = r * (r + 1) / 2;

  const MetricField g = walker::assemble_unchecked(data);
  const SampleSet samples = sample_nondegenerate(g, kDemoPoints, config.seed);
  rep.points = static_cast<int>(samples.points.size());
  std::mt19937_64 engine(config.seed ^ 0x6a09e667f3bcc909ULL);

  for (const Point& x : samples.points) {
    const MatrixXd gx = g.value(x);
    const double gscale = std::max(1.0, linalg::max_abs(gx));

    // Pairing step: C = D = span(d_1..d_{n-r}) directions, E = R.
    const walker::PartialPairingAtPoint pair = walker::walker_pairing(data, x);
    rep.pairing_rank = std::max(rep.pairing_rank, walker::pairing_parameter_rank(pair));
    const MatrixXd h = data.H.empty() ? MatrixXd::Zero(rep.k, rep.l) : data.H.value(x);
    const auto beta = walker::extend_partial_pairing(pair, {h});
    const MatrixXd want = gx.block(0, r, n - r, n - r);
    rep.reproduce_pairing = std::max(rep.reproduce_pairing, linalg::max_abs(beta[0] - want) / gscale);

    // Metric step.
    const walker::PartialFibreMetricAtPoint partial = walker::walker_partial_metric(data, x);
    rep.metric_rank = std::max(rep.metric_rank, walker::metric_parameter_rank(partial));
    const MatrixXd bx = data.B.empty() ? MatrixXd::Zero(r, r) : data.B.value(x);
    rep.reproduce_metric = std::max(
        rep.reproduce_metric, linalg::max_abs(walker::extend_partial_metric(partial, bx) - gx) / gscale);

    for (int v = 0; v < variants; ++v) {
      const MatrixXd ext = walker::extend_partial_metric(partial, random_symmetric(r, engine));
      ++rep.pointwise_variants;
      if (is_degenerate(ext)) {
        rep.all_nondegenerate = false;
        continue;
      }
      const double scale = std::max(1.0, linalg::max_abs(ext));
      const MatrixXd null = partial.p.transpose() * ext * partial.p;
      rep.max_null_residual = std::max(rep.max_null_residual, linalg::max_abs(null) / scale);
      const MatrixXd perp = orthogonal_complement(ext, partial.p);
      rep.max_complement_angle =
          std::max(rep.max_complement_angle, linalg::max_principal_angle(perp, partial.pprime));
    }
  }

  // Field level: replace B (and H) by fresh admissible blocks and verify.
  for (int v = 1; v <= variants; ++v) {
    walker::WalkerData variant = data;
    const std::uint64_t vseed = config.seed * 1000003ULL + static_cast<std::uint64_t>(v);
    if (r > 0) variant.B = walker::random_symmetric_block(r, n, vseed);
    if (!data.H.empty()) variant.H = walker::random_h_block(n, r, vseed ^ 0x5bd1e995ULL);
    const MetricField vg = walker::assemble(variant);
    const Distribution d = r > 0 ? walker::canonical_distribution(n, r) : Distribution::coordinate(n, 0);
    const VerificationReport vr = run_full_report(vg, d, config);
    std::string line = "variant " + std::to_string(v) + ": " + (vr.passed() ? "pass" : "FAIL") +
                       " (" + vr.fingerprint + ")";
    if (!vr.passed()) ++rep.failed_field_variants;
    rep.field_variants.push_back(line);
  }
  return rep;
}

}  // namespace nullpar::verify
