#include "doctest.h"

#include <cmath>
#include <random>

#include "nullpar/errors.hpp"
#include "nullpar/geometry.hpp"
#include "nullpar/linalg.hpp"
#include "nullpar/walker.hpp"
#include "support.hpp"

using namespace nullpar;
using Eigen::MatrixXd;

namespace {

MetricField metric_from(const std::vector<std::vector<std::string>>& rows) {
  const int n = static_cast<int>(rows.size());
  MetricField g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) g.set(i, j, expr::parse(rows[i][j], n));
  return g;
}

double max_rel_gamma(const ConnectionAtPoint& c, const oracle::Gamma& fd) {
  const int n = c.n;
  double scale = 1.0, err = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(fd[k][i][j]));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) err = std::max(err, std::abs(c(k, i, j) - fd[k][i][j]));
  return err / scale;
}

double max_rel_riemann(const CurvatureAtPoint& r, const std::vector<double>& fd) {
  double scale = 1.0, err = 0.0;
  for (double v : fd) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < fd.size(); ++i) err = std::max(err, std::abs(r.components[i] - fd[i]));
  return err / scale;
}

}  // namespace

TEST_CASE("stereographic sphere: sign convention and oracle") {
  // Unit sphere in stereographic coordinates: g = 4/(1+x1^2+x2^2)^2 delta.
  const MetricField g = metric_from({{"4/(1 + x1^2 + x2^2)^2", "0"}, {"", "4/(1 + x1^2 + x2^2)^2"}});
  for (const auto& xs : {std::vector<double>{0.0, 0.0}, {0.3, -0.4}, {0.9, 0.2}}) {
    Point x(2);
    x << xs[0], xs[1];
    const double rho2 = xs[0] * xs[0] + xs[1] * xs[1];
    const CurvatureAtPoint R = curvature(g, x);
    // Sectional curvature +1 in this convention means R_1212 = +det g.
    CHECK(R(0, 1, 0, 1) == doctest::Approx(16.0 / std::pow(1 + rho2, 4)).epsilon(1e-12));
    CHECK(R(0, 1, 1, 0) == doctest::Approx(-R(0, 1, 0, 1)));
    CHECK(max_rel_gamma(christoffel(g, x), oracle::fd_christoffel(g, x)) < 1e-7);
    CHECK(max_rel_riemann(R, oracle::fd_curvature(g, x)) < 1e-5);
  }
}

TEST_CASE("flat metrics have zero connection and curvature") {
  const MetricField g = metric_from({{"0", "1"}, {"", "0"}});
  Point x(2);
  x << 0.2, -0.5;
  const LocalGeometry lg = local_geometry(g, x);
  CHECK(lg.connection.max_abs() == 0.0);
  CHECK(lg.curvature.max_abs() == 0.0);
}

TEST_CASE("connection and curvature agree with finite differences on general metrics") {
  const MetricField g = metric_from({{"2 + x2^2", "x1*x3", "0.5*x2"},
                                     {"", "-1 - x3^2", "sin(x1)"},
                                     {"", "", "3 + exp(x2)*x1"}});
  std::mt19937_64 e(3);
  for (int t = 0; t < 10; ++t) {
    Point x(3);
    for (int i = 0; i < 3; ++i) x[i] = 0.5 * oracle::uniform(e);
    const LocalGeometry lg = local_geometry(g, x);
    CHECK(max_rel_gamma(lg.connection, oracle::fd_christoffel(g, x)) < 1e-7);
    CHECK(max_rel_riemann(lg.curvature, oracle::fd_curvature(g, x)) < 1e-5);
  }
}

TEST_CASE("curvature symmetries hold as properties") {
  std::mt19937_64 e(11);
  for (int t = 0; t < 20; ++t) {
    const auto entry = oracle::corpus_entry(t);
    const MetricField g = walker::assemble(walker::random_walker_data(entry.n, entry.r, entry.seed));
    const auto pts = sample_nondegenerate(g, 3, entry.seed);
    for (const auto& x : pts.points) {
      const CurvatureAtPoint R = curvature(g, x);
      const int n = g.dim();
      const double scale = std::max(1.0, R.max_abs());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              CHECK(std::abs(R(i, j, k, l) + R(j, i, k, l)) <= 1e-12 * scale);
              CHECK(std::abs(R(i, j, k, l) - R(k, l, i, j)) <= 1e-12 * scale);
              CHECK(std::abs(R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l)) <= 1e-12 * scale);
            }
    }
  }
}

TEST_CASE("signature: examples and Sylvester invariance under congruence") {
  CHECK(signature(MatrixXd::Identity(3, 3)) == Signature{0, 3});
  MatrixXd h(2, 2);
  h << 0, 1, 1, 0;
  CHECK(signature(h) == Signature{1, 1});
  MatrixXd d = MatrixXd::Zero(3, 3);
  d.diagonal() << 1, 0, -1;
  CHECK_THROWS_AS(signature(d), Error);

  std::mt19937_64 e(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(e() % 6);
    const int neg = static_cast<int>(e() % static_cast<std::uint64_t>(n + 1));
    MatrixXd diag = MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) diag(i, i) = (i < neg ? -1.0 : 1.0) * (0.5 + std::abs(oracle::uniform(e)));
    const MatrixXd p = oracle::random_matrix(n, n, e) + 2.0 * MatrixXd::Identity(n, n);
    const MatrixXd g = p.transpose() * diag * p;
    CHECK(signature(0.5 * (g + g.transpose())) == Signature{neg, n - neg});
  }
}

TEST_CASE("degeneracy floor scales with the metric") {
  MatrixXd g = MatrixXd::Identity(2, 2) * 1e-3;
  CHECK_FALSE(is_degenerate(g));  // det 1e-6 > 1e-10 * (1e-3)^2
  g(1, 1) = 0.0;
  CHECK(is_degenerate(g));
  CHECK(degeneracy_floor(MatrixXd::Identity(3, 3) * 10.0) == doctest::Approx(1e-7));
}

TEST_CASE("orthogonal complement") {
  MatrixXd g(4, 4);
  g << 0, 0, 0, 1,
       0, 2, 0, 0,
       0, 0, 3, 0,
       1, 0, 0, 5;
  const MatrixXd p = MatrixXd::Identity(4, 4).leftCols(1);
  const MatrixXd perp = orthogonal_complement(g, p);
  CHECK(perp.cols() == 3);
  CHECK((p.transpose() * g * perp).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(linalg::inclusion_residual(p, perp) < 1e-14);
  CHECK_THROWS_AS(orthogonal_complement(g, MatrixXd::Zero(4, 1)), Error);
}

TEST_CASE("covariant derivative of coordinate fields is the connection") {
  const MetricField g = metric_from({{"1 + x2^2", "0"}, {"", "1"}});
  Point x(2);
  x << 0.1, 0.6;
  const VectorField d1 = {ScalarField::constant(1, 2), ScalarField::constant(0, 2)};
  const VectorField d2 = {ScalarField::constant(0, 2), ScalarField::constant(1, 2)};
  const ConnectionAtPoint c = christoffel(g, x);
  const Eigen::VectorXd v = covariant_derivative(g, d2, d1, x);
  CHECK(v[0] == doctest::Approx(c(0, 1, 0)));
  CHECK(v[1] == doctest::Approx(c(1, 1, 0)));
  const MatrixXd cols = coordinate_derivatives(c, d1, x);
  CHECK(cols(0, 1) == doctest::Approx(v[0]));
}

TEST_CASE("sampling is deterministic and rejects degenerate points") {
  PointSampler a(3, 99), b(3, 99);
  for (int i = 0; i < 10; ++i) {
    const Point p = a.next();
    CHECK(p == b.next());
    CHECK(p.cwiseAbs().maxCoeff() <= 1.0);
  }
  MetricField g(2);
  g.set(0, 0, expr::parse("x1", 2));
  g.set(1, 1, expr::parse("1", 2));
  const SampleSet s = sample_nondegenerate(g, 20, 4);
  CHECK(s.points.size() == 20);
  CHECK(s.points == sample_nondegenerate(g, 20, 4).points);

  // Rank one everywhere.
  MetricField rank_one(2);
  rank_one.set(0, 0, expr::parse("1", 2));
  rank_one.set(0, 1, expr::parse("x1", 2));
  rank_one.set(1, 1, expr::parse("x1^2", 2));
  CHECK_THROWS_AS(sample_nondegenerate(rank_one, 5, 1), Error);
  MetricField zero(2);
  CHECK_THROWS_AS(sample_nondegenerate(zero, 5, 1), Error);
}
