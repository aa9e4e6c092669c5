#include "nullpar/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace nullpar::linalg {

double max_abs(const MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

int numerical_rank(const MatrixXd& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

MatrixXd null_space(const MatrixXd& m, double rel_tol) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeFullV);
  const int rank = numerical_rank(m, rel_tol);
  return svd.matrixV().rightCols(n - rank);
}

MatrixXd orthonormal_span(const MatrixXd& m, double rel_tol) {
  if (m.cols() == 0) return MatrixXd(m.rows(), 0);
  Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeThinU);
  const int rank = numerical_rank(m, rel_tol);
  return svd.matrixU().leftCols(rank);
}

double inclusion_residual(const MatrixXd& inner, const MatrixXd& outer) {
  if (inner.cols() == 0) return 0.0;
  const MatrixXd qi = orthonormal_span(inner);
  const MatrixXd qo = orthonormal_span(outer);
  const MatrixXd resid = qi - qo * (qo.transpose() * qi);
  if (resid.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixXd> svd(resid);
  return std::min(1.0, svd.singularValues()(0));
}

double max_principal_angle(const MatrixXd& a, const MatrixXd& b) {
  if (numerical_rank(a) != numerical_rank(b)) return std::numbers::pi / 2;
  const double s = std::max(inclusion_residual(a, b), inclusion_residual(b, a));
  return std::asin(std::min(1.0, s));
}

MatrixXd complete_basis(const MatrixXd& start, const MatrixXd& candidates, int target,
                               double rel_tol) {
  MatrixXd basis = start;
  std::vector<bool> used(static_cast<std::size_t>(candidates.cols()), false);
  while (basis.cols() < target) {
    const MatrixXd q = orthonormal_span(basis);
    Eigen::Index best = -1;
    double best_dist = 0.0;
    for (Eigen::Index c = 0; c < candidates.cols(); ++c) {
      if (used[c]) continue;
      const VectorXd v = candidates.col(c);
      const double norm = v.norm();
      if (norm == 0.0) continue;
      const double dist = (q.cols() ? VectorXd(v - q * (q.transpose() * v)) : v).norm() / norm;
      if (dist > rel_tol && dist > best_dist * (1.0 + 1e-12)) {
        best = c;
        best_dist = dist;
      }
    }
    if (best < 0) break;
    used[best] = true;
    MatrixXd grown(basis.rows(), basis.cols() + 1);
    grown.leftCols(basis.cols()) = basis;
    grown.col(basis.cols()) = candidates.col(best);
    basis = std::move(grown);
  }
  return basis;
}

}  // namespace nullpar::linalg
