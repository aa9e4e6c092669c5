#pragma once

#include <Eigen/Dense>

namespace nullpar::linalg {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double max_abs(const MatrixXd& m);

/// Number of singular values above rel_tol * largest singular value.
int numerical_rank(const MatrixXd& m, double rel_tol = 1e-10);

/// Orthonormal basis (columns) of the right null space of m.
MatrixXd null_space(const MatrixXd& m, double rel_tol = 1e-10);

/// Orthonormal basis of the column span of m.
MatrixXd orthonormal_span(const MatrixXd& m, double rel_tol = 1e-10);

/// Sine of the largest principal angle between span(inner) and its
/// projection onto span(outer); 0 iff span(inner) is contained in span(outer).
double inclusion_residual(const MatrixXd& inner, const MatrixXd& outer);

/// Largest principal angle (radians) between two subspaces of equal
/// dimension; pi/2 when the dimensions differ.
double max_principal_angle(const MatrixXd& a, const MatrixXd& b);

/// Extends the columns of `start` by columns of `candidates` until `target`
/// columns are reached or no candidate raises the rank. Each step takes the
/// candidate farthest from the current span (lowest index on ties), which
/// keeps the result well conditioned; candidates closer than rel_tol
/// (relative to their norm) are never taken.
MatrixXd complete_basis(const MatrixXd& start, const MatrixXd& candidates, int target,
                               double rel_tol = 1e-10);

}  // namespace nullpar::linalg
