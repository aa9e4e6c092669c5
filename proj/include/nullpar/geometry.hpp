#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nullpar/expr.hpp"
#include "nullpar/jet.hpp"

namespace nullpar {

using expr::ScalarField;
using Point = Eigen::VectorXd;
using VectorField = std::vector<ScalarField>;

/// Symmetric n x n matrix of coordinate functions; the metric tensor g_ij.
/// Only the upper triangle is stored.
class MetricField {
 public:
  explicit MetricField(int n);

  int dim() const noexcept { return n_; }
  const ScalarField& entry(int i, int j) const { return upper_[index(i, j)]; }
  void set(int i, int j, ScalarField f);

  Eigen::MatrixXd value(const Point& x) const;
  /// Jets of all stored entries (upper triangle, row-major).
  std::vector<Jet2> jets(const Point& x) const;

  /// One entry per line, row-major upper triangle: "g[i][j] = <expr>".
  std::string canonical_text() const;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<ScalarField> upper_;
};

/// Scale-aware degeneracy floor: 1e-10 * (max |g_ij|)^n.
double degeneracy_floor(const Eigen::MatrixXd& g);
bool is_degenerate(const Eigen::MatrixXd& g);

/// A rank-m distribution spanned by m vector fields.
class Distribution {
 public:
  Distribution(int n, std::vector<VectorField> fields);

  /// Span of the coordinate fields d_1..d_k.
  static Distribution coordinate(int n, int k);

  int dim() const noexcept { return n_; }
  int rank() const noexcept { return static_cast<int>(fields_.size()); }
  const std::vector<VectorField>& fields() const noexcept { return fields_; }

  /// n x m matrix of spanning vectors at x.
  Eigen::MatrixXd basis_at(const Point& x) const;

 private:
  int n_;
  std::vector<VectorField> fields_;
};

/// Levi-Civita connection at a point, in coordinate frames.
struct ConnectionAtPoint {
  int n = 0;
  std::vector<double> upper;    // Gamma^k_ij at [(k*n + i)*n + j]
  std::vector<double> lowered;  // Gamma_ij,k at [(i*n + j)*n + k]

  double operator()(int k, int i, int j) const { return upper[(k * n + i) * n + j]; }
  double first_kind(int i, int j, int k) const { return lowered[(i * n + j) * n + k]; }
  double max_abs() const;
};

/// Fully lowered curvature R_ijkl = g(R(d_i, d_j) d_k, d_l) with
/// R(u,v) = nabla_v nabla_u - nabla_u nabla_v + nabla_[u,v].
/// This is the negative of the R(u,v) = [nabla_u, nabla_v] - nabla_[u,v]
/// convention; for the unit sphere R_1212 = +det g.
struct CurvatureAtPoint {
  int n = 0;
  std::vector<double> components;  // n^4, index ((i*n + j)*n + k)*n + l

  double operator()(int i, int j, int k, int l) const {
    return components[((i * n + j) * n + k) * n + l];
  }
  double max_abs() const;
};

struct Signature {
  int minus = 0;
  int plus = 0;
  bool operator==(const Signature&) const = default;
};

/// Everything the checks need at one point: g, its inverse, the jets of its
/// entries, the connection and (optionally) the curvature.
struct LocalGeometry {
  Eigen::MatrixXd g;
  Eigen::MatrixXd g_inv;
  std::vector<Jet2> jets;
  ConnectionAtPoint connection;
  CurvatureAtPoint curvature;
};

/// Throws Error{Errc::degenerate} when g is degenerate at x.
LocalGeometry local_geometry(const MetricField& g, const Point& x, bool with_curvature = true);

ConnectionAtPoint christoffel(const MetricField& g, const Point& x);
CurvatureAtPoint curvature(const MetricField& g, const Point& x);

Signature signature(const Eigen::MatrixXd& g);
Signature signature(const MetricField& g, const Point& x);

/// Basis (orthonormal in the Euclidean sense) of the g-orthogonal complement
/// of the span of `basis` (n x m). Throws Error{Errc::rank} if rank < m.
Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& g, const Eigen::MatrixXd& basis);
Eigen::MatrixXd orthogonal_complement(const MetricField& g, const Distribution& d, const Point& x);

/// (nabla_w v)^k = d_w v^k + Gamma^k_ij w^i v^j at x.
Eigen::VectorXd covariant_derivative(const MetricField& g, const VectorField& w,
                                     const VectorField& v, const Point& x);

/// Column i holds nabla_{d_i} v, using a connection already computed at x.
Eigen::MatrixXd coordinate_derivatives(const ConnectionAtPoint& conn, const VectorField& v,
                                       const Point& x);

/// Deterministic sample points in [-1,1]^n. The mapping from the 64-bit
/// generator output to doubles is fixed here, so sequences are identical
/// across standard libraries.
class PointSampler {
 public:
  PointSampler(int n, std::uint64_t seed);
  Point next();

 private:
  int n_;
  std::mt19937_64 engine_;
};

struct SampleSet {
  std::vector<Point> points;
  int skipped = 0;  // draws rejected as degenerate or not evaluable
};

/// `count` points where g is evaluable and nondegenerate. Rejected draws are
/// re-drawn; throws Error{Errc::degenerate} after 100 * count rejections.
SampleSet sample_nondegenerate(const MetricField& g, int count, std::uint64_t seed);

/// `count` points where every entry of g evaluates (degeneracy allowed).
SampleSet sample_evaluable(const MetricField& g, int count, std::uint64_t seed);

}  // namespace nullpar
