#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nullpar/geometry.hpp"

namespace nullpar::walker {

/// Dense rows x cols matrix of coordinate functions.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(int rows, int cols, int nvars);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  const ScalarField& operator()(int i, int j) const { return entries_[at(i, j)]; }
  ScalarField& operator()(int i, int j) { return entries_[at(i, j)]; }

  Eigen::MatrixXd value(const Point& x) const;

 private:
  std::size_t at(int i, int j) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<ScalarField> entries_;
};

/// Blocks of Walker's canonical metric
///
///        | 0  0  I |     rows/cols grouped as 1..r | r+1..n-r | n-r+1..n
///   g =  | 0  A  H |
///        | I  H' B |
///
/// A: (n-2r)x(n-2r) symmetric and nonsingular, H: (n-2r)x r, B: r x r
/// symmetric; A and H must not depend on x1..xr.
struct WalkerData {
  int n = 0;
  int r = 0;
  FieldMatrix A;
  FieldMatrix H;
  FieldMatrix B;
};

/// Empty-block WalkerData with all entries 0 and A = I.
WalkerData blank_walker_data(int n, int r);

/// Index sets (1-based) of the coordinate ranges used by the construction.
struct CoordinateSplit {
  int n = 0;
  int r = 0;
  std::vector<int> sigma_indices;     // n-r+1..n      (size r)
  std::vector<int> q_indices;         // r+1..n        (size n-r)
  std::vector<int> fibre_indices;     // 1..n-r        (size n-r)
  std::vector<int> leaf_q_indices;    // r+1..n-r      (size n-2r)

  static CoordinateSplit make(int n, int r);
};

/// Checks conditions (i) shape/symmetry/nonsingularity and (ii) independence
/// of A, H from x1..xr at deterministic sample points. Throws
/// Error{Errc::invariant} naming the failing condition and entry.
void validate(const WalkerData& data, int samples = 8, std::uint64_t seed = 0x5eed);

/// Block layout only; shapes and r-range are checked, conditions are not.
MetricField assemble_unchecked(const WalkerData& data);

/// validate() followed by the block layout.
MetricField assemble(const WalkerData& data);

/// span(d_1..d_r); requires 0 < r <= n/2.
Distribution canonical_distribution(int n, int r);

struct FormCheckItem {
  std::string name;
  bool passed = true;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct FormCheckReport {
  int n = 0;
  int r = 0;
  int points = 0;
  std::vector<FormCheckItem> items;

  bool passed() const;
  const FormCheckItem* find(const std::string& name) const;
};

/// Checks that g is presented in Walker form for the given r: block
/// zero/identity pattern, symmetry of A and B, nonsingularity of A and
/// independence of A, H from x1..xr at sampled points.
FormCheckReport walker_form_check(const MetricField& g, int r, int samples = 8,
                                  std::uint64_t seed = 0x5eed);

/// Recovers the blocks of a metric presented in Walker form (no checks).
WalkerData split_blocks(const MetricField& g, int r);

// ---------------------------------------------------------------------------
// Pointwise extension problems

/// Bilinear data C x D -> E prescribed on C x D' and C' x D. Subspaces are
/// given by basis columns in the standard bases of C and D; `on_c_dsub[e]`
/// is gamma_e(c_a, dsub_b) and `on_csub_d[e]` is gamma_e(csub_a, d_b).
struct PartialPairingAtPoint {
  int c_dim = 0;
  int d_dim = 0;
  int e_dim = 0;
  Eigen::MatrixXd c_sub;                  // c_dim x (c_dim - k)
  Eigen::MatrixXd d_sub;                  // d_dim x (d_dim - l)
  std::vector<Eigen::MatrixXd> on_c_dsub; // e_dim of c_dim x (d_dim - l)
  std::vector<Eigen::MatrixXd> on_csub_d; // e_dim of (c_dim - k) x d_dim

  int k() const { return c_dim - static_cast<int>(c_sub.cols()); }
  int l() const { return d_dim - static_cast<int>(d_sub.cols()); }
};

/// Free parameters of a pairing extension: e_dim matrices of size k x l.
using PairingParameters = std::vector<Eigen::MatrixXd>;

/// Total pairing (e_dim matrices c_dim x d_dim) restricting to the given
/// pieces. The parameters fill the (C/C') x (D/D') block in adapted bases.
/// Throws Error{Errc::inconsistent} if the pieces disagree on C' x D'.
std::vector<Eigen::MatrixXd> extend_partial_pairing(const PartialPairingAtPoint& p,
                                                    const PairingParameters& free);

/// alpha: P' x T -> R, rows indexed by the columns of `pprime`, columns by
/// the standard basis of T.
struct PartialFibreMetricAtPoint {
  int n = 0;
  int r = 0;
  Eigen::MatrixXd p;       // n x r
  Eigen::MatrixXd pprime;  // n x (n-r), span(p) inside span(pprime)
  Eigen::MatrixXd alpha;   // (n-r) x n
};

/// Throws Error{Errc::invariant} naming the violated condition.
void validate(const PartialFibreMetricAtPoint& p);

/// Symmetric nondegenerate n x n form whose restriction to P' x T is alpha;
/// `bfree` (symmetric r x r) fills the remaining block in the adapted basis.
Eigen::MatrixXd extend_partial_metric(const PartialFibreMetricAtPoint& p,
                                      const Eigen::MatrixXd& bfree);

/// Basis e_1..e_n with e_1..e_r in P and e_1..e_{n-r} in P'. The first r
/// columns are P's own columns; completion draws from P' and then from the
/// standard basis, each time taking the vector farthest from the current span
/// (lowest index on ties, so coordinate subspaces complete in index order). Throws Error{Errc::inclusion} if P is not inside P'.
Eigen::MatrixXd adapted_basis(const Eigen::MatrixXd& p, const Eigen::MatrixXd& pprime, int n);

/// Rank of the linear part of the parameter-to-extension map.
int pairing_parameter_rank(const PartialPairingAtPoint& p);
int metric_parameter_rank(const PartialFibreMetricAtPoint& p);

/// Pairing instance read off a Walker metric at a point: C = span of the
/// fibre directions (dim n-r), D = tangent space of the base (dim n-r),
/// E = R. Its extension with free = H(x) is the (n-r)x(n-r) submatrix with
/// rows (0 I) and (A H).
PartialPairingAtPoint walker_pairing(const WalkerData& data, const Point& x);

/// Partial fibre metric read off a Walker metric at a point: P = d_1..d_r,
/// P' = d_1..d_{n-r}, alpha = first n-r rows of g(x).
PartialFibreMetricAtPoint walker_partial_metric(const WalkerData& data, const Point& x);

struct MidDimensional {
  MetricField metric;
  Distribution distribution;
};

/// n = 2r metric [[0, I], [I, B]] with P = span(d_1..d_r).
MidDimensional mid_dimensional_assemble(int r, const FieldMatrix& b);

// ---------------------------------------------------------------------------
// Random instances and controls

/// Random admissible data: degree <= 2 polynomial blocks with coefficients
/// in [-2, 2] (multiples of 1/4), A and H in x_{r+1}..x_n only, A strictly
/// diagonally dominant on [-1,1]^n. Deterministic per seed.
WalkerData random_walker_data(int n, int r, std::uint64_t seed);

/// Random symmetric r x r polynomial block in all n variables.
FieldMatrix random_symmetric_block(int size, int n, std::uint64_t seed);

/// Random polynomial H block in the permitted variables x_{r+1}..x_n.
FieldMatrix random_h_block(int n, int r, std::uint64_t seed);

/// Adds x1 to H(1,1), which violates independence from x1..xr. Returns
/// nullopt when H is empty (n = 2r or r = 0): no control is available.
std::optional<WalkerData> perturb_independence(const WalkerData& data);

}  // namespace nullpar::walker
