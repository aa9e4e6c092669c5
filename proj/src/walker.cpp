#include "nullpar/walker.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "nullpar/errors.hpp"
#include "nullpar/linalg.hpp"

namespace nullpar::walker {

using Eigen::MatrixXd;

// ---------------------------------------------------------------------------
// FieldMatrix, WalkerData

FieldMatrix::FieldMatrix(int rows, int cols, int nvars)
    : rows_(rows),
      cols_(cols),
      entries_(static_cast<std::size_t>(rows * cols), ScalarField::constant(0.0, nvars)) {
  if (rows < 0 || cols < 0) throw Error(Errc::range, "negative block size");
}

std::size_t FieldMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw Error(Errc::range, "block index out of range");
  return static_cast<std::size_t>(i * cols_ + j);
}

MatrixXd FieldMatrix::value(const Point& x) const {
  std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
  MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(xs);
  }
  return m;
}

WalkerData blank_walker_data(int n, int r) {
  if (n < 1 || r < 0 || 2 * r > n) {
    throw Error(Errc::range, "need 0 <= r <= n/2 (got n=" + std::to_string(n) +
                                 ", r=" + std::to_string(r) + ")");
  }
  const int s = n - 2 * r;
  WalkerData d{n, r, FieldMatrix(s, s, n), FieldMatrix(s, r, n), FieldMatrix(r, r, n)};
  for (int i = 0; i < s; ++i) d.A(i, i) = ScalarField::constant(1.0, n);
  return d;
}

CoordinateSplit CoordinateSplit::make(int n, int r) {
  if (n < 1 || r < 0 || 2 * r > n) throw Error(Errc::range, "need 0 <= r <= n/2");
  CoordinateSplit s{n, r, {}, {}, {}, {}};
  for (int i = n - r + 1; i <= n; ++i) s.sigma_indices.push_back(i);
  for (int i = r + 1; i <= n; ++i) s.q_indices.push_back(i);
  for (int i = 1; i <= n - r; ++i) s.fibre_indices.push_back(i);
  for (int i = r + 1; i <= n - r; ++i) s.leaf_q_indices.push_back(i);
  return s;
}

namespace {

std::string entry_name(const char* block, int i, int j) {
  return std::string(block) + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

std::string point_text(const Point& x) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(x(i));
  }
  return s + ")";
}

void check_shapes(const WalkerData& d) {
  if (d.n < 1 || d.r < 0 || 2 * d.r > d.n) {
    throw Error(Errc::invariant, "condition (i): need 0 <= r <= n/2 (got n=" +
                                     std::to_string(d.n) + ", r=" + std::to_string(d.r) + ")");
  }
  const int s = d.n - 2 * d.r;
  auto shape = [](const FieldMatrix& m, int rows, int cols, const char* name) {
    if (m.rows() != rows || m.cols() != cols) {
      throw Error(Errc::invariant, std::string("condition (i): block ") + name + " must be " +
                                       std::to_string(rows) + "x" + std::to_string(cols) +
                                       ", got " + std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()));
    }
  };
  shape(d.A, s, s, "A");
  shape(d.H, s, d.r, "H");
  shape(d.B, d.r, d.r, "B");
  for (const FieldMatrix* m : {&d.A, &d.H, &d.B}) {
    for (int i = 0; i < m->rows(); ++i) {
      for (int j = 0; j < m->cols(); ++j) {
        if (expr::max_index((*m)(i, j).root()) > d.n) {
          throw Error(Errc::index_range, "block entry references a coordinate beyond x" +
                                             std::to_string(d.n));
        }
      }
    }
  }
}

/// Points in [-1,1]^n where every block entry evaluates.
std::vector<Point> evaluable_points(const WalkerData& d, int count, std::uint64_t seed) {
  PointSampler sampler(d.n, seed);
  std::vector<Point> pts;
  int rejects = 0;
  while (static_cast<int>(pts.size()) < count) {
    Point x = sampler.next();
    try {
      d.A.value(x);
      d.H.value(x);
      d.B.value(x);
      pts.push_back(std::move(x));
    } catch (const Error& e) {
      if (e.code() != Errc::evaluation) throw;
      if (++rejects > 100 * count) throw Error(Errc::invariant, "blocks are not evaluable on [-1,1]^n");
    }
  }
  return pts;
}

}  // namespace

void validate(const WalkerData& d, int samples, std::uint64_t seed) {
  check_shapes(d);
  const auto pts = evaluable_points(d, samples, seed);
  const int s = d.n - 2 * d.r;

  auto check_symmetric = [&](const FieldMatrix& m, const char* name) {
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = i + 1; j < m.cols(); ++j) {
        if (m(i, j) == m(j, i)) continue;
        for (const auto& x : pts) {
          std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
          const double a = m(i, j).evaluate(xs);
          const double b = m(j, i).evaluate(xs);
          if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) {
            throw Error(Errc::invariant, std::string("condition (i): ") + name +
                                             " is not symmetric: " + entry_name(name, i, j) +
                                             " != " + entry_name(name, j, i));
          }
        }
      }
    }
  };
  check_symmetric(d.A, "A");
  check_symmetric(d.B, "B");

  if (s > 0) {
    for (const auto& x : pts) {
      const MatrixXd a = d.A.value(x);
      const double det = a.fullPivLu().determinant();
      if (!(std::abs(det) > degeneracy_floor(a))) {
        throw Error(Errc::invariant, "condition (i): A is singular at " + point_text(x));
      }
    }
  }

  if (d.r == 0) return;
  auto check_independent = [&](const FieldMatrix& m, const char* name) {
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        const ScalarField& f = m(i, j);
        if (!expr::mentions_any(f.root(), 1, d.r)) continue;
        for (const auto& x : pts) {
          std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
          const Jet2 jet = expr::eval_jet2(f, xs);
          for (int v = 0; v < d.r; ++v) {
            if (std::abs(jet.grad(static_cast<std::size_t>(v))) >
                1e-12 * std::max(1.0, std::abs(jet.value()))) {
              throw Error(Errc::invariant, "condition (ii): " + entry_name(name, i, j) + " = " +
                                               f.to_string() + " depends on x" +
                                               std::to_string(v + 1));
            }
          }
        }
      }
    }
  };
  check_independent(d.A, "A");
  check_independent(d.H, "H");
}

MetricField assemble_unchecked(const WalkerData& d) {
  check_shapes(d);
  const int n = d.n;
  const int r = d.r;
  const int s = n - 2 * r;
  MetricField g(n);
  for (int a = 0; a < r; ++a) g.set(a, n - r + a, ScalarField::constant(1.0, n));
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) g.set(r + i, r + j, d.A(i, j));
    for (int b = 0; b < r; ++b) g.set(r + i, n - r + b, d.H(i, b));
  }
  for (int a = 0; a < r; ++a) {
    for (int b = a; b < r; ++b) g.set(n - r + a, n - r + b, d.B(a, b));
  }
  return g;
}

MetricField assemble(const WalkerData& d) {
  validate(d);
  return assemble_unchecked(d);
}

Distribution canonical_distribution(int n, int r) {
  if (r <= 0 || 2 * r > n) {
    throw Error(Errc::range, "canonical distribution needs 0 < r <= n/2 (got n=" +
                                 std::to_string(n) + ", r=" + std::to_string(r) + ")");
  }
  return Distribution::coordinate(n, r);
}

WalkerData split_blocks(const MetricField& g, int r) {
  const int n = g.dim();
  WalkerData d = blank_walker_data(n, r);
  const int s = n - 2 * r;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) d.A(i, j) = g.entry(r + i, r + j);
    for (int b = 0; b < r; ++b) d.H(i, b) = g.entry(r + i, n - r + b);
  }
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) d.B(a, b) = g.entry(n - r + a, n - r + b);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Form check

bool FormCheckReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const auto& it) { return it.passed; });
}

const FormCheckItem* FormCheckReport::find(const std::string& name) const {
  for (const auto& it : items) {
    if (it.name == name) return &it;
  }
  return nullptr;
}

FormCheckReport walker_form_check(const MetricField& g, int r, int samples, std::uint64_t seed) {
  const int n = g.dim();
  FormCheckReport rep;
  rep.n = n;
  rep.r = r;

  FormCheckItem range{"range", r >= 0 && 2 * r <= n, 0.0, 0.0, ""};
  if (!range.passed) {
    range.residual = 1.0;
    range.detail = "need 0 <= r <= n/2 (got n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
    rep.items.push_back(range);
    return rep;
  }
  rep.items.push_back(range);

  const SampleSet set = sample_evaluable(g, samples, seed);
  rep.points = static_cast<int>(set.points.size());
  const int s = n - 2 * r;

  FormCheckItem zero{"zero_blocks", true, 0.0, 0.0, ""};
  FormCheckItem ident{"identity_block", true, 0.0, 0.0, ""};
  // Stored symmetrically, so these hold by construction.
  FormCheckItem asym{"A_symmetric", true, 0.0, 0.0, ""};
  FormCheckItem bsym{"B_symmetric", true, 0.0, 0.0, ""};
  FormCheckItem nonsing{"A_nonsingular", true, 0.0, 0.0, ""};
  FormCheckItem indep{"independence", true, 0.0, 1e-12, ""};

  auto gname = [](int i, int j) { return entry_name("g", i, j); };

  for (const auto& x : set.points) {
    const MatrixXd gx = g.value(x);
    for (int a = 0; a < r; ++a) {
      for (int j = 0; j < n - r; ++j) {
        const double v = std::abs(gx(a, j));
        if (v > zero.residual) {
          zero.residual = v;
          zero.detail = gname(a, j) + " = " + g.entry(a, j).to_string() + " is not 0";
        }
      }
      for (int b = 0; b < r; ++b) {
        const double v = std::abs(gx(a, n - r + b) - (a == b ? 1.0 : 0.0));
        if (v > ident.residual) {
          ident.residual = v;
          ident.detail = gname(a, n - r + b) + " = " + g.entry(a, n - r + b).to_string() +
                         " is not " + (a == b ? "1" : "0");
        }
      }
    }
    if (s > 0) {
      const MatrixXd a = gx.block(r, r, s, s);
      const double det = a.fullPivLu().determinant();
      if (!(std::abs(det) > degeneracy_floor(a))) {
        nonsing.residual += 1.0;
        if (nonsing.detail.empty()) nonsing.detail = "A is singular at " + point_text(x);
      }
    }
    if (r > 0 && s > 0) {
      const double scale = std::max(1.0, linalg::max_abs(gx));
      std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
      for (int i = r; i < n - r; ++i) {
        for (int j = i; j < n; ++j) {
          const ScalarField& f = g.entry(i, j);
          if (!expr::mentions_any(f.root(), 1, r)) continue;
          const Jet2 jet = expr::eval_jet2(f, xs);
          for (int v = 0; v < r; ++v) {
            const double d = std::abs(jet.grad(static_cast<std::size_t>(v))) / scale;
            if (d > indep.residual) {
              indep.residual = d;
              const bool in_a = j < n - r;
              const std::string name = in_a ? entry_name("A", i - r, j - r)
                                            : entry_name("H", i - r, j - (n - r));
              indep.detail = "condition (ii): " + name + " = " + f.to_string() +
                             " depends on x" + std::to_string(v + 1);
            }
          }
        }
      }
    }
  }
  zero.passed = zero.residual <= zero.tolerance;
  ident.passed = ident.residual <= ident.tolerance;
  nonsing.passed = nonsing.residual <= nonsing.tolerance;
  indep.passed = indep.residual <= indep.tolerance;
  for (auto* it : {&zero, &ident, &asym, &bsym, &nonsing, &indep}) rep.items.push_back(*it);
  return rep;
}

// ---------------------------------------------------------------------------
// Extension problems

namespace {

constexpr double kRelTol = 1e-12;

MatrixXd identity_completion(const MatrixXd& sub, int dim) {
  const MatrixXd basis = linalg::complete_basis(sub, MatrixXd::Identity(dim, dim), dim);
  if (basis.cols() != dim) throw Error(Errc::rank, "subspace basis is rank deficient");
  return basis;
}

void validate_pairing(const PartialPairingAtPoint& p) {
  if (p.c_dim < 0 || p.d_dim < 0 || p.e_dim < 0) throw Error(Errc::range, "negative dimension");
  if (p.c_sub.rows() != p.c_dim || p.d_sub.rows() != p.d_dim || p.c_sub.cols() > p.c_dim ||
      p.d_sub.cols() > p.d_dim) {
    throw Error(Errc::range, "subspace bases have the wrong shape");
  }
  if (linalg::numerical_rank(p.c_sub) != p.c_sub.cols() ||
      linalg::numerical_rank(p.d_sub) != p.d_sub.cols()) {
    throw Error(Errc::rank, "subspace bases are rank deficient");
  }
  if (static_cast<int>(p.on_c_dsub.size()) != p.e_dim ||
      static_cast<int>(p.on_csub_d.size()) != p.e_dim) {
    throw Error(Errc::range, "need one prescribed matrix per value component");
  }
  for (int e = 0; e < p.e_dim; ++e) {
    const MatrixXd& g1 = p.on_c_dsub[e];
    const MatrixXd& g2 = p.on_csub_d[e];
    if (g1.rows() != p.c_dim || g1.cols() != p.d_sub.cols() || g2.rows() != p.c_sub.cols() ||
        g2.cols() != p.d_dim) {
      throw Error(Errc::range, "prescribed pairing pieces have the wrong shape");
    }
    const MatrixXd lhs = p.c_sub.transpose() * g1;
    const MatrixXd rhs = g2 * p.d_sub;
    const double scale = std::max({1.0, linalg::max_abs(lhs), linalg::max_abs(rhs)});
    if (linalg::max_abs(lhs - rhs) > kRelTol * scale) {
      throw Error(Errc::inconsistent, "the two prescribed pieces disagree on C' x D' (component " +
                                          std::to_string(e + 1) + ")");
    }
  }
}

}  // namespace

std::vector<MatrixXd> extend_partial_pairing(const PartialPairingAtPoint& p,
                                             const PairingParameters& free) {
  validate_pairing(p);
  const int k = p.k();
  const int l = p.l();
  if (static_cast<int>(free.size()) != p.e_dim) throw Error(Errc::range, "need one free block per value component");
  for (const auto& f : free) {
    if (f.rows() != k || f.cols() != l) {
      throw Error(Errc::range, "free block must be " + std::to_string(k) + "x" + std::to_string(l));
    }
  }
  const MatrixXd cad = identity_completion(p.c_sub, p.c_dim);
  const MatrixXd dad = identity_completion(p.d_sub, p.d_dim);
  const MatrixXd ccomp = cad.rightCols(k);
  const MatrixXd cad_inv_t = cad.transpose().fullPivLu().inverse();
  const MatrixXd dad_inv = dad.fullPivLu().inverse();
  const int csub = p.c_dim - k;
  const int dsub = p.d_dim - l;

  std::vector<MatrixXd> out;
  for (int e = 0; e < p.e_dim; ++e) {
    // Matrix in the adapted bases; rows (C' | C/C'), columns (D' | D/D').
    MatrixXd adapted(p.c_dim, p.d_dim);
    adapted.topRows(csub) = p.on_csub_d[e] * dad;
    adapted.bottomLeftCorner(k, dsub) = ccomp.transpose() * p.on_c_dsub[e];
    adapted.bottomRightCorner(k, l) = free[e];
    out.push_back(cad_inv_t * adapted * dad_inv);
  }
  return out;
}

MatrixXd adapted_basis(const MatrixXd& p, const MatrixXd& pprime, int n) {
  if (p.rows() != n || pprime.rows() != n) throw Error(Errc::range, "subspace bases must have n rows");
  if (linalg::numerical_rank(p) != p.cols() || linalg::numerical_rank(pprime) != pprime.cols()) {
    throw Error(Errc::rank, "subspace bases are rank deficient");
  }
  if (linalg::inclusion_residual(p, pprime) > 1e-10) {
    throw Error(Errc::inclusion, "P is not contained in P'");
  }
  MatrixXd e = linalg::complete_basis(p, pprime, static_cast<int>(pprime.cols()));
  e = linalg::complete_basis(e, MatrixXd::Identity(n, n), n);
  return e;
}

void validate(const PartialFibreMetricAtPoint& p) {
  const int n = p.n;
  const int r = p.r;
  if (n < 1 || r < 0 || 2 * r > n) {
    throw Error(Errc::invariant, "condition (i): need 0 <= r <= n/2");
  }
  if (p.p.rows() != n || p.p.cols() != r || p.pprime.rows() != n || p.pprime.cols() != n - r) {
    throw Error(Errc::invariant, "condition (i): P must be n x r and P' must be n x (n-r)");
  }
  if (linalg::numerical_rank(p.p) != r || linalg::numerical_rank(p.pprime) != n - r) {
    throw Error(Errc::invariant, "condition (i): P or P' basis is rank deficient");
  }
  if (linalg::inclusion_residual(p.p, p.pprime) > 1e-10) {
    throw Error(Errc::invariant, "condition (i): P is not contained in P'");
  }
  if (p.alpha.rows() != n - r || p.alpha.cols() != n) {
    throw Error(Errc::invariant, "condition (ii): alpha must be (n-r) x n");
  }
  if (linalg::numerical_rank(p.alpha) != n - r) {
    throw Error(Errc::invariant, "condition (ii): alpha must have rank n-r");
  }
  const double scale = std::max(1.0, linalg::max_abs(p.alpha)) *
                       std::max(1.0, std::max(linalg::max_abs(p.p), linalg::max_abs(p.pprime)));
  const MatrixXd on_pp = p.alpha * p.pprime;
  if (linalg::max_abs(on_pp - on_pp.transpose()) > 1e-10 * scale) {
    throw Error(Errc::invariant, "condition (ii): alpha is not symmetric on P' x P'");
  }
  if (linalg::max_abs(p.alpha * p.p) > 1e-10 * scale) {
    throw Error(Errc::invariant, "condition (ii): alpha does not vanish on P' x P");
  }
}

MatrixXd extend_partial_metric(const PartialFibreMetricAtPoint& p, const MatrixXd& bfree) {
  validate(p);
  const int n = p.n;
  const int r = p.r;
  const int f = n - r;
  if (bfree.rows() != r || bfree.cols() != r) {
    throw Error(Errc::invariant, "free block must be " + std::to_string(r) + "x" + std::to_string(r));
  }
  if (linalg::max_abs(bfree - bfree.transpose()) > kRelTol * std::max(1.0, linalg::max_abs(bfree))) {
    throw Error(Errc::invariant, "free block must be symmetric");
  }
  const MatrixXd e = adapted_basis(p.p, p.pprime, n);
  // Coordinates of e_1..e_{n-r} in the given P' basis.
  const MatrixXd coeff = p.pprime.colPivHouseholderQr().solve(e.leftCols(f));
  const MatrixXd known = coeff.transpose() * p.alpha * e;  // alpha(e_a, e_j), a < n-r

  MatrixXd adapted = MatrixXd::Zero(n, n);
  adapted.topRows(f) = known;
  adapted.topLeftCorner(f, f) = 0.5 * (known.leftCols(f) + known.leftCols(f).transpose());
  adapted.bottomLeftCorner(r, f) = known.rightCols(r).transpose();
  adapted.bottomRightCorner(r, r) = 0.5 * (bfree + bfree.transpose());

  const MatrixXd e_inv = e.fullPivLu().inverse();
  MatrixXd g = e_inv.transpose() * adapted * e_inv;
  return 0.5 * (g + g.transpose());
}

int pairing_parameter_rank(const PartialPairingAtPoint& p) {
  const int k = p.k();
  const int l = p.l();
  const int m = p.e_dim;
  PairingParameters zero(static_cast<std::size_t>(m), MatrixXd::Zero(k, l));
  const auto base = extend_partial_pairing(p, zero);
  const Eigen::Index out_size = static_cast<Eigen::Index>(m) * p.c_dim * p.d_dim;
  const int params = k * l * m;
  if (params == 0) return 0;
  MatrixXd lin(out_size, params);
  int col = 0;
  for (int e = 0; e < m; ++e) {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < l; ++b, ++col) {
        PairingParameters unit = zero;
        unit[e](a, b) = 1.0;
        const auto ext = extend_partial_pairing(p, unit);
        Eigen::Index row = 0;
        for (int c = 0; c < m; ++c) {
          const MatrixXd diff = ext[c] - base[c];
          for (Eigen::Index i = 0; i < diff.size(); ++i) lin(row++, col) = diff.data()[i];
        }
      }
    }
  }
  return linalg::numerical_rank(lin);
}

int metric_parameter_rank(const PartialFibreMetricAtPoint& p) {
  const int r = p.r;
  const int params = r * (r + 1) / 2;
  if (params == 0) return 0;
  const MatrixXd base = extend_partial_metric(p, MatrixXd::Zero(r, r));
  MatrixXd lin(static_cast<Eigen::Index>(p.n) * p.n, params);
  int col = 0;
  for (int a = 0; a < r; ++a) {
    for (int b = a; b < r; ++b, ++col) {
      MatrixXd unit = MatrixXd::Zero(r, r);
      unit(a, b) = unit(b, a) = 1.0;
      const MatrixXd diff = extend_partial_metric(p, unit) - base;
      for (Eigen::Index i = 0; i < diff.size(); ++i) lin(i, col) = diff.data()[i];
    }
  }
  return linalg::numerical_rank(lin);
}

PartialPairingAtPoint walker_pairing(const WalkerData& d, const Point& x) {
  check_shapes(d);
  const int r = d.r;
  const int s = d.n - 2 * d.r;
  const int dim = d.n - d.r;
  PartialPairingAtPoint p;
  p.c_dim = dim;
  p.d_dim = dim;
  p.e_dim = 1;
  p.c_sub = MatrixXd::Identity(dim, dim).leftCols(r);
  p.d_sub = MatrixXd::Identity(dim, dim).leftCols(s);
  MatrixXd g1 = MatrixXd::Zero(dim, s);
  g1.bottomRows(s) = d.A.value(x);
  MatrixXd g2 = MatrixXd::Zero(r, dim);
  g2.rightCols(r) = MatrixXd::Identity(r, r);
  p.on_c_dsub.push_back(g1);
  p.on_csub_d.push_back(g2);
  return p;
}

PartialFibreMetricAtPoint walker_partial_metric(const WalkerData& d, const Point& x) {
  const MatrixXd g = assemble_unchecked(d).value(x);
  PartialFibreMetricAtPoint p;
  p.n = d.n;
  p.r = d.r;
  p.p = MatrixXd::Identity(d.n, d.n).leftCols(d.r);
  p.pprime = MatrixXd::Identity(d.n, d.n).leftCols(d.n - d.r);
  p.alpha = g.topRows(d.n - d.r);
  return p;
}

MidDimensional mid_dimensional_assemble(int r, const FieldMatrix& b) {
  if (r < 1) throw Error(Errc::range, "mid-dimensional case needs r >= 1");
  if (b.rows() != r || b.cols() != r) {
    throw Error(Errc::invariant, "condition (i): B must be " + std::to_string(r) + "x" + std::to_string(r));
  }
  WalkerData d = blank_walker_data(2 * r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) d.B(i, j) = b(i, j).with_nvars(2 * r);
  }
  return {assemble(d), canonical_distribution(2 * r, r)};
}

}  // namespace nullpar::walker
