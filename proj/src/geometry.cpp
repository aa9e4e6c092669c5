#include "nullpar/geometry.hpp"

#include <cmath>
#include <utility>

#include "nullpar/errors.hpp"
#include "nullpar/linalg.hpp"

namespace nullpar {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// ---------------------------------------------------------------------------
// MetricField

MetricField::MetricField(int n) : n_(n) {
  if (n < 1) throw Error(Errc::range, "metric dimension must be positive");
  upper_.assign(static_cast<std::size_t>(n * (n + 1) / 2), ScalarField::constant(0.0, n));
}

std::size_t MetricField::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error(Errc::range, "metric index out of range");
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i * n_ - i * (i - 1) / 2 + (j - i));
}

void MetricField::set(int i, int j, ScalarField f) {
  upper_[index(i, j)] = f.nvars() == n_ ? std::move(f) : f.with_nvars(n_);
}

MatrixXd MetricField::value(const Point& x) const {
  MatrixXd g(n_, n_);
  std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      g(i, j) = g(j, i) = entry(i, j).evaluate(xs);
    }
  }
  return g;
}

std::vector<Jet2> MetricField::jets(const Point& x) const {
  std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
  std::vector<Jet2> out;
  out.reserve(upper_.size());
  for (const auto& f : upper_) out.push_back(expr::eval_jet2(f, xs));
  return out;
}

std::string MetricField::canonical_text() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      out += "g[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
             "] = " + entry(i, j).to_string() + "\n";
    }
  }
  return out;
}

double degeneracy_floor(const MatrixXd& g) {
  return 1e-10 * std::pow(linalg::max_abs(g), static_cast<double>(g.rows()));
}

bool is_degenerate(const MatrixXd& g) {
  const double det = g.fullPivLu().determinant();
  return !(std::abs(det) > degeneracy_floor(g));
}

namespace {

void require_nondegenerate(const MatrixXd& g) {
  if (is_degenerate(g)) {
    throw Error(Errc::degenerate, "metric is degenerate (|det g| <= " +
                                      std::to_string(degeneracy_floor(g)) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Distribution

Distribution::Distribution(int n, std::vector<VectorField> fields)
    : n_(n), fields_(std::move(fields)) {
  for (auto& v : fields_) {
    if (static_cast<int>(v.size()) != n_) {
      throw Error(Errc::range, "distribution field has wrong number of components");
    }
    for (auto& c : v) {
      if (c.nvars() != n_) c = c.with_nvars(n_);
    }
  }
}

Distribution Distribution::coordinate(int n, int k) {
  if (k < 0 || k > n) throw Error(Errc::range, "coordinate distribution rank out of range");
  std::vector<VectorField> fields;
  for (int a = 0; a < k; ++a) {
    VectorField v;
    for (int i = 0; i < n; ++i) v.push_back(ScalarField::constant(i == a ? 1.0 : 0.0, n));
    fields.push_back(std::move(v));
  }
  return {n, std::move(fields)};
}

MatrixXd Distribution::basis_at(const Point& x) const {
  std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
  MatrixXd b(n_, rank());
  for (int a = 0; a < rank(); ++a) {
    for (int i = 0; i < n_; ++i) b(i, a) = fields_[a][i].evaluate(xs);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Connection and curvature

double ConnectionAtPoint::max_abs() const {
  double m = 0.0;
  for (double v : upper) m = std::max(m, std::abs(v));
  return m;
}

double CurvatureAtPoint::max_abs() const {
  double m = 0.0;
  for (double v : components) m = std::max(m, std::abs(v));
  return m;
}

LocalGeometry local_geometry(const MetricField& metric, const Point& x, bool with_curvature) {
  const int n = metric.dim();
  if (x.size() != n) throw Error(Errc::range, "point dimension does not match the metric");

  LocalGeometry lg;
  lg.jets = metric.jets(x);
  lg.g.resize(n, n);
  auto idx = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i * n - i * (i - 1) / 2 + (j - i));
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) lg.g(i, j) = lg.jets[idx(i, j)].value();
  }
  require_nondegenerate(lg.g);
  lg.g_inv = lg.g.fullPivLu().inverse();

  // dg(l, i, j) = d_l g_ij
  auto dg = [&](int l, int i, int j) { return lg.jets[idx(i, j)].grad(static_cast<std::size_t>(l)); };
  auto ddg = [&](int a, int b, int i, int j) {
    return lg.jets[idx(i, j)].hess(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  };

  ConnectionAtPoint& c = lg.connection;
  c.n = n;
  const auto n3 = static_cast<std::size_t>(n * n * n);
  c.lowered.assign(n3, 0.0);
  c.upper.assign(n3, 0.0);
  // Koszul formula on coordinate fields: the bracket terms vanish.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        c.lowered[(i * n + j) * n + k] = 0.5 * (dg(i, j, k) + dg(j, i, k) - dg(k, i, j));
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int m = 0; m < n; ++m) s += lg.g_inv(k, m) * c.first_kind(i, j, m);
        c.upper[(k * n + i) * n + j] = s;
      }
    }
  }
  if (!with_curvature) return lg;

  // d_l g^{km} = -g^{ka} d_l g_ab g^{bm}
  std::vector<MatrixXd> dginv(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    MatrixXd dgl(n, n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) dgl(a, b) = dg(l, a, b);
    }
    dginv[l] = -lg.g_inv * dgl * lg.g_inv;
  }
  // dgamma[((l*n + k)*n + i)*n + j] = d_l Gamma^k_ij
  std::vector<double> dgamma(static_cast<std::size_t>(n) * n3, 0.0);
  std::vector<double> dlow(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int m = 0; m < n; ++m) {
          dlow[m] = 0.5 * (ddg(l, i, j, m) + ddg(l, j, i, m) - ddg(l, m, i, j));
        }
        for (int k = 0; k < n; ++k) {
          double s = 0.0;
          for (int m = 0; m < n; ++m) {
            s += dginv[l](k, m) * c.first_kind(i, j, m) + lg.g_inv(k, m) * dlow[m];
          }
          dgamma[((l * n + k) * n + i) * n + j] = s;
        }
      }
    }
  }
  auto dG = [&](int l, int k, int i, int j) { return dgamma[((l * n + k) * n + i) * n + j]; };

  // R(d_i,d_j)d_k = nabla_j nabla_i d_k - nabla_i nabla_j d_k
  //   = [d_j G^p_ik - d_i G^p_jk + G^m_ik G^p_jm - G^m_jk G^p_im] d_p
  CurvatureAtPoint& R = lg.curvature;
  R.n = n;
  R.components.assign(static_cast<std::size_t>(n) * n3, 0.0);
  std::vector<double> vec(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int p = 0; p < n; ++p) {
          double s = dG(j, p, i, k) - dG(i, p, j, k);
          for (int m = 0; m < n; ++m) s += c(m, i, k) * c(p, j, m) - c(m, j, k) * c(p, i, m);
          vec[p] = s;
        }
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int p = 0; p < n; ++p) s += lg.g(l, p) * vec[p];
          R.components[((i * n + j) * n + k) * n + l] = s;
        }
      }
    }
  }
  return lg;
}

ConnectionAtPoint christoffel(const MetricField& g, const Point& x) {
  return local_geometry(g, x, false).connection;
}

CurvatureAtPoint curvature(const MetricField& g, const Point& x) {
  return local_geometry(g, x, true).curvature;
}

// ---------------------------------------------------------------------------
// Signature, complements, covariant derivatives

Signature signature(const MatrixXd& g) {
  require_nondegenerate(g);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(g, Eigen::EigenvaluesOnly);
  Signature s;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) < 0.0) {
      ++s.minus;
    } else {
      ++s.plus;
    }
  }
  return s;
}

Signature signature(const MetricField& g, const Point& x) { return signature(g.value(x)); }

MatrixXd orthogonal_complement(const MatrixXd& g, const MatrixXd& basis) {
  require_nondegenerate(g);
  if (linalg::numerical_rank(basis) < basis.cols()) {
    throw Error(Errc::rank, "spanning vectors are linearly dependent at this point");
  }
  const MatrixXd pairing = basis.transpose() * g;
  return linalg::null_space(pairing);
}

MatrixXd orthogonal_complement(const MetricField& g, const Distribution& d, const Point& x) {
  return orthogonal_complement(g.value(x), d.basis_at(x));
}

MatrixXd coordinate_derivatives(const ConnectionAtPoint& conn, const VectorField& v,
                                const Point& x) {
  const int n = conn.n;
  std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
  std::vector<Jet2> vj;
  VectorXd vv(n);
  for (int k = 0; k < n; ++k) {
    vj.push_back(expr::eval_jet2(v[k], xs));
    vv(k) = vj.back().value();
  }
  MatrixXd out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      double s = vj[k].grad(static_cast<std::size_t>(i));
      for (int j = 0; j < n; ++j) s += conn(k, i, j) * vv(j);
      out(k, i) = s;
    }
  }
  return out;
}

VectorXd covariant_derivative(const MetricField& g, const VectorField& w, const VectorField& v,
                              const Point& x) {
  const int n = g.dim();
  if (static_cast<int>(w.size()) != n || static_cast<int>(v.size()) != n) {
    throw Error(Errc::range, "vector field has wrong number of components");
  }
  const ConnectionAtPoint conn = christoffel(g, x);
  std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
  VectorXd wv(n);
  for (int i = 0; i < n; ++i) wv(i) = w[i].evaluate(xs);
  return coordinate_derivatives(conn, v, x) * wv;
}

// ---------------------------------------------------------------------------
// Sampling

PointSampler::PointSampler(int n, std::uint64_t seed) : n_(n), engine_(seed) {}

Point PointSampler::next() {
  Point x(n_);
  for (int i = 0; i < n_; ++i) {
    // 53 high bits -> [0,1) -> [-1,1)
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    x(i) = 2.0 * u - 1.0;
  }
  return x;
}

namespace {

template <class Accept>
SampleSet draw(const MetricField& g, int count, std::uint64_t seed, Accept accept) {
  if (count < 1) throw Error(Errc::range, "sample count must be at least 1");
  PointSampler sampler(g.dim(), seed);
  SampleSet set;
  const int max_rejects = 100 * count;
  while (static_cast<int>(set.points.size()) < count) {
    Point x = sampler.next();
    bool ok = false;
    try {
      ok = accept(x);
    } catch (const Error& e) {
      if (e.code() != Errc::evaluation && e.code() != Errc::degenerate) throw;
    }
    if (ok) {
      set.points.push_back(std::move(x));
    } else if (++set.skipped > max_rejects) {
      throw Error(Errc::degenerate, "no usable sample point found after " +
                                        std::to_string(set.skipped) + " draws");
    }
  }
  return set;
}

}  // namespace

SampleSet sample_nondegenerate(const MetricField& g, int count, std::uint64_t seed) {
  return draw(g, count, seed, [&](const Point& x) {
    g.jets(x);
    return !is_degenerate(g.value(x));
  });
}

SampleSet sample_evaluable(const MetricField& g, int count, std::uint64_t seed) {
  return draw(g, count, seed, [&](const Point& x) {
    g.jets(x);
    return true;
  });
}

}  // namespace nullpar
