// Test-side oracles and instance builders. Nothing in here calls the jet
// machinery: derivatives come from central differences of plain values.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "nullpar/geometry.hpp"
#include "nullpar/walker.hpp"

namespace oracle {

using Eigen::MatrixXd;
using nullpar::MetricField;
using nullpar::Point;

inline double uniform(std::mt19937_64& e) {
  return 2.0 * (static_cast<double>(e() >> 11) * 0x1.0p-53) - 1.0;
}

inline MatrixXd random_matrix(int rows, int cols, std::mt19937_64& e) {
  MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = uniform(e);
  }
  return m;
}

inline MatrixXd random_symmetric(int size, std::mt19937_64& e) {
  MatrixXd m = random_matrix(size, size, e);
  return 0.5 * (m + m.transpose());
}

/// Christoffel symbols of the second kind by central differences of g.
/// Returned as gamma[k][i][j] = Gamma^k_ij.
using Gamma = std::vector<std::vector<std::vector<double>>>;

inline Gamma fd_christoffel(const MetricField& g, const Point& x, double h = 1e-4) {
  const int n = g.dim();
  std::vector<MatrixXd> dg(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    Point xp = x, xm = x;
    xp[m] += h;
    xm[m] -= h;
    dg[m] = (g.value(xp) - g.value(xm)) / (2 * h);
  }
  const MatrixXd ginv = g.value(x).inverse();
  Gamma gamma(n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int m = 0; m < n; ++m) {
          s += ginv(k, m) * 0.5 * (dg[i](j, m) + dg[j](i, m) - dg[m](i, j));
        }
        gamma[k][i][j] = s;
      }
    }
  }
  return gamma;
}

/// Textbook Riemann tensor R^rho_{sigma mu nu} = d_mu Gamma^rho_{nu sigma}
/// - d_nu Gamma^rho_{mu sigma} + Gamma^rho_{mu lam} Gamma^lam_{nu sigma}
/// - Gamma^rho_{nu lam} Gamma^lam_{mu sigma}, with d Gamma by central
/// differences (outer step h). Converted to the library's lowered
/// convention: R_ijkl = -g_{l rho} R^rho_{k i j}. Index ((i*n+j)*n+k)*n+l.
inline std::vector<double> fd_curvature(const MetricField& g, const Point& x, double h = 1e-3,
                                        double inner = 1e-4) {
  const int n = g.dim();
  const Gamma gam = fd_christoffel(g, x, inner);
  std::vector<Gamma> dgam;  // dgam[m][k][i][j] = d_m Gamma^k_ij
  for (int m = 0; m < n; ++m) {
    Point xp = x, xm = x;
    xp[m] += h;
    xm[m] -= h;
    const Gamma gp = fd_christoffel(g, xp, inner);
    const Gamma gm = fd_christoffel(g, xm, inner);
    Gamma d = gp;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[k][i][j] = (gp[k][i][j] - gm[k][i][j]) / (2 * h);
    dgam.push_back(d);
  }
  auto riemann_up = [&](int rho, int sigma, int mu, int nu) {
    double v = dgam[mu][rho][nu][sigma] - dgam[nu][rho][mu][sigma];
    for (int lam = 0; lam < n; ++lam) {
      v += gam[rho][mu][lam] * gam[lam][nu][sigma] - gam[rho][nu][lam] * gam[lam][mu][sigma];
    }
    return v;
  };
  const MatrixXd gx = g.value(x);
  std::vector<double> out(static_cast<std::size_t>(n * n * n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int rho = 0; rho < n; ++rho) s += gx(l, rho) * riemann_up(rho, k, i, j);
          out[((i * n + j) * n + k) * n + l] = -s;
        }
  return out;
}

/// Dimension of the affine space of total pairings (c x d matrices, one per
/// value component) satisfying beta * d_sub = on_c_dsub and
/// c_sub' * beta = on_csub_d: unknowns minus the rank of the constraints.
inline int pairing_solution_dimension(const nullpar::walker::PartialPairingAtPoint& p) {
  const int c = p.c_dim, d = p.d_dim;
  const int ds = static_cast<int>(p.d_sub.cols()), cs = static_cast<int>(p.c_sub.cols());
  // vec(beta) column-major; vec(beta*D) = (D' kron I_c) vec(beta), vec(C'beta) = (I_d kron C') vec(beta).
  MatrixXd k1 = MatrixXd::Zero(c * ds, c * d);
  MatrixXd k2 = MatrixXd::Zero(cs * d, c * d);
  for (int b = 0; b < ds; ++b)
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < c; ++i) k1(b * c + i, j * c + i) = p.d_sub(j, b);
  for (int j = 0; j < d; ++j)
    for (int a = 0; a < cs; ++a)
      for (int i = 0; i < c; ++i) k2(j * cs + a, j * c + i) = p.c_sub(i, a);
  MatrixXd k(k1.rows() + k2.rows(), c * d);
  k << k1, k2;
  Eigen::FullPivLU<MatrixXd> lu(k);
  lu.setThreshold(1e-10);
  const int per_component = c * d - (k.rows() == 0 ? 0 : static_cast<int>(lu.rank()));
  return per_component * p.e_dim;
}

/// Dimension of the affine space of symmetric n x n matrices G with
/// pprime' * G = alpha.
inline int metric_solution_dimension(const nullpar::walker::PartialFibreMetricAtPoint& p) {
  const int n = p.n;
  const int f = static_cast<int>(p.pprime.cols());
  const int unknowns = n * (n + 1) / 2;
  MatrixXd k = MatrixXd::Zero(f * n, unknowns);
  int col = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b, ++col) {
      MatrixXd unit = MatrixXd::Zero(n, n);
      unit(a, b) = unit(b, a) = 1.0;
      const MatrixXd img = p.pprime.transpose() * unit;
      for (int i = 0; i < f; ++i)
        for (int j = 0; j < n; ++j) k(i * n + j, col) = img(i, j);
    }
  }
  if (k.rows() == 0) return unknowns;
  Eigen::FullPivLU<MatrixXd> lu(k);
  lu.setThreshold(1e-10);
  return unknowns - static_cast<int>(lu.rank());
}

/// Consistent random partial pairing with codimensions k, l and e_dim m:
/// pieces are restrictions of a random total pairing.
inline nullpar::walker::PartialPairingAtPoint random_partial_pairing(int k, int l, int m,
                                                                     std::mt19937_64& e) {
  nullpar::walker::PartialPairingAtPoint p;
  const int cs = static_cast<int>(e() % 3), ds = static_cast<int>(e() % 3);
  p.c_dim = cs + k;
  p.d_dim = ds + l;
  p.e_dim = m;
  p.c_sub = random_matrix(p.c_dim, cs, e);
  p.d_sub = random_matrix(p.d_dim, ds, e);
  for (int c = 0; c < m; ++c) {
    const MatrixXd total = random_matrix(p.c_dim, p.d_dim, e);
    p.on_c_dsub.push_back(total * p.d_sub);
    p.on_csub_d.push_back(p.c_sub.transpose() * total);
  }
  return p;
}

/// Random partial fibre metric: a random Walker-like pointwise form
/// W = [[0,0,I],[0,A,H],[I,H',B]] in a random orthonormal frame, with P and
/// P' spanning the first r and n-r frame vectors (so P' is the g-complement
/// of P). Also returns G0.
struct RandomFibreMetric {
  nullpar::walker::PartialFibreMetricAtPoint partial;
  MatrixXd g0;
};

inline RandomFibreMetric random_partial_metric(int n, int r, std::mt19937_64& e) {
  const int s = n - 2 * r;
  MatrixXd w = MatrixXd::Zero(n, n);
  w.block(0, n - r, r, r) = MatrixXd::Identity(r, r);
  w.block(n - r, 0, r, r) = MatrixXd::Identity(r, r);
  MatrixXd a = random_symmetric(s, e);
  a += (static_cast<double>(s) + 1.0) * MatrixXd::Identity(s, s);  // diagonally dominant
  w.block(r, r, s, s) = a;
  const MatrixXd h = random_matrix(s, r, e);
  w.block(r, n - r, s, r) = h;
  w.block(n - r, r, r, s) = h.transpose();
  w.block(n - r, n - r, r, r) = random_symmetric(r, e);
  // Orthonormal frame Q; P and P' get non-orthonormal bases of span(Q[:, :r])
  // and span(Q[:, :n-r]). G0 = Q W Q' keeps the conditioning of W.
  const MatrixXd q = Eigen::HouseholderQR<MatrixXd>(random_matrix(n, n, e)).householderQ();
  const MatrixXd tp = random_matrix(r, r, e) + (r + 1.0) * MatrixXd::Identity(r, r);
  const MatrixXd tpp = random_matrix(n - r, n - r, e) + (n - r + 1.0) * MatrixXd::Identity(n - r, n - r);
  RandomFibreMetric out;
  out.g0 = q * w * q.transpose();
  out.g0 = 0.5 * (out.g0 + out.g0.transpose());
  out.partial.n = n;
  out.partial.r = r;
  out.partial.p = q.leftCols(r) * tp;
  out.partial.pprime = q.leftCols(n - r) * tpp;
  out.partial.alpha = out.partial.pprime.transpose() * out.g0;
  return out;
}

/// The corpus used by acceptance and property tests: instance i has
/// n = 2 + (i % 5), r = 1 + (i / 5) % (n / 2), seed = 1000 + i.
struct CorpusEntry {
  int n;
  int r;
  std::uint64_t seed;
};

inline CorpusEntry corpus_entry(int i) {
  const int n = 2 + i % 5;
  const int r = 1 + (i / 5) % (n / 2);
  return {n, r, 1000u + static_cast<std::uint64_t>(i)};
}

}  // namespace oracle
