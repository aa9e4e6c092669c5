#include <cmath>
#include <random>

#include "nullpar/errors.hpp"
#include "nullpar/walker.hpp"

namespace nullpar::walker {

namespace {

using expr::NodePtr;
using expr::Op;

/// Integer draws from the engine's raw output; std distributions are
/// implementation-defined, this mapping is not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

struct Polynomial {
  NodePtr node;
  double bound = 0.0;  // sum of |coefficients|, bounds |p| on [-1,1]^n
};

/// 1..3 terms, each a multiple of 1/4 in [-2,2] times a monomial of degree
/// <= 2 in `vars`.
Polynomial random_polynomial(Draw& draw, const std::vector<int>& vars) {
  Polynomial p;
  const int terms = draw.uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    int q = 0;
    while (q == 0) q = draw.uniform(-8, 8);
    const double coeff = q / 4.0;
    const int degree = vars.empty() ? 0 : draw.uniform(0, 2);
    NodePtr mono;
    if (degree >= 1) {
      int a = vars[static_cast<std::size_t>(draw.uniform(0, static_cast<int>(vars.size()) - 1))];
      if (degree == 1) {
        mono = expr::make_variable(a);
      } else {
        int b = vars[static_cast<std::size_t>(draw.uniform(0, static_cast<int>(vars.size()) - 1))];
        if (a > b) std::swap(a, b);
        mono = a == b ? expr::make_pow(expr::make_variable(a), 2)
                      : expr::make_binary(Op::mul, expr::make_variable(a), expr::make_variable(b));
      }
    }
    const NodePtr mag = expr::make_constant(std::abs(coeff));
    const NodePtr term = mono ? expr::make_binary(Op::mul, mag, mono) : mag;
    if (!p.node) {
      p.node = coeff < 0 ? expr::make_unary(Op::neg, term) : term;
    } else {
      p.node = expr::make_binary(coeff < 0 ? Op::sub : Op::add, p.node, term);
    }
    p.bound += std::abs(coeff);
  }
  return p;
}

std::vector<int> range(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

}  // namespace

FieldMatrix random_symmetric_block(int size, int n, std::uint64_t seed) {
  Draw draw(seed);
  const auto vars = range(1, n);
  FieldMatrix m(size, size, n);
  for (int i = 0; i < size; ++i) {
    for (int j = i; j < size; ++j) {
      m(i, j) = ScalarField(random_polynomial(draw, vars).node, n);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

FieldMatrix random_h_block(int n, int r, std::uint64_t seed) {
  Draw draw(seed);
  const auto vars = range(r + 1, n);
  const int s = n - 2 * r;
  FieldMatrix h(s, r, n);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < r; ++j) h(i, j) = ScalarField(random_polynomial(draw, vars).node, n);
  }
  return h;
}

WalkerData random_walker_data(int n, int r, std::uint64_t seed) {
  WalkerData d = blank_walker_data(n, r);
  const int s = n - 2 * r;
  Draw draw(seed);
  const auto permitted = range(r + 1, n);

  std::vector<Polynomial> upper;
  std::vector<double> row_bound(static_cast<std::size_t>(s), 0.0);
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) {
      Polynomial p = random_polynomial(draw, permitted);
      if (i != j) {
        row_bound[i] += p.bound;
        row_bound[j] += p.bound;
        d.A(i, j) = ScalarField(p.node, n);
        d.A(j, i) = d.A(i, j);
      } else {
        upper.push_back(p);
      }
    }
  }
  // Strict diagonal dominance on [-1,1]^n: |A_ii| >= shift - bound_ii > sum_j |A_ij|.
  for (int i = 0; i < s; ++i) {
    const Polynomial& p = upper[i];
    const double shift = std::ceil(1.0 + p.bound + row_bound[i]);
    const bool negative = draw.uniform(0, 1) == 1;
    NodePtr node = expr::make_binary(Op::add, expr::make_constant(shift), p.node);
    if (negative) node = expr::make_unary(Op::neg, node);
    d.A(i, i) = ScalarField(node, n);
  }
  d.H = random_h_block(n, r, seed ^ 0x9e3779b97f4a7c15ULL);
  d.B = random_symmetric_block(r, n, seed ^ 0xc2b2ae3d27d4eb4fULL);
  return d;
}

std::optional<WalkerData> perturb_independence(const WalkerData& data) {
  if (data.H.empty()) return std::nullopt;
  WalkerData d = data;
  d.H(0, 0) = d.H(0, 0) + ScalarField::variable(1, d.n);
  return d;
}

}  // namespace nullpar::walker
