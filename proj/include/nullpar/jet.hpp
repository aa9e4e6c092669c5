#pragma once

#include <cstddef>
#include <vector>

namespace nullpar {

/// Order-2 jet of a scalar function of n variables: value, gradient and
/// Hessian at a point. The Hessian is kept as its upper triangle, so it is
/// symmetric by construction.
///
/// Arithmetic propagates the truncated Leibniz and chain rules; results are
/// exact up to floating-point rounding (no truncation error).
class Jet2 {
 public:
  Jet2() = default;
  explicit Jet2(std::size_t nvars, double value = 0.0);

  static Jet2 constant(std::size_t nvars, double value) { return Jet2(nvars, value); }
  /// Jet of the coordinate function x_{index} (0-based) at coordinate value `at`.
  static Jet2 variable(std::size_t nvars, std::size_t index, double at);

  std::size_t nvars() const noexcept { return grad_.size(); }
  double value() const noexcept { return value_; }
  double grad(std::size_t i) const { return grad_[i]; }
  double hess(std::size_t i, std::size_t j) const { return hess_[tri(i, j)]; }
  const std::vector<double>& gradient() const noexcept { return grad_; }
  /// Upper triangle, row-major: (0,0),(0,1)..(0,n-1),(1,1),...
  const std::vector<double>& hessian_upper() const noexcept { return hess_; }

  void set_value(double v) noexcept { value_ = v; }
  void set_grad(std::size_t i, double v) { grad_[i] = v; }
  void set_hess(std::size_t i, std::size_t j, double v) { hess_[tri(i, j)] = v; }

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(double s);

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, double s) { return a *= s; }
  friend Jet2 operator*(double s, Jet2 a) { return a *= s; }
  friend Jet2 operator-(Jet2 a) { return a *= -1.0; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b);

  /// Composition f(u) given f(u0), f'(u0), f''(u0).
  Jet2 compose(double f0, double f1, double f2) const;

  bool operator==(const Jet2&) const = default;

 private:
  std::size_t tri(std::size_t i, std::size_t j) const;

  double value_ = 0.0;
  std::vector<double> grad_;
  std::vector<double> hess_;
};

/// 1/u; the caller guarantees u.value() != 0.
Jet2 reciprocal(const Jet2& u);
/// u^k for integer k; k < 0 requires u.value() != 0.
Jet2 ipow(const Jet2& u, int k);
Jet2 sin(const Jet2& u);
Jet2 cos(const Jet2& u);
Jet2 exp(const Jet2& u);

}  // namespace nullpar
