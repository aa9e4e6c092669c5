#include "nullpar/jet.hpp"

#include <cmath>
#include <utility>

namespace nullpar {

Jet2::Jet2(std::size_t nvars, double value)
    : value_(value), grad_(nvars, 0.0), hess_(nvars * (nvars + 1) / 2, 0.0) {}

Jet2 Jet2::variable(std::size_t nvars, std::size_t index, double at) {
  Jet2 j(nvars, at);
  j.grad_[index] = 1.0;
  return j;
}

std::size_t Jet2::tri(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t n = grad_.size();
  return i * n - i * (i - 1) / 2 + (j - i);
}

Jet2& Jet2::operator+=(const Jet2& o) {
  value_ += o.value_;
  for (std::size_t i = 0; i < grad_.size(); ++i) grad_[i] += o.grad_[i];
  for (std::size_t i = 0; i < hess_.size(); ++i) hess_[i] += o.hess_[i];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  value_ -= o.value_;
  for (std::size_t i = 0; i < grad_.size(); ++i) grad_[i] -= o.grad_[i];
  for (std::size_t i = 0; i < hess_.size(); ++i) hess_[i] -= o.hess_[i];
  return *this;
}

Jet2& Jet2::operator*=(double s) {
  value_ *= s;
  for (auto& g : grad_) g *= s;
  for (auto& h : hess_) h *= s;
  return *this;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  const std::size_t n = a.nvars();
  Jet2 r(n, a.value_ * b.value_);
  for (std::size_t i = 0; i < n; ++i) r.grad_[i] = a.value_ * b.grad_[i] + b.value_ * a.grad_[i];
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j, ++t) {
      r.hess_[t] = a.value_ * b.hess_[t] + b.value_ * a.hess_[t] + a.grad_[i] * b.grad_[j] +
                   a.grad_[j] * b.grad_[i];
    }
  }
  return r;
}

Jet2 Jet2::compose(double f0, double f1, double f2) const {
  const std::size_t n = nvars();
  Jet2 r(n, f0);
  for (std::size_t i = 0; i < n; ++i) r.grad_[i] = f1 * grad_[i];
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j, ++t) {
      r.hess_[t] = f1 * hess_[t] + f2 * grad_[i] * grad_[j];
    }
  }
  return r;
}

Jet2 reciprocal(const Jet2& u) {
  const double v = u.value();
  const double inv = 1.0 / v;
  return u.compose(inv, -inv * inv, 2.0 * inv * inv * inv);
}

namespace {

double int_power(double base, int k) {
  // Repeated squaring keeps integer powers exact for exactly representable results.
  bool negative = k < 0;
  unsigned long e = negative ? static_cast<unsigned long>(-(long)k) : static_cast<unsigned long>(k);
  double result = 1.0;
  double b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return negative ? 1.0 / result : result;
}

}  // namespace

Jet2 ipow(const Jet2& u, int k) {
  if (k == 0) return Jet2::constant(u.nvars(), 1.0);
  if (k == 1) return u;
  const double v = u.value();
  const double f0 = int_power(v, k);
  const double f1 = k * int_power(v, k - 1);
  const double f2 = (k == 1) ? 0.0 : static_cast<double>(k) * (k - 1) * int_power(v, k - 2);
  return u.compose(f0, f1, f2);
}

Jet2 sin(const Jet2& u) {
  const double s = std::sin(u.value());
  const double c = std::cos(u.value());
  return u.compose(s, c, -s);
}

Jet2 cos(const Jet2& u) {
  const double s = std::sin(u.value());
  const double c = std::cos(u.value());
  return u.compose(c, -s, -c);
}

Jet2 exp(const Jet2& u) {
  const double e = std::exp(u.value());
  return u.compose(e, e, e);
}

}  // namespace nullpar
