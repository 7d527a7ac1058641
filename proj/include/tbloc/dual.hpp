#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace tbloc {

/// Scalar carrying value, gradient and Hessian w.r.t. a 3-vector seed.
/// Evaluating a radial/angular kernel on Dual2 arguments yields its exact
/// first and second derivatives by the chain rule.
struct Dual2 {
  double v = 0.0;
  Eigen::Vector3d g = Eigen::Vector3d::Zero();
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();

  Dual2() = default;
  Dual2(double value) : v(value) {}
  Dual2(double value, const Eigen::Vector3d& grad, const Eigen::Matrix3d& hess)
      : v(value), g(grad), h(hess) {}

  static Dual2 seed(double value, int component) {
    Dual2 d(value);
    d.g[component] = 1.0;
    return d;
  }
};

inline Dual2 operator+(const Dual2& a, const Dual2& b) {
  return {a.v + b.v, a.g + b.g, a.h + b.h};
}
inline Dual2 operator-(const Dual2& a, const Dual2& b) {
  return {a.v - b.v, a.g - b.g, a.h - b.h};
}
inline Dual2 operator-(const Dual2& a) { return {-a.v, -a.g, -a.h}; }
inline Dual2 operator*(const Dual2& a, const Dual2& b) {
  Eigen::Matrix3d cross = a.g * b.g.transpose();
  return {a.v * b.v, a.g * b.v + b.g * a.v,
          a.h * b.v + b.h * a.v + cross + cross.transpose()};
}
inline Dual2 operator*(double c, const Dual2& a) { return {c * a.v, c * a.g, c * a.h}; }
inline Dual2 operator*(const Dual2& a, double c) { return c * a; }
inline Dual2 operator+(const Dual2& a, double c) { return {a.v + c, a.g, a.h}; }
inline Dual2 operator+(double c, const Dual2& a) { return a + c; }
inline Dual2 operator-(const Dual2& a, double c) { return {a.v - c, a.g, a.h}; }
inline Dual2 operator-(double c, const Dual2& a) { return {c - a.v, -a.g, -a.h}; }

/// chain rule for f(a) given f, f', f''
inline Dual2 chain(const Dual2& a, double f, double f1, double f2) {
  return {f, f1 * a.g, f1 * a.h + f2 * (a.g * a.g.transpose())};
}

inline Dual2 inv(const Dual2& a) {
  double iv = 1.0 / a.v;
  return chain(a, iv, -iv * iv, 2.0 * iv * iv * iv);
}
inline Dual2 operator/(const Dual2& a, const Dual2& b) { return a * inv(b); }
inline Dual2 operator/(const Dual2& a, double c) { return a * (1.0 / c); }
inline Dual2 operator/(double c, const Dual2& a) { return c * inv(a); }

inline Dual2 exp(const Dual2& a) {
  double e = std::exp(a.v);
  return chain(a, e, e, e);
}
inline Dual2 sqrt(const Dual2& a) {
  double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline Dual2 pow(const Dual2& a, double e) {
  double p = std::pow(a.v, e);
  return chain(a, p, e * p / a.v, e * (e - 1.0) * p / (a.v * a.v));
}
inline Dual2 log(const Dual2& a) {
  return chain(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
}

// generic-scalar helpers so kernels can be written once for double and Dual2
inline double value_of(double x) { return x; }
inline double value_of(const Dual2& x) { return x.v; }

}  // namespace tbloc
