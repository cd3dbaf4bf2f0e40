#pragma once

#include <Eigen/Dense>

namespace ebie {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Third-order tensor on R^2, indexed T(i,j,k). Used for grad_gamma, where
// T(i,j,k) = d Gamma_ij / d z_k.
struct Ten3 {
  double v[2][2][2] = {};

  double& operator()(int i, int j, int k) { return v[i][j][k]; }
  double operator()(int i, int j, int k) const { return v[i][j][k]; }

  // Contract the third index with a vector: (T . a)_ij = T_ijk a_k.
  Mat2 contract3(const Vec2& a) const {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m(i, j) = v[i][j][0] * a[0] + v[i][j][1] * a[1];
    return m;
  }

  // Contract the first index with a vector: (a . T)_jk = a_i T_ijk.
  Mat2 contract1(const Vec2& a) const {
    Mat2 m;
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        m(j, k) = a[0] * v[0][j][k] + a[1] * v[1][j][k];
    return m;
  }

  Ten3 operator+(const Ten3& o) const {
    Ten3 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) r.v[i][j][k] = v[i][j][k] + o.v[i][j][k];
    return r;
  }

  Ten3 operator-(const Ten3& o) const {
    Ten3 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) r.v[i][j][k] = v[i][j][k] - o.v[i][j][k];
    return r;
  }

  double max_abs() const {
    double m = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) m = std::max(m, std::abs(v[i][j][k]));
    return m;
  }
};

// Rotation by -pi/2: maps the unit tangent to the outward normal on an
// anticlockwise curve.
inline Vec2 rotate_minus_half_pi(const Vec2& a) { return Vec2(a[1], -a[0]); }

// z-component of the planar cross product a x b.
inline double cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

inline Mat2 outer(const Vec2& a, const Vec2& b) { return a * b.transpose(); }

inline Mat2 sym(const Mat2& m) { return 0.5 * (m + m.transpose()); }

}  // namespace ebie
