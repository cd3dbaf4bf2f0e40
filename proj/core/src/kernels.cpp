#include "ebie/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ebie/errors.hpp"

namespace ebie {

namespace {

constexpr double kPi = std::numbers::pi;

void check_origin(const Vec2& z, double scale) {
  if (z.norm() < 1e-14 * scale) {
    throw OriginEvaluation("kernel evaluated at |x - y| < 1e-14 * scale");
  }
}

}  // namespace

void validate_lame(const LamePair& p) {
  if (!(p.mu > 0.0) || !(p.lambda + p.mu > 0.0)) {
    throw std::invalid_argument("Lame pair requires mu > 0 and lambda + mu > 0");
  }
}

KelvinConstants::KelvinConstants(const LamePair& p) {
  validate_lame(p);
  A = 0.5 * (1.0 / p.mu + 1.0 / (2.0 * p.mu + p.lambda));
  B = 0.5 * (1.0 / p.mu - 1.0 / (2.0 * p.mu + p.lambda));
  if (!(A > 0.0) || !(A >= B) || !(B >= 0.0)) {
    throw std::invalid_argument("Kelvin constants out of range");
  }
}

Mat2 kelvin_gamma(const Vec2& z, const KelvinConstants& c, double scale) {
  check_origin(z, scale);
  const double r2 = z.squaredNorm();
  return (c.A / (4.0 * kPi)) * std::log(r2) * Mat2::Identity() -
         (c.B / (2.0 * kPi)) * outer(z, z) / r2;
}

Ten3 grad_gamma(const Vec2& z, const KelvinConstants& c, double scale) {
  check_origin(z, scale);
  const double r2 = z.squaredNorm();
  const double a = c.A / (2.0 * kPi * r2);
  const double b1 = c.B / (kPi * r2 * r2);
  const double b2 = c.B / (2.0 * kPi * r2);
  Ten3 t{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        t(i, j, k) = a * (i == j) * z[k] + b1 * z[i] * z[j] * z[k] -
                     b2 * ((i == k) * z[j] + z[i] * (j == k));
      }
    }
  }
  return t;
}

Vec2 div_gamma(const Vec2& z, const KelvinConstants& c, double scale) {
  check_origin(z, scale);
  return ((c.A - c.B) / (2.0 * kPi)) * z / z.squaredNorm();
}

Mat2 kernel_K(const Vec2& z, const Vec2& n, const LamePair& p, double scale) {
  const KelvinConstants c(p);
  const Ten3 g = grad_gamma(z, c, scale);
  return p.lambda * outer(div_gamma(z, c, scale), n) +
         p.mu * (g.contract3(n).transpose() + g.contract1(n));
}

Mat2 kernel_KT(const Vec2& z, const Vec2& n_x, const LamePair& p, double scale) {
  const KelvinConstants c(p);
  check_origin(z, scale);
  const double r2 = z.squaredNorm();
  const double zn = z.dot(n_x);
  const double ratio = (c.A - c.B) / (c.A + c.B);
  return (ratio / (2.0 * kPi)) * (zn / r2) * Mat2::Identity() +
         (ratio / (2.0 * kPi)) * (outer(z, n_x) - outer(n_x, z)) / r2 +
         (2.0 * c.B / (kPi * (c.A + c.B))) * zn * outer(z, z) / (r2 * r2);
}

Mat2 kernel_dsharp(const Vec2& z, const Vec2& n_y, const KelvinConstants& c, double scale) {
  check_origin(z, scale);
  const double r2 = z.squaredNorm();
  const double zn = z.dot(n_y);
  return -(c.A / (2.0 * kPi)) * (zn / r2) * Mat2::Identity() -
         (c.B / kPi) * zn * outer(z, z) / (r2 * r2) +
         (c.B / (2.0 * kPi)) * (outer(z, n_y) + outer(n_y, z)) / r2;
}

Mat2 kernel_P(const Vec2& z, const Vec2& n_x, const KelvinConstants& c, double scale) {
  check_origin(z, scale);
  return ((c.A - c.B) / (2.0 * kPi)) * outer(n_x, z) / z.squaredNorm();
}

Mat2 kernel_Q(const Vec2& z, const Vec2& n_x, const KelvinConstants& c, double scale) {
  check_origin(z, scale);
  const double r2 = z.squaredNorm();
  const double zn = z.dot(n_x);
  return ((c.A - c.B) / (2.0 * kPi)) * ((zn / r2) * Mat2::Identity() + outer(z, n_x) / r2) -
         (c.B / kPi) * outer(n_x, z) / r2 +
         (2.0 * c.B / kPi) * zn * outer(z, z) / (r2 * r2);
}

Mat2 kernel_dsharp_conormal(const Vec2& z, const Vec2& n_x, const Vec2& n_y,
                            const KelvinConstants& c, double scale) {
  check_origin(z, scale);
  const double r2 = z.squaredNorm();
  const double r4 = r2 * r2;
  const double zny = z.dot(n_y);
  const double znx = z.dot(n_x);
  const double nn = n_x.dot(n_y);
  const double a1 = (c.A - c.B) / (2.0 * kPi * (c.A + c.B));
  const double a2 = 2.0 * c.B / (kPi * (c.A + c.B));
  return a1 * (2.0 * zny * znx / r4 - nn / r2) * Mat2::Identity() +
         a1 * ((2.0 * zny / r4) * (outer(z, n_x) - outer(n_x, z)) -
               (outer(n_y, n_x) - outer(n_x, n_y)) / r2) +
         a2 * (4.0 * zny * znx * outer(z, z) / (r4 * r2) - nn * outer(z, z) / r4 -
               znx * (outer(z, n_y) + outer(n_y, z)) / r4);
}

Mat2 kernel_graddiv_nn(const Vec2& z, const Vec2& n_x, const KelvinConstants& c, double scale) {
  check_origin(z, scale);
  const double r2 = z.squaredNorm();
  const double zn = z.dot(n_x);
  return ((c.A - c.B) / (2.0 * kPi)) *
         (outer(n_x, n_x) / r2 - 2.0 * zn * outer(n_x, z) / (r2 * r2));
}

Mat2 kernel_L(const Vec2& z, const Vec2& n_x, const KelvinConstants& c, double scale) {
  check_origin(z, scale);
  const double r2 = z.squaredNorm();
  const double r4 = r2 * r2;
  const double zn = z.dot(n_x);
  return ((c.A - c.B) / (2.0 * kPi)) *
             ((Mat2::Identity() + outer(n_x, n_x)) / r2 - (2.0 * zn * zn / r4) * Mat2::Identity() -
              2.0 * zn * outer(z, n_x) / r4) -
         (c.B / kPi) * (outer(n_x, n_x) / r2 - 2.0 * zn * outer(n_x, z) / r4) +
         (2.0 * c.B / kPi) * ((zn / r4) * (outer(z, n_x) + outer(n_x, z)) -
                              (4.0 * zn * zn / (r4 * r2)) * outer(z, z) + outer(z, z) / r4);
}

}  // namespace ebie
