#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ebie/errors.hpp"
#include "ebie/geometry.hpp"
#include "helpers.hpp"

using namespace ebie;
namespace tt = ebie::testing;

namespace {

constexpr double kPi = std::numbers::pi;

double two_point_slope(double e1, double r1, double e2, double r2) {
  return std::log(r1 / r2) / std::log(e1 / e2);
}

}  // namespace

TEST_CASE("unit circle grid has unit speed, curvature one and radial normals") {
  const BoundaryGrid g = sample_grid(tt::circle(), 64);
  REQUIRE(g.N == 64);
  for (int i = 0; i < g.N; ++i) {
    CHECK(std::abs(g.kappa[i] - 1.0) < 1e-13);
    CHECK(std::abs(g.speed[i] - 1.0) < 1e-13);
    CHECK(std::abs(g.w[i] - 2.0 * kPi / 64) < 1e-15);
    CHECK((g.nrm[i] - g.x[i]).norm() < 1e-13);
  }
  CHECK(std::abs(g.length() - 2.0 * kPi) < 1e-12);
}

TEST_CASE("frame invariants hold on the kite") {
  const BoundaryGrid g = sample_grid(tt::kite(), 128);
  for (int i = 0; i < g.N; ++i) {
    CHECK(std::abs(g.nrm[i].dot(g.tau[i])) < 1e-13);
    CHECK(std::abs(g.nrm[i].norm() - 1.0) < 1e-13);
    CHECK((g.nrm[i] - rotate_minus_half_pi(g.tau[i])).norm() < 1e-13);
  }
}

TEST_CASE("ellipse curvature and normal at the right vertex") {
  const BoundaryGrid g = sample_grid(tt::ellipse(2.0, 1.0), 64);
  // At t=0: x=(2,0), kappa = a/b^2 with a=2, b=1.
  CHECK((g.x[0] - Vec2(2.0, 0.0)).norm() < 1e-13);
  CHECK(std::abs(g.kappa[0] - 2.0) < 1e-12);
  CHECK((g.nrm[0] - Vec2(1.0, 0.0)).norm() < 1e-13);
}

TEST_CASE("kite curvature matches a finite-difference oracle") {
  auto X = [](double t) {
    return Vec2(std::cos(t) + 0.65 * std::cos(2.0 * t) - 0.65, 1.5 * std::sin(t));
  };
  const double t0 = kPi / 2.0, d = 1e-5;
  const Vec2 d1 = (X(t0 + d) - X(t0 - d)) / (2.0 * d);
  const Vec2 d2 = (X(t0 + d) - 2.0 * X(t0) + X(t0 - d)) / (d * d);
  const double kappa_fd = cross2(d1, d2) / std::pow(d1.norm(), 3);

  const int N = 128;
  const BoundaryGrid g = sample_grid(tt::kite(), N);
  const int i = N / 4;  // t_i = pi/2
  REQUIRE(std::abs(g.t[i] - t0) < 1e-14);
  CHECK(std::abs(g.kappa[i] - kappa_fd) < 1e-6);
}

TEST_CASE("sample_grid rejects bad node counts and degenerate curves") {
  CHECK_THROWS_AS((void)sample_grid(tt::circle(), 33), OddNodeCount);
  CHECK_THROWS_AS((void)sample_grid(tt::circle(), 8), OddNodeCount);

  Curve clockwise = tt::circle();
  clockwise.sin_coeffs[1] = Vec2(0.0, -1.0);
  CHECK_THROWS_AS((void)sample_grid(clockwise, 64), DegenerateCurve);

  Curve point;
  point.cos_coeffs = {Vec2(0.3, 0.3)};
  point.sin_coeffs = {Vec2::Zero()};
  CHECK_THROWS_AS((void)sample_grid(point, 64), DegenerateCurve);
}

TEST_CASE("perturbed_grid with eps=0 reproduces the base grid exactly") {
  const BoundaryGrid g = sample_grid(tt::kite(), 64);
  const BoundaryGrid p = perturbed_grid(g, tt::cos_mode(2), 0.0);
  for (int i = 0; i < g.N; ++i) {
    CHECK(p.x[i] == g.x[i]);
    CHECK(p.nrm[i] == g.nrm[i]);
    CHECK(p.kappa[i] == g.kappa[i]);
    CHECK(p.w[i] == g.w[i]);
  }
}

TEST_CASE("radially inflated circle is a circle of the inflated radius") {
  const BoundaryGrid g = sample_grid(tt::circle(), 64);
  const BoundaryGrid p = perturbed_grid(g, tt::cos_mode(0), 0.1);
  for (int i = 0; i < p.N; ++i) {
    CHECK(std::abs(p.x[i].norm() - 1.1) < 1e-14);
    CHECK(std::abs(p.kappa[i] - 1.0 / 1.1) < 1e-13);
    CHECK(std::abs(p.w[i] - 1.1 * 2.0 * kPi / 64) < 1e-14);
  }
}

TEST_CASE("perturbed_grid rejects a fold-risk amplitude") {
  const BoundaryGrid g = sample_grid(tt::circle(), 64);
  CHECK_THROWS_AS((void)perturbed_grid(g, tt::cos_mode(0), 0.95), SelfIntersectionRisk);
}

TEST_CASE("perturbed normals are unit and orthogonal to the composite tangent") {
  const BoundaryGrid g = sample_grid(tt::kite(), 128);
  const PerturbationField h = tt::cos_mode(3);
  const double eps = 0.05;
  const BoundaryGrid p = perturbed_grid(g, h, eps);

  // Composite point from plain evaluations only; tangent by central difference.
  auto phi = [&](double t) {
    const Vec2 d1 = g.base.d1(t);
    const Vec2 n = rotate_minus_half_pi(d1 / d1.norm());
    return Vec2(g.base.point(t) + eps * h.value(t) * n);
  };
  const double d = 1e-6;
  for (int i = 0; i < p.N; i += 7) {
    const Vec2 tan_fd = (phi(g.t[i] + d) - phi(g.t[i] - d)) / (2.0 * d);
    CHECK(std::abs(p.nrm[i].norm() - 1.0) < 1e-13);
    CHECK(std::abs(p.nrm[i].dot(tan_fd) / tan_fd.norm()) < 1e-8);
  }
}

TEST_CASE("perturbed normals are even in eps to second order") {
  const BoundaryGrid g = sample_grid(tt::kite(), 128);
  const PerturbationField h = tt::cos_mode(2);
  auto defect = [&](double eps) {
    const BoundaryGrid pp = perturbed_grid(g, h, eps);
    const BoundaryGrid pm = perturbed_grid(g, h, -eps);
    double sup = 0.0;
    for (int i = 0; i < g.N; ++i)
      sup = std::max(sup, (pp.nrm[i] + pm.nrm[i] - 2.0 * g.nrm[i]).norm());
    return sup;
  };
  const double slope = two_point_slope(0.08, defect(0.08), 0.04, defect(0.04));
  CHECK(slope >= 1.9);
}

TEST_CASE("length element expands as 1 + eps*kappa*h to second order") {
  const BoundaryGrid g = sample_grid(tt::kite(), 128);
  const PerturbationField h = tt::cos_mode(2);
  const GeometryExpansion ex = geometry_expansion(g, h);
  auto defect = [&](double eps) {
    const BoundaryGrid p = perturbed_grid(g, h, eps);
    double sup = 0.0;
    for (int i = 0; i < g.N; ++i)
      sup = std::max(sup, std::abs(p.w[i] / g.w[i] - 1.0 - eps * ex.sigma1[i]));
    return sup;
  };
  const double slope = two_point_slope(0.08, defect(0.08), 0.04, defect(0.04));
  CHECK(slope >= 1.9);
}

TEST_CASE("geometry expansion closed forms on simple profiles") {
  const BoundaryGrid g = sample_grid(tt::circle(), 64);

  const GeometryExpansion ex_const = geometry_expansion(g, tt::cos_mode(0, 0.7));
  for (int i = 0; i < g.N; ++i) {
    CHECK(ex_const.n1[i].norm() < 1e-13);
    CHECK(std::abs(ex_const.sigma1[i] - 0.7 * g.kappa[i]) < 1e-13);
    CHECK(std::abs(ex_const.sigma0[i] - 1.0) < 1e-14);
    CHECK((ex_const.n0[i] - g.nrm[i]).norm() == 0.0);
  }

  // h = cos t on the unit circle: arclength is t, so n1 = sin(t) tau and
  // sigma1 = cos t.
  const GeometryExpansion ex = geometry_expansion(g, tt::cos_mode(1));
  for (int i = 0; i < g.N; ++i) {
    const double t = g.t[i];
    CHECK((ex.n1[i] - std::sin(t) * g.tau[i]).norm() < 1e-12);
    CHECK(std::abs(ex.sigma1[i] - std::cos(t)) < 1e-12);
  }
}

TEST_CASE("perturbed normal matches its first-order expansion") {
  const BoundaryGrid g = sample_grid(tt::kite(), 128);
  const PerturbationField h = tt::cos_mode(2);
  const GeometryExpansion ex = geometry_expansion(g, h);
  auto defect = [&](double eps) {
    const BoundaryGrid p = perturbed_grid(g, h, eps);
    double sup = 0.0;
    for (int i = 0; i < g.N; ++i)
      sup = std::max(sup, (p.nrm[i] - ex.n0[i] - eps * ex.n1[i]).norm());
    return sup;
  };
  const double slope = two_point_slope(0.08, defect(0.08), 0.04, defect(0.04));
  CHECK(slope >= 1.9);
}

TEST_CASE("tangential derivative on scalars") {
  const BoundaryGrid cg = sample_grid(tt::circle(), 64);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(cg.N);
  CHECK(tangential_derivative(cg, ones).cwiseAbs().maxCoeff() < 1e-13);

  Eigen::VectorXd s(cg.N);
  for (int i = 0; i < cg.N; ++i) s[i] = std::sin(cg.t[i]);
  const Eigen::VectorXd ds = tangential_derivative(cg, s);
  for (int i = 0; i < cg.N; ++i) CHECK(std::abs(ds[i] - std::cos(cg.t[i])) < 1e-12);

  // On an ellipse d/dtau = f'(t)/|X'(t)|.
  const BoundaryGrid eg = sample_grid(tt::ellipse(2.0, 1.0), 128);
  Eigen::VectorXd f(eg.N);
  for (int i = 0; i < eg.N; ++i) f[i] = std::cos(2.0 * eg.t[i]);
  const Eigen::VectorXd df = tangential_derivative(eg, f);
  for (int i = 0; i < eg.N; ++i) {
    const double want = -2.0 * std::sin(2.0 * eg.t[i]) / eg.speed[i];
    CHECK(std::abs(df[i] - want) < 1e-10);
  }
}

TEST_CASE("tangential derivative on interleaved two-component samples") {
  const BoundaryGrid g = sample_grid(tt::circle(), 64);
  Eigen::VectorXd v(2 * g.N);
  for (int i = 0; i < g.N; ++i) {
    v[2 * i] = std::cos(g.t[i]);
    v[2 * i + 1] = std::sin(2.0 * g.t[i]);
  }
  const Eigen::VectorXd dv = tangential_derivative(g, v);
  REQUIRE(dv.size() == 2 * g.N);
  for (int i = 0; i < g.N; ++i) {
    CHECK(std::abs(dv[2 * i] + std::sin(g.t[i])) < 1e-12);
    CHECK(std::abs(dv[2 * i + 1] - 2.0 * std::cos(2.0 * g.t[i])) < 1e-12);
  }
}

TEST_CASE("curve and perturbation JSON round-trips") {
  const Curve c = tt::kite();
  const Curve c2 = curve_from_json_text(curve_to_json_text(c));
  REQUIRE(c2.cos_coeffs.size() == c.cos_coeffs.size());
  REQUIRE(c2.sin_coeffs.size() == c.sin_coeffs.size());
  for (size_t k = 0; k < c.cos_coeffs.size(); ++k)
    CHECK((c2.cos_coeffs[k] - c.cos_coeffs[k]).norm() == 0.0);
  for (size_t k = 0; k < c.sin_coeffs.size(); ++k)
    CHECK((c2.sin_coeffs[k] - c.sin_coeffs[k]).norm() == 0.0);

  PerturbationField h = tt::sin_mode(3, 0.25);
  h.h_cos[1] = -0.5;
  const PerturbationField h2 = perturbation_from_json_text(perturbation_to_json_text(h));
  CHECK(h2.h_cos == h.h_cos);
  CHECK(h2.h_sin == h.h_sin);

  CHECK_THROWS_AS((void)curve_from_json_text("{"), ConfigInvalid);
  CHECK_THROWS_AS((void)curve_from_json_text(R"({"cos": "nope"})"), ConfigInvalid);
  CHECK_THROWS_AS((void)perturbation_from_json_text("[1,2]"), ConfigInvalid);
}
