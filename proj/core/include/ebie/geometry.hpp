#pragma once

#include <optional>
#include <vector>

#include "ebie/linalg.hpp"

namespace ebie {

// Closed curve X(t) on [0, 2pi) given by real Fourier coefficients.
// Mode k contributes cos(kt)*cos_coeffs[k] + sin(kt)*sin_coeffs[k];
// entry 0 of sin_coeffs is inert. The lists may have different lengths.
struct Curve {
  std::vector<Vec2> cos_coeffs;
  std::vector<Vec2> sin_coeffs;

  Vec2 point(double t) const;
  Vec2 d1(double t) const;
  Vec2 d2(double t) const;
  Vec2 d3(double t) const;

  // Max pairwise distance over a dense parameter sample.
  double diameter(int samples = 1024) const;

  Curve scaled(double factor) const;
};

// Scalar field h(t) on the curve parameter, same Fourier layout as Curve.
struct PerturbationField {
  std::vector<double> h_cos;
  std::vector<double> h_sin;

  double value(double t) const;
  double d1(double t) const;
  double d2(double t) const;

  double max_abs(int samples = 1024) const;
  bool is_zero() const;

  PerturbationField scaled(double factor) const;
};

// Nodal data at N uniform parameter values t_i = 2*pi*i/N.
// Outward normal convention: n = R_{-pi/2} tau on an anticlockwise curve.
// kappa is the standard signed curvature (unit circle: kappa = +1).
struct BoundaryGrid {
  int N = 0;
  Eigen::VectorXd t;
  std::vector<Vec2> x;
  std::vector<Vec2> tau;
  std::vector<Vec2> nrm;
  Eigen::VectorXd kappa;
  Eigen::VectorXd speed;  // |X'(t_i)|
  Eigen::VectorXd w;      // |X'(t_i)| * 2*pi/N

  Curve base;                             // generating curve
  std::optional<PerturbationField> pert;  // set when produced by perturbed_grid
  double eps = 0.0;

  double length() const { return w.sum(); }
  double diameter() const { return base.diameter(); }
};

// First-order expansion of the perturbed normal and length element:
// n(x_eps) = n0 + eps*n1 + O(eps^2), dsigma_eps/dsigma = sigma0 + eps*sigma1 + O(eps^2).
struct GeometryExpansion {
  std::vector<Vec2> n0;
  std::vector<Vec2> n1;
  Eigen::VectorXd sigma0;
  Eigen::VectorXd sigma1;
};

// Sample a curve at N uniform nodes. N must be even and >= 16 (OddNodeCount).
// Throws DegenerateCurve if min |X'| < 1e-10 or the orientation is clockwise.
BoundaryGrid sample_grid(const Curve& curve, int N);

// Grid on the perturbed boundary {x + eps*h(x)n(x)}. Tangents, normals,
// curvature and weights come from exact differentiation of the composite
// parametrization (requires X through third derivatives and h through second).
// Throws SelfIntersectionRisk if eps*max|kappa*h| >= 0.9 (the composite
// tangent folds at 1).
BoundaryGrid perturbed_grid(const BoundaryGrid& grid, const PerturbationField& h, double eps);

// n0 = n, n1 = -h' tau (h' the arclength derivative), sigma0 = 1, sigma1 = kappa*h.
GeometryExpansion geometry_expansion(const BoundaryGrid& grid, const PerturbationField& h);

// Spectral d/dtau = (1/|X'|) d/dt. Accepts scalar samples (size N) or
// interleaved two-component samples (size 2N); returns the same shape.
Eigen::VectorXd tangential_derivative(const BoundaryGrid& grid, const Eigen::VectorXd& samples);

// Plain spectral differentiation matrix in t on N uniform nodes (no 1/|X'|).
Eigen::MatrixXd spectral_diff_matrix(int N);

// JSON forms: {"cos": [[ax,ay],...], "sin": [[ax,ay],...]} and
// {"h_cos": [...], "h_sin": [...]}.
std::string curve_to_json_text(const Curve& curve);
Curve curve_from_json_text(const std::string& text);
std::string perturbation_to_json_text(const PerturbationField& h);
PerturbationField perturbation_from_json_text(const std::string& text);

}  // namespace ebie
