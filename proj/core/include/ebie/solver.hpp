#pragma once

#include <array>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "ebie/geometry.hpp"
#include "ebie/kernels.hpp"
#include "ebie/potentials.hpp"

namespace ebie {

// One monomial term a * x1^ax * x2^ay * e_j (j in {0,1}).
struct PolyTerm {
  double a = 0.0;
  int ax = 0;
  int ay = 0;
  int j = 0;
};

// Vector-valued polynomial with exact calculus (no numerical differentiation).
struct PolynomialField {
  std::vector<PolyTerm> terms;

  Vec2 value(const Vec2& x) const;
  Mat2 grad(const Vec2& x) const;  // grad(i, d) = d H_i / d x_d
  double divergence(const Vec2& x) const;
  Mat2 strain(const Vec2& x) const;
  Vec2 conormal(const Vec2& x, const Vec2& n, const LamePair& p) const;
  Vec2 normal_derivative(const Vec2& x, const Vec2& n) const;
  // Coefficients of the same field in coordinates x' = gamma x.
  PolynomialField scaled_coords(double gamma) const;
  // Exact polynomial check of mu Laplace(H) + (lambda+mu) grad div H = 0.
  bool is_lame_solution(const LamePair& p) const;
};

struct TransmissionProblem {
  Curve curve;
  LamePair background;
  LamePair inclusion;
  PolynomialField H;
  int nodes = 256;

  // Rejects invalid pairs, a contrast violating (l0-l1)(m0-m1) >= 0, and
  // background data that does not solve the background system.
  void validate() const;
};

// Shared scaled workspace: assembly happens on the curve rescaled to unit
// diameter (the 2D log kernel is scale-sensitive), data in scaled coordinates.
struct Workspace {
  double gamma = 1.0;
  BoundaryGrid grid;  // scaled base grid
  LamePair bg, inc;
  PolynomialField H;  // scaled-coordinates data
  Eigen::MatrixXd system;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  Eigen::MatrixXd s_bg, s_inc;  // single-layer blocks, reused downstream
};

struct BaseSolution {
  std::shared_ptr<const Workspace> ws;
  Density psi;  // interior density (scaled grid)
  Density phi;  // exterior density (scaled grid)
};

struct PerturbedSolution {
  std::shared_ptr<const Workspace> ws;  // base workspace (scaling and data)
  BoundaryGrid grid;                    // scaled perturbed grid
  double eps = 0.0;
  Density psi;
  Density phi;
};

struct FirstOrderSolution {
  Density psi1;
  Density phi1;
};

BaseSolution solve_base(const TransmissionProblem& problem);

// Same data-validation rules as solve_base; the EMT systems bypass the Lame
// check because their monomial data need not solve the background system.
BaseSolution solve_base_with_data(const TransmissionProblem& problem, bool require_lame_data);

// Re-solve on an already-factored workspace with new data (physical coefficients).
BaseSolution solve_with_data_on(const std::shared_ptr<const Workspace>& ws,
                                const PolynomialField& data, bool require_lame_data);

PerturbedSolution solve_perturbed(const TransmissionProblem& problem, const PerturbationField& h,
                                  double eps);

FirstOrderSolution solve_first_order(const TransmissionProblem& problem,
                                     const PerturbationField& h, const BaseSolution& base);

// Quadrature moments of a density against the rigid motions on the grid.
std::array<double, 3> rigid_moments(const BoundaryGrid& grid, const Density& d);

}  // namespace ebie
