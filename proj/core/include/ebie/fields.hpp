#pragma once

#include <vector>

#include "ebie/geometry.hpp"
#include "ebie/potentials.hpp"
#include "ebie/solver.hpp"

namespace ebie {

// Discrete winding number of the grid contour around p.
double winding_number(const BoundaryGrid& grid, const Vec2& p);

// Off-boundary samples of a solution field. Points and values are in the
// problem's physical coordinates; region is +1 outside the interface, -1 inside.
struct FieldEvaluation {
  std::vector<Vec2> points;
  std::vector<Vec2> values;
  std::vector<int> region;
};

FieldEvaluation eval_u(const BaseSolution& sol, const std::vector<Vec2>& points);
FieldEvaluation eval_u_perturbed(const PerturbedSolution& sol, const std::vector<Vec2>& points);

// First-order corrector field: single layer of the corrector density plus the
// curvature-weighted single layer and the double layer carrying the shape term,
// with each side's elastic pair.
FieldEvaluation eval_u1(const BaseSolution& base, const FirstOrderSolution& first,
                        const PerturbationField& h, const std::vector<Vec2>& points);

// One-sided boundary data of the base solution at the grid nodes, in physical
// units (gradients and tractions rescaled back from the unit-diameter frame).
struct BoundaryTrace {
  Side side = Side::plus;
  std::vector<Vec2> x;
  std::vector<Vec2> u;
  std::vector<Mat2> grad;
  std::vector<Mat2> strain;
  std::vector<Vec2> traction;  // conormal with the side's own pair
};

BoundaryTrace boundary_traces(const BaseSolution& sol, Side side);

// The two surface terms measured on a closed observation curve S enclosing the
// interface, and the first-order interface integral they should match after
// multiplication by eps.
struct TractionGap {
  double lhs_displacement = 0.0;  // int_S (u_eps - u) . dF/dnu
  double lhs_traction = 0.0;      // int_S (du_eps/dnu - du/dnu) . F
  double rhs_first_order = 0.0;   // interface integral, printed-form sign
};

TractionGap traction_displacement_gap(const TransmissionProblem& problem,
                                      const PerturbationField& h, double eps,
                                      const Curve& s_curve, const PolynomialField& F);

// Sup-norm residual of the interior Lame operator written in boundary-fitted
// form, evaluated on a collar offset from the interface on the chosen side.
// Derivatives along the normal are finite differences of exact off-boundary
// evaluations; tangential derivatives are spectral.
double local_lame_residual(const BaseSolution& sol, Side side, double offset);

}  // namespace ebie
