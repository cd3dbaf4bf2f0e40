#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "ebie/geometry.hpp"
#include "ebie/kernels.hpp"

namespace ebie {

enum class Side { plus, minus, principal };

// Nodal boundary density: 2N interleaved scalars, node i occupies [2i, 2i+1].
struct Density {
  Eigen::VectorXd v;

  Density() = default;
  explicit Density(Eigen::VectorXd vals) : v(std::move(vals)) {}
  static Density zero(int nodes) { return Density(Eigen::VectorXd::Zero(2 * nodes)); }

  int nodes() const { return static_cast<int>(v.size()) / 2; }
  Vec2 at(int i) const { return Vec2(v[2 * i], v[2 * i + 1]); }
  void set(int i, const Vec2& a) {
    v[2 * i] = a[0];
    v[2 * i + 1] = a[1];
  }
};

struct BoundaryOperator {
  Eigen::MatrixXd m;
  Side side = Side::principal;

  Density apply(const Density& d) const { return Density(m * d.v); }
};

struct RigidMotionBasis {
  std::array<Density, 3> theta;  // (1,0), (0,1), (x2, -x1) sampled on the grid

  static RigidMotionBasis on(const BoundaryGrid& grid);
};

// Weighted (quadrature) inner product and norms on nodal densities.
double dot_w(const BoundaryGrid& grid, const Density& f, const Density& g);
double norm_l2w(const BoundaryGrid& grid, const Density& f);
// L2 norm of values plus of the tangential derivative (discrete first Sobolev norm).
double norm_w21(const BoundaryGrid& grid, const Density& f);

// Tangential derivative as a 2N x 2N matrix (spectral differentiation divided by speed,
// applied componentwise).
Eigen::MatrixXd tangential_diff_matrix(const BoundaryGrid& grid);

// Block-diagonal multiplier f -> <f,tau>n + (lambda/(2mu+lambda))<f,n>tau.
Eigen::MatrixXd jump_multiplier_matrix(const BoundaryGrid& grid, const LamePair& pair);

// Block-diagonal multiplication by a per-node scalar.
Eigen::MatrixXd scalar_diag(const Eigen::VectorXd& per_node);

// Single layer S: Kress log-quadrature on the A-part, trapezoid with analytic
// diagonal limits on the bounded remainder.
BoundaryOperator assemble_single(const BoundaryGrid& grid, const LamePair& pair);

// Principal-value K* (conormal kernel, no jump term), odd-offset rule.
BoundaryOperator assemble_kstar(const BoundaryGrid& grid, const LamePair& pair);

// Conormal trace of S: (+/- 1/2) I + K*.
BoundaryOperator assemble_s_conormal(const BoundaryGrid& grid, const LamePair& pair, Side side);

// Principal-value double layer K (adjoint family of K*), for duality checks.
BoundaryOperator assemble_k(const BoundaryGrid& grid, const LamePair& pair);

// Trace of the standard double layer: -/+ 1/(2mu) I +/- B n(x)n + K-sharp (PV);
// Side::principal gives the PV part alone.
BoundaryOperator assemble_dsharp_trace(const BoundaryGrid& grid, const LamePair& pair, Side side);

// Plain normal derivative of S: +/- 1/(2mu) I -/+ B n(x)n + (K-sharp)* (PV).
BoundaryOperator assemble_s_normal_trace(const BoundaryGrid& grid, const LamePair& pair,
                                         Side side);

// Principal-value parts of the two gradient columns of S: grad S[phi](x_i) has
// d-th column G[d] phi plus the side jump +/- {(1/2mu) phi (x) n - B<n,phi> n (x) n}.
std::array<BoundaryOperator, 2> assemble_grad_single_pv(const BoundaryGrid& grid,
                                                        const LamePair& pair);

// phi -> (C grad-hat S[phi]) tau on the chosen side (boundary stress along the tangent).
BoundaryOperator assemble_stress_tangential(const BoundaryGrid& grid, const LamePair& pair,
                                            Side side);

// Averaged conormal derivative of D-sharp: finite-part rule on the hypersingular
// piece plus odd-offset rule on the closed-form remainder.
BoundaryOperator assemble_dsharp_conormal_avg(const BoundaryGrid& grid, const LamePair& pair);

// One-sided conormal of D-sharp: average +/- half the tangential jump.
BoundaryOperator assemble_dsharp_conormal(const BoundaryGrid& grid, const LamePair& pair,
                                          Side side);

// First-order single-layer operator S[kappa h phi] + h dS[phi]/dn + D-sharp[h phi],
// assembled on the chosen side (the two sides coincide; the jumps cancel).
BoundaryOperator assemble_s1(const BoundaryGrid& grid, const PerturbationField& h,
                             const LamePair& pair, Side side);

// First-order conormal operator
//   -kappa h dS[phi]/dnu + dS[kappa h phi]/dnu + dD-sharp[h phi]/dnu
//   - d/dtau ( h (C grad-hat S[phi]) tau ),
// assembled on both sides and compared; throws SideMismatch beyond tolerance and
// returns the average.
BoundaryOperator assemble_k1(const BoundaryGrid& grid, const PerturbationField& h,
                             const LamePair& pair, double side_tolerance = 1e-8);

// Sup-norm residual of the tangential-jump identity for the conormal of D-sharp:
// the one-sided limits are taken from off-boundary evaluations (extrapolated in the
// normal offset), the right-hand side spectrally on the boundary. Nodes whose
// normal tube is thinner than the extrapolation ladder (sharp tips) are skipped;
// throws TooCloseToBoundary when fewer than half the nodes remain.
double dsharp_conormal_jump_check(const BoundaryGrid& grid, const LamePair& pair,
                                  const Density& phi);

// Off-boundary evaluation (plain quadrature; points must keep 5 grid spacings of
// clearance or TooCloseToBoundary is thrown).
enum class Which { single, dsharp, grad_single };

struct FieldSamples {
  std::vector<Vec2> values;   // single | dsharp
  std::vector<Mat2> grads;    // grad_single
};

double eval_guard_distance(const BoundaryGrid& grid);
double min_node_distance(const BoundaryGrid& grid, const Vec2& p);

FieldSamples eval_off_boundary(const BoundaryGrid& grid, const Density& density,
                               const LamePair& pair, const std::vector<Vec2>& points,
                               Which which);

// Conormal of the D-sharp field at off-boundary points, with a frozen frame normal
// per point (exact closed-form kernel).
std::vector<Vec2> eval_dsharp_conormal(const BoundaryGrid& grid, const Density& density,
                                       const LamePair& pair, const std::vector<Vec2>& points,
                                       const std::vector<Vec2>& frame_normals);

// Band-limited resampling of a grid and a density to M nodes.
BoundaryGrid resample(const BoundaryGrid& grid, int M);
Density upsample(const Density& d, int M);

}  // namespace ebie
