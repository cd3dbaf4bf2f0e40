#include "ebie/potentials.hpp"

#include <cmath>
#include <numbers>

#include "ebie/errors.hpp"
#include "ebie/quadrature.hpp"

namespace ebie {

namespace {

constexpr double kPi = std::numbers::pi;

double max_speed(const BoundaryGrid& grid) { return grid.speed.maxCoeff(); }

void set_block(Eigen::MatrixXd& m, int i, int j, const Mat2& b) {
  m(2 * i, 2 * j) = b(0, 0);
  m(2 * i, 2 * j + 1) = b(0, 1);
  m(2 * i + 1, 2 * j) = b(1, 0);
  m(2 * i + 1, 2 * j + 1) = b(1, 1);
}

void add_block(Eigen::MatrixXd& m, int i, int j, const Mat2& b) {
  m(2 * i, 2 * j) += b(0, 0);
  m(2 * i, 2 * j + 1) += b(0, 1);
  m(2 * i + 1, 2 * j) += b(1, 0);
  m(2 * i + 1, 2 * j + 1) += b(1, 1);
}

// z divided by 2 sin((t-s)/2): analytic across the diagonal, r(t,t) = X'(t).
Vec2 sine_reduced(const BoundaryGrid& grid, int i, int j) {
  const double dt = grid.t[i] - grid.t[j];
  return (grid.x[i] - grid.x[j]) / (2.0 * std::sin(0.5 * dt));
}

Eigen::VectorXd node_values(const BoundaryGrid& grid, const PerturbationField& h) {
  Eigen::VectorXd out(grid.N);
  for (int i = 0; i < grid.N; ++i) out[i] = h.value(grid.t[i]);
  return out;
}

// Per-node 2x2 factor of the hypersingular split: the kernel of the averaged
// D-sharp conormal equals -F(t,s)/(4 sin^2((t-s)/2)) plus a Cauchy-regular
// remainder, with F analytic across the diagonal.
Mat2 fp_factor(const BoundaryGrid& grid, const KelvinConstants& c, int i, int j) {
  const double a1 = (c.A - c.B) / (2.0 * kPi * (c.A + c.B));
  const double a2 = 2.0 * c.B / (kPi * (c.A + c.B));
  if (i == j) {
    return (a1 * Mat2::Identity() + a2 * outer(grid.tau[i], grid.tau[i])) / grid.speed[i];
  }
  const Vec2 r = sine_reduced(grid, i, j);
  const double r2 = r.squaredNorm();
  return grid.nrm[i].dot(grid.nrm[j]) * (a1 * Mat2::Identity() + a2 * outer(r, r) / r2) *
         grid.speed[j] / r2;
}

Mat2 side_term_dsharp(const BoundaryGrid& grid, const LamePair& pair, const KelvinConstants& c,
                      Side side, int i) {
  if (side == Side::principal) return Mat2::Zero();
  const double sgn = (side == Side::plus) ? 1.0 : -1.0;
  return sgn * (-0.5 / pair.mu * Mat2::Identity() + c.B * outer(grid.nrm[i], grid.nrm[i]));
}

// Neville extrapolation to zero of samples (t_k, y_k).
double neville_to_zero(const std::vector<double>& t, std::vector<double> y) {
  const int n = static_cast<int>(t.size());
  for (int level = 1; level < n; ++level) {
    for (int k = 0; k + level < n; ++k) {
      y[k] = (t[k + level] * y[k] - t[k] * y[k + 1]) / (t[k + level] - t[k]);
    }
  }
  return y[0];
}

}  // namespace

RigidMotionBasis RigidMotionBasis::on(const BoundaryGrid& grid) {
  RigidMotionBasis b;
  for (auto& d : b.theta) d = Density::zero(grid.N);
  for (int i = 0; i < grid.N; ++i) {
    b.theta[0].set(i, Vec2(1.0, 0.0));
    b.theta[1].set(i, Vec2(0.0, 1.0));
    b.theta[2].set(i, Vec2(grid.x[i][1], -grid.x[i][0]));
  }
  return b;
}

double dot_w(const BoundaryGrid& grid, const Density& f, const Density& g) {
  double s = 0.0;
  for (int i = 0; i < grid.N; ++i) {
    s += grid.w[i] * (f.v[2 * i] * g.v[2 * i] + f.v[2 * i + 1] * g.v[2 * i + 1]);
  }
  return s;
}

double norm_l2w(const BoundaryGrid& grid, const Density& f) {
  return std::sqrt(dot_w(grid, f, f));
}

double norm_w21(const BoundaryGrid& grid, const Density& f) {
  const Density df(tangential_diff_matrix(grid) * f.v);
  return std::sqrt(dot_w(grid, f, f) + dot_w(grid, df, df));
}

Eigen::MatrixXd tangential_diff_matrix(const BoundaryGrid& grid) {
  const Eigen::MatrixXd D = spectral_diff_matrix(grid.N);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * grid.N, 2 * grid.N);
  for (int i = 0; i < grid.N; ++i) {
    for (int j = 0; j < grid.N; ++j) {
      out(2 * i, 2 * j) = D(i, j) / grid.speed[i];
      out(2 * i + 1, 2 * j + 1) = D(i, j) / grid.speed[i];
    }
  }
  return out;
}

Eigen::MatrixXd jump_multiplier_matrix(const BoundaryGrid& grid, const LamePair& pair) {
  const double c = pair.lambda / (2.0 * pair.mu + pair.lambda);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * grid.N, 2 * grid.N);
  for (int i = 0; i < grid.N; ++i) {
    set_block(out, i, i, outer(grid.nrm[i], grid.tau[i]) + c * outer(grid.tau[i], grid.nrm[i]));
  }
  return out;
}

Eigen::MatrixXd scalar_diag(const Eigen::VectorXd& per_node) {
  const int N = static_cast<int>(per_node.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  for (int i = 0; i < N; ++i) {
    out(2 * i, 2 * i) = per_node[i];
    out(2 * i + 1, 2 * i + 1) = per_node[i];
  }
  return out;
}

BoundaryOperator assemble_single(const BoundaryGrid& grid, const LamePair& pair) {
  const KelvinConstants c(pair);
  const int N = grid.N;
  const double scale = grid.diameter();
  const double tz = 2.0 * kPi / N;
  const Eigen::VectorXd R = kress_log_weights(N);
  BoundaryOperator op;
  op.m = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  op.side = Side::principal;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      Mat2 smooth;
      if (i == j) {
        smooth = (c.A / (4.0 * kPi)) * std::log(grid.speed[i] * grid.speed[i]) * Mat2::Identity() -
                 (c.B / (2.0 * kPi)) * outer(grid.tau[i], grid.tau[i]);
      } else {
        const Vec2 r = sine_reduced(grid, i, j);
        const double r2 = r.squaredNorm();
        if (r2 < 1e-28 * scale * scale) {
          throw DegenerateCurve("coincident quadrature nodes in single-layer assembly");
        }
        smooth = (c.A / (4.0 * kPi)) * std::log(r2) * Mat2::Identity() -
                 (c.B / (2.0 * kPi)) * outer(r, r) / r2;
      }
      const double logw = (c.A / (4.0 * kPi)) * R[(i - j + N) % N];
      set_block(op.m, i, j, grid.speed[j] * (logw * Mat2::Identity() + tz * smooth));
    }
  }
  return op;
}

BoundaryOperator assemble_kstar(const BoundaryGrid& grid, const LamePair& pair) {
  const int N = grid.N;
  const double scale = grid.diameter();
  BoundaryOperator op;
  op.m = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  op.side = Side::principal;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if ((i - j) % 2 == 0) continue;
      const double w = odd_offset_weight(N, i - j);
      set_block(op.m, i, j,
                w * grid.speed[j] * kernel_KT(grid.x[i] - grid.x[j], grid.nrm[i], pair, scale));
    }
  }
  return op;
}

BoundaryOperator assemble_s_conormal(const BoundaryGrid& grid, const LamePair& pair, Side side) {
  BoundaryOperator op = assemble_kstar(grid, pair);
  if (side != Side::principal) {
    const double sgn = (side == Side::plus) ? 0.5 : -0.5;
    op.m += sgn * Eigen::MatrixXd::Identity(2 * grid.N, 2 * grid.N);
    op.side = side;
  }
  return op;
}

BoundaryOperator assemble_k(const BoundaryGrid& grid, const LamePair& pair) {
  const int N = grid.N;
  const double scale = grid.diameter();
  BoundaryOperator op;
  op.m = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  op.side = Side::principal;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if ((i - j) % 2 == 0) continue;
      const double w = odd_offset_weight(N, i - j);
      // The double-layer kernel is the conormal at y of Gamma(x-y); the y
      // derivative flips the argument sign relative to kernel_K's z-gradients.
      set_block(op.m, i, j,
                w * grid.speed[j] * kernel_K(grid.x[j] - grid.x[i], grid.nrm[j], pair, scale));
    }
  }
  return op;
}

BoundaryOperator assemble_dsharp_trace(const BoundaryGrid& grid, const LamePair& pair, Side side) {
  const KelvinConstants c(pair);
  const int N = grid.N;
  const double scale = grid.diameter();
  BoundaryOperator op;
  op.m = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  op.side = side;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if ((i - j) % 2 == 0) continue;
      const double w = odd_offset_weight(N, i - j);
      set_block(op.m, i, j,
                w * grid.speed[j] * kernel_dsharp(grid.x[i] - grid.x[j], grid.nrm[j], c, scale));
    }
    add_block(op.m, i, i, side_term_dsharp(grid, pair, c, side, i));
  }
  return op;
}

BoundaryOperator assemble_s_normal_trace(const BoundaryGrid& grid, const LamePair& pair,
                                         Side side) {
  const KelvinConstants c(pair);
  const int N = grid.N;
  const double scale = grid.diameter();
  BoundaryOperator op;
  op.m = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  op.side = side;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if ((i - j) % 2 == 0) continue;
      const double w = odd_offset_weight(N, i - j);
      const Mat2 k = grad_gamma(grid.x[i] - grid.x[j], c, scale).contract3(grid.nrm[i]);
      set_block(op.m, i, j, w * grid.speed[j] * k);
    }
    // Jump mirror of the standard double layer trace.
    add_block(op.m, i, i, -side_term_dsharp(grid, pair, c, side, i));
  }
  return op;
}

std::array<BoundaryOperator, 2> assemble_grad_single_pv(const BoundaryGrid& grid,
                                                        const LamePair& pair) {
  const KelvinConstants c(pair);
  const int N = grid.N;
  const double scale = grid.diameter();
  std::array<BoundaryOperator, 2> ops;
  for (auto& op : ops) {
    op.m = Eigen::MatrixXd::Zero(2 * N, 2 * N);
    op.side = Side::principal;
  }
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if ((i - j) % 2 == 0) continue;
      const double w = odd_offset_weight(N, i - j);
      const Ten3 t = grad_gamma(grid.x[i] - grid.x[j], c, scale);
      for (int d = 0; d < 2; ++d) {
        set_block(ops[d].m, i, j, w * grid.speed[j] * t.contract3(Vec2::Unit(d)));
      }
    }
  }
  return ops;
}

BoundaryOperator assemble_stress_tangential(const BoundaryGrid& grid, const LamePair& pair,
                                            Side side) {
  const KelvinConstants c(pair);
  const int N = grid.N;
  const auto grads = assemble_grad_single_pv(grid, pair);
  BoundaryOperator op;
  op.m = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  op.side = side;
  // Stress from the gradient columns: column d of grad S contributes
  // lambda <g_d, e_d> tau + mu tau_d g_d + mu <g_d, tau> e_d to (C grad-hat S) tau.
  for (int d = 0; d < 2; ++d) {
    Eigen::MatrixXd Bd = Eigen::MatrixXd::Zero(2 * N, 2 * N);
    for (int i = 0; i < N; ++i) {
      const Vec2 tau = grid.tau[i];
      const Mat2 b = pair.lambda * outer(tau, Vec2::Unit(d)) + pair.mu * tau[d] * Mat2::Identity() +
                     pair.mu * outer(Vec2::Unit(d), tau);
      set_block(Bd, i, i, b);
    }
    op.m += Bd * grads[d].m;
  }
  if (side != Side::principal) {
    const double sgn = (side == Side::plus) ? 1.0 : -1.0;
    const double cn = pair.lambda * (0.5 / pair.mu - c.B);
    for (int i = 0; i < N; ++i) {
      add_block(op.m, i, i,
                sgn * (cn * outer(grid.tau[i], grid.nrm[i]) +
                       0.5 * outer(grid.nrm[i], grid.tau[i])));
    }
  }
  return op;
}

BoundaryOperator assemble_dsharp_conormal_avg(const BoundaryGrid& grid, const LamePair& pair) {
  const KelvinConstants c(pair);
  const int N = grid.N;
  const double scale = grid.diameter();
  const double a1 = (c.A - c.B) / (2.0 * kPi * (c.A + c.B));
  const double a2 = 2.0 * c.B / (kPi * (c.A + c.B));
  const Eigen::VectorXd fpw = fp_weights(N);
  BoundaryOperator op;
  op.m = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  op.side = Side::principal;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      Mat2 b = -fpw[(i - j + N) % N] * fp_factor(grid, c, i, j);
      if ((i - j) % 2 != 0) {
        // Cauchy-regular remainder: full kernel plus the hypersingular part that the
        // finite-part rule already accounts for (the 1/|z|^2 terms cancel exactly).
        const Vec2 z = grid.x[i] - grid.x[j];
        const double z2 = z.squaredNorm();
        const Mat2 wreg =
            kernel_dsharp_conormal(z, grid.nrm[i], grid.nrm[j], c, scale) +
            grid.nrm[i].dot(grid.nrm[j]) * (a1 * Mat2::Identity() + a2 * outer(z, z) / z2) / z2;
        b += odd_offset_weight(N, i - j) * grid.speed[j] * wreg;
      }
      add_block(op.m, i, j, b);
    }
  }
  return op;
}

BoundaryOperator assemble_dsharp_conormal(const BoundaryGrid& grid, const LamePair& pair,
                                          Side side) {
  BoundaryOperator op = assemble_dsharp_conormal_avg(grid, pair);
  if (side != Side::principal) {
    const double sgn = (side == Side::plus) ? 0.5 : -0.5;
    op.m += sgn * tangential_diff_matrix(grid) * jump_multiplier_matrix(grid, pair);
    op.side = side;
  }
  return op;
}

BoundaryOperator assemble_s1(const BoundaryGrid& grid, const PerturbationField& h,
                             const LamePair& pair, Side side) {
  const Eigen::VectorXd hv = node_values(grid, h);
  const Eigen::VectorXd kh = grid.kappa.cwiseProduct(hv);
  BoundaryOperator op;
  op.m = assemble_single(grid, pair).m * scalar_diag(kh) +
         scalar_diag(hv) * assemble_s_normal_trace(grid, pair, side).m +
         assemble_dsharp_trace(grid, pair, side).m * scalar_diag(hv);
  op.side = side;
  return op;
}

BoundaryOperator assemble_k1(const BoundaryGrid& grid, const PerturbationField& h,
                             const LamePair& pair, double side_tolerance) {
  const Eigen::VectorXd hv = node_values(grid, h);
  const Eigen::VectorXd kh = grid.kappa.cwiseProduct(hv);
  const Eigen::MatrixXd dh = scalar_diag(hv);
  const Eigen::MatrixXd dkh = scalar_diag(kh);
  const Eigen::MatrixXd dtau = tangential_diff_matrix(grid);
  Eigen::MatrixXd variants[2];
  const Side sides[2] = {Side::plus, Side::minus};
  for (int s = 0; s < 2; ++s) {
    const Eigen::MatrixXd nu = assemble_s_conormal(grid, pair, sides[s]).m;
    variants[s] = nu * dkh - dkh * nu + assemble_dsharp_conormal(grid, pair, sides[s]).m * dh -
                  dtau * dh * assemble_stress_tangential(grid, pair, sides[s]).m;
  }
  const double diff = (variants[0] - variants[1]).cwiseAbs().maxCoeff();
  if (diff > side_tolerance) {
    throw SideMismatch("first-order conormal operator: side assemblies differ by " +
                       std::to_string(diff));
  }
  BoundaryOperator op;
  op.m = 0.5 * (variants[0] + variants[1]);
  op.side = Side::principal;
  return op;
}

double eval_guard_distance(const BoundaryGrid& grid) {
  return 5.0 * (2.0 * kPi / grid.N) * max_speed(grid);
}

double min_node_distance(const BoundaryGrid& grid, const Vec2& p) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& x : grid.x) d = std::min(d, (p - x).norm());
  return d;
}

FieldSamples eval_off_boundary(const BoundaryGrid& grid, const Density& density,
                               const LamePair& pair, const std::vector<Vec2>& points,
                               Which which) {
  const KelvinConstants c(pair);
  const double scale = grid.diameter();
  const double guard = eval_guard_distance(grid);
  FieldSamples out;
  for (const auto& p : points) {
    if (min_node_distance(grid, p) < guard) {
      throw TooCloseToBoundary("off-boundary evaluation point within 5 grid spacings");
    }
    if (which == Which::grad_single) {
      Mat2 g = Mat2::Zero();
      for (int j = 0; j < grid.N; ++j) {
        const Ten3 t = grad_gamma(p - grid.x[j], c, scale);
        for (int d = 0; d < 2; ++d) {
          g.col(d) += grid.w[j] * (t.contract3(Vec2::Unit(d)) * density.at(j));
        }
      }
      out.grads.push_back(g);
    } else {
      Vec2 v = Vec2::Zero();
      for (int j = 0; j < grid.N; ++j) {
        const Mat2 k = (which == Which::single)
                           ? kelvin_gamma(p - grid.x[j], c, scale)
                           : kernel_dsharp(p - grid.x[j], grid.nrm[j], c, scale);
        v += grid.w[j] * (k * density.at(j));
      }
      out.values.push_back(v);
    }
  }
  return out;
}

std::vector<Vec2> eval_dsharp_conormal(const BoundaryGrid& grid, const Density& density,
                                       const LamePair& pair, const std::vector<Vec2>& points,
                                       const std::vector<Vec2>& frame_normals) {
  const KelvinConstants c(pair);
  const double scale = grid.diameter();
  const double guard = eval_guard_distance(grid);
  std::vector<Vec2> out;
  out.reserve(points.size());
  for (size_t k = 0; k < points.size(); ++k) {
    if (min_node_distance(grid, points[k]) < guard) {
      throw TooCloseToBoundary("conormal evaluation point within 5 grid spacings");
    }
    Vec2 v = Vec2::Zero();
    for (int j = 0; j < grid.N; ++j) {
      v += grid.w[j] * (kernel_dsharp_conormal(points[k] - grid.x[j], frame_normals[k],
                                               grid.nrm[j], c, scale) *
                        density.at(j));
    }
    out.push_back(v);
  }
  return out;
}

BoundaryGrid resample(const BoundaryGrid& grid, int M) {
  BoundaryGrid g = sample_grid(grid.base, M);
  if (grid.pert && grid.eps != 0.0) {
    g = perturbed_grid(g, *grid.pert, grid.eps);
  }
  return g;
}

Density upsample(const Density& d, int M) {
  const int N = d.nodes();
  if (M == N) return d;
  const Eigen::MatrixXd P = trig_upsample_matrix(N, M);
  Eigen::VectorXd cx(N), cy(N);
  for (int i = 0; i < N; ++i) {
    cx[i] = d.v[2 * i];
    cy[i] = d.v[2 * i + 1];
  }
  const Eigen::VectorXd ux = P * cx;
  const Eigen::VectorXd uy = P * cy;
  Density out = Density::zero(M);
  for (int i = 0; i < M; ++i) out.set(i, Vec2(ux[i], uy[i]));
  return out;
}

double dsharp_conormal_jump_check(const BoundaryGrid& grid, const LamePair& pair,
                                  const Density& phi) {
  // The evaluation guard is 5 fine-grid spacings; it must come out below the
  // thinnest feature of the curve (the kite wing is ~0.12 thick at the tips),
  // so the evaluation grid upsamples aggressively.
  const int M = std::max(4 * grid.N, 2048);
  const BoundaryGrid fine = resample(grid, M);
  const Density phi_fine = upsample(phi, M);

  const double diam = grid.diameter();
  const double t_max = 0.2 * diam;
  const double guard = eval_guard_distance(fine);
  const double t_min = std::max(1.25 * guard, 0.01 * diam);
  const int levels = 20;
  std::vector<double> ts(levels);
  const double ratio = std::pow(t_min / t_max, 1.0 / (levels - 1));
  for (int k = 0; k < levels; ++k) ts[k] = t_max * std::pow(ratio, k);

  // Deep offsets can leave the normal tube on non-convex curves: past the
  // local reach the inner ray crosses the medial axis (or exits the domain
  // through a thin feature), and the extrapolation ladder would mix values
  // from the wrong region. A point at offset t is still in the tube exactly
  // when its distance to the curve is t. The extrapolant also needs a Taylor
  // margin: the hypersingular field varies on the scale of the distance to
  // the nearest wall, so a level t only carries weight when depth 2t is
  // still in the tube. Nodes without enough usable levels (the kite wing
  // tips, where the wing is thinner than the ladder) are skipped.
  std::vector<std::vector<int>> keep(grid.N);
  std::vector<Vec2> points;
  std::vector<Vec2> frames;
  points.reserve(2 * levels * grid.N);
  int active = 0;
  for (int i = 0; i < grid.N; ++i) {
    std::vector<int> usable;
    for (int k = 0; k < levels; ++k) {
      bool ok = true;
      for (double depth : {ts[k], 2.0 * ts[k]}) {
        const double floor = std::max(guard, 0.9 * depth);
        if (min_node_distance(fine, Vec2(grid.x[i] + depth * grid.nrm[i])) < floor ||
            min_node_distance(fine, Vec2(grid.x[i] - depth * grid.nrm[i])) < floor) {
          ok = false;
          break;
        }
      }
      if (ok) usable.push_back(k);
    }
    if (usable.size() < 8) continue;
    keep[i] = std::move(usable);
    ++active;
    for (int k : keep[i]) {
      points.push_back(grid.x[i] + ts[k] * grid.nrm[i]);
      points.push_back(grid.x[i] - ts[k] * grid.nrm[i]);
      frames.push_back(grid.nrm[i]);
      frames.push_back(grid.nrm[i]);
    }
  }
  if (2 * active < grid.N) {
    throw TooCloseToBoundary("normal tube too shallow for one-sided extrapolation");
  }
  const std::vector<Vec2> vals = eval_dsharp_conormal(fine, phi_fine, pair, points, frames);

  const Eigen::VectorXd rhs =
      tangential_diff_matrix(grid) * (jump_multiplier_matrix(grid, pair) * phi.v);

  double residual = 0.0;
  size_t at = 0;
  for (int i = 0; i < grid.N; ++i) {
    if (keep[i].empty()) continue;
    std::vector<double> ti(keep[i].size());
    for (size_t k = 0; k < keep[i].size(); ++k) ti[k] = ts[size_t(keep[i][k])];
    for (int comp = 0; comp < 2; ++comp) {
      std::vector<double> diffs(keep[i].size());
      for (size_t k = 0; k < keep[i].size(); ++k) {
        const Vec2 plus = vals[at + 2 * k];
        const Vec2 minus = vals[at + 2 * k + 1];
        diffs[k] = plus[comp] - minus[comp];
      }
      const double lim = neville_to_zero(ti, diffs);
      residual = std::max(residual, std::abs(lim - rhs[2 * i + comp]));
    }
    at += 2 * keep[i].size();
  }
  return residual;
}

}  // namespace ebie
