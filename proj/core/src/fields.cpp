#include "ebie/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ebie/errors.hpp"
#include "ebie/tensors.hpp"

namespace ebie {

double winding_number(const BoundaryGrid& grid, const Vec2& p) {
  double w = 0.0;
  for (int i = 0; i < grid.N; ++i) {
    const Vec2 z = grid.x[i] - p;
    w += grid.speed[i] * cross2(z, grid.tau[i]) / z.squaredNorm();
  }
  return w / grid.N;
}

namespace {

// +1 exterior, -1 interior; anything ambiguous is a compute failure.
int classify(const BoundaryGrid& grid, const Vec2& p) {
  const double w = winding_number(grid, p);
  if (std::abs(w - 1.0) < 0.25) return -1;
  if (std::abs(w) < 0.25) return 1;
  throw ComputeFailure("point is neither clearly inside nor outside the interface");
}

Vec2 conormal_from_grad(const Mat2& g, const Vec2& n, const LamePair& p) {
  return p.lambda * (g(0, 0) + g(1, 1)) * n + p.mu * ((g + g.transpose()) * n);
}

}  // namespace

FieldEvaluation eval_u(const BaseSolution& sol, const std::vector<Vec2>& points) {
  const Workspace& ws = *sol.ws;
  FieldEvaluation out;
  out.points = points;
  out.values.resize(points.size());
  out.region.resize(points.size());

  std::vector<Vec2> ext, inn;
  std::vector<size_t> ext_idx, inn_idx;
  for (size_t k = 0; k < points.size(); ++k) {
    const Vec2 p = ws.gamma * points[k];
    const int r = classify(ws.grid, p);
    out.region[k] = r;
    (r > 0 ? ext : inn).push_back(p);
    (r > 0 ? ext_idx : inn_idx).push_back(k);
  }
  if (!ext.empty()) {
    const FieldSamples s = eval_off_boundary(ws.grid, sol.phi, ws.bg, ext, Which::single);
    for (size_t k = 0; k < ext.size(); ++k)
      out.values[ext_idx[k]] = ws.H.value(ext[k]) + s.values[k];
  }
  if (!inn.empty()) {
    const FieldSamples s = eval_off_boundary(ws.grid, sol.psi, ws.inc, inn, Which::single);
    for (size_t k = 0; k < inn.size(); ++k) out.values[inn_idx[k]] = s.values[k];
  }
  return out;
}

FieldEvaluation eval_u_perturbed(const PerturbedSolution& sol, const std::vector<Vec2>& points) {
  const Workspace& ws = *sol.ws;
  FieldEvaluation out;
  out.points = points;
  out.values.resize(points.size());
  out.region.resize(points.size());

  std::vector<Vec2> ext, inn;
  std::vector<size_t> ext_idx, inn_idx;
  for (size_t k = 0; k < points.size(); ++k) {
    const Vec2 p = ws.gamma * points[k];
    const int r = classify(sol.grid, p);
    out.region[k] = r;
    (r > 0 ? ext : inn).push_back(p);
    (r > 0 ? ext_idx : inn_idx).push_back(k);
  }
  if (!ext.empty()) {
    const FieldSamples s = eval_off_boundary(sol.grid, sol.phi, ws.bg, ext, Which::single);
    for (size_t k = 0; k < ext.size(); ++k)
      out.values[ext_idx[k]] = ws.H.value(ext[k]) + s.values[k];
  }
  if (!inn.empty()) {
    const FieldSamples s = eval_off_boundary(sol.grid, sol.psi, ws.inc, inn, Which::single);
    for (size_t k = 0; k < inn.size(); ++k) out.values[inn_idx[k]] = s.values[k];
  }
  return out;
}

FieldEvaluation eval_u1(const BaseSolution& base, const FirstOrderSolution& first,
                        const PerturbationField& h, const std::vector<Vec2>& points) {
  const Workspace& ws = *base.ws;
  const BoundaryGrid& grid = ws.grid;
  const PerturbationField hs = h.scaled(ws.gamma);
  const int N = grid.N;

  // The two single layers combine linearly; the shape term rides on D-sharp.
  Density ext_single = Density(first.phi1.v), inn_single = Density(first.psi1.v);
  Density ext_dsharp = Density::zero(N), inn_dsharp = Density::zero(N);
  for (int i = 0; i < N; ++i) {
    const double hv = hs.value(grid.t[i]);
    const double kh = grid.kappa[i] * hv;
    ext_single.set(i, ext_single.at(i) + kh * base.phi.at(i));
    inn_single.set(i, inn_single.at(i) + kh * base.psi.at(i));
    ext_dsharp.set(i, hv * base.phi.at(i));
    inn_dsharp.set(i, hv * base.psi.at(i));
  }

  FieldEvaluation out;
  out.points = points;
  out.values.resize(points.size());
  out.region.resize(points.size());

  std::vector<Vec2> ext, inn;
  std::vector<size_t> ext_idx, inn_idx;
  for (size_t k = 0; k < points.size(); ++k) {
    const Vec2 p = ws.gamma * points[k];
    const int r = classify(grid, p);
    out.region[k] = r;
    (r > 0 ? ext : inn).push_back(p);
    (r > 0 ? ext_idx : inn_idx).push_back(k);
  }
  if (!ext.empty()) {
    const FieldSamples a = eval_off_boundary(grid, ext_single, ws.bg, ext, Which::single);
    const FieldSamples b = eval_off_boundary(grid, ext_dsharp, ws.bg, ext, Which::dsharp);
    for (size_t k = 0; k < ext.size(); ++k)
      out.values[ext_idx[k]] = a.values[k] + b.values[k];
  }
  if (!inn.empty()) {
    const FieldSamples a = eval_off_boundary(grid, inn_single, ws.inc, inn, Which::single);
    const FieldSamples b = eval_off_boundary(grid, inn_dsharp, ws.inc, inn, Which::dsharp);
    for (size_t k = 0; k < inn.size(); ++k)
      out.values[inn_idx[k]] = a.values[k] + b.values[k];
  }
  return out;
}

BoundaryTrace boundary_traces(const BaseSolution& sol, Side side) {
  if (side == Side::principal)
    throw std::invalid_argument("boundary_traces needs a one-sided limit");
  const Workspace& ws = *sol.ws;
  const BoundaryGrid& grid = ws.grid;
  const int N = grid.N;
  const bool exterior = (side == Side::plus);
  const LamePair pair = exterior ? ws.bg : ws.inc;
  const Density& dens = exterior ? sol.phi : sol.psi;
  const KelvinConstants kc(pair);
  const double g = ws.gamma;

  BoundaryTrace tr;
  tr.side = side;
  tr.x.resize(N);
  tr.u.resize(N);
  tr.grad.resize(N);
  tr.strain.resize(N);
  tr.traction.resize(N);

  const Eigen::VectorXd uv = (exterior ? ws.s_bg : ws.s_inc) * dens.v;
  const Eigen::VectorXd tv = assemble_s_conormal(grid, pair, side).m * dens.v;
  const std::array<BoundaryOperator, 2> gpv = assemble_grad_single_pv(grid, pair);
  const Eigen::VectorXd g0 = gpv[0].m * dens.v;
  const Eigen::VectorXd g1 = gpv[1].m * dens.v;
  const double sgn = exterior ? 1.0 : -1.0;

  for (int i = 0; i < N; ++i) {
    const Vec2 xs = grid.x[i];
    const Vec2 n = grid.nrm[i];
    const Vec2 d = dens.at(i);
    Mat2 gs;
    gs.col(0) = Vec2(g0[2 * i], g0[2 * i + 1]);
    gs.col(1) = Vec2(g1[2 * i], g1[2 * i + 1]);
    gs += sgn * (outer(d, n) / (2.0 * pair.mu) - kc.B * n.dot(d) * outer(n, n));

    Vec2 us(uv[2 * i], uv[2 * i + 1]);
    Vec2 ts(tv[2 * i], tv[2 * i + 1]);
    if (exterior) {
      us += ws.H.value(xs);
      gs += ws.H.grad(xs);
      ts += ws.H.conormal(xs, n, pair);
    }
    tr.x[i] = xs / g;
    tr.u[i] = us;
    tr.grad[i] = g * gs;
    tr.strain[i] = sym(tr.grad[i]);
    tr.traction[i] = g * ts;
  }
  return tr;
}

TractionGap traction_displacement_gap(const TransmissionProblem& problem,
                                      const PerturbationField& h, double eps,
                                      const Curve& s_curve, const PolynomialField& F) {
  if (!F.is_lame_solution(problem.background))
    throw std::invalid_argument("observation data does not solve the background system");

  const BaseSolution base = solve_base(problem);
  const PerturbedSolution pert = solve_perturbed(problem, h, eps);
  TransmissionProblem vproblem = problem;
  vproblem.H = F;
  const BaseSolution vbase = solve_base(vproblem);

  const Workspace& ws = *base.ws;
  const double g = ws.gamma;
  const BoundaryGrid gridS = sample_grid(s_curve, problem.nodes);

  // The observation curve must wind once around both the interface and its
  // perturbation, with clearance for the quadrature on either side.
  for (int i = 0; i < ws.grid.N; ++i) {
    const Vec2 xb = ws.grid.x[i] / g;
    const Vec2 xp = pert.grid.x[i] / g;
    if (std::abs(winding_number(gridS, xb) - 1.0) > 0.25 ||
        std::abs(winding_number(gridS, xp) - 1.0) > 0.25)
      throw CurveDoesNotEncloseInclusion(
          "observation curve does not wind once around the interface");
  }
  const double clearance =
      std::max(eval_guard_distance(ws.grid), eval_guard_distance(pert.grid)) / g;
  for (int j = 0; j < gridS.N; ++j) {
    const double db = min_node_distance(ws.grid, g * gridS.x[j]) / g;
    const double dp = min_node_distance(pert.grid, g * gridS.x[j]) / g;
    if (std::min(db, dp) < clearance)
      throw CurveDoesNotEncloseInclusion("observation curve passes too close to the interface");
  }

  std::vector<Vec2> pts(gridS.N);
  for (int j = 0; j < gridS.N; ++j) pts[j] = g * gridS.x[j];
  const FieldSamples u0 = eval_off_boundary(ws.grid, base.phi, ws.bg, pts, Which::single);
  const FieldSamples ue = eval_off_boundary(pert.grid, pert.phi, ws.bg, pts, Which::single);
  const FieldSamples du0 = eval_off_boundary(ws.grid, base.phi, ws.bg, pts, Which::grad_single);
  const FieldSamples due = eval_off_boundary(pert.grid, pert.phi, ws.bg, pts, Which::grad_single);

  TractionGap gap;
  for (int j = 0; j < gridS.N; ++j) {
    const Vec2 n = gridS.nrm[j];
    // The background data cancels between u_eps and u; only the layers differ.
    const Vec2 diff_u = ue.values[j] - u0.values[j];
    const Vec2 diff_t =
        g * conormal_from_grad(due.grads[j] - du0.grads[j], n, problem.background);
    gap.lhs_displacement += gridS.w[j] * diff_u.dot(F.conormal(gridS.x[j], n, problem.background));
    gap.lhs_traction += gridS.w[j] * diff_t.dot(F.value(gridS.x[j]));
  }

  const BoundaryTrace tu = boundary_traces(base, Side::minus);
  const BoundaryTrace tv = boundary_traces(vbase, Side::minus);
  const IsoTensor4 M01 = build_M(problem.background, problem.inclusion);
  const IsoTensor4 K01 = build_K(problem.background, problem.inclusion);
  const IsoTensor4 C1 = build_C(problem.inclusion);
  const IsoTensor4 MC = minus(M01, C1);

  for (int i = 0; i < ws.grid.N; ++i) {
    const Vec2 n = ws.grid.nrm[i];
    const Vec2 tau = ws.grid.tau[i];
    const double hv = h.value(ws.grid.t[i]);
    const double w = ws.grid.w[i] / g;
    const Mat2& Eu = tu.strain[i];
    const Mat2& Ev = tv.strain[i];
    const double term_tau = (apply(MC, Eu, n, tau) * tau).dot(Ev * tau);
    const double term_n = (apply(K01, Eu, n, tau) * n).dot(apply(C1, Ev, n, tau) * n);
    gap.rhs_first_order += w * hv * (term_tau - term_n);
  }
  return gap;
}

double local_lame_residual(const BaseSolution& sol, Side side, double offset) {
  if (side == Side::principal)
    throw std::invalid_argument("local_lame_residual needs a one-sided collar");
  if (!(offset > 0.0)) throw std::invalid_argument("collar offset must be positive");
  const Workspace& ws = *sol.ws;
  const BoundaryGrid& grid = ws.grid;
  const int N = grid.N;
  const bool exterior = (side == Side::plus);
  const LamePair pair = exterior ? ws.bg : ws.inc;
  const Density& dens = exterior ? sol.phi : sol.psi;
  const double sgn = exterior ? 1.0 : -1.0;

  const double ts = ws.gamma * offset;
  const double delta = ts / 4.0;

  // Upsample so the innermost stencil point clears the evaluation guard.
  double maxspeed = 0.0;
  for (int i = 0; i < N; ++i) maxspeed = std::max(maxspeed, grid.speed[i]);
  int M = std::max(2 * N, static_cast<int>(std::ceil(5.0 * 2.0 * M_PI * maxspeed /
                                                     (0.8 * (ts - 2.0 * delta)))));
  M = std::min(M + (M % 2), 4096);
  const BoundaryGrid fine = resample(grid, M);
  const Density dfine = upsample(dens, M);

  std::vector<Vec2> pts;
  pts.reserve(5 * N);
  for (int i = 0; i < N; ++i)
    for (int s = -2; s <= 2; ++s)
      pts.push_back(grid.x[i] + sgn * (ts + s * delta) * grid.nrm[i]);
  const FieldSamples vals = eval_off_boundary(fine, dfine, pair, pts, Which::single);
  const FieldSamples grds = eval_off_boundary(fine, dfine, pair, pts, Which::grad_single);

  // On the parallel curve at distance ts the boundary-fitted form of the
  // operator is exact, with curvature kappa/(1 + ts kappa) and the matching
  // line element; the residual is then finite-difference noise only.
  Eigen::MatrixXd q(N, 2);
  std::vector<double> speed_t(N), kappa_t(N);
  std::vector<Vec2> fd_part(N);
  for (int i = 0; i < N; ++i) {
    const double stretch = 1.0 + sgn * ts * grid.kappa[i];
    if (stretch < 0.05) throw ComputeFailure("collar folds over itself at this offset");
    speed_t[i] = grid.speed[i] * stretch;
    kappa_t[i] = grid.kappa[i] / stretch;
    const Vec2 n = grid.nrm[i];

    const Vec2* u = &vals.values[5 * i];
    const Mat2* gr = &grds.grads[5 * i];
    const Vec2 u_nn =
        (-u[4] + 16.0 * u[3] - 30.0 * u[2] + 16.0 * u[1] - u[0]) / (12.0 * delta * delta);
    double div[5];
    Vec2 w[5];
    for (int s = 0; s < 5; ++s) {
      div[s] = gr[s](0, 0) + gr[s](1, 1);
      w[s] = gr[s].transpose() * n;
    }
    const double dn_div = sgn * (div[0] - 8.0 * div[1] + 8.0 * div[3] - div[4]) / (12.0 * delta);
    const Vec2 dn_w = sgn * (w[0] - 8.0 * w[1] + 8.0 * w[3] - w[4]) / (12.0 * delta);
    const Vec2 trac = conormal_from_grad(gr[2], n, pair);

    fd_part[i] = pair.mu * u_nn + pair.lambda * dn_div * n + pair.mu * dn_w + kappa_t[i] * trac;
    const Mat2 e = sym(gr[2]);
    const Vec2 ct = (pair.lambda * (e(0, 0) + e(1, 1)) * Mat2::Identity() + 2.0 * pair.mu * e) *
                    grid.tau[i];
    q(i, 0) = ct[0];
    q(i, 1) = ct[1];
  }

  const Eigen::MatrixXd D = spectral_diff_matrix(N);
  const Eigen::MatrixXd dq = D * q;
  double res = 0.0;
  for (int i = 0; i < N; ++i) {
    const Vec2 r = fd_part[i] + Vec2(dq(i, 0), dq(i, 1)) / speed_t[i];
    res = std::max(res, r.lpNorm<Eigen::Infinity>());
  }
  return res;
}

}  // namespace ebie
