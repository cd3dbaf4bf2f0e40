#include "ebie/solver.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "ebie/errors.hpp"

namespace ebie {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < std::abs(n); ++k) r *= x;
  return n < 0 ? 1.0 / r : r;
}

// Sparse scalar polynomial in two variables, used only for the exact
// verification that data solves the background system.
using Poly2 = std::map<std::pair<int, int>, double>;

void poly_add(Poly2& p, int ax, int ay, double c) {
  if (c == 0.0) return;
  p[{ax, ay}] += c;
}

Poly2 poly_dx(const Poly2& p) {
  Poly2 q;
  for (const auto& [e, c] : p)
    if (e.first > 0) poly_add(q, e.first - 1, e.second, c * e.first);
  return q;
}

Poly2 poly_dy(const Poly2& p) {
  Poly2 q;
  for (const auto& [e, c] : p)
    if (e.second > 0) poly_add(q, e.first, e.second - 1, c * e.second);
  return q;
}

void poly_axpy(Poly2& p, const Poly2& q, double s) {
  for (const auto& [e, c] : q) poly_add(p, e.first, e.second, s * c);
}

double poly_max_abs(const Poly2& p) {
  double m = 0.0;
  for (const auto& [e, c] : p) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

Vec2 PolynomialField::value(const Vec2& x) const {
  Vec2 v = Vec2::Zero();
  for (const auto& t : terms) v[t.j] += t.a * ipow(x[0], t.ax) * ipow(x[1], t.ay);
  return v;
}

Mat2 PolynomialField::grad(const Vec2& x) const {
  Mat2 g = Mat2::Zero();
  for (const auto& t : terms) {
    if (t.ax > 0) g(t.j, 0) += t.a * t.ax * ipow(x[0], t.ax - 1) * ipow(x[1], t.ay);
    if (t.ay > 0) g(t.j, 1) += t.a * t.ay * ipow(x[0], t.ax) * ipow(x[1], t.ay - 1);
  }
  return g;
}

double PolynomialField::divergence(const Vec2& x) const {
  Mat2 g = grad(x);
  return g(0, 0) + g(1, 1);
}

Mat2 PolynomialField::strain(const Vec2& x) const { return sym(grad(x)); }

Vec2 PolynomialField::conormal(const Vec2& x, const Vec2& n, const LamePair& p) const {
  Mat2 g = grad(x);
  return p.lambda * (g(0, 0) + g(1, 1)) * n + p.mu * ((g + g.transpose()) * n);
}

Vec2 PolynomialField::normal_derivative(const Vec2& x, const Vec2& n) const {
  return grad(x) * n;
}

PolynomialField PolynomialField::scaled_coords(double gamma) const {
  PolynomialField out;
  out.terms.reserve(terms.size());
  for (const auto& t : terms)
    out.terms.push_back({t.a * ipow(gamma, -(t.ax + t.ay)), t.ax, t.ay, t.j});
  return out;
}

bool PolynomialField::is_lame_solution(const LamePair& p) const {
  Poly2 comp[2];
  double amax = 0.0;
  for (const auto& t : terms) {
    poly_add(comp[t.j], t.ax, t.ay, t.a);
    amax = std::max(amax, std::abs(t.a));
  }
  Poly2 div;
  poly_axpy(div, poly_dx(comp[0]), 1.0);
  poly_axpy(div, poly_dy(comp[1]), 1.0);
  const Poly2 grad_div[2] = {poly_dx(div), poly_dy(div)};
  for (int i = 0; i < 2; ++i) {
    Poly2 r;
    poly_axpy(r, poly_dx(poly_dx(comp[i])), p.mu);
    poly_axpy(r, poly_dy(poly_dy(comp[i])), p.mu);
    poly_axpy(r, grad_div[i], p.lambda + p.mu);
    if (poly_max_abs(r) > 1e-12 * std::max(1.0, amax)) return false;
  }
  return true;
}

void TransmissionProblem::validate() const {
  validate_lame(background);
  validate_lame(inclusion);
  if ((background.lambda - inclusion.lambda) * (background.mu - inclusion.mu) < 0.0)
    throw std::invalid_argument(
        "elastic contrast must satisfy (lambda0-lambda1)*(mu0-mu1) >= 0");
  if (!H.is_lame_solution(background))
    throw std::invalid_argument("background data does not solve the background system");
}

namespace {

std::shared_ptr<Workspace> make_workspace(const TransmissionProblem& problem,
                                          bool require_lame_data) {
  validate_lame(problem.background);
  validate_lame(problem.inclusion);
  if ((problem.background.lambda - problem.inclusion.lambda) *
          (problem.background.mu - problem.inclusion.mu) <
      0.0)
    throw std::invalid_argument(
        "elastic contrast must satisfy (lambda0-lambda1)*(mu0-mu1) >= 0");
  if (require_lame_data && !problem.H.is_lame_solution(problem.background))
    throw std::invalid_argument("background data does not solve the background system");

  auto ws = std::make_shared<Workspace>();
  ws->gamma = 1.0 / problem.curve.diameter();
  ws->grid = sample_grid(problem.curve.scaled(ws->gamma), problem.nodes);
  ws->bg = problem.background;
  ws->inc = problem.inclusion;
  ws->H = problem.H.scaled_coords(ws->gamma);

  const int n2 = 2 * ws->grid.N;
  ws->s_bg = assemble_single(ws->grid, ws->bg).m;
  ws->s_inc = assemble_single(ws->grid, ws->inc).m;
  Eigen::MatrixXd A(2 * n2, 2 * n2);
  A.topLeftCorner(n2, n2) = ws->s_inc;
  A.topRightCorner(n2, n2) = -ws->s_bg;
  A.bottomLeftCorner(n2, n2) = assemble_s_conormal(ws->grid, ws->inc, Side::minus).m;
  A.bottomRightCorner(n2, n2) = -assemble_s_conormal(ws->grid, ws->bg, Side::plus).m;
  ws->system = std::move(A);
  ws->lu.compute(ws->system);
  const double rc = ws->lu.rcond();
  if (!(rc > 0.0) || 1.0 / rc > 1e12)
    throw SingularSystem("transmission system condition estimate exceeds 1e12");
  return ws;
}

// Data rows for a given grid: values on top, background conormal below.
Eigen::VectorXd data_rhs(const BoundaryGrid& grid, const PolynomialField& H,
                         const LamePair& bg) {
  const int n2 = 2 * grid.N;
  Eigen::VectorXd b(2 * n2);
  for (int i = 0; i < grid.N; ++i) {
    const Vec2 v = H.value(grid.x[i]);
    const Vec2 tr = H.conormal(grid.x[i], grid.nrm[i], bg);
    b[2 * i] = v[0];
    b[2 * i + 1] = v[1];
    b[n2 + 2 * i] = tr[0];
    b[n2 + 2 * i + 1] = tr[1];
  }
  return b;
}

Eigen::VectorXd checked_solve(const Eigen::MatrixXd& A,
                              const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                              const Eigen::VectorXd& b) {
  Eigen::VectorXd x = lu.solve(b);
  const double bn = b.norm();
  if (bn == 0.0) return x;
  double res = (A * x - b).norm() / bn;
  if (res > 1e-11) {
    x += lu.solve(b - A * x);  // one refinement pass before giving up
    res = (A * x - b).norm() / bn;
    if (res > 1e-11)
      throw ComputeFailure("linear solve residual " + std::to_string(res) +
                           " exceeds 1e-11");
  }
  return x;
}

}  // namespace

BaseSolution solve_base_with_data(const TransmissionProblem& problem, bool require_lame_data) {
  auto ws = make_workspace(problem, require_lame_data);
  const int n2 = 2 * ws->grid.N;
  const Eigen::VectorXd b = data_rhs(ws->grid, ws->H, ws->bg);
  const Eigen::VectorXd x = checked_solve(ws->system, ws->lu, b);
  BaseSolution sol;
  sol.psi = Density(x.head(n2));
  sol.phi = Density(x.tail(n2));
  sol.ws = std::move(ws);
  return sol;
}

BaseSolution solve_base(const TransmissionProblem& problem) {
  return solve_base_with_data(problem, true);
}

BaseSolution solve_with_data_on(const std::shared_ptr<const Workspace>& ws,
                                const PolynomialField& data, bool require_lame_data) {
  if (require_lame_data && !data.is_lame_solution(ws->bg))
    throw std::invalid_argument("background data does not solve the background system");
  auto ws2 = std::make_shared<Workspace>(*ws);
  ws2->H = data.scaled_coords(ws->gamma);
  const int n2 = 2 * ws2->grid.N;
  const Eigen::VectorXd b = data_rhs(ws2->grid, ws2->H, ws2->bg);
  const Eigen::VectorXd x = checked_solve(ws2->system, ws2->lu, b);
  BaseSolution sol;
  sol.psi = Density(x.head(n2));
  sol.phi = Density(x.tail(n2));
  sol.ws = std::move(ws2);
  return sol;
}

PerturbedSolution solve_perturbed(const TransmissionProblem& problem, const PerturbationField& h,
                                  double eps) {
  auto ws = make_workspace(problem, true);
  PerturbedSolution sol;
  sol.eps = eps;
  sol.grid = perturbed_grid(ws->grid, h.scaled(ws->gamma), eps);

  const int n2 = 2 * sol.grid.N;
  Eigen::MatrixXd A(2 * n2, 2 * n2);
  A.topLeftCorner(n2, n2) = assemble_single(sol.grid, ws->inc).m;
  A.topRightCorner(n2, n2) = -assemble_single(sol.grid, ws->bg).m;
  A.bottomLeftCorner(n2, n2) = assemble_s_conormal(sol.grid, ws->inc, Side::minus).m;
  A.bottomRightCorner(n2, n2) = -assemble_s_conormal(sol.grid, ws->bg, Side::plus).m;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const double rc = lu.rcond();
  if (!(rc > 0.0) || 1.0 / rc > 1e12)
    throw SingularSystem("perturbed transmission system condition estimate exceeds 1e12");

  const Eigen::VectorXd b = data_rhs(sol.grid, ws->H, ws->bg);
  const Eigen::VectorXd x = checked_solve(A, lu, b);
  sol.psi = Density(x.head(n2));
  sol.phi = Density(x.tail(n2));
  sol.ws = std::move(ws);
  return sol;
}

FirstOrderSolution solve_first_order(const TransmissionProblem& problem,
                                     const PerturbationField& h, const BaseSolution& base) {
  const Workspace& ws = *base.ws;
  const BoundaryGrid& grid = ws.grid;
  const int N = grid.N;
  const int n2 = 2 * N;
  const PerturbationField hs = h.scaled(ws.gamma);

  const Density s1_term =
      Density(assemble_s1(grid, hs, ws.inc, Side::minus).m * base.psi.v -
              assemble_s1(grid, hs, ws.bg, Side::plus).m * base.phi.v);
  const Density k1_term = Density(assemble_k1(grid, hs, ws.inc).m * base.psi.v -
                                  assemble_k1(grid, hs, ws.bg).m * base.phi.v);

  // Data expansion rows: h dH/dn on top and, below,
  // -kappa h dH/dnu - d/dtau( h (C grad-hat H) tau ) with exact H-calculus.
  Eigen::VectorXd row1(n2), stress_tau(n2), row2(n2);
  Eigen::VectorXd kappa_h(N);
  for (int i = 0; i < N; ++i) {
    const double hv = hs.value(grid.t[i]);
    kappa_h[i] = grid.kappa[i] * hv;
    const Vec2 dn = ws.H.normal_derivative(grid.x[i], grid.nrm[i]);
    row1[2 * i] = hv * dn[0];
    row1[2 * i + 1] = hv * dn[1];
    const Mat2 e = ws.H.strain(grid.x[i]);
    const double tr = e(0, 0) + e(1, 1);
    const Vec2 st = (ws.bg.lambda * tr * Mat2::Identity() + 2.0 * ws.bg.mu * e) * grid.tau[i];
    stress_tau[2 * i] = hv * st[0];
    stress_tau[2 * i + 1] = hv * st[1];
  }
  const Eigen::MatrixXd dtau = tangential_diff_matrix(grid);
  const Eigen::VectorXd dstress = dtau * stress_tau;
  for (int i = 0; i < N; ++i) {
    const Vec2 cn = ws.H.conormal(grid.x[i], grid.nrm[i], ws.bg);
    row2[2 * i] = -kappa_h[i] * cn[0] - dstress[2 * i];
    row2[2 * i + 1] = -kappa_h[i] * cn[1] - dstress[2 * i + 1];
  }

  Eigen::VectorXd b(2 * n2);
  b.head(n2) = row1 - s1_term.v;
  b.tail(n2) = row2 - k1_term.v;

  const Eigen::VectorXd x = checked_solve(ws.system, ws.lu, b);
  FirstOrderSolution sol;
  sol.psi1 = Density(x.head(n2));
  sol.phi1 = Density(x.tail(n2));
  return sol;
}

std::array<double, 3> rigid_moments(const BoundaryGrid& grid, const Density& d) {
  const RigidMotionBasis basis = RigidMotionBasis::on(grid);
  return {dot_w(grid, d, basis.theta[0]), dot_w(grid, d, basis.theta[1]),
          dot_w(grid, d, basis.theta[2])};
}

}  // namespace ebie
