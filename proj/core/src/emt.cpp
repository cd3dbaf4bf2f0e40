#include "ebie/emt.hpp"

#include <cmath>
#include <cstdio>

#include "ebie/tensors.hpp"

namespace ebie {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int k = 0; k < std::abs(n); ++k) r *= x;
  return n < 0 ? 1.0 / r : r;
}

double frob(const Mat2& a, const Mat2& b) { return a.cwiseProduct(b).sum(); }

}  // namespace

std::string EmtTable::to_csv() const {
  std::string out = "alpha1,alpha2,beta1,beta2,j,k,value\n";
  char line[160];
  for (const auto& [key, value] : entries) {
    std::snprintf(line, sizeof(line), "%d,%d,%d,%d,%d,%d,%.12e\n", key.a1, key.a2, key.b1,
                  key.b2, key.j + 1, key.k + 1, value);
    out += line;
  }
  return out;
}

BaseSolution emt_densities(const Curve& curve, const LamePair& bg, const LamePair& inc,
                           int a1, int a2, int j, int nodes) {
  TransmissionProblem p;
  p.curve = curve;
  p.background = bg;
  p.inclusion = inc;
  p.H.terms = {{1.0, a1, a2, j}};
  p.nodes = nodes;
  return solve_base_with_data(p, false);
}

double emt_entry(const BaseSolution& densities, int b1, int b2, int k) {
  const Workspace& ws = *densities.ws;
  const BoundaryGrid& grid = ws.grid;
  double m = 0.0;
  for (int i = 0; i < grid.N; ++i)
    m += grid.w[i] * ipow(grid.x[i][0], b1) * ipow(grid.x[i][1], b2) *
         densities.phi.v[2 * i + k];
  // Moments computed in the unit-diameter frame scale back by gamma^-|beta|.
  return m * ipow(ws.gamma, -(b1 + b2));
}

EmtTable build_emt_table(const Curve& curve, const LamePair& bg, const LamePair& inc,
                         int max_order, int nodes) {
  EmtTable table;
  table.max_order = max_order;
  std::shared_ptr<const Workspace> ws;
  for (int na = 1; na <= max_order; ++na)
    for (int a1 = na; a1 >= 0; --a1)
      for (int j = 0; j < 2; ++j) {
        const int a2 = na - a1;
        BaseSolution sol;
        if (!ws) {
          sol = emt_densities(curve, bg, inc, a1, a2, j, nodes);
          ws = sol.ws;
        } else {
          PolynomialField data;
          data.terms = {{1.0, a1, a2, j}};
          sol = solve_with_data_on(ws, data, false);
        }
        for (int nb = 1; nb <= max_order; ++nb)
          for (int b1 = nb; b1 >= 0; --b1)
            for (int k = 0; k < 2; ++k) {
              const int b2 = nb - b1;
              table.entries[{a1, a2, b1, b2, j, k}] = emt_entry(sol, b1, b2, k);
            }
      }
  return table;
}

double emt_sum(const TransmissionProblem& problem, const PolynomialField& F) {
  const BaseSolution base = solve_base(problem);
  const Workspace& ws = *base.ws;
  const PolynomialField Fs = F.scaled_coords(ws.gamma);
  double s = 0.0;
  for (int i = 0; i < ws.grid.N; ++i)
    s += ws.grid.w[i] * Fs.value(ws.grid.x[i]).dot(base.phi.at(i));
  return s;
}

double emt_sum_perturbed(const TransmissionProblem& problem, const PolynomialField& F,
                         const PerturbationField& h, double eps) {
  const PerturbedSolution pert = solve_perturbed(problem, h, eps);
  const Workspace& ws = *pert.ws;
  const PolynomialField Fs = F.scaled_coords(ws.gamma);
  double s = 0.0;
  for (int i = 0; i < pert.grid.N; ++i)
    s += pert.grid.w[i] * Fs.value(pert.grid.x[i]).dot(pert.phi.at(i));
  return s;
}

double emt_first_order(const TransmissionProblem& problem, const PolynomialField& F,
                       const PerturbationField& h) {
  const BaseSolution base = solve_base(problem);
  const BaseSolution vbase = solve_with_data_on(base.ws, F, true);
  const Workspace& ws = *base.ws;

  const BoundaryTrace tu = boundary_traces(base, Side::minus);
  const BoundaryTrace tv = boundary_traces(vbase, Side::minus);
  const IsoTensor4 CM = minus(build_C(problem.inclusion),
                              build_M(problem.background, problem.inclusion));
  const IsoTensor4 K01 = build_K(problem.background, problem.inclusion);
  const IsoTensor4 C1 = build_C(problem.inclusion);

  double s = 0.0;
  for (int i = 0; i < ws.grid.N; ++i) {
    const Vec2 n = ws.grid.nrm[i];
    const Vec2 tau = ws.grid.tau[i];
    const double hv = h.value(ws.grid.t[i]);
    const double w = ws.grid.w[i] / ws.gamma;
    const Mat2& Eu = tu.strain[i];
    const Mat2& Ev = tv.strain[i];
    const double term_tau = (apply(CM, Eu, n, tau) * tau).dot(Ev * tau);
    const double term_n = (apply(K01, Eu, n, tau) * n).dot(apply(C1, Ev, n, tau) * n);
    s += w * hv * (term_tau + term_n);
  }
  return s;
}

double emt_first_order_exterior_form(const TransmissionProblem& problem,
                                     const PolynomialField& F, const PerturbationField& h) {
  const BaseSolution base = solve_base(problem);
  const BaseSolution vbase = solve_with_data_on(base.ws, F, true);
  const Workspace& ws = *base.ws;

  const BoundaryTrace tu = boundary_traces(base, Side::plus);
  const BoundaryTrace tv = boundary_traces(vbase, Side::plus);
  const IsoTensor4 S = build_S(problem.background, problem.inclusion);

  double s = 0.0;
  for (int i = 0; i < ws.grid.N; ++i) {
    const Vec2 n = ws.grid.nrm[i];
    const Vec2 tau = ws.grid.tau[i];
    const double hv = h.value(ws.grid.t[i]);
    const double w = ws.grid.w[i] / ws.gamma;
    s += w * hv * frob(apply(S, tu.strain[i], n, tau), tv.strain[i]);
  }
  return s;
}

}  // namespace ebie
