#include "ebie/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ebie/errors.hpp"

namespace ebie {

namespace {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& r : rows)
    if (r.pass == 0) return false;
  return true;
}

std::string Report::to_csv() const {
  std::string out = "experiment,check,epsilon,N,value,remainder,slope,pass\n";
  for (const auto& r : rows) {
    out += r.experiment + "," + r.check + "," + fmt_double(r.epsilon) + ",";
    out += (r.N > 0 ? std::to_string(r.N) : std::string()) + ",";
    out += fmt_double(r.value) + "," + fmt_double(r.remainder) + "," + fmt_double(r.slope) + ",";
    out += (r.pass >= 0 ? std::to_string(r.pass) : std::string()) + "\n";
  }
  return out;
}

double fit_slope(const std::vector<double>& eps, const std::vector<double>& remainders) {
  if (eps.size() != remainders.size() || eps.size() < 2)
    throw ComputeFailure("slope fit needs at least two sweep points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = static_cast<int>(eps.size());
  for (int i = 0; i < n; ++i) {
    if (!(eps[i] > 0.0) || !(remainders[i] > 0.0))
      throw ComputeFailure("slope fit needs positive eps and remainders");
    const double x = std::log(eps[i]);
    const double y = std::log(remainders[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-14) throw ComputeFailure("slope fit is degenerate");
  return (n * sxy - sx * sy) / denom;
}

double ExperimentConfig::tol(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

ExperimentConfig default_config() {
  ExperimentConfig cfg;
  cfg.problem.curve.cos_coeffs = {Vec2(-0.65, 0.0), Vec2(1.0, 0.0), Vec2(0.65, 0.0)};
  cfg.problem.curve.sin_coeffs = {Vec2(0.0, 0.0), Vec2(0.0, 1.5)};
  cfg.problem.background = {1.0, 1.0};
  cfg.problem.inclusion = {3.0, 2.0};
  cfg.problem.H.terms = {{1.0, 1, 0, 0}, {-1.0, 0, 1, 1}};  // plane shear (x1, -x2)
  cfg.problem.nodes = 256;
  cfg.h.h_cos = {0.0, 0.0, 1.0};  // h = cos 2t
  // The dilatation shares the kite's mirror symmetry; an F odd under it
  // (e.g. the conjugate shear) makes every u-v bilinear form vanish.
  cfg.F.terms = {{1.0, 1, 0, 0}, {1.0, 0, 1, 1}};
  cfg.s_curve.cos_coeffs = {Vec2(0.0, 0.0), Vec2(3.0, 0.0)};
  cfg.s_curve.sin_coeffs = {Vec2(0.0, 0.0), Vec2(0.0, 3.0)};
  return cfg;
}

namespace {

// Per-eps remainder rows followed by the slope row and a stability row that
// refits without the coarsest eps.
void append_sweep(Report& report, const ExperimentConfig& cfg, const std::string& experiment,
                  const std::string& check, const std::vector<double>& eps,
                  const std::vector<double>& values, const std::vector<double>& remainders,
                  double slope_lo, double slope_hi) {
  const int N = cfg.problem.nodes;
  for (size_t i = 0; i < eps.size(); ++i) {
    CheckRow row;
    row.experiment = experiment;
    row.check = check;
    row.epsilon = eps[i];
    row.N = N;
    if (i < values.size()) row.value = values[i];
    row.remainder = remainders[i];
    report.rows.push_back(row);
  }
  const double slope = fit_slope(eps, remainders);
  CheckRow srow;
  srow.experiment = experiment;
  srow.check = check + "-slope";
  srow.N = N;
  srow.slope = slope;
  srow.pass = (slope >= slope_lo && slope <= slope_hi) ? 1 : 0;
  report.rows.push_back(srow);

  if (eps.size() >= 3) {
    // Refit without the coarsest eps. Passing needs the refit to either stay
    // within the drift tolerance or keep clearing the lower band edge: a
    // hidden first-order term drags the refined slope toward 1, while genuine
    // higher-order contamination at the coarse end (eps*max|kappa h| is close
    // to 1 at eps = 0.08 on the default kite) only pulls an inflated slope
    // back toward the true order.
    size_t imax = 0;
    for (size_t i = 1; i < eps.size(); ++i)
      if (eps[i] > eps[imax]) imax = i;
    std::vector<double> e2, r2;
    for (size_t i = 0; i < eps.size(); ++i)
      if (i != imax) {
        e2.push_back(eps[i]);
        r2.push_back(remainders[i]);
      }
    CheckRow drow;
    drow.experiment = experiment;
    drow.check = check + "-slope-stability";
    drow.N = N;
    drow.slope = fit_slope(e2, r2);
    drow.value = std::abs(drow.slope - slope);
    drow.pass =
        (drow.value < cfg.tol("slope_drift", 0.1) || drow.slope >= slope_lo) ? 1 : 0;
    report.rows.push_back(drow);
  }
}

std::vector<Vec2> ring_points(double radius, int count) {
  std::vector<Vec2> pts(count);
  for (int k = 0; k < count; ++k) {
    const double a = 2.0 * M_PI * k / count;
    pts[k] = radius * Vec2(std::cos(a), std::sin(a));
  }
  return pts;
}

// Interface expansion sweep on the exterior ring (shared by expand and sweep-all).
void expansion_rows(Report& report, const ExperimentConfig& cfg) {
  const BaseSolution base = solve_base(cfg.problem);
  const FirstOrderSolution first = solve_first_order(cfg.problem, cfg.h, base);
  const std::vector<Vec2> pts = ring_points(cfg.ring_radius, cfg.ring_points);
  const FieldEvaluation u0 = eval_u(base, pts);
  const FieldEvaluation u1 = eval_u1(base, first, cfg.h, pts);

  std::vector<double> values, remainders;
  for (const double e : cfg.epsilons) {
    const PerturbedSolution pert = solve_perturbed(cfg.problem, cfg.h, e);
    const FieldEvaluation ue = eval_u_perturbed(pert, pts);
    double diff = 0.0, rem = 0.0;
    for (int k = 0; k < cfg.ring_points; ++k) {
      const Vec2 d = ue.values[k] - u0.values[k];
      diff = std::max(diff, d.lpNorm<Eigen::Infinity>());
      rem = std::max(rem, (d - e * u1.values[k]).lpNorm<Eigen::Infinity>());
    }
    values.push_back(diff);
    remainders.push_back(rem);
  }
  append_sweep(report, cfg, "expansion", "ring-remainder", cfg.epsilons, values, remainders,
               cfg.tol("slope_min", 1.9), cfg.tol("slope_max", 2.1));
}

void traction_rows(Report& report, const ExperimentConfig& cfg) {
  std::vector<double> values, remainders;
  for (const double e : cfg.epsilons) {
    const TractionGap gap =
        traction_displacement_gap(cfg.problem, cfg.h, e, cfg.s_curve, cfg.F);
    const double lhs = gap.lhs_displacement - gap.lhs_traction;
    values.push_back(lhs);
    remainders.push_back(std::abs(lhs - e * gap.rhs_first_order));
  }
  append_sweep(report, cfg, "traction", "surface-gap", cfg.epsilons, values, remainders,
               cfg.tol("slope_min", 1.9), cfg.tol("slope_max_linear", 1e9));
}

void emt_rows(Report& report, const ExperimentConfig& cfg) {
  const double s0 = emt_sum(cfg.problem, cfg.F);
  const double s1 = emt_first_order(cfg.problem, cfg.F, cfg.h);
  const double sx = emt_first_order_exterior_form(cfg.problem, cfg.F, cfg.h);

  CheckRow agree;
  agree.experiment = "emt";
  agree.check = "form-agreement";
  agree.N = cfg.problem.nodes;
  agree.value = std::abs(s1 - sx);
  agree.pass = (agree.value <= cfg.tol("emt_form_agreement", 1e-6)) ? 1 : 0;
  report.rows.push_back(agree);

  std::vector<double> values, remainders;
  for (const double e : cfg.epsilons) {
    const double sp = emt_sum_perturbed(cfg.problem, cfg.F, cfg.h, e);
    values.push_back(sp - s0);
    remainders.push_back(std::abs(sp - s0 - e * s1));
  }
  append_sweep(report, cfg, "emt", "moment-sum-remainder", cfg.epsilons, values, remainders,
               cfg.tol("slope_min", 1.9), cfg.tol("slope_max_linear", 1e9));
}

}  // namespace

Report run_solve(const ExperimentConfig& cfg) {
  Report report;
  const BaseSolution base = solve_base(cfg.problem);
  const Workspace& ws = *base.ws;
  const int N = cfg.problem.nodes;

  CheckRow row;
  row.experiment = "solve";
  row.N = N;

  row.check = "exterior-density-norm";
  row.value = norm_l2w(ws.grid, base.phi);
  report.rows.push_back(row);
  const double phi_norm = row.value;
  row.check = "interior-density-norm";
  row.value = norm_l2w(ws.grid, base.psi);
  report.rows.push_back(row);

  // Matched or near-matched parameters leave no exterior layer; flag that
  // instead of fitting a decay exponent to roundoff noise.
  const bool trivial = phi_norm <= cfg.tol("trivial_contrast", 1e-9);
  if (trivial) {
    row.check = "trivial-contrast";
    row.value = phi_norm;
    row.pass = 1;
    report.rows.push_back(row);
    row.pass = -1;
  }

  const std::array<double, 3> mom = rigid_moments(ws.grid, base.phi);
  const double mtol = cfg.tol("moment", 1e-8);
  for (int m = 0; m < 3; ++m) {
    row.check = "exterior-moment-" + std::to_string(m + 1);
    row.value = std::abs(mom[m]);
    row.pass = (row.value <= mtol) ? 1 : 0;
    report.rows.push_back(row);
  }

  // Far-field decay of u - H on growing rings (the layer must vanish at
  // infinity for the exterior problem to be well posed).
  if (trivial) return report;
  const double r0 = 4.0 * cfg.problem.curve.diameter();
  std::vector<double> radii = {r0, 2.0 * r0, 4.0 * r0};
  std::vector<double> decay;
  for (const double r : radii) {
    const std::vector<Vec2> pts = ring_points(r, 8);
    const FieldEvaluation u = eval_u(base, pts);
    double m = 0.0;
    for (size_t k = 0; k < pts.size(); ++k)
      m = std::max(m, (u.values[k] - cfg.problem.H.value(pts[k])).lpNorm<Eigen::Infinity>());
    decay.push_back(m);
  }
  CheckRow frow;
  frow.experiment = "solve";
  frow.check = "far-field-exponent";
  frow.N = N;
  frow.slope = fit_slope(radii, decay);
  frow.pass = (frow.slope <= cfg.tol("far_field_exponent", -0.9)) ? 1 : 0;
  report.rows.push_back(frow);
  return report;
}

Report run_expand(const ExperimentConfig& cfg) {
  Report report;
  expansion_rows(report, cfg);

  // Operator pullbacks on the curve as given: the perturbed operator applied
  // to a fixed nodal density, compared against base plus eps times the
  // first-order operator, in the norm the expansion is stated in.
  const BoundaryGrid grid = sample_grid(cfg.problem.curve, cfg.problem.nodes);
  const LamePair bg = cfg.problem.background;
  Density ref = Density::zero(grid.N);
  for (int i = 0; i < grid.N; ++i) {
    const double t = grid.t[i];
    ref.set(i, Vec2(std::cos(t) + 0.25 * std::sin(2.0 * t),
                    0.5 * std::sin(t) + 0.2 * std::cos(3.0 * t)));
  }
  const Eigen::VectorXd s0 = assemble_single(grid, bg).m * ref.v;
  const Eigen::VectorXd s1 = assemble_s1(grid, cfg.h, bg, Side::plus).m * ref.v;
  const Eigen::VectorXd k0 = assemble_kstar(grid, bg).m * ref.v;
  const Eigen::VectorXd k1 = assemble_k1(grid, cfg.h, bg).m * ref.v;

  std::vector<double> rs, rk;
  const BaseSolution base = solve_base(cfg.problem);
  const FirstOrderSolution first = solve_first_order(cfg.problem, cfg.h, base);
  std::vector<double> rphi, rpsi;
  for (const double e : cfg.epsilons) {
    const BoundaryGrid gridE = perturbed_grid(grid, cfg.h, e);
    const Eigen::VectorXd se = assemble_single(gridE, bg).m * ref.v;
    const Eigen::VectorXd ke = assemble_kstar(gridE, bg).m * ref.v;
    rs.push_back(norm_w21(grid, Density(se - s0 - e * s1)));
    rk.push_back(norm_l2w(grid, Density(ke - k0 - e * k1)));

    const PerturbedSolution pert = solve_perturbed(cfg.problem, cfg.h, e);
    rphi.push_back(
        norm_l2w(base.ws->grid, Density(pert.phi.v - base.phi.v - e * first.phi1.v)));
    rpsi.push_back(
        norm_l2w(base.ws->grid, Density(pert.psi.v - base.psi.v - e * first.psi1.v)));
  }
  const double lo = cfg.tol("slope_min", 1.9);
  const double hi = cfg.tol("slope_max_linear", 1e9);
  append_sweep(report, cfg, "expansion", "single-layer-pullback", cfg.epsilons, {}, rs, lo, hi);
  append_sweep(report, cfg, "expansion", "conormal-pullback", cfg.epsilons, {}, rk, lo, hi);
  append_sweep(report, cfg, "expansion", "exterior-density-remainder", cfg.epsilons, {}, rphi,
               lo, hi);
  append_sweep(report, cfg, "expansion", "interior-density-remainder", cfg.epsilons, {}, rpsi,
               lo, hi);
  return report;
}

Report run_traction(const ExperimentConfig& cfg) {
  Report report;
  traction_rows(report, cfg);
  return report;
}

Report run_emt(const ExperimentConfig& cfg, std::string* table_csv) {
  Report report;
  if (table_csv) {
    const EmtTable table = build_emt_table(cfg.problem.curve, cfg.problem.background,
                                           cfg.problem.inclusion, cfg.emt_max_order,
                                           cfg.problem.nodes);
    *table_csv = table.to_csv();
  }
  emt_rows(report, cfg);
  return report;
}

Report run_sweep_all(const ExperimentConfig& cfg) {
  Report report;
  expansion_rows(report, cfg);
  traction_rows(report, cfg);
  emt_rows(report, cfg);
  return report;
}

}  // namespace ebie
