#include "ebie/geometry.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "ebie/errors.hpp"

namespace ebie {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// d-th derivative of cos(kt) and sin(kt) as (coeff_cos, coeff_sin) factors.
// Evaluation below just walks the derivative cycle explicitly.

}  // namespace

Vec2 Curve::point(double t) const {
  Vec2 p = Vec2::Zero();
  for (std::size_t k = 0; k < cos_coeffs.size(); ++k) p += std::cos(k * t) * cos_coeffs[k];
  for (std::size_t k = 1; k < sin_coeffs.size(); ++k) p += std::sin(k * t) * sin_coeffs[k];
  return p;
}

Vec2 Curve::d1(double t) const {
  Vec2 p = Vec2::Zero();
  for (std::size_t k = 1; k < cos_coeffs.size(); ++k)
    p += -double(k) * std::sin(k * t) * cos_coeffs[k];
  for (std::size_t k = 1; k < sin_coeffs.size(); ++k)
    p += double(k) * std::cos(k * t) * sin_coeffs[k];
  return p;
}

Vec2 Curve::d2(double t) const {
  Vec2 p = Vec2::Zero();
  for (std::size_t k = 1; k < cos_coeffs.size(); ++k)
    p += -double(k * k) * std::cos(k * t) * cos_coeffs[k];
  for (std::size_t k = 1; k < sin_coeffs.size(); ++k)
    p += -double(k * k) * std::sin(k * t) * sin_coeffs[k];
  return p;
}

Vec2 Curve::d3(double t) const {
  Vec2 p = Vec2::Zero();
  for (std::size_t k = 1; k < cos_coeffs.size(); ++k)
    p += double(k * k * k) * std::sin(k * t) * cos_coeffs[k];
  for (std::size_t k = 1; k < sin_coeffs.size(); ++k)
    p += -double(k * k * k) * std::cos(k * t) * sin_coeffs[k];
  return p;
}

double Curve::diameter(int samples) const {
  std::vector<Vec2> pts(samples);
  for (int i = 0; i < samples; ++i) pts[i] = point(kTwoPi * i / samples);
  double d2max = 0.0;
  for (int i = 0; i < samples; ++i)
    for (int j = i + 1; j < samples; ++j)
      d2max = std::max(d2max, (pts[i] - pts[j]).squaredNorm());
  return std::sqrt(d2max);
}

Curve Curve::scaled(double factor) const {
  Curve c = *this;
  for (auto& v : c.cos_coeffs) v *= factor;
  for (auto& v : c.sin_coeffs) v *= factor;
  return c;
}

double PerturbationField::value(double t) const {
  double p = 0.0;
  for (std::size_t k = 0; k < h_cos.size(); ++k) p += std::cos(k * t) * h_cos[k];
  for (std::size_t k = 1; k < h_sin.size(); ++k) p += std::sin(k * t) * h_sin[k];
  return p;
}

double PerturbationField::d1(double t) const {
  double p = 0.0;
  for (std::size_t k = 1; k < h_cos.size(); ++k) p += -double(k) * std::sin(k * t) * h_cos[k];
  for (std::size_t k = 1; k < h_sin.size(); ++k) p += double(k) * std::cos(k * t) * h_sin[k];
  return p;
}

double PerturbationField::d2(double t) const {
  double p = 0.0;
  for (std::size_t k = 1; k < h_cos.size(); ++k) p += -double(k * k) * std::cos(k * t) * h_cos[k];
  for (std::size_t k = 1; k < h_sin.size(); ++k) p += -double(k * k) * std::sin(k * t) * h_sin[k];
  return p;
}

double PerturbationField::max_abs(int samples) const {
  double m = 0.0;
  for (int i = 0; i < samples; ++i) m = std::max(m, std::abs(value(kTwoPi * i / samples)));
  return m;
}

bool PerturbationField::is_zero() const {
  for (double c : h_cos)
    if (c != 0.0) return false;
  for (double s : h_sin)
    if (s != 0.0) return false;
  return true;
}

PerturbationField PerturbationField::scaled(double factor) const {
  PerturbationField h = *this;
  for (auto& c : h.h_cos) c *= factor;
  for (auto& s : h.h_sin) s *= factor;
  return h;
}

BoundaryGrid sample_grid(const Curve& curve, int N) {
  if (N % 2 != 0 || N < 16)
    throw OddNodeCount("sample_grid: node count must be even and >= 16, got " + std::to_string(N));

  BoundaryGrid g;
  g.N = N;
  g.base = curve;
  g.t.resize(N);
  g.x.resize(N);
  g.tau.resize(N);
  g.nrm.resize(N);
  g.kappa.resize(N);
  g.speed.resize(N);
  g.w.resize(N);

  double signed_area2 = 0.0;
  for (int i = 0; i < N; ++i) {
    const double t = kTwoPi * i / N;
    const Vec2 p = curve.point(t);
    const Vec2 dp = curve.d1(t);
    const Vec2 ddp = curve.d2(t);
    const double sp = dp.norm();
    if (sp < 1e-10)
      throw DegenerateCurve("sample_grid: |X'| below 1e-10 at t = " + std::to_string(t));
    g.t[i] = t;
    g.x[i] = p;
    g.tau[i] = dp / sp;
    g.nrm[i] = rotate_minus_half_pi(g.tau[i]);
    g.kappa[i] = cross2(dp, ddp) / (sp * sp * sp);
    g.speed[i] = sp;
    g.w[i] = sp * kTwoPi / N;
    signed_area2 += cross2(p, dp) * (kTwoPi / N);
  }
  if (signed_area2 <= 0.0)
    throw DegenerateCurve("sample_grid: curve must be anticlockwise (signed area > 0)");
  return g;
}

BoundaryGrid perturbed_grid(const BoundaryGrid& grid, const PerturbationField& h, double eps) {
  if (eps == 0.0) return grid;

  // The composite tangent is |X'|(1 + eps*kappa*h) tau + eps*h' n, so the map
  // folds when eps*kappa*h reaches -1; 0.9 keeps a tenth of margin.
  double guard = 0.0;
  for (int i = 0; i < grid.N; ++i)
    guard = std::max(guard, std::abs(grid.kappa[i] * h.value(grid.t[i])));
  if (eps * guard >= 0.9)
    throw SelfIntersectionRisk("perturbed_grid: eps*max|kappa*h| = " +
                               std::to_string(eps * guard) + " >= 0.9");

  const Curve& c = grid.base;
  BoundaryGrid g;
  g.N = grid.N;
  g.base = c;
  g.pert = h;
  g.eps = eps;
  g.t = grid.t;
  g.x.resize(g.N);
  g.tau.resize(g.N);
  g.nrm.resize(g.N);
  g.kappa.resize(g.N);
  g.speed.resize(g.N);
  g.w.resize(g.N);

  for (int i = 0; i < g.N; ++i) {
    const double t = g.t[i];
    const Vec2 X1 = c.d1(t), X2 = c.d2(t), X3 = c.d3(t);
    const double sp = X1.norm();
    const double sp1 = X1.dot(X2) / sp;
    const double sp2 = (X2.squaredNorm() + X1.dot(X3) - sp1 * sp1) / sp;

    // Unit normal n = R_{-pi/2} X' / |X'| and its first two t-derivatives.
    const Vec2 u = rotate_minus_half_pi(X1);
    const Vec2 u1 = rotate_minus_half_pi(X2);
    const Vec2 u2 = rotate_minus_half_pi(X3);
    const Vec2 n = u / sp;
    const Vec2 n1 = u1 / sp - u * (sp1 / (sp * sp));
    const Vec2 n2 = u2 / sp - 2.0 * u1 * (sp1 / (sp * sp)) +
                    u * ((2.0 * sp1 * sp1 - sp * sp2) / (sp * sp * sp));

    const double hv = h.value(t), h1 = h.d1(t), h2 = h.d2(t);

    const Vec2 y1 = X1 + eps * (h1 * n + hv * n1);
    const Vec2 y2 = X2 + eps * (h2 * n + 2.0 * h1 * n1 + hv * n2);
    const double ysp = y1.norm();
    if (ysp < 1e-10)
      throw SelfIntersectionRisk("perturbed_grid: perturbed parametrization degenerates");

    g.x[i] = c.point(t) + eps * hv * n;
    g.tau[i] = y1 / ysp;
    g.nrm[i] = rotate_minus_half_pi(g.tau[i]);
    g.kappa[i] = cross2(y1, y2) / (ysp * ysp * ysp);
    g.speed[i] = ysp;
    g.w[i] = ysp * kTwoPi / g.N;
  }
  return g;
}

GeometryExpansion geometry_expansion(const BoundaryGrid& grid, const PerturbationField& h) {
  GeometryExpansion e;
  const int N = grid.N;
  e.n0.resize(N);
  e.n1.resize(N);
  e.sigma0 = Eigen::VectorXd::Ones(N);
  e.sigma1.resize(N);
  for (int i = 0; i < N; ++i) {
    const double t = grid.t[i];
    const double hv = h.value(t);
    const double hs = h.d1(t) / grid.speed[i];  // arclength derivative
    e.n0[i] = grid.nrm[i];
    e.n1[i] = -hs * grid.tau[i];
    e.sigma1[i] = grid.kappa[i] * hv;
  }
  return e;
}

Eigen::MatrixXd spectral_diff_matrix(int N) {
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      const double sign = ((i - j) % 2 == 0) ? 1.0 : -1.0;
      D(i, j) = 0.5 * sign / std::tan(std::numbers::pi * (i - j) / N);
    }
  return D;
}

Eigen::VectorXd tangential_derivative(const BoundaryGrid& grid, const Eigen::VectorXd& samples) {
  const int N = grid.N;
  const Eigen::MatrixXd D = spectral_diff_matrix(N);
  if (samples.size() == N) {
    Eigen::VectorXd r = D * samples;
    for (int i = 0; i < N; ++i) r[i] /= grid.speed[i];
    return r;
  }
  if (samples.size() == 2 * N) {
    Eigen::VectorXd c0(N), c1(N);
    for (int i = 0; i < N; ++i) {
      c0[i] = samples[2 * i];
      c1[i] = samples[2 * i + 1];
    }
    Eigen::VectorXd d0 = D * c0, d1 = D * c1;
    Eigen::VectorXd r(2 * N);
    for (int i = 0; i < N; ++i) {
      r[2 * i] = d0[i] / grid.speed[i];
      r[2 * i + 1] = d1[i] / grid.speed[i];
    }
    return r;
  }
  throw std::invalid_argument("tangential_derivative: samples must have size N or 2N");
}

namespace {

nlohmann::json vec2_list_to_json(const std::vector<Vec2>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : v) a.push_back({p[0], p[1]});
  return a;
}

std::vector<Vec2> vec2_list_from_json(const nlohmann::json& a, const char* field) {
  if (!a.is_array()) throw ConfigInvalid(std::string(field) + ": expected an array of pairs");
  std::vector<Vec2> v;
  for (const auto& e : a) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ConfigInvalid(std::string(field) + ": each entry must be a numeric pair");
    v.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

std::vector<double> scalar_list_from_json(const nlohmann::json& a, const char* field) {
  if (!a.is_array()) throw ConfigInvalid(std::string(field) + ": expected a numeric array");
  std::vector<double> v;
  for (const auto& e : a) {
    if (!e.is_number()) throw ConfigInvalid(std::string(field) + ": each entry must be numeric");
    v.push_back(e.get<double>());
  }
  return v;
}

}  // namespace

std::string curve_to_json_text(const Curve& curve) {
  nlohmann::json j;
  j["cos"] = vec2_list_to_json(curve.cos_coeffs);
  j["sin"] = vec2_list_to_json(curve.sin_coeffs);
  return j.dump();
}

Curve curve_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ConfigInvalid("curve: invalid JSON object");
  if (!j.contains("cos") || !j.contains("sin"))
    throw ConfigInvalid("curve: missing \"cos\" or \"sin\" field");
  Curve c;
  c.cos_coeffs = vec2_list_from_json(j["cos"], "curve.cos");
  c.sin_coeffs = vec2_list_from_json(j["sin"], "curve.sin");
  return c;
}

std::string perturbation_to_json_text(const PerturbationField& h) {
  nlohmann::json j;
  j["h_cos"] = h.h_cos;
  j["h_sin"] = h.h_sin;
  return j.dump();
}

PerturbationField perturbation_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ConfigInvalid("perturbation: invalid JSON object");
  if (!j.contains("h_cos") || !j.contains("h_sin"))
    throw ConfigInvalid("perturbation: missing \"h_cos\" or \"h_sin\" field");
  PerturbationField h;
  h.h_cos = scalar_list_from_json(j["h_cos"], "perturbation.h_cos");
  h.h_sin = scalar_list_from_json(j["h_sin"], "perturbation.h_sin");
  return h;
}

}  // namespace ebie
