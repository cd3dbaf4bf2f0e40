#pragma once

#include <cmath>
#include <random>

#include "ebie/geometry.hpp"
#include "ebie/kernels.hpp"
#include "ebie/potentials.hpp"

namespace ebie::testing {

inline Curve circle(double radius = 1.0, Vec2 center = Vec2::Zero()) {
  Curve c;
  c.cos_coeffs = {center, Vec2(radius, 0.0)};
  c.sin_coeffs = {Vec2::Zero(), Vec2(0.0, radius)};
  return c;
}

inline Curve ellipse(double a, double b) {
  Curve c;
  c.cos_coeffs = {Vec2::Zero(), Vec2(a, 0.0)};
  c.sin_coeffs = {Vec2::Zero(), Vec2(0.0, b)};
  return c;
}

// X(t) = (cos t + 0.65 cos 2t - 0.65, 1.5 sin t), the usual non-convex
// benchmark shape with nonvanishing curvature variation.
inline Curve kite() {
  Curve c;
  c.cos_coeffs = {Vec2(-0.65, 0.0), Vec2(1.0, 0.0), Vec2(0.65, 0.0)};
  c.sin_coeffs = {Vec2::Zero(), Vec2(0.0, 1.5)};
  return c;
}

// h(t) = cos(k t) or sin(k t) as a single-mode perturbation profile.
inline PerturbationField cos_mode(int k, double amp = 1.0) {
  PerturbationField h;
  h.h_cos.assign(static_cast<size_t>(k) + 1, 0.0);
  h.h_cos[static_cast<size_t>(k)] = amp;
  return h;
}

inline PerturbationField sin_mode(int k, double amp = 1.0) {
  PerturbationField h;
  h.h_cos.assign(static_cast<size_t>(k) + 1, 0.0);
  h.h_sin.assign(static_cast<size_t>(k) + 1, 0.0);
  h.h_sin[static_cast<size_t>(k)] = amp;
  return h;
}

// A smooth band-limited density with no special symmetry. Used wherever a
// test needs "some" nontrivial density rather than a solver output.
inline Density smooth_density(const BoundaryGrid& grid) {
  Density d = Density::zero(grid.N);
  for (int i = 0; i < grid.N; ++i) {
    const double t = grid.t[i];
    d.set(i, Vec2(0.7 + std::cos(t) - 0.3 * std::sin(2.0 * t),
                  0.4 * std::sin(t) + 0.2 * std::cos(3.0 * t)));
  }
  return d;
}

// Deterministic RNG for reproducible randomized checks.
inline std::mt19937_64 rng(unsigned seed = 20260818u) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

// Random material pair with mu > 0, lambda + mu > 0.
inline LamePair random_pair(std::mt19937_64& gen) {
  const double mu = uniform(gen, 0.2, 5.0);
  const double lambda = uniform(gen, -0.8 * mu, 5.0);
  return LamePair{lambda, mu};
}

inline double mat_diff(const Mat2& a, const Mat2& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace ebie::testing
