#pragma once

#include "ebie/linalg.hpp"

namespace ebie {

struct LamePair {
  double lambda = 0.0;
  double mu = 0.0;
};

// Rejects mu <= 0 or lambda + mu <= 0.
void validate_lame(const LamePair& p);

// A = (1/2)(1/mu + 1/(2mu+lambda)), B = (1/2)(1/mu - 1/(2mu+lambda)).
// Invariants after construction: A > 0, A >= B, B >= 0. Also A+B = 1/mu and
// A-B = 1/(2mu+lambda), which the kernel formulas below rely on.
struct KelvinConstants {
  double A = 0.0;
  double B = 0.0;

  KelvinConstants() = default;
  explicit KelvinConstants(const LamePair& p);
};

// All kernels take z = x - y and precomputed unit normals. `scale` sets the
// OriginEvaluation threshold |z| < 1e-14*scale (callers pass the curve
// diameter; the default suits O(1) geometry).

// Gamma(z) = (A/2pi) log|z| I - (B/2pi) z (x) z / |z|^2.
Mat2 kelvin_gamma(const Vec2& z, const KelvinConstants& c, double scale = 1.0);

// T(i,j,k) = d Gamma_ij / d z_k.
Ten3 grad_gamma(const Vec2& z, const KelvinConstants& c, double scale = 1.0);

// div_z Gamma = ((A-B)/2pi) z/|z|^2.
Vec2 div_gamma(const Vec2& z, const KelvinConstants& c, double scale = 1.0);

// Double-layer kernel: lambda (div Gamma)(x)n + mu ([grad Gamma n]^T + (grad Gamma)^T n),
// gradients in z. Satisfies kernel_K(z,n)^T == kernel_KT(z,n).
Mat2 kernel_K(const Vec2& z, const Vec2& n, const LamePair& p, double scale = 1.0);

// Conormal-derivative kernel of the single layer (three-term closed form);
// equals lambda*kernel_P + mu*kernel_Q.
Mat2 kernel_KT(const Vec2& z, const Vec2& n_x, const LamePair& p, double scale = 1.0);

// d Gamma(x-y) / d n(y): kernel of the standard double layer D-sharp.
Mat2 kernel_dsharp(const Vec2& z, const Vec2& n_y, const KelvinConstants& c, double scale = 1.0);

// (div S)(x) n(x) integrand: ((A-B)/2pi) n(x) (x) z / |z|^2.
Mat2 kernel_P(const Vec2& z, const Vec2& n_x, const KelvinConstants& c, double scale = 1.0);

// (grad S + grad S^T) n(x) integrand.
Mat2 kernel_Q(const Vec2& z, const Vec2& n_x, const KelvinConstants& c, double scale = 1.0);

// Conormal derivative of D-sharp (hypersingular kernel, exact closed form).
Mat2 kernel_dsharp_conormal(const Vec2& z, const Vec2& n_x, const Vec2& n_y,
                            const KelvinConstants& c, double scale = 1.0);

// grad(div S) . n(x) n(x) integrand.
Mat2 kernel_graddiv_nn(const Vec2& z, const Vec2& n_x, const KelvinConstants& c,
                       double scale = 1.0);

// grad(grad S + grad S^T) n(x) n(x) integrand.
Mat2 kernel_L(const Vec2& z, const Vec2& n_x, const KelvinConstants& c, double scale = 1.0);

}  // namespace ebie
