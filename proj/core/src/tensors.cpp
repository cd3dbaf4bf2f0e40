#include "ebie/tensors.hpp"

#include <cmath>

#include "ebie/errors.hpp"

namespace ebie {

namespace {

Mat2 dyad(DyadKind k, const Vec2& n, const Vec2& tau) {
  switch (k) {
    case DyadKind::identity:
      return Mat2::Identity();
    case DyadKind::tautau:
      return outer(tau, tau);
    default:
      return outer(n, n);
  }
}

}  // namespace

IsoTensor4 minus(const IsoTensor4& a, const IsoTensor4& b) {
  IsoTensor4 out = a;
  out.c_sym -= b.c_sym;
  for (const auto& t : b.terms) out.terms.push_back({-t.c, t.left, t.right});
  return out;
}

Mat2 apply(const IsoTensor4& t, const Mat2& strain, const Vec2& n, const Vec2& tau) {
  const double scale = std::max(1.0, strain.cwiseAbs().maxCoeff());
  if ((strain - strain.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw AsymmetricStrain("4-tensor applied to a non-symmetric strain");
  }
  Mat2 out = t.c_sym * strain;
  for (const auto& term : t.terms) {
    const double pairing = (dyad(term.right, n, tau).array() * strain.array()).sum();
    out += term.c * pairing * dyad(term.left, n, tau);
  }
  return out;
}

IsoTensor4 build_C(const LamePair& p) {
  validate_lame(p);
  IsoTensor4 t;
  t.c_sym = 2.0 * p.mu;
  t.terms.push_back({p.lambda, DyadKind::identity, DyadKind::identity});
  return t;
}

IsoTensor4 build_M(const LamePair& l, const LamePair& k) {
  validate_lame(l);
  validate_lame(k);
  IsoTensor4 t;
  t.c_sym = 2.0 * k.mu;
  t.terms.push_back(
      {l.lambda * (k.lambda + 2.0 * k.mu) / (l.lambda + 2.0 * l.mu), DyadKind::identity,
       DyadKind::identity});
  t.terms.push_back({4.0 * (l.mu - k.mu) * (l.lambda + l.mu) / (l.lambda + 2.0 * l.mu),
                     DyadKind::identity, DyadKind::tautau});
  return t;
}

IsoTensor4 build_K(const LamePair& l, const LamePair& k) {
  validate_lame(l);
  validate_lame(k);
  IsoTensor4 t;
  t.c_sym = 2.0 * (k.mu / l.mu - 1.0);
  t.terms.push_back(
      {(l.mu * (k.lambda - l.lambda) + 2.0 * (l.mu - k.mu) * (l.lambda + l.mu)) /
           (l.mu * (l.lambda + 2.0 * l.mu)),
       DyadKind::identity, DyadKind::identity});
  t.terms.push_back({2.0 * (k.mu - l.mu) * (l.lambda + l.mu) / (l.mu * (l.lambda + 2.0 * l.mu)),
                     DyadKind::identity, DyadKind::tautau});
  return t;
}

IsoTensor4 build_S(const LamePair& bg, const LamePair& inc) {
  validate_lame(bg);
  validate_lame(inc);
  const double l0 = bg.lambda, m0 = bg.mu, l1 = inc.lambda, m1 = inc.mu;
  const double rho = ((l1 - l0) * m1 - 2.0 * (m1 - m0) * (l1 + m1)) / (m1 * (l1 + 2.0 * m1));
  const double tc = 2.0 * (1.0 - m0 / m1);
  const double vrho = 2.0 * (m1 - m0) * (l1 + m1) / (m1 * (l1 + 2.0 * m1));
  const double eta = 2.0 * (l1 * m0 - l0 * m1) / (l1 + 2.0 * m1);
  const double delta = 4.0 * (m1 - m0) * (l1 + m1) / (l1 + 2.0 * m1);
  IsoTensor4 t;
  t.c_sym = m0 * tc;
  t.terms.push_back({l0 * (rho + tc), DyadKind::identity, DyadKind::identity});
  t.terms.push_back(
      {l0 * vrho - l0 * tc + 2.0 * m0 * vrho - m0 * tc, DyadKind::identity, DyadKind::tautau});
  t.terms.push_back({eta, DyadKind::tautau, DyadKind::identity});
  t.terms.push_back({delta - 2.0 * m0 * vrho, DyadKind::tautau, DyadKind::tautau});
  t.terms.push_back({2.0 * m0 * rho + m0 * tc, DyadKind::nn, DyadKind::identity});
  return t;
}

IsoTensor4 build_M_LY(const LamePair& bg, const LamePair& inc) {
  validate_lame(bg);
  validate_lame(inc);
  const double l0 = bg.lambda, m0 = bg.mu, l1 = inc.lambda, m1 = inc.mu;
  const double p = l1 * (l0 + 2.0 * m0) / (l1 + 2.0 * m1);
  const double q = 4.0 * (m1 - m0) * (l1 + m1) / (l1 + 2.0 * m1);
  const double lam = (l1 - l0 + m1 - m0) / (2.0 * (l1 + m1)) - (m1 - m0) / (2.0 * m1);
  const double mu = (m1 - m0) / (2.0 * m1);
  const double eta = 2.0 * (l1 * m0 - l0 * m1) / (l1 + 2.0 * m1);
  IsoTensor4 t;
  t.c_sym = 4.0 * mu * m0;
  t.terms.push_back({lam * (p + l0 + 2.0 * m0) + 2.0 * mu * p - eta, DyadKind::identity,
                     DyadKind::identity});
  t.terms.push_back({lam * q, DyadKind::identity, DyadKind::tautau});
  t.terms.push_back({eta, DyadKind::tautau, DyadKind::identity});
  t.terms.push_back({2.0 * mu * q, DyadKind::tautau, DyadKind::tautau});
  t.terms.push_back({2.0 * mu * l0 + eta - 2.0 * mu * p, DyadKind::nn, DyadKind::identity});
  return t;
}

double check_S_equals_M(const LamePair& bg, const LamePair& inc) {
  const IsoTensor4 s = build_S(bg, inc);
  const IsoTensor4 m = build_M_LY(bg, inc);
  const Vec2 tau(0.0, 1.0);
  const Vec2 n = rotate_minus_half_pi(tau);
  Mat2 basis[3];
  basis[0] << 1, 0, 0, 0;
  basis[1] << 0, 0, 0, 1;
  basis[2] << 0, 0.5, 0.5, 0;
  double diff = 0.0;
  for (const auto& e : basis) {
    diff = std::max(diff, (apply(s, e, n, tau) - apply(m, e, n, tau)).cwiseAbs().maxCoeff());
  }
  return diff;
}

}  // namespace ebie
