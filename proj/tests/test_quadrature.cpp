#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ebie/quadrature.hpp"

using namespace ebie;

namespace {

constexpr double kPi = std::numbers::pi;

double node(int N, int j) { return 2.0 * kPi * j / N; }

// Apply a circulant rule to samples f(s_j), evaluated at node i.
template <typename F>
double apply_rule(double (*weight)(int, int), int N, int i, F f) {
  double acc = 0.0;
  for (int j = 0; j < N; ++j) acc += weight(N, i - j) * f(node(N, j));
  return acc;
}

}  // namespace

TEST_CASE("log rule reproduces its Fourier symbol -2pi/|k| on pure modes") {
  const int N = 64;
  for (int k : {1, 5, 31}) {
    for (int i : {0, 3, N / 2}) {
      const double t = node(N, i);
      const double got = apply_rule(kress_log_weight, N, i,
                                    [&](double s) { return std::cos(k * s); });
      const double want = -(2.0 * kPi / k) * std::cos(k * t);
      CHECK(std::abs(got - want) < 1e-12);
    }
  }
}

TEST_CASE("log rule annihilates constants") {
  const int N = 64;
  const double got = apply_rule(kress_log_weight, N, 5, [](double) { return 1.0; });
  CHECK(std::abs(got) < 1e-12);
}

TEST_CASE("odd-offset rule reproduces the periodic Hilbert symbol") {
  // PV int cot((t-s)/2) cos(ks) ds = 2pi sin(kt), sin(ks) -> -2pi cos(kt).
  const int N = 64;
  for (int k : {1, 4, 15}) {
    for (int i : {0, 7}) {
      const double t = node(N, i);
      const double got_c = apply_rule(
          odd_offset_weight, N, i,
          [&](double s) { return (std::abs(std::sin((t - s) / 2.0)) < 1e-14)
                                     ? 0.0
                                     : std::cos(k * s) / std::tan((t - s) / 2.0); });
      const double got_s = apply_rule(
          odd_offset_weight, N, i,
          [&](double s) { return (std::abs(std::sin((t - s) / 2.0)) < 1e-14)
                                     ? 0.0
                                     : std::sin(k * s) / std::tan((t - s) / 2.0); });
      CHECK(std::abs(got_c - 2.0 * kPi * std::sin(k * t)) < 1e-11);
      CHECK(std::abs(got_s + 2.0 * kPi * std::cos(k * t)) < 1e-11);
    }
  }
}

TEST_CASE("odd-offset weights vanish on even offsets and equal 4pi/N on odd") {
  const int N = 32;
  for (int m = -N; m < N; ++m) {
    const double w = odd_offset_weight(N, m);
    if (((m % 2) + 2) % 2 == 0) {
      CHECK(w == 0.0);
    } else {
      CHECK(std::abs(w - 4.0 * kPi / N) < 1e-15);
    }
  }
}

TEST_CASE("finite-part rule reproduces its symbol -pi|k|") {
  const int N = 64;
  for (int k : {0, 1, 6, 20}) {
    for (int i : {0, 11}) {
      const double t = node(N, i);
      const double got = apply_rule(fp_weight, N, i,
                                    [&](double s) { return std::cos(k * s); });
      const double want = -kPi * k * std::cos(k * t);
      CHECK(std::abs(got - want) < 1e-10);
    }
  }
}

TEST_CASE("finite-part rule at the Nyquist mode") {
  // cos(N/2 s) alternates; the symbol there is -pi N/2.
  const int N = 16;
  const int k = N / 2;
  for (int i : {0, 1, 5}) {
    const double t = node(N, i);
    const double got = apply_rule(fp_weight, N, i,
                                  [&](double s) { return std::cos(k * s); });
    CHECK(std::abs(got + kPi * (N / 2.0) * std::cos(k * t)) < 1e-10);
  }
}

TEST_CASE("weight vectors agree with the scalar rules") {
  const int N = 32;
  const Eigen::VectorXd lw = kress_log_weights(N);
  const Eigen::VectorXd fw = fp_weights(N);
  for (int m = 0; m < N; ++m) {
    CHECK(lw[m] == kress_log_weight(N, m));
    CHECK(fw[m] == fp_weight(N, m));
  }
}

TEST_CASE("trigonometric upsampling is exact on band-limited samples") {
  const int N = 16, M = 48;
  const Eigen::MatrixXd U = trig_upsample_matrix(N, M);
  Eigen::VectorXd f(N);
  for (int j = 0; j < N; ++j) {
    const double s = node(N, j);
    f[j] = std::cos(3.0 * s) + 0.5 * std::sin(7.0 * s);
  }
  const Eigen::VectorXd g = U * f;
  for (int j = 0; j < M; ++j) {
    const double s = node(M, j);
    CHECK(std::abs(g[j] - (std::cos(3.0 * s) + 0.5 * std::sin(7.0 * s))) < 1e-12);
  }
}
