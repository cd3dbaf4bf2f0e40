#include "ebie/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "ebie/errors.hpp"

namespace ebie {

namespace {

constexpr double kPi = std::numbers::pi;

void check_even(int N) {
  if (N < 4 || N % 2 != 0) {
    throw OddNodeCount("quadrature rules require even N >= 4");
  }
}

int wrap(int N, int offset) {
  int m = offset % N;
  return m < 0 ? m + N : m;
}

}  // namespace

double kress_log_weight(int N, int offset) {
  check_even(N);
  const int m = wrap(N, offset);
  double sum = 0.0;
  for (int k = 1; k < N / 2; ++k) {
    sum += std::cos(2.0 * kPi * k * m / N) / k;
  }
  const double nyquist = (m % 2 == 0) ? 1.0 : -1.0;
  return -(4.0 * kPi / N) * sum - (4.0 * kPi / (double(N) * N)) * nyquist;
}

double odd_offset_weight(int N, int offset) {
  check_even(N);
  return (wrap(N, offset) % 2 == 1) ? 4.0 * kPi / N : 0.0;
}

double fp_weight(int N, int offset) {
  check_even(N);
  const int m = wrap(N, offset);
  double sum = 0.0;
  for (int k = 1; k < N / 2; ++k) {
    sum += k * std::cos(2.0 * kPi * k * m / N);
  }
  const double nyquist = (m % 2 == 0) ? 1.0 : -1.0;
  return -(2.0 * kPi / N) * (sum + 0.25 * N * nyquist);
}

Eigen::VectorXd kress_log_weights(int N) {
  Eigen::VectorXd w(N);
  for (int m = 0; m < N; ++m) w[m] = kress_log_weight(N, m);
  return w;
}

Eigen::VectorXd fp_weights(int N) {
  Eigen::VectorXd w(N);
  for (int m = 0; m < N; ++m) w[m] = fp_weight(N, m);
  return w;
}

Eigen::MatrixXd trig_upsample_matrix(int N, int M) {
  check_even(N);
  check_even(M);
  if (M < N) throw std::invalid_argument("trig_upsample_matrix requires M >= N");
  Eigen::MatrixXd P(M, N);
  for (int i = 0; i < M; ++i) {
    const double t = 2.0 * kPi * i / M;
    for (int j = 0; j < N; ++j) {
      const double u = t - 2.0 * kPi * j / N;
      // Dirichlet kernel with halved Nyquist mode: interpolates exactly for
      // frequencies |k| < N/2 and keeps real samples real.
      const double s = std::sin(0.5 * u);
      if (std::abs(s) < 1e-14) {
        P(i, j) = 1.0;
      } else {
        P(i, j) = std::sin(0.5 * N * u) * std::cos(0.5 * u) / (N * s);
      }
    }
  }
  return P;
}

}  // namespace ebie
