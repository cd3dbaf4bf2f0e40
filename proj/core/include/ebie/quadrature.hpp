#pragma once

#include <Eigen/Dense>

namespace ebie {

// Quadrature rules for 2pi-periodic integrands on the uniform grid s_j = 2pi j/N,
// N even. Each returns the weight for node offset m = i - j (mod N); rules are
// circulant, so only the offset matters.

// Kress/Martensen rule for the periodic log singularity:
//   int_0^{2pi} log(4 sin^2((t-s)/2)) f(s) ds  ~=  sum_j kress_log_weight(N, i-j) f(s_j).
// Symbol: -2pi/|k| on e^{iks} for 0 < |k| < N/2, 0 at k = 0.
double kress_log_weight(int N, int offset);

// Odd-offset rule for Cauchy principal values: the PV integral of a kernel with
// a cot((t-s)/2)-type singularity at s = t_i is the sum over odd i-j of
// (4pi/N) * integrand(s_j); even offsets (including the diagonal) get weight 0.
// Exact on PV int cot((t-s)/2) e^{iks} ds = -2pi i sgn(k) e^{ikt} for |k| < N/2.
double odd_offset_weight(int N, int offset);

// Hadamard finite-part rule:
//   FP int_0^{2pi} f(s) / (4 sin^2((t-s)/2)) ds  ~=  sum_j fp_weight(N, i-j) f(s_j).
// Symbol: -pi|k| on e^{iks} for |k| < N/2 (and -pi N/2 at the Nyquist mode).
double fp_weight(int N, int offset);

// All weights for a given N as a vector indexed by offset 0..N-1.
Eigen::VectorXd kress_log_weights(int N);
Eigen::VectorXd fp_weights(int N);

// Trigonometric interpolation from N uniform nodes to M uniform nodes (M >= N,
// both even): the M x N matrix applying band-limited upsampling.
Eigen::MatrixXd trig_upsample_matrix(int N, int M);

}  // namespace ebie
