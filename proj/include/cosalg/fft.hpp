#pragma once

#include <Eigen/Core>
#include <complex>

namespace cosalg {

/// Forward DFT, X[l] = sum_k x[k] exp(-2 pi i k l / n), any n.
/// Radix-2 decimation in time for powers of two, Bluestein's chirp
/// embedding otherwise.
Eigen::VectorXcd dft(const Eigen::VectorXcd& x);

/// Inverse DFT with 1/n normalization: idft(dft(x)) == x.
Eigen::VectorXcd idft(const Eigen::VectorXcd& x);

/// In-place radix-2 transform; size must be a power of two.
void fft_pow2(Eigen::VectorXcd& a, bool inverse);

}  // namespace cosalg
