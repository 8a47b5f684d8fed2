#pragma once

#include <vector>

#include "cosalg/cosine_class.hpp"
#include "cosalg/signal.hpp"

namespace cosalg {

/// A finite restriction of the Gelfand transform: transform values at
/// an ordered list of structure-space coordinates.
struct Spectrum {
  Group group;
  std::vector<double> coords;
  Eigen::VectorXd values;
};

/// m_phi(f) = weight * sum_x f(x) phi(x), sequential summation.
double functional_apply(const CosineElement& phi, const Signal& f);

/// f_hat(y) = integral f(x) cos(2 pi y x) dx on the RealLine grid.
Spectrum cosine_transform_real(const Signal& f, const std::vector<double>& ys);

/// f_hat(alpha) = sum_k f(k) cos(2 pi alpha k), alpha in [0, 1/2].
Spectrum cosine_transform_integers(const Signal& f, const std::vector<double>& alphas);

/// Cosine Fourier coefficients (1/s) sum_j f(x_j) cos(2 pi k x_j),
/// k = 0..k_max; requires k_max < s/2.
Spectrum fourier_cosine_coeffs(const Signal& f, int k_max);

/// Half-range cosine transform on Z_n:
/// values[l] = sum_k f(k) cos(2 pi l k / n), l = 0..ceil((n+1)/2)-1.
Spectrum dct_naive(const Signal& f);

/// Same values via the real part of the DFT (radix-2 or Bluestein).
Spectrum dct_fast(const Signal& f);

/// Redundant full-range spectrum with the symmetry S(n-l) = S(l) made
/// explicit; coords run over 0..n-1.
Spectrum dct_full_range(const Signal& f, bool fast = true);

/// Even part (f + reflect(f))/2 of any f whose half-range transform is
/// S, via symmetric extension and inverse DFT.
Signal reconstruct_even(const Spectrum& S, int n);

/// Transform-domain cosine convolution on Z_n:
/// idft(Re(dft(f)) .* dft(g)); matches cosine_convolve within
/// 1e-9 * (1 + |f|_1 |g|_1).
Signal cosine_convolve_fast(const Signal& f, const Signal& g);

}  // namespace cosalg
