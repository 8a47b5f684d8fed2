#include "cosalg/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cosalg {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

Eigen::Index next_pow2(Eigen::Index n) {
  Eigen::Index m = 1;
  while (m < n) m <<= 1;
  return m;
}

// Bluestein: X[l] = w[l] * sum_k (x[k] w[k]) * conj(w[k-l]) with the
// chirp w[k] = exp(-i pi k^2 / n), evaluated as a circular convolution
// of length >= 2n-1 via the radix-2 path.
Eigen::VectorXcd dft_bluestein(const Eigen::VectorXcd& x) {
  const Eigen::Index n = x.size();
  const Eigen::Index m = next_pow2(2 * n - 1);

  Eigen::VectorXcd chirp(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the chirp argument small for large n
    const long long r = (static_cast<long long>(k) * k) % (2 * n);
    const double arg = -kPi * static_cast<double>(r) / static_cast<double>(n);
    chirp[k] = {std::cos(arg), std::sin(arg)};
  }

  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(m);
  a.head(n) = x.cwiseProduct(chirp);

  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(m);
  b[0] = std::conj(chirp[0]);
  for (Eigen::Index k = 1; k < n; ++k) {
    b[k] = std::conj(chirp[k]);
    b[m - k] = b[k];
  }

  fft_pow2(a, false);
  fft_pow2(b, false);
  a = a.cwiseProduct(b);
  fft_pow2(a, true);

  return chirp.cwiseProduct(a.head(n));
}

}  // namespace

void fft_pow2(Eigen::VectorXcd& a, bool inverse) {
  const Eigen::Index n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size is not a power of two");

  // bit reversal
  for (Eigen::Index i = 1, j = 0; i < n; ++i) {
    Eigen::Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (Eigen::Index len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2 : -2) * kPi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (Eigen::Index i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (Eigen::Index j = 0; j < len / 2; ++j) {
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }

  if (inverse) a /= static_cast<double>(n);
}

Eigen::VectorXcd dft(const Eigen::VectorXcd& x) {
  const Eigen::Index n = x.size();
  if (n == 0) throw std::invalid_argument("dft: empty input");
  if (n == 1) return x;
  if (is_pow2(n)) {
    Eigen::VectorXcd a = x;
    fft_pow2(a, false);
    return a;
  }
  return dft_bluestein(x);
}

Eigen::VectorXcd idft(const Eigen::VectorXcd& x) {
  const Eigen::Index n = x.size();
  if (n == 0) throw std::invalid_argument("idft: empty input");
  if (n == 1) return x;
  // idft(x) = conj(dft(conj(x))) / n; reuses the forward path for all n
  Eigen::VectorXcd y = dft(x.conjugate());
  return y.conjugate() / static_cast<double>(n);
}

}  // namespace cosalg
