#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "cosalg/fft.hpp"
#include "cosalg/rng.hpp"

using namespace cosalg;

namespace {

// quadratic-time reference transform
Eigen::VectorXcd dft_reference(const Eigen::VectorXcd& x) {
  const Eigen::Index n = x.size();
  Eigen::VectorXcd out(n);
  for (Eigen::Index l = 0; l < n; ++l) {
    std::complex<double> acc = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      const double arg = -2 * std::numbers::pi * static_cast<double>(k * l) / static_cast<double>(n);
      acc += x[k] * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    out[l] = acc;
  }
  return out;
}

Eigen::VectorXcd random_complex(Eigen::Index n, SplitMix64& rng) {
  Eigen::VectorXcd x(n);
  for (Eigen::Index i = 0; i < n; ++i)
    x[i] = {rng.uniform_signed(), rng.uniform_signed()};
  return x;
}

}  // namespace

TEST_CASE("dft matches the quadratic reference") {
  SplitMix64 rng(71);
  for (int n : {1, 2, 3, 5, 8, 12, 17, 64, 100}) {
    const Eigen::VectorXcd x = random_complex(n, rng);
    const Eigen::VectorXcd got = dft(x), want = dft_reference(x);
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-10 * n);
  }
}

TEST_CASE("idft inverts dft") {
  SplitMix64 rng(73);
  for (int n : {1, 4, 9, 16, 100, 129}) {
    const Eigen::VectorXcd x = random_complex(n, rng);
    CHECK((idft(dft(x)) - x).cwiseAbs().maxCoeff() < 1e-11 * n);
  }
}

TEST_CASE("fft_pow2 rejects other sizes") {
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(6);
  CHECK_THROWS_AS(fft_pow2(x, false), std::invalid_argument);
}
