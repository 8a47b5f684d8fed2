#include "cosalg/transform.hpp"

#include <stdexcept>

#include "cosalg/fft.hpp"

namespace cosalg {

namespace {

void require_kind(const Signal& f, GroupKind k, const char* what) {
  if (f.group.kind() != k)
    throw std::invalid_argument(std::string(what) + ": wrong group kind");
}

}  // namespace

double functional_apply(const CosineElement& phi, const Signal& f) {
  if (!(phi.group() == f.group))
    throw std::invalid_argument("functional_apply: group mismatch");
  double acc = 0;
  for (int x = 0; x < f.group.size(); ++x) acc += f.values[x] * phi(x);
  return f.group.weight() * acc;
}

Spectrum cosine_transform_real(const Signal& f, const std::vector<double>& ys) {
  require_kind(f, GroupKind::RealLine, "cosine_transform_real");
  Spectrum s{f.group, ys, Eigen::VectorXd(static_cast<Eigen::Index>(ys.size()))};
  for (size_t i = 0; i < ys.size(); ++i)
    s.values[static_cast<Eigen::Index>(i)] =
        functional_apply(CosineElement::from_coord(f.group, ys[i]), f);
  return s;
}

Spectrum cosine_transform_integers(const Signal& f, const std::vector<double>& alphas) {
  require_kind(f, GroupKind::Integers, "cosine_transform_integers");
  Spectrum s{f.group, alphas, Eigen::VectorXd(static_cast<Eigen::Index>(alphas.size()))};
  for (size_t i = 0; i < alphas.size(); ++i)
    s.values[static_cast<Eigen::Index>(i)] =
        functional_apply(CosineElement::from_coord(f.group, alphas[i]), f);
  return s;
}

Spectrum fourier_cosine_coeffs(const Signal& f, int k_max) {
  require_kind(f, GroupKind::Circle, "fourier_cosine_coeffs");
  if (k_max < 0 || 2 * k_max >= f.group.sample_count())
    throw std::invalid_argument("fourier_cosine_coeffs: k_max must satisfy 0 <= k_max < s/2");
  Spectrum s{f.group, {}, Eigen::VectorXd(k_max + 1)};
  for (int k = 0; k <= k_max; ++k) {
    s.coords.push_back(k);
    s.values[k] = functional_apply(CosineElement::from_coord(f.group, k), f);
  }
  return s;
}

Spectrum dct_naive(const Signal& f) {
  require_kind(f, GroupKind::CyclicGroup, "dct_naive");
  const int h = half_range_size(f.group.order());
  Spectrum s{f.group, {}, Eigen::VectorXd(h)};
  for (int l = 0; l < h; ++l) {
    s.coords.push_back(l);
    s.values[l] = functional_apply(CosineElement::from_coord(f.group, l), f);
  }
  return s;
}

Spectrum dct_fast(const Signal& f) {
  require_kind(f, GroupKind::CyclicGroup, "dct_fast");
  const int n = f.group.order();
  const int h = half_range_size(n);
  const Eigen::VectorXcd F = dft(f.values.cast<std::complex<double>>());
  Spectrum s{f.group, {}, Eigen::VectorXd(h)};
  for (int l = 0; l < h; ++l) {
    s.coords.push_back(l);
    s.values[l] = F[l].real();
  }
  return s;
}

Spectrum dct_full_range(const Signal& f, bool fast) {
  Spectrum half = fast ? dct_fast(f) : dct_naive(f);
  const int n = f.group.order();
  Spectrum s{f.group, {}, Eigen::VectorXd(n)};
  for (int l = 0; l < n; ++l) {
    s.coords.push_back(l);
    s.values[l] = half.values[l < n - l ? l : n - l];
  }
  return s;
}

Signal reconstruct_even(const Spectrum& S, int n) {
  if (S.group.kind() != GroupKind::CyclicGroup || S.group.order() != n)
    throw std::invalid_argument("reconstruct_even: spectrum is not a Z_n spectrum");
  const int h = half_range_size(n);
  if (S.values.size() != h)
    throw std::invalid_argument("reconstruct_even: expected a full half-range spectrum");
  Eigen::VectorXcd full(n);
  for (int l = 0; l < n; ++l) full[l] = S.values[l < n - l ? l : n - l];
  const Eigen::VectorXcd even = idft(full);
  return Signal(S.group, even.real());
}

Signal cosine_convolve_fast(const Signal& f, const Signal& g) {
  require_kind(f, GroupKind::CyclicGroup, "cosine_convolve_fast");
  if (!(f.group == g.group))
    throw std::invalid_argument("cosine_convolve_fast: size mismatch");
  const Eigen::VectorXcd F = dft(f.values.cast<std::complex<double>>());
  const Eigen::VectorXcd G = dft(g.values.cast<std::complex<double>>());
  const Eigen::VectorXcd H = F.real().cast<std::complex<double>>().cwiseProduct(G);
  return Signal(f.group, idft(H).real());
}

}  // namespace cosalg
