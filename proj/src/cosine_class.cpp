#include "cosalg/cosine_class.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace cosalg {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

bool is_integral(double v) { return v == std::floor(v); }

}  // namespace

CosineElement CosineElement::from_coord(const Group& g, double coord, bool strict) {
  switch (g.kind()) {
    case GroupKind::RealLine:
      if (!(coord >= 0))
        throw std::domain_error("cosine coordinate y must be >= 0");
      break;
    case GroupKind::Integers:
      if (!(coord >= 0) || coord > 0.5 || (strict && coord == 0.5))
        throw std::domain_error(strict ? "cosine coordinate alpha must lie in [0, 1/2)"
                                       : "cosine coordinate alpha must lie in [0, 1/2]");
      break;
    case GroupKind::Circle:
      if (!(coord >= 0) || !is_integral(coord))
        throw std::domain_error("cosine coordinate k must be a nonnegative integer");
      break;
    case GroupKind::CyclicGroup:
      if (!is_integral(coord) || coord < 0 || coord >= half_range_size(g.order()))
        throw std::domain_error("cosine coordinate l must lie in {0.." +
                                std::to_string(half_range_size(g.order()) - 1) + "}");
      break;
  }
  return CosineElement(g, coord);
}

double CosineElement::at_value(double x) const {
  switch (group_.kind()) {
    case GroupKind::RealLine: return std::cos(kTwoPi * coord_ * x);
    case GroupKind::Integers: return std::cos(kTwoPi * coord_ * x);
    case GroupKind::Circle: return std::cos(kTwoPi * coord_ * x);
    case GroupKind::CyclicGroup: {
      // argument reduction l*k mod n before the 2 pi / n scaling
      const long long n = group_.order();
      long long r = (static_cast<long long>(coord_) * static_cast<long long>(x)) % n;
      if (r < 0) r += n;
      return std::cos(kTwoPi * static_cast<double>(r) / static_cast<double>(n));
    }
  }
  return 0;
}

std::complex<double> CosineElement::character_value(double x) const {
  double arg = 0;
  switch (group_.kind()) {
    case GroupKind::RealLine:
    case GroupKind::Integers:
    case GroupKind::Circle:
      arg = kTwoPi * coord_ * x;
      break;
    case GroupKind::CyclicGroup: {
      const long long n = group_.order();
      long long r = (static_cast<long long>(coord_) * static_cast<long long>(x)) % n;
      if (r < 0) r += n;
      arg = kTwoPi * static_cast<double>(r) / static_cast<double>(n);
      break;
    }
  }
  return {std::cos(arg), std::sin(arg)};
}

std::string CosineElement::token() const {
  char buf[64];
  switch (group_.kind()) {
    case GroupKind::RealLine:
      std::snprintf(buf, sizeof buf, "real:y=%.17g", coord_);
      break;
    case GroupKind::Integers:
      std::snprintf(buf, sizeof buf, "integers:alpha=%.17g", coord_);
      break;
    case GroupKind::Circle:
      std::snprintf(buf, sizeof buf, "circle%d:k=%d", group_.sample_count(),
                    static_cast<int>(coord_));
      break;
    case GroupKind::CyclicGroup:
      std::snprintf(buf, sizeof buf, "cyclic%d:l=%d", group_.order(),
                    static_cast<int>(coord_));
      break;
  }
  return buf;
}

double dalembert_residual(const std::function<double(double)>& phi,
                          const Group& g, int x_idx, int y_idx) {
  const int sum = g.add(x_idx, y_idx);
  const int diff = g.sub(x_idx, y_idx);
  if (sum == kOffWindow || diff == kOffWindow)
    throw std::domain_error("dalembert_residual: x+y or x-y leaves the window");
  const double px = phi(g.point(x_idx)), py = phi(g.point(y_idx));
  return px * py - (phi(g.point(sum)) + phi(g.point(diff))) / 2;
}

double dalembert_residual(const CosineElement& phi, int x_idx, int y_idx) {
  return dalembert_residual([&phi](double v) { return phi.at_value(v); },
                            phi.group(), x_idx, y_idx);
}

std::vector<CosineElement> enumerate_class(const Group& g, int cutoff) {
  std::vector<CosineElement> out;
  if (g.kind() == GroupKind::CyclicGroup) {
    for (int l = 0; l < half_range_size(g.order()); ++l)
      out.push_back(CosineElement::from_coord(g, l));
    return out;
  }
  if (g.kind() == GroupKind::Circle && cutoff >= 0) {
    for (int k = 0; k <= cutoff; ++k)
      out.push_back(CosineElement::from_coord(g, k));
    return out;
  }
  throw std::invalid_argument("enumerate_class: class is infinite; pass a cutoff");
}

}  // namespace cosalg
