#include "cosalg/group.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cosalg {

namespace {

// L/h must be integral so the grid is symmetric about 0 and contains 0.
int grid_radius(double half_width, double step) {
  const double ratio = half_width / step;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, std::abs(ratio)))
    throw std::invalid_argument("real-line grid: L/h is not an integer");
  return static_cast<int>(rounded);
}

}  // namespace

Group Group::real_line(double half_width, double step) {
  if (!(half_width > 0) || !(step > 0))
    throw std::invalid_argument("real-line grid: L and h must be positive");
  Group g;
  g.kind_ = GroupKind::RealLine;
  g.half_width_ = half_width;
  g.step_ = step;
  const int m = grid_radius(half_width, step);
  g.size_ = 2 * m + 1;
  g.zero_ = m;
  g.weight_ = step;
  return g;
}

Group Group::integers(int support_radius) {
  if (support_radius < 0)
    throw std::invalid_argument("integers: support radius must be >= 0");
  Group g;
  g.kind_ = GroupKind::Integers;
  g.param_ = support_radius;
  g.size_ = 2 * support_radius + 1;
  g.zero_ = support_radius;
  g.weight_ = 1;
  return g;
}

Group Group::circle(int sample_count) {
  if (sample_count < 2)
    throw std::invalid_argument("circle: sample count must be >= 2");
  Group g;
  g.kind_ = GroupKind::Circle;
  g.param_ = sample_count;
  g.size_ = sample_count;
  g.zero_ = 0;
  g.weight_ = 1.0 / sample_count;
  return g;
}

Group Group::cyclic(int order) {
  if (order < 1) throw std::invalid_argument("cyclic: order must be >= 1");
  Group g;
  g.kind_ = GroupKind::CyclicGroup;
  g.param_ = order;
  g.size_ = order;
  g.zero_ = 0;
  g.weight_ = 1;
  return g;
}

double Group::point(int idx) const {
  switch (kind_) {
    case GroupKind::RealLine: return -half_width_ + idx * step_;
    case GroupKind::Integers: return idx - zero_;
    case GroupKind::Circle: return static_cast<double>(idx) / param_;
    case GroupKind::CyclicGroup: return idx;
  }
  return 0;
}

std::optional<int> Group::index_of(double value) const {
  double idx = 0;
  switch (kind_) {
    case GroupKind::RealLine: idx = (value + half_width_) / step_; break;
    case GroupKind::Integers: idx = value + zero_; break;
    case GroupKind::Circle: idx = (value - std::floor(value)) * param_; break;
    case GroupKind::CyclicGroup: idx = value; break;
  }
  const double rounded = std::round(idx);
  if (std::abs(idx - rounded) > 1e-9 * std::max(1.0, std::abs(idx)))
    return std::nullopt;
  const int j = static_cast<int>(rounded);
  if (j < 0 || j >= size_) return std::nullopt;
  return j;
}

int Group::add(int i, int j) const {
  switch (kind_) {
    case GroupKind::RealLine:
    case GroupKind::Integers: {
      const int k = i + j - zero_;
      return (k < 0 || k >= size_) ? kOffWindow : k;
    }
    case GroupKind::Circle:
    case GroupKind::CyclicGroup: {
      int k = (i + j) % size_;
      if (k < 0) k += size_;
      return k;
    }
  }
  return kOffWindow;
}

int Group::negate(int i) const {
  switch (kind_) {
    case GroupKind::RealLine:
    case GroupKind::Integers:
      return size_ - 1 - i;  // symmetric window
    case GroupKind::Circle:
    case GroupKind::CyclicGroup:
      return i == 0 ? 0 : size_ - i;
  }
  return kOffWindow;
}

bool Group::operator==(const Group& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == GroupKind::RealLine)
    return half_width_ == o.half_width_ && step_ == o.step_;
  return param_ == o.param_;
}

std::string Group::descriptor() const {
  char buf[64];
  switch (kind_) {
    case GroupKind::RealLine:
      std::snprintf(buf, sizeof buf, "real:L=%.17g,h=%.17g", half_width_, step_);
      return buf;
    case GroupKind::Integers:
      std::snprintf(buf, sizeof buf, "integers:K=%d", param_);
      return buf;
    case GroupKind::Circle:
      std::snprintf(buf, sizeof buf, "circle:%d", param_);
      return buf;
    case GroupKind::CyclicGroup:
      std::snprintf(buf, sizeof buf, "cyclic:%d", param_);
      return buf;
  }
  return "";
}

Group Group::parse(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group descriptor: missing ':' in \"" + descriptor + "\"");
  const std::string kind = descriptor.substr(0, colon);
  const std::string rest = descriptor.substr(colon + 1);
  try {
    if (kind == "cyclic") return cyclic(std::stoi(rest));
    if (kind == "circle") return circle(std::stoi(rest));
    if (kind == "integers") {
      const auto eq = rest.find('=');
      return integers(std::stoi(eq == std::string::npos ? rest : rest.substr(eq + 1)));
    }
    if (kind == "real") {
      double L = 0, h = 0;
      if (std::sscanf(rest.c_str(), "L=%lf,h=%lf", &L, &h) != 2)
        throw std::invalid_argument("real group: expected real:L=<v>,h=<v>");
      return real_line(L, h);
    }
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("group descriptor \"" + descriptor + "\": " + e.what());
  }
  throw std::invalid_argument("unknown group kind \"" + kind + "\"");
}

std::optional<double> add_points(const Group& g, double a, double b) {
  const auto ia = g.index_of(a), ib = g.index_of(b);
  if (!ia || !ib) throw std::invalid_argument("add_points: not a sample point");
  const int k = g.add(*ia, *ib);
  if (k == kOffWindow) return std::nullopt;
  return g.point(k);
}

double negate_point(const Group& g, double a) {
  const auto ia = g.index_of(a);
  if (!ia) throw std::invalid_argument("negate_point: not a sample point");
  return g.point(g.negate(*ia));
}

}  // namespace cosalg
