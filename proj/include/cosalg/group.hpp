#pragma once

#include <optional>
#include <string>

namespace cosalg {

enum class GroupKind { RealLine, Integers, Circle, CyclicGroup };

/// Index returned by Group::add / Group::negate when the result falls
/// outside the truncation window of a RealLine or Integers group.
inline constexpr int kOffWindow = -1;

/// One of the four canonical groups with its discretization.
///
/// Sample sets:
///   RealLine    x_j = -L + j*h,  j = 0..2L/h      (weight h)
///   Integers    k in {-K..K}                      (weight 1)
///   Circle      x_j = j/s,       j = 0..s-1       (weight 1/s)
///   CyclicGroup k in {0..n-1}                     (weight 1)
///
/// The group law is exact on sample indices: mod-n for CyclicGroup,
/// mod-s (i.e. mod-1 on values) for Circle, plain integer index
/// arithmetic with an off-window marker for RealLine and Integers.
class Group {
 public:
  static Group real_line(double half_width, double step);
  static Group integers(int support_radius);
  static Group circle(int sample_count);
  static Group cyclic(int order);

  GroupKind kind() const { return kind_; }
  int size() const { return size_; }
  double weight() const { return weight_; }
  bool wraps() const {
    return kind_ == GroupKind::Circle || kind_ == GroupKind::CyclicGroup;
  }

  /// Value of the j-th sample point.
  double point(int idx) const;
  /// Index of the identity element 0.
  int zero_index() const { return zero_; }
  /// Index of the sample point equal to `value`, if any.
  std::optional<int> index_of(double value) const;

  /// Group law on sample indices; kOffWindow marks truncation on R / Z.
  int add(int i, int j) const;
  int negate(int i) const;
  int sub(int i, int j) const { return negate(j) == kOffWindow ? kOffWindow : add(i, negate(j)); }

  double half_width() const { return half_width_; }
  double step() const { return step_; }
  int support_radius() const { return param_; }
  int sample_count() const { return param_; }
  int order() const { return param_; }

  bool operator==(const Group& o) const;

  /// Flat `kind:params` descriptor, e.g. "cyclic:4", "real:L=8,h=0.125".
  std::string descriptor() const;
  static Group parse(const std::string& descriptor);

 private:
  Group() = default;
  GroupKind kind_{GroupKind::CyclicGroup};
  double half_width_ = 0, step_ = 0;
  int param_ = 0;   // K, s or n
  int size_ = 0, zero_ = 0;
  double weight_ = 1;
};

/// Group law on point values; nullopt marks off-window results.
std::optional<double> add_points(const Group& g, double a, double b);
double negate_point(const Group& g, double a);
inline double haar_weight(const Group& g) { return g.weight(); }

}  // namespace cosalg
