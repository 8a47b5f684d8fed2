#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "cosalg/group.hpp"

namespace cosalg {

/// An element of the cosine class of a canonical group, identified by
/// its structure-space coordinate:
///
///   RealLine     y     real >= 0        phi(x) = cos(2 pi y x)
///   Integers     alpha in [0, 1/2]      phi(k) = cos(2 pi alpha k)
///   Circle       k     integer >= 0     phi(x) = cos(2 pi k x)
///   CyclicGroup  l in {0..ceil((n+1)/2)-1}   phi(k) = cos(2 pi l k / n)
///
/// Only the coordinate is stored; values are computed on demand.
class CosineElement {
 public:
  /// `strict` narrows the Integers domain to alpha in [0, 1/2),
  /// excluding phi(k) = (-1)^k.
  static CosineElement from_coord(const Group& g, double coord, bool strict = false);

  const Group& group() const { return group_; }
  double coord() const { return coord_; }

  /// phi at the sample index `idx`.
  double operator()(int idx) const { return at_value(group_.point(idx)); }
  /// phi at an arbitrary point value (the formulas extend off-window).
  double at_value(double x) const;

  /// The character with phi = Re(chi); |chi| = 1 everywhere.
  std::complex<double> character(int idx) const { return character_value(group_.point(idx)); }
  std::complex<double> character_value(double x) const;

  /// `group-kind:coord` token, e.g. "cyclic4:l=1".
  std::string token() const;

 private:
  CosineElement(Group g, double c) : group_(g), coord_(c) {}
  Group group_;
  double coord_;
};

inline double evaluate(const CosineElement& phi, int idx) { return phi(idx); }

inline CosineElement from_coord(const Group& g, double coord, bool strict = false) {
  return CosineElement::from_coord(g, coord, strict);
}
inline double coord_of(const CosineElement& phi) { return phi.coord(); }

/// Number of non-redundant cosine coordinates on Z_n: ceil((n+1)/2).
inline int half_range_size(int n) { return n / 2 + 1; }

/// phi(x) phi(y) - (phi(x+y) + phi(x-y)) / 2 with the group law applied
/// to the sample indices x_idx, y_idx. Throws if x+y or x-y leaves the
/// truncation window of RealLine / Integers.
double dalembert_residual(const std::function<double(double)>& phi,
                          const Group& g, int x_idx, int y_idx);
double dalembert_residual(const CosineElement& phi, int x_idx, int y_idx);

/// The full cosine class of a CyclicGroup (ceil((n+1)/2) elements), or
/// the first `cutoff`+1 elements {0..cutoff} for the Circle. Throws for
/// RealLine / Integers and for Circle without a cutoff: those classes
/// are infinite.
std::vector<CosineElement> enumerate_class(const Group& g, int cutoff = -1);

}  // namespace cosalg
