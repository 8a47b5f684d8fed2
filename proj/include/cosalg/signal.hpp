#pragma once

#include <Eigen/Core>

#include "cosalg/group.hpp"

namespace cosalg {

/// Sampled representative of an integrable function on a Group.
/// Off-window values on RealLine / Integers are treated as zero.
struct Signal {
  Group group;
  Eigen::VectorXd values;

  Signal(Group g, Eigen::VectorXd v);
  static Signal zero(const Group& g);
  /// Unit mass at the sample point with index `idx`.
  static Signal delta(const Group& g, int idx);
};

/// weight * sum |f|; zero iff f vanishes identically.
double l1_norm(const Signal& f);

/// (translate(f, z))(u) = f(u - z); z is a sample index.
Signal translate(const Signal& f, int z_idx);

/// (reflect(f))(x) = f(-x).
Signal reflect(const Signal& f);

/// f + reflect(f); always even.
Signal symmetrize(const Signal& f);

/// max |f(x) - f(-x)| <= tol.
bool is_even(const Signal& f, double tol = 0.0);

/// Reference convolutions: naive nested loops with sequential
/// left-to-right summation. These are the oracle for every fast path.
Signal convolve(const Signal& f, const Signal& g);

/// (f *a g)(x) = weight * sum_y f(y) g(x+y); need not be commutative.
Signal anticonvolve(const Signal& f, const Signal& g);

/// (f *c g)(x) = weight * sum_y f(y) (g(x+y) + g(x-y)) / 2.
/// Computed so that it coincides bit-for-bit with
/// (convolve(f,g) + anticonvolve(f,g)) / 2.
Signal cosine_convolve(const Signal& f, const Signal& g);

}  // namespace cosalg
