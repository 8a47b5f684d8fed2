#include "cosalg/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace cosalg {

namespace {

void require_same_group(const Signal& f, const Signal& g) {
  if (!(f.group == g.group))
    throw std::invalid_argument("signals live on different groups");
}

}  // namespace

Signal::Signal(Group g, Eigen::VectorXd v) : group(g), values(std::move(v)) {
  if (values.size() != group.size())
    throw std::invalid_argument("signal length does not match the sample set");
}

Signal Signal::zero(const Group& g) {
  return Signal(g, Eigen::VectorXd::Zero(g.size()));
}

Signal Signal::delta(const Group& g, int idx) {
  if (idx < 0 || idx >= g.size())
    throw std::invalid_argument("delta: index outside the sample set");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(g.size());
  v[idx] = 1.0;
  return Signal(g, std::move(v));
}

double l1_norm(const Signal& f) {
  return f.group.weight() * f.values.cwiseAbs().sum();
}

Signal translate(const Signal& f, int z_idx) {
  const Group& g = f.group;
  if (z_idx < 0 || z_idx >= g.size())
    throw std::invalid_argument("translate: shift is not a sample point");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(g.size());
  for (int u = 0; u < g.size(); ++u) {
    const int src = g.sub(u, z_idx);
    if (src != kOffWindow) out[u] = f.values[src];
  }
  return Signal(g, std::move(out));
}

Signal reflect(const Signal& f) {
  const Group& g = f.group;
  Eigen::VectorXd out(g.size());
  for (int u = 0; u < g.size(); ++u) out[u] = f.values[g.negate(u)];
  return Signal(g, std::move(out));
}

Signal symmetrize(const Signal& f) {
  Signal r = reflect(f);
  r.values += f.values;
  return r;
}

bool is_even(const Signal& f, double tol) {
  const Group& g = f.group;
  for (int u = 0; u < g.size(); ++u)
    if (std::abs(f.values[u] - f.values[g.negate(u)]) > tol) return false;
  return true;
}

Signal convolve(const Signal& f, const Signal& g) {
  require_same_group(f, g);
  const Group& grp = f.group;
  const int n = grp.size();
  Eigen::VectorXd out(n);
  for (int x = 0; x < n; ++x) {
    double acc = 0;
    for (int y = 0; y < n; ++y) {
      const int k = grp.sub(x, y);
      if (k != kOffWindow) acc += f.values[y] * g.values[k];
    }
    out[x] = grp.weight() * acc;
  }
  return Signal(grp, std::move(out));
}

Signal anticonvolve(const Signal& f, const Signal& g) {
  require_same_group(f, g);
  const Group& grp = f.group;
  const int n = grp.size();
  Eigen::VectorXd out(n);
  for (int x = 0; x < n; ++x) {
    double acc = 0;
    for (int y = 0; y < n; ++y) {
      const int k = grp.add(x, y);
      if (k != kOffWindow) acc += f.values[y] * g.values[k];
    }
    out[x] = grp.weight() * acc;
  }
  return Signal(grp, std::move(out));
}

Signal cosine_convolve(const Signal& f, const Signal& g) {
  require_same_group(f, g);
  const Group& grp = f.group;
  const int n = grp.size();
  Eigen::VectorXd out(n);
  // Two accumulators mirroring convolve / anticonvolve term-for-term,
  // halved once per output sample; this keeps the mean identity
  // (f*g + f*a g)/2 exact in floating point.
  for (int x = 0; x < n; ++x) {
    double plus = 0, minus = 0;
    for (int y = 0; y < n; ++y) {
      const int ka = grp.add(x, y);
      if (ka != kOffWindow) plus += f.values[y] * g.values[ka];
    }
    for (int y = 0; y < n; ++y) {
      const int ks = grp.sub(x, y);
      if (ks != kOffWindow) minus += f.values[y] * g.values[ks];
    }
    out[x] = (grp.weight() * minus + grp.weight() * plus) / 2;
  }
  return Signal(grp, std::move(out));
}

}  // namespace cosalg
