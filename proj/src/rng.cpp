#include "cosalg/rng.hpp"

namespace cosalg {

Signal random_signal(const Group& g, SplitMix64& rng) {
  Eigen::VectorXd v(g.size());
  for (int i = 0; i < g.size(); ++i) v[i] = rng.uniform_signed();
  return Signal(g, std::move(v));
}

}  // namespace cosalg
