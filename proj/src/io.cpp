#include "cosalg/io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cosalg/rng.hpp"

namespace cosalg {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_signal_csv(std::ostream& os, const Signal& f) {
  os << "point,value\n";
  for (int i = 0; i < f.group.size(); ++i)
    os << format_double(f.group.point(i)) << ',' << format_double(f.values[i]) << '\n';
}

Signal read_signal_csv(std::istream& is, const Group& g) {
  Eigen::VectorXd values = Eigen::VectorXd::Zero(g.size());
  Eigen::VectorXd seen = Eigen::VectorXd::Zero(g.size());
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("point,", 0) == 0) continue;
    double point = 0, value = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf", &point, &value) != 2)
      throw std::invalid_argument("signal csv: bad row \"" + line + "\"");
    const auto idx = g.index_of(point);
    if (!idx)
      throw std::invalid_argument("signal csv: point " + format_double(point) +
                                  " is not on the " + g.descriptor() + " grid");
    values[*idx] = value;
    seen[*idx] = 1;
  }
  if (seen.sum() != g.size())
    throw std::invalid_argument("signal csv: missing sample points for " + g.descriptor());
  return Signal(g, std::move(values));
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s, const std::string& kind) {
  os << "# " << s.group.descriptor() << ' ' << kind << '\n' << "coord,value\n";
  for (size_t i = 0; i < s.coords.size(); ++i)
    os << format_double(s.coords[i]) << ','
       << format_double(s.values[static_cast<Eigen::Index>(i)]) << '\n';
}

Signal generate_signal(const Group& g, const std::string& kind) {
  const auto colon = kind.find(':');
  const std::string name = kind.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : kind.substr(colon + 1);

  if (name == "delta") {
    const double point = arg.empty() ? 0.0 : std::stod(arg);
    const auto idx = g.index_of(point);
    if (!idx) throw std::invalid_argument("delta: " + arg + " is not a sample point");
    return Signal::delta(g, *idx);
  }
  if (name == "box") {
    double lo = 0, hi = 1;
    if (!arg.empty() && std::sscanf(arg.c_str(), "%lf,%lf", &lo, &hi) != 2)
      throw std::invalid_argument("box: expected box:lo,hi");
    Signal f = Signal::zero(g);
    for (int i = 0; i < g.size(); ++i) {
      const double x = g.point(i);
      if (x >= lo && x <= hi) f.values[i] = 1;
    }
    return f;
  }
  if (name == "gaussian") {
    Signal f = Signal::zero(g);
    for (int i = 0; i < g.size(); ++i) {
      const double x = g.point(i);
      f.values[i] = std::exp(-std::numbers::pi * x * x);
    }
    return f;
  }
  if (name == "random") {
    SplitMix64 rng(arg.empty() ? 0 : std::stoull(arg));
    return random_signal(g, rng);
  }
  throw std::invalid_argument("unknown generator \"" + kind + "\"");
}

}  // namespace cosalg
