#pragma once

#include <iosfwd>
#include <string>

#include "cosalg/transform.hpp"
#include "cosalg/verify.hpp"

namespace cosalg {

/// Shortest decimal that round-trips the double (%.17g).
std::string format_double(double v);

/// `point,value` rows, LF line endings, 17 significant digits.
void write_signal_csv(std::ostream& os, const Signal& f);
Signal read_signal_csv(std::istream& is, const Group& g);

/// `coord,value` rows behind a comment header naming the group and the
/// transform kind.
void write_spectrum_csv(std::ostream& os, const Spectrum& s, const std::string& kind);

/// Named signal generators for the CLI: delta:<point>, box[:lo,hi]
/// (default [0,1]), gaussian (exp(-pi x^2)), random:<seed>.
Signal generate_signal(const Group& g, const std::string& kind);

}  // namespace cosalg
