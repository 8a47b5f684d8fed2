#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosalg/transform.hpp"

namespace cosalg {

/// Outcome of one verified identity. `skipped` counts trial pairs that
/// were dropped because a translation left the truncation window of a
/// RealLine / Integers group.
struct PropertyRecord {
  std::string name;
  std::string identity;
  long trials = 0;
  long skipped = 0;
  double max_residual = 0;
  double tol = 0;
  bool pass = false;
  /// Informational records (negative controls) never flip the overall
  /// verdict; their pass flag means "the control behaved as expected".
  bool informational = false;
};

struct VerificationReport {
  std::vector<PropertyRecord> records;
  bool pass() const;
  std::string to_text() const;
  std::string to_csv() const;
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  int trials = 100;
  std::vector<int> cyclic_sizes = {4, 8, 16, 17, 32, 64};
  int circle_size = 16;
  int integers_radius = 16;
  double real_half_width = 4.0;
  double real_step = 1.0 / 32;
  /// When set, replaces every per-property tolerance (0 is allowed and
  /// turns rounding noise into reported failures).
  std::optional<double> tol_override;
};

std::vector<PropertyRecord> check_submultiplicativity(const SuiteConfig& cfg);
std::vector<PropertyRecord> check_dalembert_convolution(const SuiteConfig& cfg);
std::vector<PropertyRecord> check_multiplicativity(const SuiteConfig& cfg);
std::vector<PropertyRecord> check_reflection_identity(const SuiteConfig& cfg);
std::vector<PropertyRecord> check_cosine_class(const SuiteConfig& cfg);
std::vector<PropertyRecord> check_separation_functionals(const SuiteConfig& cfg);

/// Runs every check; byte-identical output for identical configs.
VerificationReport run_suite(const SuiteConfig& cfg);

}  // namespace cosalg
