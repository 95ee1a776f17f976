#pragma once

#include <cstddef>
#include <cstdint>

namespace mvdual {

/// Limits for the exhaustive oracles and sampling checks. Every bound is a
/// configuration value so callers (and the CLI's --bound/--samples/--seed
/// flags) can raise or lower them.
struct OracleConfig {
  /// Largest |A| that enumerate_elements will materialize.
  std::uint64_t element_bound = 1'000'000;
  /// Largest |A| for the 2^|A| subset scan in brute_force_ideals.
  std::uint64_t ideal_bound = 16;
  /// Largest |B|^|A| searched by brute_force_homs.
  std::uint64_t hom_bound = 1'000'000;
  /// Elements drawn per check when an L_inf factor rules out enumeration.
  std::size_t samples = 100;
  /// Largest denominator used when sampling L_inf coordinates.
  std::int64_t sample_denominator = 6;
  std::uint64_t seed = 20240601;
};

}  // namespace mvdual
