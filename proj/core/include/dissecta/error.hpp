#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dissecta {

enum class Errc {
  unknown_element,
  duplicate_element,
  cycle_detected,
  not_transitive,
  not_comparable,
  host_mismatch,
  overflow,
  not_a_lattice,
  non_unique_cover,
  not_distributive,
  too_large,
  no_bottom,
  bottom_not_in_subset,
  dimension_mismatch,
  ji_not_contained,
  not_a_valuation,
  no_unique_top,
  missing_chi,
  missing_dim,
  dim_not_monotone,
  unknown_flat,
  zero_chamber_chi,
  missing_profile_entry,
  profile_mismatch,
  invalid_refinement,
  chambers_not_partition,
  parse_error,
  internal,
};

/// Stable identifier used in reports, e.g. "CycleDetected".
std::string_view errc_name(Errc code);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dissecta
