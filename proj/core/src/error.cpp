#include "dissecta/error.hpp"

namespace dissecta {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::unknown_element: return "UnknownElement";
    case Errc::duplicate_element: return "DuplicateElement";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::not_transitive: return "NotTransitive";
    case Errc::not_comparable: return "NotComparable";
    case Errc::host_mismatch: return "HostMismatch";
    case Errc::overflow: return "Overflow";
    case Errc::not_a_lattice: return "NotALattice";
    case Errc::non_unique_cover: return "NonUniqueCover";
    case Errc::not_distributive: return "NotDistributive";
    case Errc::too_large: return "TooLarge";
    case Errc::no_bottom: return "NoBottom";
    case Errc::bottom_not_in_subset: return "BottomNotInM";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::ji_not_contained: return "JiNotContained";
    case Errc::not_a_valuation: return "NotAValuation";
    case Errc::no_unique_top: return "NoUniqueTop";
    case Errc::missing_chi: return "MissingChi";
    case Errc::missing_dim: return "MissingDim";
    case Errc::dim_not_monotone: return "DimNotMonotone";
    case Errc::unknown_flat: return "UnknownFlat";
    case Errc::zero_chamber_chi: return "ZeroChamberChi";
    case Errc::missing_profile_entry: return "MissingProfileEntry";
    case Errc::profile_mismatch: return "ProfileMismatch";
    case Errc::invalid_refinement: return "InvalidRefinement";
    case Errc::chambers_not_partition: return "ChambersNotPartition";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace dissecta
