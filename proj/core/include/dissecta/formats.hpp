#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dissecta/dissection.hpp"
#include "dissecta/poset.hpp"
#include "dissecta/set_model.hpp"

namespace dissecta {

/// Version tag accepted in the "format" field.
inline constexpr std::string_view kFormatTag = "dissecta/1";

/// Upper bound on poset sizes: DISSECTA_MAX_ELEMENTS, default 4096.
std::size_t max_elements();

/*
  Poset / arrangement document:
    {"format": "dissecta/1", "elements": [...], "covers" | "relation": [[a, b], ...],
     "top": id, "hyperplanes": [...], "attrs": {id: {"chi": int, "dim": int}}}
  Everything except "elements" is optional.
*/
struct PosetDocument {
  PosetRef poset;
  std::vector<std::optional<std::int64_t>> chi;  ///< per element
  std::vector<std::optional<int>> dim;           ///< per element
  std::optional<Index> top;
  std::vector<Index> hyperplanes;
};

/// Throws ParseError, TooLarge, and the Poset construction errors.
PosetDocument parse_poset_document(std::string_view text);
/// Throws the Arrangement validation errors.
Arrangement to_arrangement(const PosetDocument& doc);
/// Canonical form: cover pairs, stable key order, attributes in element order.
std::string canonical_poset_document(const PosetDocument& doc);

/// {"format": ..., "ground": [...], "subspaces": [[...]], "refinement": [[...]], "chambers": [[...]]}
/// Ground points may be strings or integers (not mixed).
struct SetModelDocument {
  SetModel model;
  bool numeric_ground = false;
};

SetModelDocument parse_set_model(std::string_view text);
std::string canonical_set_model(const SetModelDocument& doc);

/// {"format": ..., "chamber_chi": {"0": 1, "1": -1}, "flat_chi": {...}}
FaceProfile parse_profile(std::string_view text);
std::string canonical_profile(const FaceProfile& profile);

/// A bare array of ids, or {"subset": [...]}.
std::vector<std::string> parse_subset(std::string_view text);

/// {"weights": {point: int}}; points not listed weigh 0.
std::vector<std::int64_t> parse_weights(std::string_view text, const SetModel& model);

enum class DocumentKind { poset, set_model, profile, subset };

DocumentKind detect_kind(std::string_view text);

/// Parses any supported document and re-serializes it canonically.
std::string canonicalize(std::string_view text);

/// Whole file contents. Throws ParseError when unreadable.
std::string read_file(const std::string& path);

}  // namespace dissecta
