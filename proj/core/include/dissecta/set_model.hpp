#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dissecta {

/// Subset of the ground set, bit i standing for ground[i].
using SetMask = std::uint64_t;

/*
  A finite model of an arrangement: subspaces, a meet-refinement (which must
  contain the whole ground set T) and chambers, all as subsets of a ground set
  of at most 64 points.
*/
struct SetModel {
  std::vector<std::string> ground;
  std::vector<SetMask> subspaces;
  std::vector<SetMask> refinement;
  std::vector<SetMask> chambers;

  SetMask full() const noexcept;
  SetMask union_of_subspaces() const noexcept;
};

/// Throws TooLarge, InvalidRefinement, ChambersNotPartition.
void validate(const SetModel& m);

struct SetOracleReport {
  std::int64_t lhs = 0;  ///< sum of f over the chambers
  std::int64_t rhs = 0;  ///< sum over X in L and the empty set of mu(X,T) f(X)
  bool equal = false;
  /// Present when the full lattice D(L) was built (ground of at most 12 points).
  std::optional<std::size_t> lattice_size;
  /// Join-irreducibles of D(L) all lie in {empty} + L + chambers.
  std::optional<bool> ji_contained;
};

/*
  Evaluates both sides of the dissection identity for the valuation
  f(X) = sum of weights over the points of X (cardinality when no weights are
  given; f of the empty set is 0). Throws the errors of validate() and
  DimensionMismatch for a weight vector of the wrong length.
*/
SetOracleReport set_oracle_check(const SetModel& m,
                                 const std::optional<std::vector<std::int64_t>>& weights = std::nullopt);

}  // namespace dissecta
