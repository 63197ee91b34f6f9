#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "dissecta/poset.hpp"

namespace dissecta {

struct StructureFlags {
  bool distributive = false;
  bool modular = false;
  bool cancellation = false;  ///< c∨a = c∨b and c∧a = c∧b imply a = b
};

/*
  A finite lattice: a poset together with total join and meet tables.

  Construction fails with NotALattice, naming a pair that lacks a unique least
  upper or greatest lower bound. The structure flags are computed on first
  request and shared between copies.
*/
class Lattice {
 public:
  static Lattice from_poset(PosetRef p);

  const PosetRef& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return n_; }

  Index join(Index a, Index b) const { return join_[a * n_ + b]; }
  Index meet(Index a, Index b) const { return meet_[a * n_ + b]; }

  /// Join of a set; the empty join is the bottom.
  Index join_all(std::span<const Index> xs) const;
  /// Meet of a set; the empty meet is the top.
  Index meet_all(std::span<const Index> xs) const;

  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }

  bool leq(Index a, Index b) const noexcept { return poset_->leq(a, b); }

  /// Cached result of structure_check().
  StructureFlags structure() const;

 private:
  struct FlagCache {
    std::once_flag once;
    StructureFlags flags;
  };

  Lattice() = default;

  PosetRef poset_;
  std::size_t n_ = 0;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  Index bottom_ = 0;
  Index top_ = 0;
  std::shared_ptr<FlagCache> cache_;
};

struct JoinIrreducibles {
  /// Sorted along the linear extension; always contains the bottom.
  std::vector<Index> elements;
  /// a -> a*, the unique element covered by a, for every non-bottom a.
  std::map<Index, Index> lower_cover;

  bool contains(Index a) const;
};

/// Join-irreducible elements, counting the bottom as join-irreducible.
/// Verifies that every x is the join of the join-irreducibles below it.
JoinIrreducibles join_irreducibles(const Lattice& l);

/// Exhaustive O(n^3) checks of the distributive law, the two modular identities
/// and the cancellation law. Throws Internal if distributivity and
/// cancellation disagree.
StructureFlags structure_check(const Lattice& l);

/// Some triple (a, b, c) with a∧(b∨c) != (a∧b)∨(a∧c), if any.
std::optional<std::array<Index, 3>> distributivity_witness(const Lattice& l);

/// Some triple (a, b, c), a != b, with c∨a = c∨b and c∧a = c∧b, if any.
std::optional<std::array<Index, 3>> cancellation_witness(const Lattice& l);

/// Checks that x -> a∨x and y -> y∧b are mutually inverse between
/// [a∧b, b] and [a, a∨b].
bool interval_maps_inverse(const Lattice& l, Index a, Index b);

/// {b | b <= a} and {b | b >= a}, sorted along the linear extension.
std::vector<Index> principal_ideal(const Lattice& l, Index a);
std::vector<Index> principal_filter(const Lattice& l, Index a);

bool is_prime_ideal(const Lattice& l, std::span<const Index> subset);
bool is_prime_filter(const Lattice& l, std::span<const Index> subset);

/// All prime ideals, each sorted along the linear extension. Every ideal of a
/// finite lattice is principal, so the candidates are the id(a), a != top.
std::vector<std::vector<Index>> prime_ideals(const Lattice& l);

/// A prime ideal containing exactly one of a and b, preferring one that
/// contains a. Throws NotDistributive.
std::vector<Index> separating_prime_ideal(const Lattice& l, Index a, Index b);

}  // namespace dissecta
