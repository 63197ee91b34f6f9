#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dissecta/incidence.hpp"
#include "dissecta/lattice.hpp"
#include "dissecta/mobius_algebra.hpp"
#include "dissecta/zlinalg.hpp"

namespace dissecta {

/*
  The submodule N(L) of Z L spanned by a∧b + a∨b - a - b.

  Only incomparable pairs contribute (the relation vanishes otherwise). A
  Hermite basis of the span is built once at construction and answers every
  membership query afterwards.
*/
class NLPresentation {
 public:
  explicit NLPresentation(Lattice l);

  const Lattice& lattice() const noexcept { return lattice_; }
  const PosetRef& host() const noexcept { return lattice_.poset(); }

  /// Incomparable unordered pairs (a, b), a < b by index; pairs()[i] gives row i.
  const std::vector<std::pair<Index, Index>>& pairs() const noexcept { return pairs_; }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  IntegerMatrix generators() const;

  const HermiteBasis& basis() const noexcept { return basis_; }

  /// Throws HostMismatch.
  bool contains(const GroupVector& v) const;
  /// Throws DimensionMismatch.
  bool contains(std::span<const std::int64_t> v) const;

 private:
  Lattice lattice_;
  std::vector<std::pair<Index, Index>> pairs_;
  std::vector<Vector> rows_;
  HermiteBasis basis_;
};

/// Generator vector a∧b + a∨b - a - b.
Vector relation_vector(const Lattice& l, Index a, Index b);

struct ValInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
  std::size_t ji_count = 0;
  bool distributive = false;
  /// distributive implies (free_rank == ji_count and no torsion).
  bool match = false;
};

ValInvariants val_invariants(const NLPresentation& nl);
ValInvariants val_invariants(const Lattice& l);

/// Membership of v in N(L). Throws HostMismatch.
bool in_NL(const NLPresentation& nl, const GroupVector& v);

struct ZaslavskyEntry {
  Index element = 0;
  GroupVector u;  ///< u_M(element), embedded in Z L
  bool member = false;
};

/*
  For each a in M \ ji(L), computes u_M(a) = sum_{b in M, b <= a} mu_M(b,a) b
  over the order restricted to M and tests it for membership in N(L).
  Entries come in the order of M. Throws NotDistributive, JiNotContained.
*/
std::vector<ZaslavskyEntry> zaslavsky_check(const NLPresentation& nl, std::span<const Index> m);
std::vector<ZaslavskyEntry> zaslavsky_check(const Lattice& l, std::span<const Index> m);

/// One Z^d value per lattice element.
using ValuationTable = ValueTable;

/// First pair (a, b) breaking f(a∧b) + f(a∨b) = f(a) + f(b). Throws DimensionMismatch.
std::optional<std::pair<Index, Index>> valuation_violation(const Lattice& l,
                                                           const ValuationTable& f);
bool is_valuation(const Lattice& l, const ValuationTable& f);

/// sum over b in M with b <= a of mu_M(b,a) f(b). Throws NotAValuation,
/// JiNotContained, or UnknownElement when a is not in M.
Vector valuation_defect(const Lattice& l, std::span<const Index> m, const ValuationTable& f,
                        Index a);

/// Valuations used by the property suites.
ValuationTable constant_valuation(const Lattice& l, Vector value);
ValuationTable indicator_valuation(const Lattice& l, std::span<const Index> subset);

/*
  Coordinates of x modulo N(L) in the join-irreducible basis: the coefficient
  of b in ji(L) is the sum of mu_ji(b,a) over a in ji(L) with b <= a <= x.
  Returned as a vector on L supported on ji(L). Throws NotDistributive.
*/
GroupVector val_coords(const Lattice& l, Index x);

/// e_a = a - a* for non-bottom a in ji(L), e_bottom = bottom. Throws
/// NotDistributive, UnknownElement when a is not join-irreducible.
GroupVector e_vector(const Lattice& l, Index a);

/// Bilinear extensions of meet and join to Z L. Throws HostMismatch.
GroupVector meet_product(const Lattice& l, const GroupVector& x, const GroupVector& y);
GroupVector join_product(const Lattice& l, const GroupVector& x, const GroupVector& y);

/// ⋁a_i - sum over nonempty I of (-1)^{|I|-1} ⋀_{i in I} a_i.
GroupVector inclusion_exclusion_residual(const Lattice& l, std::span<const Index> elements);

/// Some pair a != b with a - b in N(L); none exists when L is distributive.
std::optional<std::pair<Index, Index>> injectivity_witness(const NLPresentation& nl);

}  // namespace dissecta
