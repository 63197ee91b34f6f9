#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dissecta/lattice.hpp"
#include "dissecta/poset.hpp"
#include "dissecta/set_model.hpp"
#include "dissecta/zlinalg.hpp"

// Slow reference implementations. They only use Poset::leq / Lattice::leq and
// plain loops, so they share no code paths with the library algorithms.
namespace dtest {

using Matrix64 = std::vector<std::vector<std::int64_t>>;

/// mu(a,b) from the right-hand recursion mu(a,b) = -sum_{a<c<=b} mu(c,b).
Matrix64 naive_mobius(const dissecta::Poset& p);

/// Least upper / greatest lower bound by scanning all elements.
std::optional<dissecta::Index> brute_join(const dissecta::Poset& p, dissecta::Index a,
                                          dissecta::Index b);
std::optional<dissecta::Index> brute_meet(const dissecta::Poset& p, dissecta::Index a,
                                          dissecta::Index b);

/// Prime ideals found by enumerating every down-set (lattices up to 24 elements).
std::vector<std::vector<dissecta::Index>> prime_ideals_by_downsets(const dissecta::Lattice& l);

/// Determinant by rational Gaussian elimination.
dissecta::BigInt rational_determinant(const dissecta::IntegerMatrix& a);

/// Invariant factors d_k / d_{k-1} from the gcds of k x k minors.
std::vector<dissecta::BigInt> determinantal_invariants(const dissecta::IntegerMatrix& a);

/// Coefficients in [-bound, bound] reproducing v from the rows, if any.
std::optional<std::vector<long>> brute_membership(const dissecta::IntegerMatrix& gens,
                                                  const std::vector<dissecta::BigInt>& v,
                                                  long bound);

/// Both sides of the set-model identity computed from scratch.
struct NaiveDissection {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};
NaiveDissection naive_dissection(const dissecta::SetModel& m, const std::vector<std::int64_t>& w);

}  // namespace dtest
