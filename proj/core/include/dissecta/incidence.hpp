#pragma once

#include <cstdint>
#include <vector>

#include "dissecta/poset.hpp"

namespace dissecta {

/// An element of Z^d; d = 1 for scalar-valued functions.
using Vector = std::vector<std::int64_t>;

/// One Z^d value per poset element, indexed by element.
using ValueTable = std::vector<Vector>;

/*
  Integer-valued function on the comparable pairs (a, b), a <= b, of a host
  poset. Off-relation values are identically zero and cannot be set.

  Values are stored sparsely: row a is aligned with host->up(a).
*/
class IncidenceFunction {
 public:
  explicit IncidenceFunction(PosetRef host);

  static IncidenceFunction delta(PosetRef host);
  static IncidenceFunction zeta(PosetRef host);

  const PosetRef& host() const noexcept { return host_; }

  /// Zero when a is not <= b.
  std::int64_t operator()(Index a, Index b) const;

  /// Throws NotComparable when a is not <= b.
  void set(Index a, Index b, std::int64_t value);

  /// Values along host->up(a).
  const std::vector<std::int64_t>& row(Index a) const { return values_.at(a); }
  std::vector<std::int64_t>& row(Index a) { return values_.at(a); }

  friend bool operator==(const IncidenceFunction& x, const IncidenceFunction& y) {
    return x.host_ == y.host_ && x.values_ == y.values_;
  }

 private:
  std::size_t slot(Index a, Index b) const;

  PosetRef host_;
  std::vector<std::vector<std::int64_t>> values_;
};

/// h(a,b) = sum over c in [a,b] of f(a,c) g(c,b). Throws HostMismatch.
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);

/// Möbius function of the host: mu(a,a) = 1 and mu(a,b) = -sum_{a<=c<b} mu(a,c).
/// Each row is built in one pass along the linear extension.
IncidenceFunction mobius(const PosetRef& host);

/// mu(x, target) for every x (zero off the down-set of target).
std::vector<std::int64_t> mobius_to(const Poset& p, Index target);

enum class Direction {
  down,  ///< g(x) = sum_{c <= x} f(c)
  up,    ///< g(x) = sum_{c >= x} f(c)
};

/// Summation (zeta) transform of a vector-valued function.
ValueTable zeta_transform(const Poset& p, const ValueTable& f, Direction dir);

/// Inverse of zeta_transform:
///   down: f(x) = sum_{c <= x} g(c) mu(c,x)
///   up:   f(x) = sum_{c >= x} mu(x,c) g(c)
ValueTable mobius_invert(const IncidenceFunction& mu, const ValueTable& g, Direction dir);
ValueTable mobius_invert(const PosetRef& host, const ValueTable& g, Direction dir);

/// Scalar conveniences: one integer per element.
std::vector<std::int64_t> zeta_transform(const Poset& p, const std::vector<std::int64_t>& f,
                                         Direction dir);
std::vector<std::int64_t> mobius_invert(const IncidenceFunction& mu,
                                        const std::vector<std::int64_t>& g, Direction dir);

}  // namespace dissecta
