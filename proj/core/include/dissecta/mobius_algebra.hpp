#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dissecta/incidence.hpp"
#include "dissecta/poset.hpp"

namespace dissecta {

/// An element of the free module Z L: one integer coefficient per element of
/// the host poset. Arithmetic is componentwise and overflow-checked.
class GroupVector {
 public:
  explicit GroupVector(PosetRef host);
  GroupVector(PosetRef host, std::vector<std::int64_t> coeffs);

  static GroupVector unit(PosetRef host, Index a);

  const PosetRef& host() const noexcept { return host_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::int64_t operator[](Index a) const { return coeffs_[a]; }
  std::int64_t& operator[](Index a) { return coeffs_[a]; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;

  GroupVector& operator+=(const GroupVector& other);
  GroupVector& operator-=(const GroupVector& other);
  GroupVector& operator*=(std::int64_t scalar);

  friend GroupVector operator+(GroupVector x, const GroupVector& y) { return x += y; }
  friend GroupVector operator-(GroupVector x, const GroupVector& y) { return x -= y; }
  friend GroupVector operator*(std::int64_t s, GroupVector x) { return x *= s; }

  /// Equal hosts (by identity) and equal coefficients.
  friend bool operator==(const GroupVector& x, const GroupVector& y) {
    return x.host_ == y.host_ && x.coeffs_ == y.coeffs_;
  }

 private:
  void require_same_host(const GroupVector& other) const;

  PosetRef host_;
  std::vector<std::int64_t> coeffs_;
};

/*
  The Möbius algebra of a finite poset with a bottom element.

  Products are evaluated in the basis of orthogonal idempotents
  u(a) = sum_{c <= a} mu(c,a) c: a vector is transformed once into that basis
  (coefficient of u(c) is the sum of the coordinates at elements >= c),
  multiplied pointwise, and transformed back.
*/
class MobiusAlgebra {
 public:
  /// Throws NoBottom.
  explicit MobiusAlgebra(PosetRef host);

  const PosetRef& host() const noexcept { return host_; }
  const IncidenceFunction& mu() const noexcept { return mu_; }

  GroupVector element(Index a) const { return GroupVector::unit(host_, a); }

  /// u(a) = sum_{c <= a} mu(c,a) c.
  GroupVector u(Index a) const;

  /// Bilinear extension of a·b = sum_{c <= a, c <= b} u(c). Throws HostMismatch.
  GroupVector product(const GroupVector& x, const GroupVector& y) const;

  /// Coordinates of x in the idempotent basis {u(c)}.
  std::vector<std::int64_t> to_idempotent_basis(const GroupVector& x) const;
  GroupVector from_idempotent_basis(const std::vector<std::int64_t>& w) const;

 private:
  void require_host(const GroupVector& x) const;

  PosetRef host_;
  IncidenceFunction mu_;
};

/*
  The restriction homomorphism j: Möb(L) -> Möb(M) for a subset M containing the
  bottom, defined on the idempotent basis by u_L(a) -> u_M(a) for a in M and
  u_L(a) -> 0 otherwise.
*/
class Restriction {
 public:
  /// Throws BottomNotInM.
  Restriction(const MobiusAlgebra& source, std::vector<Index> subset);

  const MobiusAlgebra& target() const noexcept { return target_; }
  /// subset()[i] is the source index of target element i.
  const std::vector<Index>& subset() const noexcept { return subset_; }

  GroupVector operator()(const GroupVector& x) const;

  /// Embeds a vector on M back into Z L by inclusion of coordinates.
  GroupVector embed(const GroupVector& y) const;

 private:
  static PosetRef induced_host(const MobiusAlgebra& source, const std::vector<Index>& subset);

  const MobiusAlgebra* source_;
  std::vector<Index> subset_;
  MobiusAlgebra target_;
};

/// One-shot forms of the operations above.
GroupVector u_vector(const PosetRef& p, Index a);
GroupVector mob_product(const PosetRef& p, const GroupVector& x, const GroupVector& y);
GroupVector restrict_j(const PosetRef& p, std::span<const Index> subset, const GroupVector& x);

}  // namespace dissecta
