#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "dissecta/incidence.hpp"
#include "dissecta/polynomial.hpp"
#include "dissecta/poset.hpp"

namespace dissecta {

/*
  A poset of flats with a unique top (the ambient space), an Euler
  characteristic on every flat and, optionally, a dimension on every flat.
*/
class Arrangement {
 public:
  /// Throws NoUniqueTop, MissingChi, MissingDim (dims given for some flats
  /// only), DimNotMonotone, DimensionMismatch (attribute vectors of the wrong
  /// length).
  static Arrangement create(PosetRef poset, std::vector<std::optional<std::int64_t>> chi,
                            std::vector<std::optional<int>> dim = {},
                            std::optional<Index> declared_top = std::nullopt,
                            std::vector<Index> hyperplanes = {});

  const PosetRef& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_->size(); }
  Index top() const noexcept { return top_; }
  std::int64_t chi(Index a) const { return chi_.at(a); }
  const std::vector<std::int64_t>& chis() const noexcept { return chi_; }

  bool has_dims() const noexcept { return !dim_.empty(); }
  /// Throws MissingDim.
  int dim(Index a) const;
  /// dim(top).
  int ambient_dim() const { return dim(top_); }
  /// rk X = dim(top) - dim X.
  int rank(Index a) const { return ambient_dim() - dim(a); }
  /// max rk X over all flats.
  int arrangement_rank() const;

  const std::vector<Index>& hyperplanes() const noexcept { return hyperplanes_; }
  const IncidenceFunction& mu() const noexcept { return mu_; }

  /// Throws UnknownFlat.
  Index flat(std::string_view id) const;

 private:
  Arrangement(PosetRef poset, Index top, std::vector<std::int64_t> chi, std::vector<int> dim,
              std::vector<Index> hyperplanes);

  PosetRef poset_;
  Index top_ = 0;
  std::vector<std::int64_t> chi_;
  std::vector<int> dim_;  ///< empty when no dimensions were given
  std::vector<Index> hyperplanes_;
  IncidenceFunction mu_;
};

struct ChamberStatistic {
  std::int64_t sum = 0;             ///< sum over X of mu(X,top) chi(X)
  std::optional<Rational> count;    ///< sum / c when c was given
  bool integral = true;             ///< false when c does not divide sum
};

/// Throws ZeroChamberChi when c == 0.
ChamberStatistic chamber_statistic(const Arrangement& ap,
                                   std::optional<std::int64_t> c = std::nullopt);

/// The flats below Y, with Y as top. Throws UnknownFlat.
Arrangement induced(const Arrangement& ap, Index y);
Arrangement induced(const Arrangement& ap, std::string_view y);

/// Chamber Euler characteristic c_i per face dimension, and optionally a flat
/// Euler characteristic l_k per flat dimension overriding the per-flat values.
struct FaceProfile {
  std::map<int, std::int64_t> chamber_chi;
  std::map<int, std::int64_t> flat_chi;

  /// c_i = (-1)^i for i in [0, n].
  static FaceProfile alternating(int n);
  /// Throws ZeroChamberChi.
  void validate() const;
};

struct FaceCounts {
  std::map<int, Rational> by_dim;  ///< only dimensions carrying a flat
  Rational total;
  bool integral = true;
};

/// f_i = (1/c_i) sum_{dim Y = i} sum_{X <= Y} mu(X,Y) chi(X).
/// Throws MissingDim, ZeroChamberChi, MissingProfileEntry.
FaceCounts face_counts(const Arrangement& ap, const FaceProfile& profile);

enum class FConvention {
  dim,      ///< sum f_k x^{n-k}
  codim,    ///< sum f_k x^k
  literal,  ///< sum_Y sum_{X <= Y} (chi(X)/c_{dim Y}) mu(X,Y) x^{n - dim X}
};

Polynomial f_polynomial(const Arrangement& ap, const FaceProfile& profile, FConvention convention);

/// M(x,y) = sum over X <= Y of mu(X,Y) x^{rk X} y^{rk A - rk Y}. Throws MissingDim.
Polynomial2 mobius_polynomial(const Arrangement& ap);

enum class FaceIdentity {
  alternating,  ///< chi = (-1)^dim on flats: f(x) = (-1)^{rk A} M(-x,-1)
  sphere,       ///< chi = 2 / 0 by dim parity: f(x) = (-1)^{n - rk A} (M(x,-1) + g M(-x,-1))
};

struct IdentityReport {
  Polynomial lhs;  ///< literal f-polynomial
  Polynomial rhs;  ///< Möbius-polynomial expression
  bool equal = false;
  int gamma = 1;   ///< +1 for even ambient dimension, -1 for odd (sphere only)
  Rational lhs_at_one;
  Rational total_faces;
  bool totals_agree = false;
};

/// Verifies the hypotheses first; throws ProfileMismatch when the Euler
/// characteristics or the profile do not follow the required pattern.
/// Without a profile, c_i = (-1)^i is assumed.
IdentityReport identity_report(const Arrangement& ap, FaceIdentity which,
                               const std::optional<FaceProfile>& profile = std::nullopt);

}  // namespace dissecta
