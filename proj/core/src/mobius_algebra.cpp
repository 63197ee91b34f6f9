#include "dissecta/mobius_algebra.hpp"

#include <algorithm>

#include "dissecta/checked.hpp"
#include "dissecta/error.hpp"

namespace dissecta {

GroupVector::GroupVector(PosetRef host) : host_(std::move(host)), coeffs_(host_->size(), 0) {}

GroupVector::GroupVector(PosetRef host, std::vector<std::int64_t> coeffs)
    : host_(std::move(host)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != host_->size()) {
    throw Error(Errc::dimension_mismatch, "vector length " + std::to_string(coeffs_.size()) +
                                              " does not match poset size " +
                                              std::to_string(host_->size()));
  }
}

GroupVector GroupVector::unit(PosetRef host, Index a) {
  GroupVector v(std::move(host));
  v.coeffs_.at(a) = 1;
  return v;
}

bool GroupVector::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

void GroupVector::require_same_host(const GroupVector& other) const {
  if (host_ != other.host_) throw Error(Errc::host_mismatch, "vectors live on different posets");
}

GroupVector& GroupVector::operator+=(const GroupVector& other) {
  require_same_host(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  }
  return *this;
}

GroupVector& GroupVector::operator-=(const GroupVector& other) {
  require_same_host(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  }
  return *this;
}

GroupVector& GroupVector::operator*=(std::int64_t scalar) {
  for (auto& c : coeffs_) c = checked_mul(c, scalar);
  return *this;
}

namespace {

const PosetRef& require_bottom(const PosetRef& host) {
  if (!host->bottom()) throw Error(Errc::no_bottom, "the Möbius algebra needs a bottom element");
  return host;
}

}  // namespace

MobiusAlgebra::MobiusAlgebra(PosetRef host)
    : host_(require_bottom(host)), mu_(mobius(host_)) {}

void MobiusAlgebra::require_host(const GroupVector& x) const {
  if (x.host() != host_) {
    throw Error(Errc::host_mismatch, "vector does not live on this algebra's poset");
  }
}

GroupVector MobiusAlgebra::u(Index a) const {
  GroupVector v(host_);
  for (Index c : host_->down(a)) v[c] = mu_(c, a);
  return v;
}

std::vector<std::int64_t> MobiusAlgebra::to_idempotent_basis(const GroupVector& x) const {
  require_host(x);
  return zeta_transform(*host_, x.coeffs(), Direction::up);
}

GroupVector MobiusAlgebra::from_idempotent_basis(const std::vector<std::int64_t>& w) const {
  return GroupVector(host_, mobius_invert(mu_, w, Direction::up));
}

GroupVector MobiusAlgebra::product(const GroupVector& x, const GroupVector& y) const {
  auto wx = to_idempotent_basis(x);
  const auto wy = to_idempotent_basis(y);
  for (std::size_t i = 0; i < wx.size(); ++i) wx[i] = checked_mul(wx[i], wy[i]);
  return from_idempotent_basis(wx);
}

PosetRef Restriction::induced_host(const MobiusAlgebra& source,
                                   const std::vector<Index>& subset) {
  const Index bottom = *source.host()->bottom();
  if (std::find(subset.begin(), subset.end(), bottom) == subset.end()) {
    throw Error(Errc::bottom_not_in_subset,
                "subset must contain the bottom '" + source.host()->id(bottom) + "'");
  }
  return share(source.host()->induced(subset));
}

Restriction::Restriction(const MobiusAlgebra& source, std::vector<Index> subset)
    : source_(&source),
      subset_(std::move(subset)),
      target_(induced_host(source, subset_)) {}

GroupVector Restriction::operator()(const GroupVector& x) const {
  const auto w = source_->to_idempotent_basis(x);
  std::vector<std::int64_t> kept(subset_.size());
  for (std::size_t i = 0; i < subset_.size(); ++i) kept[i] = w[subset_[i]];
  return target_.from_idempotent_basis(kept);
}

GroupVector Restriction::embed(const GroupVector& y) const {
  if (y.host() != target_.host()) {
    throw Error(Errc::host_mismatch, "vector does not live on the restricted poset");
  }
  GroupVector out(source_->host());
  for (std::size_t i = 0; i < subset_.size(); ++i) out[subset_[i]] = y[static_cast<Index>(i)];
  return out;
}

GroupVector u_vector(const PosetRef& p, Index a) { return MobiusAlgebra(p).u(a); }

GroupVector mob_product(const PosetRef& p, const GroupVector& x, const GroupVector& y) {
  return MobiusAlgebra(p).product(x, y);
}

GroupVector restrict_j(const PosetRef& p, std::span<const Index> subset, const GroupVector& x) {
  MobiusAlgebra source(p);
  Restriction j(source, std::vector<Index>(subset.begin(), subset.end()));
  return j(x);
}

}  // namespace dissecta
