#include "dissecta/dissection.hpp"

#include <algorithm>

#include "dissecta/checked.hpp"
#include "dissecta/error.hpp"

namespace dissecta {

Arrangement::Arrangement(PosetRef poset, Index top, std::vector<std::int64_t> chi,
                         std::vector<int> dim, std::vector<Index> hyperplanes)
    : poset_(std::move(poset)),
      top_(top),
      chi_(std::move(chi)),
      dim_(std::move(dim)),
      hyperplanes_(std::move(hyperplanes)),
      mu_(mobius(poset_)) {}

Arrangement Arrangement::create(PosetRef poset, std::vector<std::optional<std::int64_t>> chi,
                                std::vector<std::optional<int>> dim,
                                std::optional<Index> declared_top,
                                std::vector<Index> hyperplanes) {
  const Poset& p = *poset;
  if (!p.top()) {
    const auto maximal = p.extremes().maximal;
    std::string names;
    for (Index m : maximal) names += (names.empty() ? "'" : ", '") + p.id(m) + "'";
    throw Error(Errc::no_unique_top, "flats have no unique top; maximal flats: " + names);
  }
  if (declared_top && *declared_top != *p.top()) {
    throw Error(Errc::no_unique_top, "declared top '" + p.id(*declared_top) +
                                         "' is not the maximum '" + p.id(*p.top()) + "'");
  }
  if (chi.size() != p.size()) {
    throw Error(Errc::dimension_mismatch, "chi table has " + std::to_string(chi.size()) +
                                              " entries for " + std::to_string(p.size()) + " flats");
  }
  std::vector<std::int64_t> chis(p.size());
  for (Index a = 0; a < p.size(); ++a) {
    if (!chi[a]) throw Error(Errc::missing_chi, "flat '" + p.id(a) + "' has no chi");
    chis[a] = *chi[a];
  }

  std::vector<int> dims;
  const bool any_dim = std::any_of(dim.begin(), dim.end(), [](const auto& d) { return d.has_value(); });
  if (any_dim) {
    if (dim.size() != p.size()) {
      throw Error(Errc::dimension_mismatch, "dim table has " + std::to_string(dim.size()) +
                                                " entries for " + std::to_string(p.size()) +
                                                " flats");
    }
    dims.resize(p.size());
    for (Index a = 0; a < p.size(); ++a) {
      if (!dim[a]) throw Error(Errc::missing_dim, "flat '" + p.id(a) + "' has no dim");
      if (*dim[a] < 0) throw Error(Errc::dim_not_monotone, "flat '" + p.id(a) + "' has negative dim");
      dims[a] = *dim[a];
    }
    for (Index a = 0; a < p.size(); ++a) {
      for (Index b : p.up(a)) {
        if (dims[a] > dims[b]) {
          throw Error(Errc::dim_not_monotone, "'" + p.id(a) + "' <= '" + p.id(b) +
                                                  "' but dim " + std::to_string(dims[a]) + " > " +
                                                  std::to_string(dims[b]));
        }
      }
    }
  }
  for (Index h : hyperplanes) {
    if (h >= p.size()) throw Error(Errc::unknown_flat, "hyperplane index out of range");
  }
  return Arrangement(std::move(poset), *p.top(), std::move(chis), std::move(dims),
                     std::move(hyperplanes));
}

int Arrangement::dim(Index a) const {
  if (dim_.empty()) throw Error(Errc::missing_dim, "the arrangement carries no dimensions");
  return dim_.at(a);
}

int Arrangement::arrangement_rank() const {
  int best = 0;
  for (Index a = 0; a < size(); ++a) best = std::max(best, rank(a));
  return best;
}

Index Arrangement::flat(std::string_view id) const {
  auto a = poset_->find(id);
  if (!a) throw Error(Errc::unknown_flat, "no flat named '" + std::string(id) + "'");
  return *a;
}

ChamberStatistic chamber_statistic(const Arrangement& ap, std::optional<std::int64_t> c) {
  if (c && *c == 0) throw Error(Errc::zero_chamber_chi, "chamber Euler characteristic must be nonzero");
  ChamberStatistic out;
  const Index top = ap.top();
  for (Index x : ap.poset()->down(top)) {
    out.sum = checked_add(out.sum, checked_mul(ap.mu()(x, top), ap.chi(x)));
  }
  if (c) {
    Rational q(out.sum, *c);
    q.canonicalize();
    out.integral = q.get_den() == 1;
    out.count = q;
  }
  return out;
}

Arrangement induced(const Arrangement& ap, Index y) {
  if (y >= ap.size()) throw Error(Errc::unknown_flat, "flat index out of range");
  const auto& below = ap.poset()->down(y);
  std::vector<std::optional<std::int64_t>> chi;
  std::vector<std::optional<int>> dim;
  for (Index x : below) {
    chi.emplace_back(ap.chi(x));
    if (ap.has_dims()) dim.emplace_back(ap.dim(x));
  }
  std::vector<Index> hyperplanes;
  for (Index h : ap.hyperplanes()) {
    auto it = std::find(below.begin(), below.end(), h);
    if (it != below.end() && h != y) hyperplanes.push_back(static_cast<Index>(it - below.begin()));
  }
  return Arrangement::create(share(ap.poset()->induced(below)), std::move(chi), std::move(dim),
                             std::nullopt, std::move(hyperplanes));
}

Arrangement induced(const Arrangement& ap, std::string_view y) { return induced(ap, ap.flat(y)); }

FaceProfile FaceProfile::alternating(int n) {
  FaceProfile p;
  for (int i = 0; i <= n; ++i) p.chamber_chi[i] = i % 2 == 0 ? 1 : -1;
  return p;
}

void FaceProfile::validate() const {
  for (const auto& [d, c] : chamber_chi) {
    if (c == 0) {
      throw Error(Errc::zero_chamber_chi,
                  "chamber Euler characteristic for dimension " + std::to_string(d) + " is zero");
    }
  }
}

namespace {

std::int64_t chamber_chi_for(const FaceProfile& profile, int d) {
  auto it = profile.chamber_chi.find(d);
  if (it == profile.chamber_chi.end()) {
    throw Error(Errc::missing_profile_entry,
                "profile has no chamber Euler characteristic for dimension " + std::to_string(d));
  }
  return it->second;
}

// chi(X), or l_{dim X} when the profile fixes flat characteristics by dimension.
std::int64_t flat_chi_for(const Arrangement& ap, const FaceProfile& profile, Index x) {
  auto it = profile.flat_chi.find(ap.dim(x));
  return it == profile.flat_chi.end() ? ap.chi(x) : it->second;
}

void require_dims(const Arrangement& ap) {
  if (!ap.has_dims()) throw Error(Errc::missing_dim, "face counting needs a dim on every flat");
}

}  // namespace

FaceCounts face_counts(const Arrangement& ap, const FaceProfile& profile) {
  require_dims(ap);
  profile.validate();
  FaceCounts out;
  std::map<int, std::int64_t> sums;
  for (Index y = 0; y < ap.size(); ++y) {
    const int i = ap.dim(y);
    chamber_chi_for(profile, i);
    Arrangement local = induced(ap, y);
    if (!profile.flat_chi.empty()) {
      std::vector<std::optional<std::int64_t>> chi;
      std::vector<std::optional<int>> dim;
      for (Index x : ap.poset()->down(y)) {
        chi.emplace_back(flat_chi_for(ap, profile, x));
        dim.emplace_back(ap.dim(x));
      }
      local = Arrangement::create(local.poset(), std::move(chi), std::move(dim));
    }
    sums[i] = checked_add(sums[i], chamber_statistic(local).sum);
  }
  out.total = 0;
  for (const auto& [i, s] : sums) {
    Rational f(s, chamber_chi_for(profile, i));
    f.canonicalize();
    if (f.get_den() != 1) out.integral = false;
    out.total += f;
    out.by_dim.emplace(i, f);
  }
  return out;
}

Polynomial f_polynomial(const Arrangement& ap, const FaceProfile& profile, FConvention convention) {
  require_dims(ap);
  const int n = ap.ambient_dim();
  Polynomial out;
  if (convention == FConvention::literal) {
    profile.validate();
    for (Index y = 0; y < ap.size(); ++y) {
      const std::int64_t c = chamber_chi_for(profile, ap.dim(y));
      for (Index x : ap.poset()->down(y)) {
        const std::int64_t m = ap.mu()(x, y);
        if (m == 0) continue;
        Rational coeff(checked_mul(flat_chi_for(ap, profile, x), m), c);
        coeff.canonicalize();
        out.add_term(coeff, static_cast<unsigned>(n - ap.dim(x)));
      }
    }
    return out;
  }
  const FaceCounts counts = face_counts(ap, profile);
  for (const auto& [k, f] : counts.by_dim) {
    const int e = convention == FConvention::dim ? n - k : k;
    out.add_term(f, static_cast<unsigned>(e));
  }
  return out;
}

Polynomial2 mobius_polynomial(const Arrangement& ap) {
  require_dims(ap);
  const int rk = ap.arrangement_rank();
  Polynomial2 out;
  for (Index y = 0; y < ap.size(); ++y) {
    for (Index x : ap.poset()->down(y)) {
      const std::int64_t m = ap.mu()(x, y);
      if (m == 0) continue;
      out.add_term(Rational(m), static_cast<unsigned>(ap.rank(x)),
                   static_cast<unsigned>(rk - ap.rank(y)));
    }
  }
  return out;
}

namespace {

std::int64_t expected_flat_chi(FaceIdentity which, int d) {
  if (which == FaceIdentity::alternating) return d % 2 == 0 ? 1 : -1;
  return d % 2 == 0 ? 2 : 0;
}

const char* identity_name(FaceIdentity which) {
  return which == FaceIdentity::alternating ? "alternating" : "sphere";
}

}  // namespace

IdentityReport identity_report(const Arrangement& ap, FaceIdentity which,
                               const std::optional<FaceProfile>& profile) {
  require_dims(ap);
  const int n = ap.ambient_dim();
  const FaceProfile prof = profile ? *profile : FaceProfile::alternating(n);

  for (Index x = 0; x < ap.size(); ++x) {
    const std::int64_t got = flat_chi_for(ap, prof, x);
    const std::int64_t want = expected_flat_chi(which, ap.dim(x));
    if (got != want) {
      throw Error(Errc::profile_mismatch,
                  std::string("the ") + identity_name(which) + " identity needs chi('" +
                      ap.poset()->id(x) + "') = " + std::to_string(want) + ", found " +
                      std::to_string(got));
    }
  }
  for (Index y = 0; y < ap.size(); ++y) {
    const int d = ap.dim(y);
    const std::int64_t c = chamber_chi_for(prof, d);
    if (c != (d % 2 == 0 ? 1 : -1)) {
      throw Error(Errc::profile_mismatch, "chamber Euler characteristic for dimension " +
                                              std::to_string(d) + " must be (-1)^" +
                                              std::to_string(d) + ", found " + std::to_string(c));
    }
  }

  IdentityReport out;
  out.lhs = f_polynomial(ap, prof, FConvention::literal);
  const Polynomial2 m = mobius_polynomial(ap);
  const int rk = ap.arrangement_rank();
  if (which == FaceIdentity::alternating) {
    out.rhs = m.specialize(-1, -1);
    if (rk % 2 != 0) out.rhs *= -1;
  } else {
    out.gamma = n % 2 == 0 ? 1 : -1;
    Polynomial rhs = m.specialize(1, -1);
    Polynomial mirrored = m.specialize(-1, -1);
    mirrored *= out.gamma;
    rhs += mirrored;
    if ((n - rk) % 2 != 0) rhs *= -1;
    out.rhs = rhs;
  }
  out.equal = out.lhs == out.rhs;
  out.lhs_at_one = out.lhs.evaluate(1);
  out.total_faces = face_counts(ap, prof).total;
  out.totals_agree = out.lhs_at_one == out.total_faces;
  return out;
}

}  // namespace dissecta
