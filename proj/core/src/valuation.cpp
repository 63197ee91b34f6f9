#include "dissecta/valuation.hpp"

#include <algorithm>
#include <bit>

#include "dissecta/checked.hpp"
#include "dissecta/error.hpp"

namespace dissecta {

Vector relation_vector(const Lattice& l, Index a, Index b) {
  Vector v(l.size(), 0);
  v[l.meet(a, b)] += 1;
  v[l.join(a, b)] += 1;
  v[a] -= 1;
  v[b] -= 1;
  return v;
}

NLPresentation::NLPresentation(Lattice l) : lattice_(std::move(l)), basis_(lattice_.size()) {
  const Index n = static_cast<Index>(lattice_.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (lattice_.poset()->comparable(a, b)) continue;
      pairs_.emplace_back(a, b);
      rows_.push_back(relation_vector(lattice_, a, b));
      basis_.insert(std::span<const std::int64_t>(rows_.back()));
    }
  }
}

IntegerMatrix NLPresentation::generators() const {
  return IntegerMatrix::from_rows(rows_, lattice_.size());
}

bool NLPresentation::contains(const GroupVector& v) const {
  if (v.host() != host()) throw Error(Errc::host_mismatch, "vector does not live on this lattice");
  return basis_.contains(std::span<const std::int64_t>(v.coeffs()));
}

bool NLPresentation::contains(std::span<const std::int64_t> v) const { return basis_.contains(v); }

ValInvariants val_invariants(const NLPresentation& nl) {
  const Lattice& l = nl.lattice();
  ValInvariants out;
  const auto factors = smith_invariants(nl.basis().matrix());
  out.free_rank = l.size() - factors.size();
  for (const auto& d : factors) {
    if (d > 1) out.torsion.push_back(d);
  }
  out.distributive = l.structure().distributive;
  if (out.distributive) {
    out.ji_count = join_irreducibles(l).elements.size();
    out.match = out.free_rank == out.ji_count && out.torsion.empty();
  } else {
    // ji(L) may still be computable; a non-unique cover leaves the count at 0.
    try {
      out.ji_count = join_irreducibles(l).elements.size();
    } catch (const Error& e) {
      if (e.code() != Errc::non_unique_cover) throw;
    }
    out.match = true;
  }
  return out;
}

ValInvariants val_invariants(const Lattice& l) { return val_invariants(NLPresentation(l)); }

bool in_NL(const NLPresentation& nl, const GroupVector& v) { return nl.contains(v); }

namespace {

void require_distributive(const Lattice& l, const char* what) {
  if (!l.structure().distributive) {
    throw Error(Errc::not_distributive, std::string(what) + " requires a distributive lattice");
  }
}

// Validates M (indices in range, no repeats) and returns its membership mask.
std::vector<bool> subset_mask(const Lattice& l, std::span<const Index> m) {
  std::vector<bool> in(l.size(), false);
  for (Index a : m) {
    if (a >= l.size()) throw Error(Errc::unknown_element, "index " + std::to_string(a) + " out of range");
    if (in[a]) {
      throw Error(Errc::duplicate_element, "'" + l.poset()->id(a) + "' listed twice in M");
    }
    in[a] = true;
  }
  return in;
}

void require_ji_contained(const Lattice& l, const std::vector<bool>& in_m) {
  for (Index j : join_irreducibles(l).elements) {
    if (!in_m[j]) {
      throw Error(Errc::ji_not_contained,
                  "join-irreducible '" + l.poset()->id(j) + "' is missing from M");
    }
  }
}

// mu_M(b, a) for every b in M, laid out along M.
std::vector<std::int64_t> mobius_in_subset(const Poset& sub, std::span<const Index> m, Index a) {
  const auto it = std::find(m.begin(), m.end(), a);
  return mobius_to(sub, static_cast<Index>(it - m.begin()));
}

}  // namespace

std::vector<ZaslavskyEntry> zaslavsky_check(const NLPresentation& nl, std::span<const Index> m) {
  const Lattice& l = nl.lattice();
  require_distributive(l, "zaslavsky_check");
  const auto in_m = subset_mask(l, m);
  require_ji_contained(l, in_m);
  const auto ji = join_irreducibles(l);

  const Poset sub = l.poset()->induced(m);
  std::vector<ZaslavskyEntry> out;
  for (Index a : m) {
    if (ji.contains(a)) continue;
    const auto mu = mobius_in_subset(sub, m, a);
    GroupVector u(l.poset());
    for (std::size_t i = 0; i < m.size(); ++i) u[m[i]] = mu[i];
    const bool member = nl.contains(u);
    out.push_back({a, std::move(u), member});
  }
  return out;
}

std::vector<ZaslavskyEntry> zaslavsky_check(const Lattice& l, std::span<const Index> m) {
  require_distributive(l, "zaslavsky_check");
  return zaslavsky_check(NLPresentation(l), m);
}

namespace {

void require_table_shape(const Lattice& l, const ValuationTable& f) {
  if (f.size() != l.size()) {
    throw Error(Errc::dimension_mismatch, "valuation table has " + std::to_string(f.size()) +
                                              " entries for " + std::to_string(l.size()) +
                                              " elements");
  }
  for (const auto& v : f) {
    if (v.size() != f.front().size()) {
      throw Error(Errc::dimension_mismatch, "valuation values have different lengths");
    }
  }
}

}  // namespace

std::optional<std::pair<Index, Index>> valuation_violation(const Lattice& l,
                                                           const ValuationTable& f) {
  require_table_shape(l, f);
  const Index n = static_cast<Index>(l.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const auto& fm = f[l.meet(a, b)];
      const auto& fj = f[l.join(a, b)];
      for (std::size_t k = 0; k < fm.size(); ++k) {
        if (checked_add(fm[k], fj[k]) != checked_add(f[a][k], f[b][k])) {
          return std::make_pair(a, b);
        }
      }
    }
  }
  return std::nullopt;
}

bool is_valuation(const Lattice& l, const ValuationTable& f) {
  return !valuation_violation(l, f).has_value();
}

Vector valuation_defect(const Lattice& l, std::span<const Index> m, const ValuationTable& f,
                        Index a) {
  if (auto bad = valuation_violation(l, f)) {
    throw Error(Errc::not_a_valuation, "f(a∧b) + f(a∨b) != f(a) + f(b) at ('" +
                                           l.poset()->id(bad->first) + "', '" +
                                           l.poset()->id(bad->second) + "')");
  }
  const auto in_m = subset_mask(l, m);
  require_ji_contained(l, in_m);
  if (a >= l.size() || !in_m[a]) {
    throw Error(Errc::unknown_element, "element is not in M");
  }
  const Poset sub = l.poset()->induced(m);
  const auto mu = mobius_in_subset(sub, m, a);
  Vector out(f.empty() ? 0 : f.front().size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (mu[i] == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = checked_add(out[k], checked_mul(mu[i], f[m[i]][k]));
    }
  }
  return out;
}

ValuationTable constant_valuation(const Lattice& l, Vector value) {
  return ValuationTable(l.size(), std::move(value));
}

ValuationTable indicator_valuation(const Lattice& l, std::span<const Index> subset) {
  ValuationTable f(l.size(), Vector{0});
  for (Index a : subset) f.at(a)[0] = 1;
  return f;
}

GroupVector val_coords(const Lattice& l, Index x) {
  require_distributive(l, "val_coords");
  const auto ji = join_irreducibles(l);
  const Poset sub = l.poset()->induced(ji.elements);
  const IncidenceFunction mu = mobius(share(sub));
  const auto& js = ji.elements;
  GroupVector out(l.poset());
  for (std::size_t bi = 0; bi < js.size(); ++bi) {
    if (!l.leq(js[bi], x)) continue;
    std::int64_t c = 0;
    for (std::size_t ai = 0; ai < js.size(); ++ai) {
      if (!l.leq(js[ai], x)) continue;
      c = checked_add(c, mu(static_cast<Index>(bi), static_cast<Index>(ai)));
    }
    out[js[bi]] = c;
  }
  return out;
}

GroupVector e_vector(const Lattice& l, Index a) {
  require_distributive(l, "e_vector");
  const auto ji = join_irreducibles(l);
  if (!ji.contains(a)) {
    throw Error(Errc::unknown_element, "'" + l.poset()->id(a) + "' is not join-irreducible");
  }
  GroupVector e = GroupVector::unit(l.poset(), a);
  if (a != l.bottom()) e[ji.lower_cover.at(a)] -= 1;
  return e;
}

namespace {

template <typename Op>
GroupVector bilinear(const Lattice& l, const GroupVector& x, const GroupVector& y, Op op) {
  if (x.host() != l.poset() || y.host() != l.poset()) {
    throw Error(Errc::host_mismatch, "vectors do not live on this lattice");
  }
  GroupVector out(l.poset());
  const Index n = static_cast<Index>(l.size());
  for (Index a = 0; a < n; ++a) {
    if (x[a] == 0) continue;
    for (Index b = 0; b < n; ++b) {
      if (y[b] == 0) continue;
      const Index c = op(a, b);
      out[c] = checked_add(out[c], checked_mul(x[a], y[b]));
    }
  }
  return out;
}

}  // namespace

GroupVector meet_product(const Lattice& l, const GroupVector& x, const GroupVector& y) {
  return bilinear(l, x, y, [&](Index a, Index b) { return l.meet(a, b); });
}

GroupVector join_product(const Lattice& l, const GroupVector& x, const GroupVector& y) {
  return bilinear(l, x, y, [&](Index a, Index b) { return l.join(a, b); });
}

GroupVector inclusion_exclusion_residual(const Lattice& l, std::span<const Index> elements) {
  if (elements.size() > 20) throw Error(Errc::too_large, "at most 20 elements");
  GroupVector out = GroupVector::unit(l.poset(), l.join_all(elements));
  const std::uint32_t k = static_cast<std::uint32_t>(elements.size());
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    Index m = l.top();
    for (std::uint32_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) m = l.meet(m, elements[i]);
    }
    const bool odd = std::popcount(mask) % 2 == 1;
    out[m] += odd ? -1 : 1;
  }
  return out;
}

std::optional<std::pair<Index, Index>> injectivity_witness(const NLPresentation& nl) {
  const Index n = static_cast<Index>(nl.lattice().size());
  std::vector<std::int64_t> v(n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      v[a] = 1;
      v[b] = -1;
      const bool hit = nl.contains(std::span<const std::int64_t>(v));
      v[a] = 0;
      v[b] = 0;
      if (hit) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace dissecta
