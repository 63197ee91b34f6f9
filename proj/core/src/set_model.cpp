#include "dissecta/set_model.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "dissecta/checked.hpp"
#include "dissecta/error.hpp"
#include "dissecta/incidence.hpp"
#include "dissecta/poset.hpp"

namespace dissecta {

namespace {

constexpr std::size_t kMaxGround = 64;
constexpr std::size_t kMaxSubspaces = 20;
constexpr std::size_t kMaterializeLimit = 12;

std::string show(const SetModel& m, SetMask s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < m.ground.size(); ++i) {
    if (!(s >> i & 1U)) continue;
    if (!first) out += ",";
    out += m.ground[i];
    first = false;
  }
  return out + "}";
}

bool is_subset(SetMask a, SetMask b) { return (a & ~b) == 0; }

// X is a union of refinement elements iff the elements inside X cover it.
bool is_union_of(SetMask x, const std::vector<SetMask>& pieces) {
  SetMask covered = 0;
  for (SetMask p : pieces) {
    if (is_subset(p, x)) covered |= p;
  }
  return covered == x;
}

[[noreturn]] void bad_refinement(const std::string& why) {
  throw Error(Errc::invalid_refinement, why);
}

}  // namespace

SetMask SetModel::full() const noexcept {
  return ground.size() >= 64 ? ~SetMask{0} : (SetMask{1} << ground.size()) - 1;
}

SetMask SetModel::union_of_subspaces() const noexcept {
  SetMask u = 0;
  for (SetMask h : subspaces) u |= h;
  return u;
}

void validate(const SetModel& m) {
  if (m.ground.size() > kMaxGround) {
    throw Error(Errc::too_large, "ground set has " + std::to_string(m.ground.size()) +
                                     " points; at most 64 are supported");
  }
  if (m.subspaces.size() > kMaxSubspaces) {
    throw Error(Errc::too_large, "at most 20 subspaces are supported");
  }
  const SetMask t = m.full();
  const SetMask covered = m.union_of_subspaces();
  auto within_ground = [&](SetMask s) { return is_subset(s, t); };
  for (SetMask h : m.subspaces) {
    if (!within_ground(h)) bad_refinement("subspace leaves the ground set");
  }

  // Refinement elements.
  if (std::find(m.refinement.begin(), m.refinement.end(), t) == m.refinement.end()) {
    bad_refinement("refinement must contain the whole ground set");
  }
  std::set<SetMask> seen;
  for (SetMask x : m.refinement) {
    if (x == 0) bad_refinement("refinement contains the empty set");
    if (!within_ground(x)) bad_refinement("refinement element leaves the ground set");
    if (!seen.insert(x).second) bad_refinement("refinement lists " + show(m, x) + " twice");
    if (x != t && !is_subset(x, covered)) {
      bad_refinement("refinement element " + show(m, x) + " is not inside the union of subspaces");
    }
  }
  // Every nonempty intersection of a subfamily of subspaces is a union of
  // refinement elements (the empty subfamily gives T).
  const std::size_t k = m.subspaces.size();
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    SetMask x = t;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) x &= m.subspaces[i];
    }
    if (x != 0 && !is_union_of(x, m.refinement)) {
      bad_refinement("flat " + show(m, x) + " is not a union of refinement elements");
    }
  }
  // Pairwise intersections suffice: deeper ones decompose piece by piece.
  for (std::size_t i = 0; i < m.refinement.size(); ++i) {
    for (std::size_t j = i + 1; j < m.refinement.size(); ++j) {
      const SetMask x = m.refinement[i] & m.refinement[j];
      if (x != 0 && !is_union_of(x, m.refinement)) {
        bad_refinement("intersection " + show(m, x) + " is not a union of refinement elements");
      }
    }
  }

  // Chambers partition T minus the subspaces.
  SetMask chambers = 0;
  for (SetMask c : m.chambers) {
    if (c == 0) throw Error(Errc::chambers_not_partition, "empty chamber");
    if (!within_ground(c)) throw Error(Errc::chambers_not_partition, "chamber leaves the ground set");
    if (c & covered) {
      throw Error(Errc::chambers_not_partition, "chamber " + show(m, c) + " meets a subspace");
    }
    if (c & chambers) {
      throw Error(Errc::chambers_not_partition, "chamber " + show(m, c) + " overlaps another");
    }
    chambers |= c;
  }
  if (chambers != (t & ~covered)) {
    throw Error(Errc::chambers_not_partition,
                "chambers miss " + show(m, (t & ~covered) & ~chambers));
  }
}

SetOracleReport set_oracle_check(const SetModel& m,
                                 const std::optional<std::vector<std::int64_t>>& weights) {
  validate(m);
  std::vector<std::int64_t> w(m.ground.size(), 1);
  if (weights) {
    if (weights->size() != m.ground.size()) {
      throw Error(Errc::dimension_mismatch, "weight vector has " + std::to_string(weights->size()) +
                                                " entries for " + std::to_string(m.ground.size()) +
                                                " points");
    }
    w = *weights;
  }
  auto f = [&](SetMask s) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < m.ground.size(); ++i) {
      if (s >> i & 1U) sum = checked_add(sum, w[i]);
    }
    return sum;
  };

  SetOracleReport out;
  for (SetMask c : m.chambers) out.lhs = checked_add(out.lhs, f(c));

  // The poset L + {empty} ordered by inclusion.
  std::vector<SetMask> elems = m.refinement;
  elems.push_back(0);
  std::vector<std::string> ids;
  std::vector<std::pair<Index, Index>> pairs;
  for (Index a = 0; a < elems.size(); ++a) {
    ids.push_back(show(m, elems[a]));
    for (Index b = 0; b < elems.size(); ++b) {
      if (a != b && is_subset(elems[a], elems[b])) pairs.emplace_back(a, b);
    }
  }
  const Poset p = Poset::from_indices(std::move(ids), pairs, PairMode::relation);
  const Index top = static_cast<Index>(
      std::find(elems.begin(), elems.end(), m.full()) - elems.begin());
  const auto mu = mobius_to(p, top);
  for (Index x = 0; x < elems.size(); ++x) {
    if (mu[x] != 0) out.rhs = checked_add(out.rhs, checked_mul(mu[x], f(elems[x])));
  }
  out.equal = out.lhs == out.rhs;

  if (m.ground.size() <= kMaterializeLimit) {
    // D(L): all unions of elements of L and chambers, as a bitmap over masks.
    std::vector<bool> in_d(std::size_t{1} << m.ground.size(), false);
    std::vector<SetMask> d{0};
    in_d[0] = true;
    std::vector<SetMask> gens = m.refinement;
    gens.insert(gens.end(), m.chambers.begin(), m.chambers.end());
    for (SetMask g : gens) {
      const std::size_t count = d.size();
      for (std::size_t i = 0; i < count; ++i) {
        const SetMask u = d[i] | g;
        if (!in_d[u]) {
          in_d[u] = true;
          d.push_back(u);
        }
      }
    }
    std::sort(d.begin(), d.end());
    for (SetMask a : d) {
      for (SetMask b : d) {
        if (!in_d[a & b]) {
          throw Error(Errc::internal, "unions of L and chambers are not closed under intersection");
        }
      }
    }
    std::set<SetMask> allowed{0};
    allowed.insert(m.refinement.begin(), m.refinement.end());
    allowed.insert(m.chambers.begin(), m.chambers.end());
    bool contained = true;
    for (SetMask s : d) {
      if (s == 0) continue;
      SetMask below = 0;
      for (SetMask t : d) {
        if (t != s && is_subset(t, s)) below |= t;
      }
      const bool join_irreducible = below != s;
      if (join_irreducible && !allowed.count(s)) contained = false;
    }
    out.lattice_size = d.size();
    out.ji_contained = contained;
  }
  return out;
}

}  // namespace dissecta
