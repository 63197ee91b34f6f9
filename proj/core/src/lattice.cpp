#include "dissecta/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "dissecta/error.hpp"

namespace dissecta {

namespace {

// Least element of {c | a <= c, b <= c}; nullopt when it does not exist.
// Candidates are scanned along the linear extension, so the first upper bound
// found is minimal; it is the least one iff it lies below every other.
std::optional<Index> least_upper_bound(const Poset& p, Index a, Index b) {
  std::optional<Index> first;
  for (Index c : p.up(a)) {
    if (!p.leq(b, c)) continue;
    if (!first) {
      first = c;
    } else if (!p.leq(*first, c)) {
      return std::nullopt;
    }
  }
  return first;
}

std::optional<Index> greatest_lower_bound(const Poset& p, Index a, Index b) {
  std::optional<Index> first;
  const auto& down = p.down(a);
  for (auto it = down.rbegin(); it != down.rend(); ++it) {
    const Index c = *it;
    if (!p.leq(c, b)) continue;
    if (!first) {
      first = c;
    } else if (!p.leq(c, *first)) {
      return std::nullopt;
    }
  }
  return first;
}

[[noreturn]] void not_a_lattice(const Poset& p, Index a, Index b, const char* what) {
  throw Error(Errc::not_a_lattice,
              "pair ('" + p.id(a) + "', '" + p.id(b) + "') has no " + what);
}

std::vector<bool> membership(std::size_t n, std::span<const Index> subset) {
  std::vector<bool> in(n, false);
  for (Index a : subset) in.at(a) = true;
  return in;
}

}  // namespace

Lattice Lattice::from_poset(PosetRef p) {
  if (p->size() == 0) throw Error(Errc::not_a_lattice, "the empty poset is not a lattice");
  Lattice l;
  l.n_ = p->size();
  l.join_.assign(l.n_ * l.n_, 0);
  l.meet_.assign(l.n_ * l.n_, 0);
  for (Index a = 0; a < l.n_; ++a) {
    for (Index b = a; b < l.n_; ++b) {
      auto j = least_upper_bound(*p, a, b);
      if (!j) not_a_lattice(*p, a, b, "least upper bound");
      auto m = greatest_lower_bound(*p, a, b);
      if (!m) not_a_lattice(*p, a, b, "greatest lower bound");
      l.join_[a * l.n_ + b] = l.join_[b * l.n_ + a] = *j;
      l.meet_[a * l.n_ + b] = l.meet_[b * l.n_ + a] = *m;
    }
  }
  // A finite lattice has both bounds: fold the tables over all elements.
  Index bottom = 0;
  Index top = 0;
  for (Index a = 1; a < l.n_; ++a) {
    bottom = l.meet_[bottom * l.n_ + a];
    top = l.join_[top * l.n_ + a];
  }
  l.bottom_ = bottom;
  l.top_ = top;
  l.poset_ = std::move(p);
  l.cache_ = std::make_shared<FlagCache>();
  return l;
}

Index Lattice::join_all(std::span<const Index> xs) const {
  Index acc = bottom_;
  for (Index x : xs) acc = join(acc, x);
  return acc;
}

Index Lattice::meet_all(std::span<const Index> xs) const {
  Index acc = top_;
  for (Index x : xs) acc = meet(acc, x);
  return acc;
}

StructureFlags Lattice::structure() const {
  std::call_once(cache_->once, [&] { cache_->flags = structure_check(*this); });
  return cache_->flags;
}

bool JoinIrreducibles::contains(Index a) const {
  return std::find(elements.begin(), elements.end(), a) != elements.end();
}

JoinIrreducibles join_irreducibles(const Lattice& l) {
  const Poset& p = *l.poset();
  JoinIrreducibles out;
  for (Index a : p.linear_extension()) {
    if (a == l.bottom()) {
      out.elements.push_back(a);
      continue;
    }
    std::vector<Index> strictly_below(p.down(a).begin(), p.down(a).end());
    std::erase(strictly_below, a);
    if (l.join_all(strictly_below) == a) continue;
    auto covers = p.lower_covers(a);
    if (covers.size() != 1) {
      throw Error(Errc::non_unique_cover,
                  "join-irreducible '" + p.id(a) + "' covers " + std::to_string(covers.size()) +
                      " elements");
    }
    out.elements.push_back(a);
    out.lower_cover.emplace(a, covers.front());
  }

  const auto in_ji = membership(l.size(), out.elements);
  for (Index x = 0; x < l.size(); ++x) {
    Index acc = l.bottom();
    for (Index b : p.down(x)) {
      if (in_ji[b]) acc = l.join(acc, b);
    }
    if (acc != x) {
      throw Error(Errc::internal,
                  "'" + p.id(x) + "' is not the join of the join-irreducibles below it");
    }
  }
  return out;
}

std::optional<std::array<Index, 3>> distributivity_witness(const Lattice& l) {
  const Index n = static_cast<Index>(l.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          return std::array<Index, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Index, 3>> cancellation_witness(const Lattice& l) {
  const Index n = static_cast<Index>(l.size());
  for (Index c = 0; c < n; ++c) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = a + 1; b < n; ++b) {
        if (l.join(c, a) == l.join(c, b) && l.meet(c, a) == l.meet(c, b)) {
          return std::array<Index, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

bool modular_identities_hold(const Lattice& l) {
  const Index n = static_cast<Index>(l.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index ab_join = l.join(a, b);
      const Index ab_meet = l.meet(a, b);
      for (Index z = 0; z < n; ++z) {
        if (l.meet(l.join(a, z), ab_join) != l.join(a, l.meet(z, ab_join))) return false;
        if (l.join(l.meet(a, z), ab_meet) != l.meet(a, l.join(z, ab_meet))) return false;
      }
    }
  }
  return true;
}

}  // namespace

StructureFlags structure_check(const Lattice& l) {
  StructureFlags flags;
  flags.distributive = !distributivity_witness(l).has_value();
  flags.modular = modular_identities_hold(l);
  flags.cancellation = !cancellation_witness(l).has_value();
  if (flags.distributive != flags.cancellation) {
    throw Error(Errc::internal, "distributivity and cancellation disagree");
  }
  return flags;
}

bool interval_maps_inverse(const Lattice& l, Index a, Index b) {
  const Poset& p = *l.poset();
  const Index lo = l.meet(a, b);
  const Index hi = l.join(a, b);
  for (Index x : p.interval(lo, b)) {
    if (l.meet(l.join(a, x), b) != x) return false;
  }
  for (Index y : p.interval(a, hi)) {
    if (l.join(a, l.meet(y, b)) != y) return false;
  }
  return true;
}

std::vector<Index> principal_ideal(const Lattice& l, Index a) { return l.poset()->down(a); }

std::vector<Index> principal_filter(const Lattice& l, Index a) { return l.poset()->up(a); }

bool is_prime_ideal(const Lattice& l, std::span<const Index> subset) {
  const Index n = static_cast<Index>(l.size());
  const auto in = membership(n, subset);
  const auto count = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  if (count == 0 || count == n) return false;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (in[x] && in[y] && !in[l.join(x, y)]) return false;
      if (in[x] && !in[l.meet(x, y)]) return false;
      if (in[l.meet(x, y)] && !in[x] && !in[y]) return false;
    }
  }
  return true;
}

bool is_prime_filter(const Lattice& l, std::span<const Index> subset) {
  const Index n = static_cast<Index>(l.size());
  const auto in = membership(n, subset);
  const auto count = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  if (count == 0 || count == n) return false;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (in[x] && in[y] && !in[l.meet(x, y)]) return false;
      if (in[x] && !in[l.join(x, y)]) return false;
      if (in[l.join(x, y)] && !in[x] && !in[y]) return false;
    }
  }
  return true;
}

std::vector<std::vector<Index>> prime_ideals(const Lattice& l) {
  std::vector<std::vector<Index>> out;
  for (Index a : l.poset()->linear_extension()) {
    if (a == l.top()) continue;
    auto ideal = principal_ideal(l, a);
    if (is_prime_ideal(l, ideal)) out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<Index> separating_prime_ideal(const Lattice& l, Index a, Index b) {
  if (a == b) throw std::invalid_argument("separating_prime_ideal needs two distinct elements");
  if (!l.structure().distributive) {
    throw Error(Errc::not_distributive, "prime-ideal separation requires a distributive lattice");
  }
  auto ideals = prime_ideals(l);
  auto has = [](const std::vector<Index>& s, Index x) {
    return std::find(s.begin(), s.end(), x) != s.end();
  };
  for (const auto& ideal : ideals) {
    if (has(ideal, a) && !has(ideal, b)) return ideal;
  }
  for (const auto& ideal : ideals) {
    if (has(ideal, b) && !has(ideal, a)) return ideal;
  }
  throw Error(Errc::internal, "no separating prime ideal in a distributive lattice");
}

}  // namespace dissecta
