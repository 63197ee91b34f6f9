#include "dissecta/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "dissecta/error.hpp"

namespace dissecta {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& bits, std::size_t words, Index a, Index b) {
  bits[a * words + (b >> 6)] |= std::uint64_t{1} << (b & 63);
}

bool get_bit(const std::vector<std::uint64_t>& bits, std::size_t words, Index a, Index b) {
  return (bits[a * words + (b >> 6)] >> (b & 63)) & 1U;
}

std::unordered_map<std::string, Index> make_lookup(const std::vector<std::string>& ids) {
  std::unordered_map<std::string, Index> lookup;
  lookup.reserve(ids.size());
  for (Index i = 0; i < ids.size(); ++i) {
    if (!lookup.emplace(ids[i], i).second) {
      throw Error(Errc::duplicate_element, "element '" + ids[i] + "' listed twice");
    }
  }
  return lookup;
}

}  // namespace

Poset Poset::build(std::vector<std::string> elements,
                   std::span<const std::pair<std::string, std::string>> pairs, PairMode mode) {
  auto lookup = make_lookup(elements);
  std::vector<std::pair<Index, Index>> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = lookup.find(a);
    auto ib = lookup.find(b);
    if (ia == lookup.end()) throw Error(Errc::unknown_element, "unknown element '" + a + "'");
    if (ib == lookup.end()) throw Error(Errc::unknown_element, "unknown element '" + b + "'");
    indexed.emplace_back(ia->second, ib->second);
  }
  return from_indices(std::move(elements), indexed, mode);
}

Poset Poset::from_indices(std::vector<std::string> elements,
                          std::span<const std::pair<Index, Index>> pairs, PairMode mode) {
  make_lookup(elements);
  const std::size_t n = elements.size();
  const std::size_t words = words_for(n);
  std::vector<std::uint64_t> bits(n * words, 0);
  for (Index a = 0; a < n; ++a) set_bit(bits, words, a, a);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(Errc::unknown_element, "pair references index out of range");
    set_bit(bits, words, a, b);
  }

  if (mode == PairMode::covers) {
    // Warshall closure on bit rows: row(i) |= row(k) whenever i <= k.
    for (Index k = 0; k < n; ++k) {
      const std::uint64_t* row_k = bits.data() + k * words;
      for (Index i = 0; i < n; ++i) {
        if (i == k || !get_bit(bits, words, i, k)) continue;
        std::uint64_t* row_i = bits.data() + i * words;
        for (std::size_t w = 0; w < words; ++w) row_i[w] |= row_k[w];
      }
    }
  }

  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (get_bit(bits, words, a, b) && get_bit(bits, words, b, a)) {
        throw Error(Errc::cycle_detected,
                    "'" + elements[a] + "' and '" + elements[b] + "' precede each other");
      }
    }
  }

  if (mode == PairMode::relation) {
    for (Index a = 0; a < n; ++a) {
      const std::uint64_t* row_a = bits.data() + a * words;
      for (Index b = 0; b < n; ++b) {
        if (a == b || !get_bit(bits, words, a, b)) continue;
        const std::uint64_t* row_b = bits.data() + b * words;
        for (std::size_t w = 0; w < words; ++w) {
          if ((row_b[w] & ~row_a[w]) != 0) {
            Index c = static_cast<Index>(w * 64 + std::countr_zero(row_b[w] & ~row_a[w]));
            throw Error(Errc::not_transitive, "'" + elements[a] + "' <= '" + elements[b] +
                                                  "' <= '" + elements[c] +
                                                  "' but the relation lacks the composite pair");
          }
        }
      }
    }
  }

  return from_bits(std::move(elements), std::move(bits), words);
}

Poset Poset::from_bits(std::vector<std::string> ids, std::vector<std::uint64_t> bits,
                       std::size_t words) {
  Poset p;
  p.lookup_ = make_lookup(ids);
  p.ids_ = std::move(ids);
  p.bits_ = std::move(bits);
  p.words_ = words;
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t n = ids_.size();
  up_.assign(n, {});
  down_.assign(n, {});
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (leq(a, b)) {
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  }

  // a < b implies down(a) is a proper subset of down(b), so sorting by the
  // size of the down-set yields a linear extension.
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), Index{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](Index x, Index y) { return down_[x].size() < down_[y].size(); });
  rank_.assign(n, 0);
  for (std::uint32_t r = 0; r < n; ++r) rank_[order_[r]] = r;

  auto by_rank = [&](Index x, Index y) { return rank_[x] < rank_[y]; };
  for (Index a = 0; a < n; ++a) {
    std::sort(up_[a].begin(), up_[a].end(), by_rank);
    std::sort(down_[a].begin(), down_[a].end(), by_rank);
  }

  top_.reset();
  bottom_.reset();
  for (Index a = 0; a < n; ++a) {
    if (down_[a].size() == n) top_ = a;
    if (up_[a].size() == n) bottom_ = a;
  }
}

Index Poset::index(std::string_view id) const {
  auto found = find(id);
  if (!found) throw Error(Errc::unknown_element, "unknown element '" + std::string(id) + "'");
  return *found;
}

std::optional<Index> Poset::find(std::string_view id) const {
  auto it = lookup_.find(std::string(id));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<Index> Poset::interval(Index a, Index b) const {
  if (!leq(a, b)) {
    throw Error(Errc::not_comparable, "'" + id(a) + "' is not below '" + id(b) + "'");
  }
  std::vector<Index> out;
  for (Index c : up_[a]) {
    if (leq(c, b)) out.push_back(c);
  }
  return out;
}

Extremes Poset::extremes() const {
  Extremes e;
  for (Index a = 0; a < size(); ++a) {
    if (up_[a].size() == 1) e.maximal.push_back(a);
    if (down_[a].size() == 1) e.minimal.push_back(a);
  }
  e.top = top_;
  e.bottom = bottom_;
  return e;
}

std::vector<Index> Poset::maximal_within(std::span<const Index> subset) const {
  std::vector<Index> out;
  for (Index a : subset) {
    bool dominated = std::any_of(subset.begin(), subset.end(),
                                 [&](Index b) { return less(a, b); });
    if (!dominated) out.push_back(a);
  }
  return out;
}

std::vector<Index> Poset::minimal_within(std::span<const Index> subset) const {
  std::vector<Index> out;
  for (Index a : subset) {
    bool dominates = std::any_of(subset.begin(), subset.end(),
                                 [&](Index b) { return less(b, a); });
    if (!dominates) out.push_back(a);
  }
  return out;
}

std::vector<Index> Poset::lower_covers(Index a) const {
  std::vector<Index> strict(down_[a].begin(), down_[a].end());
  std::erase(strict, a);
  return maximal_within(strict);
}

std::vector<Index> Poset::upper_covers(Index a) const {
  std::vector<Index> strict(up_[a].begin(), up_[a].end());
  std::erase(strict, a);
  return minimal_within(strict);
}

std::vector<std::pair<Index, Index>> Poset::cover_relation() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index a : order_) {
    for (Index b : lower_covers(a)) out.emplace_back(b, a);
  }
  return out;
}

Poset Poset::induced(std::span<const Index> subset) const {
  const std::size_t m = subset.size();
  const std::size_t words = words_for(m);
  std::vector<std::string> ids;
  ids.reserve(m);
  for (Index a : subset) ids.push_back(id(a));
  std::vector<std::uint64_t> bits(m * words, 0);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (leq(subset[i], subset[j])) set_bit(bits, words, i, j);
    }
  }
  return from_bits(std::move(ids), std::move(bits), words);
}

std::size_t Poset::relation_size() const noexcept {
  std::size_t total = 0;
  for (const auto& u : up_) total += u.size();
  return total;
}

}  // namespace dissecta
