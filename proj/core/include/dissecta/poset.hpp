#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dissecta {

/// Dense element index, 0..size()-1.
using Index = std::uint32_t;

enum class PairMode {
  covers,    ///< pairs are closed reflexively and transitively
  relation,  ///< pairs are the full order relation (reflexive pairs may be omitted); verified, not closed
};

struct Extremes {
  std::vector<Index> maximal;
  std::vector<Index> minimal;
  std::optional<Index> top;
  std::optional<Index> bottom;
};

/*
  A finite partially ordered set.

  External element ids are strings; internally elements are dense indices and
  the order is kept as a bit matrix (row a holds the up-set of a). Besides the
  matrix, every element carries its up-set and down-set as index lists sorted
  along a fixed linear extension, so that recursions over intervals can simply
  walk those lists in order.

  A Poset is immutable once built.
*/
class Poset {
 public:
  /// Builds a poset from string ids. Throws UnknownElement, DuplicateElement,
  /// CycleDetected, or NotTransitive.
  static Poset build(std::vector<std::string> elements,
                     std::span<const std::pair<std::string, std::string>> pairs,
                     PairMode mode);

  /// Same as build() with pairs already given as indices into `elements`.
  static Poset from_indices(std::vector<std::string> elements,
                            std::span<const std::pair<Index, Index>> pairs,
                            PairMode mode);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(Index a) const { return ids_.at(a); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  /// Throws UnknownElement.
  Index index(std::string_view id) const;
  std::optional<Index> find(std::string_view id) const;

  bool leq(Index a, Index b) const noexcept {
    return (bits_[a * words_ + (b >> 6)] >> (b & 63)) & 1U;
  }
  bool less(Index a, Index b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const noexcept { return leq(a, b) || leq(b, a); }

  /// {c | a <= c}, sorted along linear_extension().
  const std::vector<Index>& up(Index a) const { return up_.at(a); }
  /// {c | c <= a}, sorted along linear_extension().
  const std::vector<Index>& down(Index a) const { return down_.at(a); }

  /// Position of `a` in the linear extension.
  std::uint32_t rank(Index a) const { return rank_.at(a); }
  const std::vector<Index>& linear_extension() const noexcept { return order_; }

  /// [a,b] sorted along the linear extension. Throws NotComparable if a is not <= b.
  std::vector<Index> interval(Index a, Index b) const;

  Extremes extremes() const;
  std::optional<Index> top() const noexcept { return top_; }
  std::optional<Index> bottom() const noexcept { return bottom_; }

  /// Maximal elements of a subset (scan based).
  std::vector<Index> maximal_within(std::span<const Index> subset) const;
  std::vector<Index> minimal_within(std::span<const Index> subset) const;

  /// Elements covered by `a`, i.e. b < a with nothing strictly between.
  std::vector<Index> lower_covers(Index a) const;
  std::vector<Index> upper_covers(Index a) const;

  /// All cover pairs (b, a) with b covered by a.
  std::vector<std::pair<Index, Index>> cover_relation() const;

  /// The subposet on `subset` with the restricted order. Element i of the result
  /// is subset[i]; ids are preserved.
  Poset induced(std::span<const Index> subset) const;

  /// Number of comparable ordered pairs (a, b) with a <= b.
  std::size_t relation_size() const noexcept;

  friend bool operator==(const Poset& x, const Poset& y) {
    return x.ids_ == y.ids_ && x.bits_ == y.bits_;
  }

 private:
  Poset() = default;
  static Poset from_bits(std::vector<std::string> ids, std::vector<std::uint64_t> bits,
                         std::size_t words);
  void finish();

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Index> lookup_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Index>> up_;
  std::vector<std::vector<Index>> down_;
  std::vector<Index> order_;
  std::vector<std::uint32_t> rank_;
  std::optional<Index> top_;
  std::optional<Index> bottom_;
};

/// Shared handle; algebraic objects (incidence functions, vectors) refer to
/// their host through it and compare hosts by identity.
using PosetRef = std::shared_ptr<const Poset>;

inline PosetRef share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

}  // namespace dissecta
