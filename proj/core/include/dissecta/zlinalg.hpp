#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dissecta {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                 std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<BigInt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const BigInt> values);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  void negate_row(std::size_t r);

  bool is_zero() const;
  IntegerMatrix transpose() const;
  std::string to_string() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Throws DimensionMismatch.
BigInt determinant(const IntegerMatrix& a);

enum class NormalFormKind { hermite, smith };

/*
  hermite: left * A = form, with form in row-Hermite shape: echelon, positive
           pivots, entries above each pivot reduced into [0, pivot).
  smith:   left * A * right = form, diagonal d1 | d2 | ... with d_i >= 0.

  left and right are unimodular. The reconstruction identity is checked before
  returning.
*/
struct NormalForm {
  NormalFormKind kind = NormalFormKind::hermite;
  IntegerMatrix form;
  IntegerMatrix left;
  IntegerMatrix right;  ///< empty for hermite
};

NormalForm normal_form(const IntegerMatrix& a, NormalFormKind kind);

/// Nonzero diagonal of the Smith form, without computing transforms.
std::vector<BigInt> smith_invariants(const IntegerMatrix& a);

/*
  Row-Hermite basis of the subgroup generated by a stream of integer rows.

  Rows are inserted one at a time (gcd combination on pivot collisions), so
  the basis never holds more than `cols` rows no matter how many generators
  go in. Membership is decided by back-substitution, which does not need the
  entries above pivots reduced; matrix() reduces them on a copy.
*/
class HermiteBasis {
 public:
  explicit HermiteBasis(std::size_t cols);

  void insert(std::span<const BigInt> row);
  void insert(std::span<const std::int64_t> row);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  bool contains(std::span<const BigInt> v) const;
  bool contains(std::span<const std::int64_t> v) const;

  /// Basis rows in echelon order, reduced above pivots.
  IntegerMatrix matrix() const;

 private:
  void reduce_above_pivots();

  std::size_t cols_;
  // Keyed by pivot column, kept sorted.
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<BigInt>> rows_;
  bool reduced_ = true;
};

struct Membership {
  bool member = false;
  /// When member: integer weights on the generator rows reproducing v.
  std::vector<BigInt> coefficients;
};

/// Decides whether v is an integer combination of the rows of `generators`.
/// Throws DimensionMismatch.
Membership subgroup_membership(const IntegerMatrix& generators, std::span<const BigInt> v);

struct QuotientInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  ///< invariant factors > 1
};

/// Structure of Z^n / <rows of generators>. Throws DimensionMismatch.
QuotientInvariants quotient_invariants(const IntegerMatrix& generators, std::size_t ambient_rank);

}  // namespace dissecta
