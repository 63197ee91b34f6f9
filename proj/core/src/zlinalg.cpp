#include "dissecta/zlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "dissecta/error.hpp"

namespace dissecta {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::dimension_mismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                       std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(Errc::dimension_mismatch, "row " + std::to_string(r) + " has length " +
                                                std::to_string(rows[r].size()) + ", expected " +
                                                std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = static_cast<long>(rows[r][c]);
    }
  }
  return m;
}

void IntegerMatrix::append_row(std::span<const BigInt> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(Errc::dimension_mismatch, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                     const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                     const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << ", ";
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << (*this)(r, c).get_str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(Errc::dimension_mismatch, "cannot multiply " + std::to_string(a.rows_) + "x" +
                                              std::to_string(a.cols_) + " by " +
                                              std::to_string(b.rows_) + "x" +
                                              std::to_string(b.cols_));
  }
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

BigInt determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::dimension_mismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

BigInt trunc_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row-Hermite reduction of h, mirroring every row operation on u (if given).
void hermite_in_place(IntegerMatrix& h, IntegerMatrix* u) {
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    bool have_pivot = false;
    for (;;) {
      // Smallest nonzero magnitude in column j at or below row r.
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, j) == 0) continue;
        if (best == m || abs(h(i, j)) < abs(h(best, j))) best = i;
      }
      if (best == m) break;
      have_pivot = true;
      h.swap_rows(r, best);
      if (u) u->swap_rows(r, best);
      bool clear = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, j) == 0) continue;
        const BigInt q = -trunc_quotient(h(i, j), h(r, j));
        h.add_row_multiple(i, r, q);
        if (u) u->add_row_multiple(i, r, q);
        if (h(i, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (!have_pivot) continue;
    if (h(r, j) < 0) {
      h.negate_row(r);
      if (u) u->negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const BigInt q = -floor_quotient(h(i, j), h(r, j));
      h.add_row_multiple(i, r, q);
      if (u) u->add_row_multiple(i, r, q);
    }
    ++r;
  }
}

// Smith reduction of d; u and v collect row and column operations when given.
void smith_in_place(IntegerMatrix& d, IntegerMatrix* u, IntegerMatrix* v) {
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t bi = m;
      std::size_t bj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (bi == m || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == m) return;  // remaining block is zero
      d.swap_rows(t, bi);
      if (u) u->swap_rows(t, bi);
      d.swap_cols(t, bj);
      if (v) v->swap_cols(t, bj);

      bool clear = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const BigInt q = -trunc_quotient(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        if (u) u->add_row_multiple(i, t, q);
        if (d(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const BigInt q = -trunc_quotient(d(t, j), d(t, t));
        d.add_col_multiple(j, t, q);
        if (v) v->add_col_multiple(j, t, q);
        if (d(t, j) != 0) clear = false;
      }
      if (!clear) continue;

      // Divisibility: fold an offending row into row t and go again.
      std::size_t offender = m;
      for (std::size_t i = t + 1; i < m && offender == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
        }
      }
      if (offender == m) break;
      d.add_row_multiple(t, offender, 1);
      if (u) u->add_row_multiple(t, offender, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

bool is_row_hermite(const IntegerMatrix& h) {
  std::size_t last_pivot = 0;
  bool zero_seen = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (p == h.cols()) {
      zero_seen = true;
      continue;
    }
    if (zero_seen || (r > 0 && p <= last_pivot) || h(r, p) <= 0) return false;
    for (std::size_t i = 0; i < r; ++i) {
      if (h(i, p) < 0 || h(i, p) >= h(r, p)) return false;
    }
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, p) != 0) return false;
    }
    last_pivot = p;
  }
  return true;
}

bool is_smith(const IntegerMatrix& d) {
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < k) {
      const BigInt& a = d(i, i);
      const BigInt& b = d(i + 1, i + 1);
      if (a == 0 ? b != 0 : !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return false;
    }
  }
  return true;
}

void require_unimodular(const IntegerMatrix& m, const char* name) {
  const BigInt det = determinant(m);
  if (det != 1 && det != -1) {
    throw Error(Errc::internal, std::string(name) + " is not unimodular");
  }
}

}  // namespace

NormalForm normal_form(const IntegerMatrix& a, NormalFormKind kind) {
  NormalForm out;
  out.kind = kind;
  out.form = a;
  out.left = IntegerMatrix::identity(a.rows());
  if (kind == NormalFormKind::hermite) {
    hermite_in_place(out.form, &out.left);
    if (!(out.left * a == out.form) || !is_row_hermite(out.form)) {
      throw Error(Errc::internal, "Hermite reconstruction failed");
    }
  } else {
    out.right = IntegerMatrix::identity(a.cols());
    smith_in_place(out.form, &out.left, &out.right);
    if (!(out.left * a * out.right == out.form) || !is_smith(out.form)) {
      throw Error(Errc::internal, "Smith reconstruction failed");
    }
    require_unimodular(out.right, "right transform");
  }
  require_unimodular(out.left, "left transform");
  return out;
}

std::vector<BigInt> smith_invariants(const IntegerMatrix& a) {
  IntegerMatrix d = a;
  smith_in_place(d, nullptr, nullptr);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (d(i, i) != 0) out.push_back(d(i, i));
  }
  return out;
}

HermiteBasis::HermiteBasis(std::size_t cols) : cols_(cols) {}

void HermiteBasis::insert(std::span<const std::int64_t> row) {
  std::vector<BigInt> v(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) v[i] = static_cast<long>(row[i]);
  insert(v);
}

void HermiteBasis::insert(std::span<const BigInt> row) {
  if (row.size() != cols_) {
    throw Error(Errc::dimension_mismatch, "row length " + std::to_string(row.size()) +
                                              " does not match " + std::to_string(cols_));
  }
  std::vector<BigInt> v(row.begin(), row.end());
  std::size_t slot = 0;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j] == 0) continue;
    while (slot < pivots_.size() && pivots_[slot] < j) ++slot;
    if (slot == pivots_.size() || pivots_[slot] != j) {
      // New pivot column.
      if (v[j] < 0) {
        for (auto& x : v) x = -x;
      }
      pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(slot), j);
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(slot), std::move(v));
      reduced_ = false;
      return;
    }
    // Combine with the existing pivot row: [b; v] <- [[s, t]; [-v_j/g, b_j/g]] [b; v]
    auto& b = rows_[slot];
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t(), v[j].get_mpz_t());
    const BigInt bj_g = b[j] / g;
    const BigInt vj_g = v[j] / g;
    if (v[j] % b[j] == 0) {
      // Cheap case: the pivot divides v_j, a single subtraction suffices.
      const BigInt q = v[j] / b[j];
      for (std::size_t c = j; c < cols_; ++c) v[c] -= q * b[c];
    } else {
      for (std::size_t c = j; c < cols_; ++c) {
        BigInt nb = s * b[c] + t * v[c];
        BigInt nv = bj_g * v[c] - vj_g * b[c];
        b[c] = std::move(nb);
        v[c] = std::move(nv);
      }
      reduced_ = false;
    }
  }
}

void HermiteBasis::reduce_above_pivots() {
  if (reduced_) return;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t j = pivots_[k];
    if (rows_[k][j] < 0) {
      for (auto& x : rows_[k]) x = -x;
    }
  }
  // Ascending order: reducing with row k only touches columns right of its pivot.
  for (std::size_t k = 1; k < rows_.size(); ++k) {
    const std::size_t j = pivots_[k];
    const BigInt& p = rows_[k][j];
    for (std::size_t i = 0; i < k; ++i) {
      if (rows_[i][j] == 0) continue;
      const BigInt q = floor_quotient(rows_[i][j], p);
      if (q == 0) continue;
      for (std::size_t c = j; c < cols_; ++c) rows_[i][c] -= q * rows_[k][c];
    }
  }
  reduced_ = true;
}

bool HermiteBasis::contains(std::span<const std::int64_t> v) const {
  std::vector<BigInt> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = static_cast<long>(v[i]);
  return contains(w);
}

bool HermiteBasis::contains(std::span<const BigInt> v) const {
  if (v.size() != cols_) {
    throw Error(Errc::dimension_mismatch, "vector length " + std::to_string(v.size()) +
                                              " does not match " + std::to_string(cols_));
  }
  std::vector<BigInt> r(v.begin(), v.end());
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (r[j] == 0) continue;
    while (k < pivots_.size() && pivots_[k] < j) ++k;
    if (k == pivots_.size() || pivots_[k] != j) return false;
    const auto& b = rows_[k];
    if (!mpz_divisible_p(r[j].get_mpz_t(), b[j].get_mpz_t())) return false;
    const BigInt q = r[j] / b[j];
    for (std::size_t c = j; c < cols_; ++c) r[c] -= q * b[c];
  }
  return true;
}

IntegerMatrix HermiteBasis::matrix() const {
  if (!reduced_) {
    HermiteBasis copy = *this;
    copy.reduce_above_pivots();
    return copy.matrix();
  }
  IntegerMatrix m(rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = rows_[r][c];
  }
  return m;
}

Membership subgroup_membership(const IntegerMatrix& generators, std::span<const BigInt> v) {
  if (generators.rows() > 0 && generators.cols() != v.size()) {
    throw Error(Errc::dimension_mismatch, "vector length " + std::to_string(v.size()) +
                                              " does not match generator length " +
                                              std::to_string(generators.cols()));
  }
  Membership out;
  const std::size_t m = generators.rows();
  if (m == 0) {
    out.member = std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
    return out;
  }
  const NormalForm nf = normal_form(generators, NormalFormKind::hermite);
  const IntegerMatrix& h = nf.form;
  std::vector<BigInt> residual(v.begin(), v.end());
  std::vector<BigInt> weights(m);
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (p == h.cols()) break;
    for (std::size_t c = 0; c < p; ++c) {
      if (residual[c] != 0) return out;
    }
    if (!mpz_divisible_p(residual[p].get_mpz_t(), h(r, p).get_mpz_t())) return out;
    weights[r] = residual[p] / h(r, p);
    for (std::size_t c = p; c < h.cols(); ++c) residual[c] -= weights[r] * h(r, c);
  }
  if (!std::all_of(residual.begin(), residual.end(), [](const BigInt& x) { return x == 0; })) {
    return out;
  }
  out.member = true;
  out.coefficients.assign(m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    if (weights[r] == 0) continue;
    for (std::size_t i = 0; i < m; ++i) out.coefficients[i] += weights[r] * nf.left(r, i);
  }
  return out;
}

QuotientInvariants quotient_invariants(const IntegerMatrix& generators, std::size_t ambient_rank) {
  if (generators.rows() > 0 && generators.cols() != ambient_rank) {
    throw Error(Errc::dimension_mismatch, "generator length " + std::to_string(generators.cols()) +
                                              " does not match ambient rank " +
                                              std::to_string(ambient_rank));
  }
  HermiteBasis basis(ambient_rank);
  for (std::size_t r = 0; r < generators.rows(); ++r) basis.insert(generators.row(r));
  QuotientInvariants out;
  const auto factors = smith_invariants(basis.matrix());
  out.free_rank = ambient_rank - factors.size();
  for (const auto& d : factors) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace dissecta
