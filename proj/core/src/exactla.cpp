#include "apolar/exactla.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "apolar/error.hpp"

namespace apolar {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionMismatch("ragged matrix literal");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                           std::size_t cols) {
  QMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void QMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) {
    throw DimensionMismatch("append_row: expected " + std::to_string(cols_) +
                            " entries, got " + std::to_string(values.size()));
  }
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

std::string QMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << (*this)(r, c).get_str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("matrix product: inner dimensions differ");
  }
  QMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionMismatch("matrix sum: shapes differ");
  }
  QMatrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += b.entries_[i];
  return s;
}

QMatrix operator*(const Rational& s, const QMatrix& m) {
  QMatrix out = m;
  for (auto& e : out.entries_) e *= s;
  return out;
}

namespace {

// Integer matrix with each row of m scaled by the lcm of its denominators.
// Row scaling preserves rank; for the determinant the scales are returned.
std::vector<std::vector<Integer>> integer_rows(const QMatrix& m,
                                               Integer* scale_product) {
  std::vector<std::vector<Integer>> out(m.rows(),
                                        std::vector<Integer>(m.cols()));
  Integer product = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& q : m.row(r)) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      out[r][c] = q.get_num() * (l / q.get_den());
    }
    product *= l;
  }
  if (scale_product) *scale_product = product;
  return out;
}

// Fraction-free (Bareiss) forward elimination. Returns the number of pivots
// and flips *sign for each row swap.
std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols,
                    int* sign) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  if (m.empty()) return 0;
  auto a = integer_rows(m, nullptr);
  return bareiss(a, m.cols(), nullptr);
}

Rational det(const QMatrix& m) {
  if (m.rows() != m.cols()) {
    throw NonSquare("det of a " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer scale;
  auto a = integer_rows(m, &scale);
  int sign = 1;
  if (bareiss(a, n, &sign) < n) return 0;
  Rational d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

Echelon rref(const QMatrix& m) {
  Echelon e{m, {}};
  QMatrix& a = e.form;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

QMatrix row_space_basis(const QMatrix& m) {
  const Echelon e = rref(m);
  QMatrix out(0, m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.append_row(e.form.row(r));
  return out;
}

QMatrix kernel_basis(const QMatrix& m) {
  const std::size_t cols = m.cols();
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  QMatrix vectors(0, cols);
  std::vector<Rational> v(cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.form(r, f);
    vectors.append_row(v);
  }
  return row_space_basis(vectors);
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  QMatrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

std::vector<Rational> apply(const QMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw DimensionMismatch("apply: vector length");
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0 && sgn(v[c]) != 0) out[r] += m(r, c) * v[c];
  return out;
}

std::vector<Rational> reduce_by_echelon(const Echelon& e,
                                        std::span<const Rational> v) {
  if (v.size() != e.form.cols()) throw DimensionMismatch("reduce: vector length");
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const Rational f = w[e.pivots[r]];
    if (sgn(f) == 0) continue;
    const auto row = e.form.row(r);
    for (std::size_t j = 0; j < w.size(); ++j)
      if (sgn(row[j]) != 0) w[j] -= f * row[j];
  }
  return w;
}

bool in_row_space(const Echelon& e, std::span<const Rational> v) {
  const auto w = reduce_by_echelon(e, v);
  return std::all_of(w.begin(), w.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace apolar
