#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace apolar {

/// Exact rationals; gmpxx keeps every result in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                           std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const Rational> values);

  QMatrix transpose() const;
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, const QMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Reduced row echelon form, same shape as the input, with zero rows last.
struct Echelon {
  QMatrix form;
  std::vector<std::size_t> pivots;  // increasing
};

std::size_t rank(const QMatrix& m);
Rational det(const QMatrix& m);
Echelon rref(const QMatrix& m);

/// Canonical basis of the right null space, one vector per row, in reduced
/// echelon form. Row count is cols - rank.
QMatrix kernel_basis(const QMatrix& m);

/// The nonzero rows of rref(m).
QMatrix row_space_basis(const QMatrix& m);

/// Vertically stacks a and b (equal column counts).
QMatrix vstack(const QMatrix& a, const QMatrix& b);

std::vector<Rational> apply(const QMatrix& m, std::span<const Rational> v);

/// Reduces v against a matrix already in reduced echelon form. The result is
/// zero iff v lies in its row space.
std::vector<Rational> reduce_by_echelon(const Echelon& e,
                                        std::span<const Rational> v);

bool in_row_space(const Echelon& e, std::span<const Rational> v);

}  // namespace apolar
