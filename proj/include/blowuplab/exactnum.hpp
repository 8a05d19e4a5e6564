#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace blowuplab {

/// Exact rational scalar. mpq_class keeps every value canonical
/// (positive denominator, reduced, zero as 0/1) after each operation.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static QMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static QMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  RationalVector row(std::size_t r) const;
  QMatrix select_columns(const std::vector<std::size_t>& cols) const;
  QMatrix transpose() const;

  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);

struct RrefResult {
  QMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const QMatrix& m);

/// Basis of the right kernel, one vector per free column in increasing order.
/// Each vector is scaled so that its first nonzero entry is 1.
std::vector<RationalVector> kernel_basis(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Determinant of a square matrix (Gaussian elimination).
Rational determinant(const QMatrix& m);

/// Inverse of a square invertible matrix; throws std::domain_error if singular.
QMatrix inverse(const QMatrix& m);

/// Scales v so that its first nonzero entry is 1. Zero vectors are returned unchanged.
RationalVector normalize_first_nonzero(RationalVector v);

}  // namespace blowuplab
