#pragma once

#include <cstddef>
#include <vector>

#include "blowuplab/poly.hpp"

namespace blowuplab {

/// Small dense matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  /// Cofactor expansion; intended for the small sizes used here (<= 8).
  Polynomial determinant() const;

  /// All p x p minors, rows and columns in lexicographic subset order; zero minors dropped.
  std::vector<Polynomial> minors(std::size_t p) const;

  /// Matrix-vector product.
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// All size-`r` subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r);

}  // namespace blowuplab
