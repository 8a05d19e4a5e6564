#include "blowuplab/poly_matrix.hpp"

#include <stdexcept>

namespace blowuplab {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix m(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

namespace {

// Expansion along the first remaining row; `cols` lists the columns still in play.
Polynomial expand(const PolyMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.empty()) return Polynomial::constant(m.ring(), 1);
  Polynomial acc(m.ring());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial& entry = m(row, cols[j]);
    if (entry.is_zero()) continue;
    std::size_t c = cols[j];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
    Polynomial minor = expand(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), c);
    if (minor.is_zero()) continue;
    Polynomial term = entry * minor;
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

}  // namespace

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  std::vector<std::size_t> cols(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cols[j] = j;
  return expand(*this, 0, cols);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> PolyMatrix::minors(std::size_t p) const {
  std::vector<Polynomial> out;
  if (p == 0 || p > rows_ || p > cols_) return out;
  for (const auto& rs : subsets(rows_, p))
    for (const auto& cs : subsets(cols_, p)) {
      auto d = submatrix(rs, cs).determinant();
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  return out;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("PolyMatrix::apply: size mismatch");
  std::vector<Polynomial> out(rows_, Polynomial(ring_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

}  // namespace blowuplab
