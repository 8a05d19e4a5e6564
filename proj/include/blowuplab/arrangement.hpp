#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "blowuplab/exactnum.hpp"
#include "blowuplab/poly.hpp"
#include "blowuplab/series.hpp"

namespace blowuplab {

/// Invalid arrangement data. Messages use 1-based form indices.
class ArrangementError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Central arrangement of n linear forms in k variables. Indices are 0-based
/// in the API.
class Arrangement {
 public:
  /// Validates: forms of length k, no zero form, no two proportional forms,
  /// n >= k and rank k.
  Arrangement(std::size_t k, std::vector<RationalVector> forms, std::vector<std::string> labels = {});

  /// Only checks lengths, zero forms and simplicity. Used for deletions,
  /// which may lose rank.
  static Arrangement relaxed(std::size_t k, std::vector<RationalVector> forms, std::vector<std::string> labels = {});

  /// x1, ..., xk.
  static Arrangement boolean(std::size_t k);

  std::size_t k() const { return k_; }
  std::size_t n() const { return forms_.size(); }
  const RationalVector& form(std::size_t i) const { return forms_[i]; }
  const std::vector<RationalVector>& forms() const { return forms_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// k × n coefficient matrix, columns are the forms.
  QMatrix matrix() const;
  std::size_t rank() const;
  /// Rank of the forms with the given indices.
  std::size_t rank_of(const std::vector<std::size_t>& subset) const;
  /// ℓ_i as a polynomial in the first k x-variables of `ring`.
  Polynomial linear_form(std::size_t i, const RingPtr& ring) const;
  /// Keeps the listed forms, in the given order.
  Arrangement subarrangement(const std::vector<std::size_t>& indices) const;

 private:
  struct Relaxed {};
  Arrangement(Relaxed, std::size_t k, std::vector<RationalVector> forms, std::vector<std::string> labels);

  std::size_t k_;
  std::vector<RationalVector> forms_;
  std::vector<std::string> labels_;
};

/// Nonzero vectors a, b with a = c·b for some scalar c.
bool proportional(const RationalVector& a, const RationalVector& b);

/// Multiarrangement b_{i,1} ℓ_i, ..., b_{i,m_i} ℓ_i over a simple support.
struct StretchedArrangement {
  Arrangement support;
  std::vector<std::size_t> multiplicities;
  std::vector<RationalVector> coefficients;

  /// Throws ArrangementError on inconsistent data.
  void validate() const;
  /// Every simple arrangement, each multiplicity 1.
  static StretchedArrangement trivial(const Arrangement& a);
  std::size_t total() const;
  /// (group, position) for each element, in listing order.
  std::vector<std::pair<std::size_t, std::size_t>> elements() const;
  /// The m forms b_{i,j} ℓ_i in listing order.
  std::vector<RationalVector> expanded_forms() const;
  bool is_simple() const;
};

struct Circuit {
  std::vector<std::size_t> support;  // increasing
  RationalVector coeffs;             // first entry 1
};

std::vector<Circuit> circuits(const Arrangement& a);

struct Deletion {
  Arrangement arrangement;
  bool coloop = false;
};

/// Removes form i. The result may have lower rank (coloop).
Deletion deletion(const Arrangement& a, std::size_t i);

struct Contraction {
  StretchedArrangement result;
  /// Rows: unit vectors chosen greedily, then ℓ_i. New coordinates z = P x.
  QMatrix change_of_coordinates;
  /// For every original index j != i, in increasing order: (j, group, position).
  struct Placement {
    std::size_t original;
    std::size_t group;
    std::size_t position;
  };
  std::vector<Placement> placement;
};

/// Restriction of the other forms to the hyperplane ℓ_i = 0, written in k-1
/// coordinates; proportional restrictions are merged with coefficient tags.
Contraction contraction(const Arrangement& a, std::size_t i);

struct Flat {
  std::vector<std::size_t> closure;  // increasing
  std::size_t rank = 0;
  Integer mobius;
};

/// All flats sorted by (rank, closure), with Möbius values from the bottom.
std::vector<Flat> intersection_lattice(const Arrangement& a);

/// Σ μ(F) (-t)^{rank F}.
IntPoly poincare_polynomial(const Arrangement& a);

/// π(A, s/(1-s)) as a reduced series.
HilbertSeries ot_hilbert_prediction(const Arrangement& a);

/// Connected components of the underlying matroid: two forms are linked
/// when some circuit contains both. Each component is increasing; the list is
/// ordered by smallest element.
std::vector<std::vector<std::size_t>> connected_components(const Arrangement& a);

/// Every k of the forms are independent.
bool is_generic(const Arrangement& a);

struct StretchedFactorization {
  Polynomial gcd_part;                // G
  std::vector<Polynomial> simple_part;  // P_A, one entry per element of B
  std::vector<Polynomial> products;   // the (m-1)-products of B
  struct Relation {
    std::size_t first;  // y_first - scalar * y_other
    std::size_t other;
    Rational scalar;
  };
  std::vector<Relation> relations;  // D_A
};

/// Requires total multiplicity at least 2. Polynomials live in K[x1..xk].
StretchedFactorization stretched_products_factorization(const StretchedArrangement& b);

}  // namespace blowuplab
