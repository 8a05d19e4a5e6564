#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blowuplab/arrangement.hpp"
#include "blowuplab/ideal.hpp"
#include "blowuplab/poly_matrix.hpp"

namespace blowuplab {

/// The arrangement together with T = K[x1..xk, y1..yn], R = K[x], S = K[y],
/// the forms ℓ_i and the (n-1)-fold products f_i, all as elements of T.
struct BlowupData {
  Arrangement arrangement;
  RingPtr ring;    // T
  RingPtr x_ring;  // R
  RingPtr y_ring;  // S
  std::vector<Polynomial> forms;
  std::vector<Polynomial> products;

  explicit BlowupData(const Arrangement& a);
  std::size_t x_var(std::size_t r) const { return r; }
  std::size_t y_var(std::size_t i) const { return arrangement.k() + i; }
  /// m T = ⟨x1, ..., xk⟩.
  Ideal maximal_ideal() const;
};

/// All products ℓ_S with |S| = fold, in lexicographic order of S, in
/// K[x1..xk]. For fold = n-1 the result is (f_1, ..., f_n), f_i omitting ℓ_i.
std::vector<Polynomial> fold_products(const Arrangement& a, std::size_t fold);

/// ⟨f_1, ..., f_n⟩ in K[x1..xk].
Ideal products_ideal(const Arrangement& a);

/// ⟨ℓ_i y_i - ℓ_{i+1} y_{i+1}⟩ in T.
Ideal symmetric_ideal(const Arrangement& a);

/// Σ_j c_j Π_{l != j} y_{i_l} in the ring `ring` (variables y1..yn by name).
Polynomial ot_generator(const Circuit& c, const RingPtr& ring);

/// One generator per circuit, in K[y1..yn].
Ideal ot_ideal(const Arrangement& a);
/// Generators of circuits whose support contains i.
Ideal ot_restricted(const Arrangement& a, std::size_t i);

/// Square matrix M with M·(ℓ_{j_1}, ..., ℓ_{j_{m-1}})ᵀ equal to the
/// differences ℓ_{j_r} y_{j_r} - ℓ_{j_{r+1}} y_{j_{r+1}}, where the circuit is
/// read as (j_1, ..., j_m) = (i_2, ..., i_m, i_1) and ℓ_{j_m} = Σ d_r ℓ_{j_r}.
PolyMatrix sylvester_matrix(const Arrangement& a, const Circuit& c);
/// Determinant of sylvester_matrix; equals ±∂C.
Polynomial sylvester_form(const Arrangement& a, const Circuit& c);

enum class ReesMethod { kernel, colon, saturation, deletion };
std::string rees_method_name(ReesMethod m);

struct ReesResult {
  Ideal ideal;
  /// Order of the forms used (saturation: non-basis forms first, then the
  /// k independent ones; otherwise the identity).
  std::vector<std::size_t> order;
};

/// Rees ideal in T. For the colon method `index` selects ℓ_i y_i.
ReesResult rees_ideal_with_order(const Arrangement& a, ReesMethod method, std::size_t index = 0);
Ideal rees_ideal(const Arrangement& a, ReesMethod method, std::size_t index = 0);

/// Rees ideal of the products of `a` in the y-variables `yvars` of `ring`
/// (one per form), computed by deletion down to an independent set.
Ideal rees_by_deletion(const Arrangement& a, const RingPtr& ring, const std::vector<std::size_t>& yvars);
/// Kernel of y_i ↦ t f_i for the forms of `a` in `ring`.
Ideal rees_by_kernel(const Arrangement& a, const RingPtr& ring, const std::vector<std::size_t>& yvars);
/// ⟨ℓ_i y_i - ℓ_{i+1} y_{i+1}⟩ for the forms of `a` in `ring`.
Ideal symmetric_ideal_in(const Arrangement& a, const RingPtr& ring, const std::vector<std::size_t>& yvars);

/// Eliminates x1..xk from a Rees ideal in T; result in K[y1..yn].
Ideal fiber_of(const Ideal& rees);
Ideal special_fiber_ideal(const Arrangement& a);

/// k × (n-1) over K[y]: entry (r, c) is the x_r-coefficient of
/// ℓ_c y_c - ℓ_{c+1} y_{c+1}.
PolyMatrix jacobian_dual(const Arrangement& a);
/// k × k minors of the Jacobian dual (zero ideal when n - 1 < k).
Ideal jacobian_dual_minors(const Arrangement& a);

/// n × (n-1) over K[x]: column i carries ℓ_i in row i and -ℓ_{i+1} in row i+1.
PolyMatrix syzygy_matrix(const Arrangement& a);
Ideal minors_ideal_of_syzygy(const Arrangement& a, std::size_t p);

struct PrimaryComponent {
  Flat flat;
  Ideal ideal;  // I(Y)^μ(Y) in K[x]
};
/// One component per rank-2 flat.
std::vector<PrimaryComponent> primary_component_ideals(const Arrangement& a);

/// For n = k+1: mT, the Rees ideal, and ⟨span of the other forms, y_j⟩ for
/// every coloop j.
std::vector<Ideal> kplus1_primes(const Arrangement& a);

/// Presentation of the (m-1)-products of B in K[x][y_1..y_m], by kernel.
Ideal stretched_rees_by_kernel(const StretchedArrangement& b);
/// ⟨I(A) with y_i ↦ y_{first(i)} / c_{first(i)}, D_A⟩ in the same ring.
Ideal stretched_rees_by_support(const StretchedArrangement& b);

}  // namespace blowuplab
