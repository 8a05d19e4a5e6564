#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "blowuplab/ideal.hpp"
#include "blowuplab/series.hpp"

namespace blowuplab {

/// Numerator of the Hilbert series of K[vars]/⟨monomials⟩ with respect to
/// the per-variable weights (u-degree, v-degree); the denominator is
/// Π (1 - u^a v^b) over the variables.
IntPoly2 monomial_numerator(const std::vector<Monomial>& monomials,
                            const std::vector<std::pair<unsigned, unsigned>>& weights);

/// Series of K[x_1..x_nvars]/⟨monomials⟩, standard grading.
HilbertSeries hilbert_series_of_monomials(const std::vector<Monomial>& monomials, std::size_t nvars);

/// Series of ring/I in the standard grading (every variable of degree 1).
/// I must be homogeneous.
HilbertSeries hilbert_series(const Ideal& ideal);

/// Series of T/I in the bigrading deg x = (1,0), deg y = (0,1).
/// I must be bihomogeneous and the ring free of auxiliary variables.
BigradedSeries bigraded_hilbert_series(const Ideal& ideal);

std::size_t krull_dim(const Ideal& ideal);
/// nvars - krull_dim
std::size_t codim(const Ideal& ideal);
std::vector<Integer> h_vector(const Ideal& ideal);
/// Degree of the h-numerator. Equals the reduction number of the ideal
/// whose special fiber is presented by `fiber_ideal`, provided that fiber is
/// Cohen-Macaulay.
std::size_t reduction_number(const Ideal& fiber_ideal);

}  // namespace blowuplab
