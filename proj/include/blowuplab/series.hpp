#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "blowuplab/exactnum.hpp"

namespace blowuplab {

/// Integer polynomial in one variable, coefficient i of s^i.
using IntPoly = std::vector<Integer>;

IntPoly trim(IntPoly p);
IntPoly multiply(const IntPoly& a, const IntPoly& b);
/// (1 - s)^e
IntPoly one_minus_s_power(std::size_t e);
std::string int_poly_to_string(const IntPoly& p, const std::string& var);

/// numerator(s) / (1 - s)^denom_exponent, kept reduced so numerator(1) != 0
/// (except for the zero series).
struct HilbertSeries {
  IntPoly numerator;
  std::size_t denom_exponent = 0;

  /// Cancels common factors of (1 - s).
  static HilbertSeries reduced(IntPoly numerator, std::size_t denom_exponent);

  /// Dimensions of the graded pieces 0..max_degree.
  std::vector<Integer> expand(std::size_t max_degree) const;
  std::size_t numerator_degree() const { return numerator.empty() ? 0 : numerator.size() - 1; }
  std::string to_string() const;

  bool operator==(const HilbertSeries&) const = default;
};

/// Two-variable integer polynomial, keyed by (u-exponent, v-exponent).
using IntPoly2 = std::map<std::pair<unsigned, unsigned>, Integer>;

IntPoly2 multiply(const IntPoly2& a, const IntPoly2& b);
void trim(IntPoly2& p);

/// numerator(u, v) / ((1 - u)^u_exponent (1 - v)^v_exponent).
struct BigradedSeries {
  IntPoly2 numerator;
  std::size_t u_exponent = 0;
  std::size_t v_exponent = 0;

  /// Equality of rational functions by cross-multiplication.
  bool same_function(const BigradedSeries& other) const;
  /// Coefficient of u^a v^b in the power-series expansion.
  Integer coefficient(unsigned a, unsigned b) const;
  std::string to_string() const;
};

}  // namespace blowuplab
