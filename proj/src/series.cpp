#include "blowuplab/series.hpp"

#include <sstream>
#include <stdexcept>

namespace blowuplab {

IntPoly trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(std::move(out));
}

IntPoly one_minus_s_power(std::size_t e) {
  IntPoly p{Integer(1)};
  for (std::size_t i = 0; i < e; ++i) p = multiply(p, IntPoly{Integer(1), Integer(-1)});
  return p;
}

std::string int_poly_to_string(const IntPoly& p, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Integer c = p[i];
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    c = abs(c);
    if (i == 0 || c != 1) out << c.get_str();
    if (i > 0) {
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

HilbertSeries HilbertSeries::reduced(IntPoly numerator, std::size_t denom_exponent) {
  numerator = trim(std::move(numerator));
  if (numerator.empty()) return HilbertSeries{{}, 0};
  for (;;) {
    Integer at_one = 0;
    for (const auto& c : numerator) at_one += c;
    if (at_one != 0 || denom_exponent == 0) break;
    // synthetic division by (1 - s): q_i = -(sum_{j<=i} c_j)
    IntPoly q(numerator.size() - 1, Integer(0));
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < numerator.size(); ++i) {
      acc += numerator[i];
      q[i] = acc;
    }
    numerator = trim(std::move(q));
    --denom_exponent;
  }
  return HilbertSeries{std::move(numerator), denom_exponent};
}

std::vector<Integer> HilbertSeries::expand(std::size_t max_degree) const {
  // coefficients of 1/(1-s)^d are binom(j + d - 1, d - 1)
  std::vector<Integer> base(max_degree + 1, Integer(0));
  for (std::size_t j = 0; j <= max_degree; ++j) {
    if (denom_exponent == 0) {
      base[j] = (j == 0) ? 1 : 0;
    } else {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), j + denom_exponent - 1, denom_exponent - 1);
      base[j] = b;
    }
  }
  std::vector<Integer> out(max_degree + 1, Integer(0));
  for (std::size_t i = 0; i < numerator.size() && i <= max_degree; ++i)
    for (std::size_t j = 0; i + j <= max_degree; ++j) out[i + j] += numerator[i] * base[j];
  return out;
}

std::string HilbertSeries::to_string() const {
  std::string num = int_poly_to_string(numerator, "s");
  if (denom_exponent == 0) return num;
  std::string den = denom_exponent == 1 ? "(1 - s)" : "(1 - s)^" + std::to_string(denom_exponent);
  return "(" + num + ")/" + den;
}

IntPoly2 multiply(const IntPoly2& a, const IntPoly2& b) {
  IntPoly2 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  trim(out);
  return out;
}

void trim(IntPoly2& p) {
  for (auto it = p.begin(); it != p.end();) {
    if (it->second == 0) it = p.erase(it);
    else ++it;
  }
}

namespace {
IntPoly2 one_minus_power(std::size_t e, bool in_u) {
  IntPoly2 p{{{0, 0}, Integer(1)}};
  IntPoly2 f{{{0, 0}, Integer(1)}, {in_u ? std::make_pair(1u, 0u) : std::make_pair(0u, 1u), Integer(-1)}};
  for (std::size_t i = 0; i < e; ++i) p = multiply(p, f);
  return p;
}
}  // namespace

bool BigradedSeries::same_function(const BigradedSeries& other) const {
  auto lhs = multiply(numerator, multiply(one_minus_power(other.u_exponent, true), one_minus_power(other.v_exponent, false)));
  auto rhs = multiply(other.numerator, multiply(one_minus_power(u_exponent, true), one_minus_power(v_exponent, false)));
  trim(lhs);
  trim(rhs);
  return lhs == rhs;
}

Integer BigradedSeries::coefficient(unsigned a, unsigned b) const {
  auto binom = [](unsigned j, std::size_t d) {
    if (d == 0) return Integer(j == 0 ? 1 : 0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), j + d - 1, d - 1);
    return r;
  };
  Integer acc = 0;
  for (const auto& [e, c] : numerator) {
    if (e.first > a || e.second > b) continue;
    acc += c * binom(a - e.first, u_exponent) * binom(b - e.second, v_exponent);
  }
  return acc;
}

std::string BigradedSeries::to_string() const {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const auto& [e, c0] : numerator) {
    Integer c = c0;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    c = abs(c);
    bool unit = e.first == 0 && e.second == 0;
    if (unit || c != 1) out << c.get_str();
    if (e.first) out << "u" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second) out << "v" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    first = false;
  }
  if (first) out << "0";
  out << ")/((1 - u)^" << u_exponent << "(1 - v)^" << v_exponent << ")";
  return out.str();
}

}  // namespace blowuplab
