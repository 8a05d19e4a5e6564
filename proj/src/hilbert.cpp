#include "blowuplab/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace blowuplab {

namespace {

using Weights = std::vector<std::pair<unsigned, unsigned>>;

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

std::pair<unsigned, unsigned> weight_of(const Monomial& m, const Weights& w) {
  std::pair<unsigned, unsigned> d{0, 0};
  for (std::size_t i = 0; i < w.size(); ++i) {
    d.first += m[i] * w[i].first;
    d.second += m[i] * w[i].second;
  }
  return d;
}

class Recursion {
 public:
  explicit Recursion(const Weights& w) : w_(w) {}

  IntPoly2 run(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    for (const auto& g : gens)
      if (g.is_one()) return {};
    std::string key = key_of(gens);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    IntPoly2 result;
    std::size_t pivot = choose_pivot(gens);
    if (pivot == w_.size()) {
      result = {{{0, 0}, Integer(1)}};
      for (const auto& g : gens) {
        auto d = weight_of(g, w_);
        result = multiply(result, IntPoly2{{{0, 0}, Integer(1)}, {d, Integer(-1)}});
      }
    } else {
      BudgetScope::check_deadline();
      Monomial x = Monomial::variable(pivot);
      std::vector<Monomial> plus{x};
      std::vector<Monomial> quotient;
      for (const auto& g : gens) {
        if (g[pivot] == 0) plus.push_back(g);
        quotient.push_back(g[pivot] > 0 ? g / x : g);
      }
      result = run(std::move(plus));
      IntPoly2 shifted;
      for (const auto& [e, c] : run(std::move(quotient)))
        shifted[{e.first + w_[pivot].first, e.second + w_[pivot].second}] = c;
      for (const auto& [e, c] : shifted) result[e] += c;
      trim(result);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Most frequent variable among generators of degree > 1, or w_.size() if
  // the generators are pairwise coprime.
  std::size_t choose_pivot(const std::vector<Monomial>& gens) const {
    std::uint32_t seen = 0;
    bool coprime = true;
    for (const auto& g : gens) {
      if (seen & g.support()) coprime = false;
      seen |= g.support();
    }
    if (coprime) return w_.size();
    std::vector<unsigned> freq(w_.size(), 0);
    for (const auto& g : gens) {
      if (g.degree() < 2) continue;
      for (std::size_t i = 0; i < w_.size(); ++i)
        if (g[i] > 0) ++freq[i];
    }
    return static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
  }

  std::string key_of(std::vector<Monomial>& gens) const {
    std::vector<std::string> parts;
    parts.reserve(gens.size());
    for (const auto& g : gens) {
      std::string s(w_.size(), '\0');
      for (std::size_t i = 0; i < w_.size(); ++i) s[i] = static_cast<char>(g[i]);
      parts.push_back(std::move(s));
    }
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) key += p;
    return key;
  }

  const Weights& w_;
  std::map<std::string, IntPoly2> memo_;
};

void require_homogeneous(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous()) throw std::invalid_argument("hilbert series: ideal is not homogeneous: " + g.to_string());
}

}  // namespace

IntPoly2 monomial_numerator(const std::vector<Monomial>& monomials, const Weights& weights) {
  Recursion r(weights);
  return r.run(monomials);
}

HilbertSeries hilbert_series_of_monomials(const std::vector<Monomial>& monomials, std::size_t nvars) {
  Weights w(nvars, {1u, 0u});
  IntPoly2 num = monomial_numerator(monomials, w);
  IntPoly out;
  for (const auto& [e, c] : num) {
    if (out.size() <= e.first) out.resize(e.first + 1, Integer(0));
    out[e.first] += c;
  }
  return HilbertSeries::reduced(std::move(out), nvars);
}

HilbertSeries hilbert_series(const Ideal& ideal) {
  require_homogeneous(ideal);
  return hilbert_series_of_monomials(ideal.groebner().leading_monomials(), ideal.ring()->nvars());
}

BigradedSeries bigraded_hilbert_series(const Ideal& ideal) {
  const auto& ring = *ideal.ring();
  if (ring.count(VarKind::aux) > 0) throw std::invalid_argument("bigraded hilbert series: auxiliary variables present");
  for (const auto& g : ideal.generators())
    if (!g.bidegree()) throw std::invalid_argument("bigraded hilbert series: not bihomogeneous: " + g.to_string());
  Weights w;
  for (const auto& v : ring.vars()) w.push_back(v.kind == VarKind::x ? std::make_pair(1u, 0u) : std::make_pair(0u, 1u));
  BigradedSeries out;
  out.numerator = monomial_numerator(ideal.groebner().leading_monomials(), w);
  out.u_exponent = ring.count(VarKind::x);
  out.v_exponent = ring.count(VarKind::y);
  return out;
}

std::size_t krull_dim(const Ideal& ideal) {
  auto hs = hilbert_series(ideal);
  if (hs.numerator.empty()) throw std::invalid_argument("krull_dim: unit ideal");
  return hs.denom_exponent;
}

std::size_t codim(const Ideal& ideal) {
  if (ideal.is_unit()) return ideal.ring()->nvars() + 1;
  return ideal.ring()->nvars() - krull_dim(ideal);
}

std::vector<Integer> h_vector(const Ideal& ideal) { return hilbert_series(ideal).numerator; }

std::size_t reduction_number(const Ideal& fiber_ideal) { return hilbert_series(fiber_ideal).numerator_degree(); }

}  // namespace blowuplab
