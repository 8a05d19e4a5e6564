#include "blowuplab/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blowuplab/poly_matrix.hpp"

namespace blowuplab {

namespace {

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::string index_label(std::size_t i) { return std::to_string(i + 1); }

void check_basic(std::size_t k, const std::vector<RationalVector>& forms, const std::vector<std::string>& labels) {
  if (k == 0) throw ArrangementError("k must be positive");
  if (k > kMaxVars) throw ArrangementError("k too large");
  if (!labels.empty() && labels.size() != forms.size())
    throw ArrangementError("expected " + std::to_string(forms.size()) + " labels, got " + std::to_string(labels.size()));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].size() != k)
      throw ArrangementError("form at index " + index_label(i) + " has " + std::to_string(forms[i].size()) +
                             " coefficients, expected " + std::to_string(k));
    if (is_zero_vector(forms[i])) throw ArrangementError("zero form at index " + index_label(i));
  }
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (proportional(forms[i], forms[j]))
        throw ArrangementError("forms at indices " + index_label(i) + " and " + index_label(j) +
                               " are proportional; repeated hyperplanes need a stretch input with "
                               "\"multiplicities\" and \"coefficients\"");
}

}  // namespace

bool proportional(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size() || is_zero_vector(a) || is_zero_vector(b)) return false;
  std::size_t p = 0;
  while (a[p] == 0 && b[p] == 0) ++p;
  if (a[p] == 0 || b[p] == 0) return false;
  Rational ratio = a[p] / b[p];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != ratio * b[i]) return false;
  return true;
}

// ---------------------------------------------------------------- Arrangement

Arrangement::Arrangement(Relaxed, std::size_t k, std::vector<RationalVector> forms, std::vector<std::string> labels)
    : k_(k), forms_(std::move(forms)), labels_(std::move(labels)) {
  check_basic(k_, forms_, labels_);
}

Arrangement::Arrangement(std::size_t k, std::vector<RationalVector> forms, std::vector<std::string> labels)
    : Arrangement(Relaxed{}, k, std::move(forms), std::move(labels)) {
  if (forms_.size() < k_)
    throw ArrangementError("arrangement has " + std::to_string(forms_.size()) + " forms, fewer than k = " +
                           std::to_string(k_));
  std::size_t r = rank();
  if (r != k_)
    throw ArrangementError("arrangement is not essential: rank " + std::to_string(r) + " < k = " + std::to_string(k_));
}

Arrangement Arrangement::relaxed(std::size_t k, std::vector<RationalVector> forms, std::vector<std::string> labels) {
  return Arrangement(Relaxed{}, k, std::move(forms), std::move(labels));
}

Arrangement Arrangement::boolean(std::size_t k) {
  std::vector<RationalVector> forms;
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector v(k, Rational(0));
    v[i] = 1;
    forms.push_back(std::move(v));
  }
  return Arrangement(k, std::move(forms));
}

QMatrix Arrangement::matrix() const { return QMatrix::from_columns(k_, forms_); }

std::size_t Arrangement::rank() const { return forms_.empty() ? 0 : blowuplab::rank(matrix()); }

std::size_t Arrangement::rank_of(const std::vector<std::size_t>& subset) const {
  if (subset.empty()) return 0;
  return blowuplab::rank(matrix().select_columns(subset));
}

Polynomial Arrangement::linear_form(std::size_t i, const RingPtr& ring) const {
  return blowuplab::linear_form(ring, forms_.at(i));
}

Arrangement Arrangement::subarrangement(const std::vector<std::size_t>& indices) const {
  std::vector<RationalVector> forms;
  std::vector<std::string> labels;
  for (auto i : indices) {
    forms.push_back(forms_.at(i));
    if (!labels_.empty()) labels.push_back(labels_[i]);
  }
  return relaxed(k_, std::move(forms), std::move(labels));
}

// ---------------------------------------------------------------- stretched

void StretchedArrangement::validate() const {
  std::size_t n = support.n();
  if (multiplicities.size() != n)
    throw ArrangementError("expected " + std::to_string(n) + " multiplicities, got " +
                           std::to_string(multiplicities.size()));
  if (coefficients.size() != n)
    throw ArrangementError("expected " + std::to_string(n) + " coefficient lists, got " +
                           std::to_string(coefficients.size()));
  for (std::size_t i = 0; i < n; ++i) {
    if (multiplicities[i] == 0) throw ArrangementError("multiplicity 0 at index " + index_label(i));
    if (coefficients[i].size() != multiplicities[i])
      throw ArrangementError("coefficient list at index " + index_label(i) + " has length " +
                             std::to_string(coefficients[i].size()) + ", expected multiplicity " +
                             std::to_string(multiplicities[i]));
    if (coefficients[i].front() != 1) throw ArrangementError("first coefficient at index " + index_label(i) + " must be 1");
    for (const auto& b : coefficients[i])
      if (b == 0) throw ArrangementError("zero coefficient at index " + index_label(i));
  }
}

StretchedArrangement StretchedArrangement::trivial(const Arrangement& a) {
  StretchedArrangement out{a, std::vector<std::size_t>(a.n(), 1), {}};
  out.coefficients.assign(a.n(), RationalVector{Rational(1)});
  return out;
}

std::size_t StretchedArrangement::total() const {
  std::size_t m = 0;
  for (auto mi : multiplicities) m += mi;
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> StretchedArrangement::elements() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    for (std::size_t j = 0; j < multiplicities[i]; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<RationalVector> StretchedArrangement::expanded_forms() const {
  std::vector<RationalVector> out;
  for (auto [i, j] : elements()) {
    RationalVector v = support.form(i);
    for (auto& c : v) c *= coefficients[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

bool StretchedArrangement::is_simple() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(), [](std::size_t m) { return m == 1; });
}

// ---------------------------------------------------------------- circuits

std::vector<Circuit> circuits(const Arrangement& a) {
  std::vector<Circuit> found;
  std::size_t n = a.n();
  std::size_t max_size = std::min(n, a.rank() + 1);
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::size_t before = found.size();
    for (const auto& subset : subsets(n, size)) {
      bool contains_circuit = false;
      for (std::size_t c = 0; c < before && !contains_circuit; ++c)
        contains_circuit = std::includes(subset.begin(), subset.end(), found[c].support.begin(), found[c].support.end());
      if (contains_circuit) continue;
      QMatrix sub = a.matrix().select_columns(subset);
      auto kernel = kernel_basis(sub);
      if (kernel.empty()) continue;
      // minimal dependent: the kernel is one-dimensional with full support
      found.push_back(Circuit{subset, normalize_first_nonzero(kernel.front())});
    }
  }
  std::sort(found.begin(), found.end(), [](const Circuit& x, const Circuit& y) { return x.support < y.support; });
  return found;
}

// ---------------------------------------------------------------- deletion / contraction

Deletion deletion(const Arrangement& a, std::size_t i) {
  if (i >= a.n()) throw ArrangementError("deletion: index " + index_label(i) + " out of range");
  if (a.n() <= 1) throw ArrangementError("deletion: cannot delete from an arrangement of size 1");
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < a.n(); ++j)
    if (j != i) keep.push_back(j);
  Arrangement rest = a.subarrangement(keep);
  bool coloop = rest.rank() < a.rank();
  return Deletion{std::move(rest), coloop};
}

Contraction contraction(const Arrangement& a, std::size_t i) {
  std::size_t k = a.k();
  if (i >= a.n()) throw ArrangementError("contraction: index " + index_label(i) + " out of range");
  if (k < 2) throw ArrangementError("contraction: needs k >= 2");

  // rows: greedy unit vectors independent of ℓ_i, then ℓ_i
  std::vector<RationalVector> rows;
  for (std::size_t r = 0; r < k && rows.size() + 1 < k; ++r) {
    RationalVector e(k, Rational(0));
    e[r] = 1;
    auto trial = rows;
    trial.push_back(e);
    trial.push_back(a.form(i));
    if (blowuplab::rank(QMatrix::from_columns(k, trial)) == trial.size()) rows.push_back(e);
  }
  rows.push_back(a.form(i));
  QMatrix p = QMatrix::from_columns(k, rows).transpose();
  QMatrix to_new = inverse(p).transpose();

  std::vector<RationalVector> group_forms;
  std::vector<RationalVector> group_coeffs;
  Contraction out{StretchedArrangement{Arrangement::boolean(1), {}, {}}, p, {}};
  for (std::size_t j = 0; j < a.n(); ++j) {
    if (j == i) continue;
    RationalVector c(k);
    for (std::size_t r = 0; r < k; ++r) {
      c[r] = 0;
      for (std::size_t s = 0; s < k; ++s) c[r] += to_new(r, s) * a.form(j)[s];
    }
    c.pop_back();
    if (is_zero_vector(c)) throw ArrangementError("contraction: form " + index_label(j) + " restricts to zero");
    std::size_t g = 0;
    while (g < group_forms.size() && !proportional(c, group_forms[g])) ++g;
    if (g == group_forms.size()) {
      group_forms.push_back(c);
      group_coeffs.push_back({Rational(1)});
      out.placement.push_back({j, g, 0});
      continue;
    }
    std::size_t p0 = 0;
    while (group_forms[g][p0] == 0) ++p0;
    group_coeffs[g].push_back(c[p0] / group_forms[g][p0]);
    out.placement.push_back({j, g, group_coeffs[g].size() - 1});
  }
  std::vector<std::size_t> mult;
  for (const auto& g : group_coeffs) mult.push_back(g.size());
  out.result = StretchedArrangement{Arrangement(k - 1, std::move(group_forms)), std::move(mult), std::move(group_coeffs)};
  out.result.validate();
  return out;
}

// ---------------------------------------------------------------- lattice

std::vector<Flat> intersection_lattice(const Arrangement& a) {
  std::size_t n = a.n();
  auto closure_of = [&](const std::vector<std::size_t>& base) {
    std::size_t r = a.rank_of(base);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::binary_search(base.begin(), base.end(), j)) {
        out.push_back(j);
        continue;
      }
      auto trial = base;
      trial.push_back(j);
      if (a.rank_of(trial) == r) out.push_back(j);
    }
    return out;
  };

  std::vector<std::set<std::vector<std::size_t>>> by_rank(a.rank() + 1);
  by_rank[0].insert(std::vector<std::size_t>{});
  for (std::size_t r = 0; r < a.rank(); ++r)
    for (const auto& f : by_rank[r])
      for (std::size_t j = 0; j < n; ++j) {
        if (std::binary_search(f.begin(), f.end(), j)) continue;
        auto base = f;
        base.insert(std::upper_bound(base.begin(), base.end(), j), j);
        by_rank[r + 1].insert(closure_of(base));
      }

  std::vector<Flat> flats;
  for (std::size_t r = 0; r < by_rank.size(); ++r)
    for (const auto& f : by_rank[r]) {
      Integer mu = 0;
      if (r == 0) mu = 1;
      for (const auto& g : flats)
        if (g.rank < r && std::includes(f.begin(), f.end(), g.closure.begin(), g.closure.end())) mu -= g.mobius;
      flats.push_back(Flat{f, r, mu});
    }
  return flats;
}

IntPoly poincare_polynomial(const Arrangement& a) {
  IntPoly p;
  for (const auto& f : intersection_lattice(a)) {
    if (p.size() <= f.rank) p.resize(f.rank + 1, Integer(0));
    p[f.rank] += (f.rank % 2 == 0) ? Integer(f.mobius) : Integer(-f.mobius);
  }
  return trim(std::move(p));
}

HilbertSeries ot_hilbert_prediction(const Arrangement& a) {
  IntPoly pi = poincare_polynomial(a);
  std::size_t d = pi.empty() ? 0 : pi.size() - 1;
  IntPoly num;
  for (std::size_t r = 0; r < pi.size(); ++r) {
    IntPoly term = one_minus_s_power(d - r);
    term.insert(term.begin(), r, Integer(0));
    for (auto& c : term) c *= pi[r];
    if (num.size() < term.size()) num.resize(term.size(), Integer(0));
    for (std::size_t i = 0; i < term.size(); ++i) num[i] += term[i];
  }
  return HilbertSeries::reduced(std::move(num), d);
}

std::vector<std::vector<std::size_t>> connected_components(const Arrangement& a) {
  std::vector<std::size_t> parent(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& c : circuits(a))
    for (auto i : c.support) {
      std::size_t r1 = find(c.support.front());
      std::size_t r2 = find(i);
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < a.n(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [_, g] : groups) out.push_back(std::move(g));
  return out;
}

bool is_generic(const Arrangement& a) {
  if (a.n() < a.k()) return false;
  QMatrix m = a.matrix();
  for (const auto& s : subsets(a.n(), a.k()))
    if (determinant(m.select_columns(s)) == 0) return false;
  return true;
}

// ---------------------------------------------------------------- stretched products

StretchedFactorization stretched_products_factorization(const StretchedArrangement& b) {
  b.validate();
  std::size_t m = b.total();
  if (m < 2) throw ArrangementError("stretched products: total multiplicity must be at least 2");
  const auto& a = b.support;
  RingPtr ring = PolyRing::x_ring(a.k());
  auto one = Polynomial::constant(ring, Rational(1));

  std::vector<Polynomial> ell;
  for (std::size_t i = 0; i < a.n(); ++i) ell.push_back(a.linear_form(i, ring));

  Polynomial g = one;
  for (std::size_t i = 0; i < a.n(); ++i) g = g * ell[i].pow(static_cast<unsigned>(b.multiplicities[i] - 1));

  Rational all_b = 1;
  for (const auto& list : b.coefficients)
    for (const auto& c : list) all_b *= c;

  auto elements = b.elements();
  auto forms = b.expanded_forms();
  StretchedFactorization out{g, {}, {}, {}};
  for (std::size_t e = 0; e < elements.size(); ++e) {
    auto [i, j] = elements[e];
    Polynomial f = one;
    for (std::size_t l = 0; l < a.n(); ++l)
      if (l != i) f = f * ell[l];
    out.simple_part.push_back(f.scaled(all_b / b.coefficients[i][j]));
    Polynomial prod = one;
    for (std::size_t o = 0; o < elements.size(); ++o)
      if (o != e) prod = prod * linear_form(ring, forms[o]);
    out.products.push_back(std::move(prod));
  }
  std::size_t first = 0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 1; j < b.multiplicities[i]; ++j)
      out.relations.push_back({first, first + j, b.coefficients[i][j]});
    first += b.multiplicities[i];
  }
  return out;
}

}  // namespace blowuplab
