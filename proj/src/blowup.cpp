#include "blowuplab/blowup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace blowuplab {

namespace {

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::size_t> standard_yvars(const Arrangement& a) {
  std::vector<std::size_t> v(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) v[i] = a.k() + i;
  return v;
}

Polynomial product_except(const std::vector<Polynomial>& ell, std::size_t skip, const RingPtr& ring) {
  Polynomial p = Polynomial::constant(ring, Rational(1));
  for (std::size_t j = 0; j < ell.size(); ++j)
    if (j != skip) p = p * ell[j];
  return p;
}

std::vector<Polynomial> forms_in(const Arrangement& a, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < a.n(); ++i) out.push_back(a.linear_form(i, ring));
  return out;
}

std::vector<std::size_t> x_indices(const RingPtr& ring) { return ring->indices(VarKind::x); }

}  // namespace

// ---------------------------------------------------------------- data

BlowupData::BlowupData(const Arrangement& a)
    : arrangement(a),
      ring(PolyRing::bigraded(a.k(), a.n())),
      x_ring(PolyRing::x_ring(a.k())),
      y_ring(PolyRing::y_ring(a.n())) {
  forms = forms_in(a, ring);
  for (std::size_t i = 0; i < a.n(); ++i) products.push_back(product_except(forms, i, ring));
}

Ideal BlowupData::maximal_ideal() const { return Ideal::of_variables(ring, x_indices(ring)); }

std::vector<Polynomial> fold_products(const Arrangement& a, std::size_t fold) {
  std::size_t n = a.n();
  if (fold < 1 || fold > n)
    throw std::invalid_argument("fold must lie in 1.." + std::to_string(n) + ", got " + std::to_string(fold));
  RingPtr ring = PolyRing::x_ring(a.k());
  auto ell = forms_in(a, ring);
  std::vector<Polynomial> out;
  if (fold + 1 == n) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(product_except(ell, i, ring));
    return out;
  }
  for (const auto& s : subsets(n, fold)) {
    Polynomial p = Polynomial::constant(ring, Rational(1));
    for (auto i : s) p = p * ell[i];
    out.push_back(std::move(p));
  }
  return out;
}

Ideal products_ideal(const Arrangement& a) {
  return Ideal(PolyRing::x_ring(a.k()), fold_products(a, a.n() - 1 == 0 ? 1 : a.n() - 1));
}

// ---------------------------------------------------------------- symmetric and OT

Ideal symmetric_ideal_in(const Arrangement& a, const RingPtr& ring, const std::vector<std::size_t>& yvars) {
  auto ell = forms_in(a, ring);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i + 1 < a.n(); ++i)
    gens.push_back(ell[i] * Polynomial::variable(ring, yvars[i]) - ell[i + 1] * Polynomial::variable(ring, yvars[i + 1]));
  return Ideal(ring, std::move(gens));
}

Ideal symmetric_ideal(const Arrangement& a) {
  return symmetric_ideal_in(a, PolyRing::bigraded(a.k(), a.n()), standard_yvars(a));
}

Polynomial ot_generator(const Circuit& c, const RingPtr& ring) {
  Polynomial out(ring);
  for (std::size_t j = 0; j < c.support.size(); ++j) {
    Polynomial term = Polynomial::constant(ring, c.coeffs[j]);
    for (std::size_t l = 0; l < c.support.size(); ++l)
      if (l != j) term = term * Polynomial::variable(ring, "y" + std::to_string(c.support[l] + 1));
    out += term;
  }
  return out;
}

Ideal ot_ideal(const Arrangement& a) {
  RingPtr s = PolyRing::y_ring(a.n());
  std::vector<Polynomial> gens;
  for (const auto& c : circuits(a)) gens.push_back(ot_generator(c, s));
  return Ideal(s, std::move(gens));
}

Ideal ot_restricted(const Arrangement& a, std::size_t i) {
  RingPtr s = PolyRing::y_ring(a.n());
  std::vector<Polynomial> gens;
  for (const auto& c : circuits(a))
    if (std::binary_search(c.support.begin(), c.support.end(), i)) gens.push_back(ot_generator(c, s));
  return Ideal(s, std::move(gens));
}

PolyMatrix sylvester_matrix(const Arrangement& a, const Circuit& c) {
  std::size_t m = c.support.size();
  if (m < 2) throw std::invalid_argument("sylvester_matrix: circuit too small");
  RingPtr s = PolyRing::y_ring(a.n());
  // j_1..j_{m-1} = i_2..i_m, solved form j_m = i_1 with coefficient 1
  std::vector<std::size_t> j;
  RationalVector d;
  for (std::size_t r = 1; r < m; ++r) {
    j.push_back(c.support[r]);
    d.push_back(-c.coeffs[r] / c.coeffs[0]);
  }
  j.push_back(c.support[0]);
  auto y = [&](std::size_t idx) { return Polynomial::variable(s, "y" + std::to_string(idx + 1)); };
  std::size_t size = m - 1;
  PolyMatrix out(s, size, size);
  for (std::size_t r = 0; r + 1 < size; ++r) {
    out(r, r) = y(j[r]);
    out(r, r + 1) = -y(j[r + 1]);
  }
  for (std::size_t col = 0; col < size; ++col) out(size - 1, col) = y(j[m - 1]).scaled(-d[col]);
  out(size - 1, size - 1) += y(j[size - 1]);
  return out;
}

Polynomial sylvester_form(const Arrangement& a, const Circuit& c) { return sylvester_matrix(a, c).determinant(); }

// ---------------------------------------------------------------- Rees ideal

std::string rees_method_name(ReesMethod m) {
  switch (m) {
    case ReesMethod::kernel: return "kernel";
    case ReesMethod::colon: return "colon";
    case ReesMethod::saturation: return "saturation";
    case ReesMethod::deletion: return "deletion";
  }
  return "?";
}

Ideal rees_by_kernel(const Arrangement& a, const RingPtr& ring, const std::vector<std::size_t>& yvars) {
  RingPtr big = ring->with_aux({"_t"});
  std::size_t t = big->require("_t");
  auto ell = forms_in(a, big);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < a.n(); ++i) {
    Polynomial f = product_except(ell, i, big);
    gens.push_back(Polynomial::variable(big, ring->var(yvars[i]).name) - Polynomial::variable(big, t) * f);
  }
  return extend(eliminate(Ideal(big, std::move(gens)), {t}), ring);
}

Ideal rees_by_deletion(const Arrangement& a, const RingPtr& ring, const std::vector<std::size_t>& yvars) {
  if (a.rank() == a.n()) return symmetric_ideal_in(a, ring, yvars);
  Deletion del = deletion(a, 0);
  std::vector<std::size_t> rest_y(yvars.begin() + 1, yvars.end());
  Ideal smaller = rees_by_deletion(del.arrangement, ring, rest_y);
  Polynomial l1 = a.linear_form(0, ring);
  Polynomial l2 = a.linear_form(1, ring);
  Polynomial delta = l1 * Polynomial::variable(ring, yvars[0]) - l2 * Polynomial::variable(ring, yvars[1]);
  std::vector<Polynomial> gens{delta};
  for (const auto& g : smaller.generators()) gens.push_back(g);
  return saturate(Ideal(ring, std::move(gens)), l1);
}

ReesResult rees_ideal_with_order(const Arrangement& a, ReesMethod method, std::size_t index) {
  BlowupData data(a);
  const RingPtr& ring = data.ring;
  auto yvars = standard_yvars(a);
  switch (method) {
    case ReesMethod::kernel:
      return {rees_by_kernel(a, ring, yvars), identity_order(a.n())};
    case ReesMethod::colon: {
      if (index >= a.n()) throw std::invalid_argument("colon index out of range");
      Polynomial by = data.forms[index] * Polynomial::variable(ring, data.y_var(index));
      return {colon(symmetric_ideal_in(a, ring, yvars), by), identity_order(a.n())};
    }
    case ReesMethod::saturation: {
      // greedy basis moved to the end; the telescoping ideal does not depend
      // on the order of the forms
      std::vector<std::size_t> basis;
      std::vector<std::size_t> others;
      for (std::size_t i = 0; i < a.n(); ++i) {
        auto trial = basis;
        trial.push_back(i);
        if (basis.size() < a.rank() && a.rank_of(trial) == trial.size()) basis = std::move(trial);
        else others.push_back(i);
      }
      Polynomial prod = Polynomial::constant(ring, Rational(1));
      for (auto i : others) prod = prod * data.forms[i];
      std::vector<std::size_t> order = others;
      order.insert(order.end(), basis.begin(), basis.end());
      Arrangement reordered = a.subarrangement(order);
      std::vector<std::size_t> ry;
      for (auto i : order) ry.push_back(yvars[i]);
      return {colon(symmetric_ideal_in(reordered, ring, ry), prod), order};
    }
    case ReesMethod::deletion:
      return {rees_by_deletion(a, ring, yvars), identity_order(a.n())};
  }
  throw std::invalid_argument("unknown Rees method");
}

Ideal rees_ideal(const Arrangement& a, ReesMethod method, std::size_t index) {
  return rees_ideal_with_order(a, method, index).ideal;
}

Ideal fiber_of(const Ideal& rees) { return eliminate(rees, rees.ring()->indices(VarKind::x)); }

Ideal special_fiber_ideal(const Arrangement& a) { return fiber_of(rees_ideal(a, ReesMethod::kernel)); }

// ---------------------------------------------------------------- matrices

PolyMatrix jacobian_dual(const Arrangement& a) {
  RingPtr s = PolyRing::y_ring(a.n());
  std::size_t cols = a.n() == 0 ? 0 : a.n() - 1;
  PolyMatrix b(s, a.k(), cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < a.k(); ++r)
      b(r, c) = Polynomial::variable(s, c).scaled(a.form(c)[r]) - Polynomial::variable(s, c + 1).scaled(a.form(c + 1)[r]);
  return b;
}

Ideal jacobian_dual_minors(const Arrangement& a) {
  PolyMatrix b = jacobian_dual(a);
  if (b.cols() < a.k()) return Ideal(b.ring());
  return Ideal(b.ring(), b.minors(a.k()));
}

PolyMatrix syzygy_matrix(const Arrangement& a) {
  RingPtr r = PolyRing::x_ring(a.k());
  std::size_t n = a.n();
  PolyMatrix phi(r, n, n == 0 ? 0 : n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    phi(i, i) = a.linear_form(i, r);
    phi(i + 1, i) = -a.linear_form(i + 1, r);
  }
  return phi;
}

Ideal minors_ideal_of_syzygy(const Arrangement& a, std::size_t p) {
  PolyMatrix phi = syzygy_matrix(a);
  if (p == 0 || p > phi.cols()) throw std::invalid_argument("minor size out of range");
  return Ideal(phi.ring(), phi.minors(p));
}

// ---------------------------------------------------------------- decomposition

std::vector<PrimaryComponent> primary_component_ideals(const Arrangement& a) {
  RingPtr r = PolyRing::x_ring(a.k());
  std::vector<PrimaryComponent> out;
  for (const auto& flat : intersection_lattice(a)) {
    if (flat.rank != 2) continue;
    std::vector<Polynomial> gens;
    std::vector<std::size_t> chosen;
    for (auto i : flat.closure) {
      auto trial = chosen;
      trial.push_back(i);
      if (a.rank_of(trial) == trial.size()) {
        chosen = std::move(trial);
        gens.push_back(a.linear_form(i, r));
      }
      if (chosen.size() == 2) break;
    }
    out.push_back({flat, power(Ideal(r, std::move(gens)), static_cast<unsigned>(flat.mobius.get_ui()))});
  }
  return out;
}

std::vector<Ideal> kplus1_primes(const Arrangement& a) {
  if (a.n() != a.k() + 1) throw std::invalid_argument("kplus1_primes: requires n = k + 1");
  BlowupData data(a);
  std::vector<Ideal> out{data.maximal_ideal(), rees_ideal(a, ReesMethod::kernel)};
  for (std::size_t j = 0; j < a.n(); ++j) {
    if (!deletion(a, j).coloop) continue;
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < a.n(); ++i)
      if (i != j) gens.push_back(data.forms[i]);
    gens.push_back(Polynomial::variable(data.ring, data.y_var(j)));
    out.emplace_back(data.ring, std::move(gens));
  }
  return out;
}

// ---------------------------------------------------------------- stretched

Ideal stretched_rees_by_kernel(const StretchedArrangement& b) {
  auto fac = stretched_products_factorization(b);
  std::size_t m = b.total();
  RingPtr ring = PolyRing::bigraded(b.support.k(), m);
  RingPtr big = ring->with_aux({"_t"});
  std::size_t t = big->require("_t");
  std::vector<Polynomial> gens;
  for (std::size_t e = 0; e < m; ++e)
    gens.push_back(Polynomial::variable(big, "y" + std::to_string(e + 1)) -
                   Polynomial::variable(big, t) * fac.products[e].map_to(big));
  return extend(eliminate(Ideal(big, std::move(gens)), {t}), ring);
}

Ideal stretched_rees_by_support(const StretchedArrangement& b) {
  auto fac = stretched_products_factorization(b);
  const auto& a = b.support;
  std::size_t k = a.k();
  std::size_t m = b.total();
  RingPtr ring = PolyRing::bigraded(k, m);
  Ideal simple = rees_ideal(a, ReesMethod::kernel);

  // y_i of the support ↦ y_{first(i)} / c, where P_first = c f_i
  RingPtr fiber_ring = PolyRing::x_ring(k);
  std::vector<Polynomial> images;
  for (std::size_t r = 0; r < k; ++r) images.push_back(Polynomial::variable(ring, r));
  std::size_t first = 0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    Polynomial f = Polynomial::constant(fiber_ring, Rational(1));
    for (std::size_t l = 0; l < a.n(); ++l)
      if (l != i) f = f * a.linear_form(l, fiber_ring);
    Rational c = fac.simple_part[first].leading_coeff() / f.leading_coeff();
    images.push_back(Polynomial::variable(ring, k + first).scaled(Rational(1) / c));
    first += b.multiplicities[i];
  }
  std::vector<Polynomial> gens;
  for (const auto& g : simple.generators()) gens.push_back(g.substitute(images));
  for (const auto& rel : fac.relations)
    gens.push_back(Polynomial::variable(ring, k + rel.first) - Polynomial::variable(ring, k + rel.other).scaled(rel.scalar));
  return Ideal(ring, std::move(gens));
}

}  // namespace blowuplab
