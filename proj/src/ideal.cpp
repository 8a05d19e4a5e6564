#include "blowuplab/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace blowuplab {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : state_(std::make_shared<State>()) {
  state_->ring = std::move(ring);
  for (auto& g : generators) {
    if (!same_ring(g.ring(), state_->ring)) throw RingMismatch("Ideal: generator from a different ring");
    if (!g.is_zero()) state_->generators.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::of_variables(RingPtr ring, const std::vector<std::size_t>& vars) {
  std::vector<Polynomial> gens;
  for (auto v : vars) gens.push_back(Polynomial::variable(ring, v));
  return Ideal(std::move(ring), std::move(gens));
}

const GroebnerBasis& Ideal::groebner() const { return groebner(ring()->default_order()); }

const GroebnerBasis& Ideal::groebner(const OrderPtr& order) const {
  std::lock_guard lock(state_->mutex);
  auto it = state_->cache.find(order->key());
  if (it != state_->cache.end()) return *it->second;
  GroebnerBasis gb = state_->generators.empty() ? GroebnerBasis{state_->ring, order, {}}
                                                 : buchberger(state_->generators, order);
  auto [pos, _] = state_->cache.emplace(order->key(), std::make_shared<const GroebnerBasis>(std::move(gb)));
  return *pos->second;
}

void Ideal::prime_cache(GroebnerBasis gb) const {
  std::string key = gb.order->key();
  auto shared = std::make_shared<const GroebnerBasis>(std::move(gb));
  std::lock_guard lock(state_->mutex);
  state_->cache.emplace(std::move(key), std::move(shared));
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return normal_form(f.map_to(ring()), groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_zero() const { return generators().empty(); }

bool Ideal::is_unit() const { return !is_zero() && groebner().is_unit(); }

std::string format_generators(const std::vector<Polynomial>& gens) {
  std::string s = "⟨";
  bool any = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    s += (any ? ", " : "") + g.to_string();
    any = true;
  }
  if (!any) s += "0";
  return s + "⟩";
}

std::string Ideal::to_string() const { return format_generators(generators()); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("ideal_equal: ideals in different rings");
  const auto& ga = a.groebner().elements;
  const auto& gb = b.groebner(a.ring()->default_order()).elements;
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("ideal sum: ideals in different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("ideal product: ideals in different rings");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& a, unsigned e) {
  if (e == 0) return Ideal::unit(a.ring());
  Ideal result = a;
  for (unsigned i = 1; i < e; ++i) {
    // keep the generator list small between multiplications
    Ideal next = product(result, a);
    result = Ideal(a.ring(), next.groebner().elements);
  }
  return result;
}

Ideal extend(const Ideal& a, const RingPtr& target) {
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.map_to(target));
  return Ideal(target, std::move(gens));
}

namespace {

std::string fresh_name(const PolyRing& ring, const std::string& base) {
  std::string name = base;
  for (int i = 1; ring.index_of(name); ++i) name = base + std::to_string(i);
  return name;
}

// Basis elements free of the front variables under a block order eliminating them.
std::vector<Polynomial> eliminate_gens(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                       const std::vector<std::size_t>& front) {
  if (gens.empty()) return {};
  auto order = MonomialOrder::block(ring->nvars(), front);
  auto gb = buchberger(gens, order);
  std::vector<Polynomial> kept;
  for (const auto& e : gb.elements) {
    bool free = std::none_of(front.begin(), front.end(), [&](std::size_t v) { return e.involves(v); });
    if (free) kept.push_back(e);
  }
  return kept;
}

// Wraps basis elements known to form the reduced degrevlex basis of the result.
Ideal with_primed_basis(const RingPtr& target, std::vector<Polynomial> elements) {
  std::vector<Polynomial> moved;
  moved.reserve(elements.size());
  for (const auto& e : elements) moved.push_back(e.map_to(target));
  Ideal out(target, moved);
  std::vector<Polynomial> basis;
  for (auto& m : moved) basis.push_back(m.with_order(target->default_order()));
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return target->default_order()->greater(a.leading_monomial(), b.leading_monomial());
  });
  out.prime_cache(GroebnerBasis{target, target->default_order(), std::move(basis)});
  return out;
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& front) {
  const auto& ring = ideal.ring();
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (std::find(front.begin(), front.end(), v) == front.end()) keep.push_back(v);
  for (auto v : front)
    if (v >= ring->nvars()) throw std::out_of_range("eliminate: variable index out of range");
  auto sub = ring->subring(keep);
  return with_primed_basis(sub, eliminate_gens(ring, ideal.generators(), front));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("intersect: ideals in different rings");
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  const auto& ring = a.ring();
  auto big = ring->with_aux({fresh_name(*ring, "_t")});
  std::size_t t = big->nvars() - 1;
  auto tvar = Polynomial::variable(big, t);
  auto one_minus_t = Polynomial::constant(big, 1) - tvar;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(tvar * g.map_to(big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.map_to(big));
  return with_primed_basis(ring, eliminate_gens(big, gens, {t}));
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersect: empty list");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("colon: division by the zero polynomial");
  auto g = f.map_to(ideal.ring());
  if (g.is_constant()) return ideal;
  auto meet = intersect(ideal, Ideal(ideal.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) {
    auto q = h.divide_exact(g);
    if (!q) throw std::logic_error("colon: intersection generator not divisible by " + g.to_string());
    gens.push_back(q->monic());
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal colon(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) return Ideal::unit(ideal.ring());
  std::vector<Ideal> parts;
  for (const auto& g : by.generators()) parts.push_back(colon(ideal, g));
  return intersect(parts);
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(ideal.ring());
  auto g = f.map_to(ideal.ring());
  if (g.is_constant()) return ideal;
  if (ideal.is_zero()) return ideal;
  const auto& ring = ideal.ring();
  auto big = ring->with_aux({fresh_name(*ring, "_z")});
  std::size_t z = big->nvars() - 1;
  std::vector<Polynomial> gens;
  for (const auto& h : ideal.generators()) gens.push_back(h.map_to(big));
  gens.push_back(Polynomial::constant(big, 1) - Polynomial::variable(big, z) * g.map_to(big));
  return with_primed_basis(ring, eliminate_gens(big, gens, {z}));
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) return Ideal::unit(ideal.ring());
  std::vector<Ideal> parts;
  for (const auto& g : by.generators()) parts.push_back(saturate(ideal, g));
  return intersect(parts);
}

Ideal saturate_iterated(const Ideal& ideal, const Polynomial& f) {
  Ideal current = ideal;
  for (;;) {
    Ideal next = colon(current, f);
    if (ideal_equal(next, current)) return current;
    current = next;
  }
}

}  // namespace blowuplab
