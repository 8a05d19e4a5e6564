#include "blowuplab/groebner.hpp"

#include <algorithm>
#include <string>

namespace blowuplab {

// ---------------------------------------------------------------- budgets

struct BudgetScope::Frame {
  Budget budget;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline;
};

namespace {
thread_local BudgetScope::Frame* g_frame = nullptr;
const Budget kDefaultBudget{};
thread_local GroebnerStats g_stats;
}  // namespace

BudgetScope::BudgetScope(const Budget& budget) : previous_(g_frame) {
  auto now = std::chrono::steady_clock::now();
  frame_ = new Frame{budget, now + std::chrono::milliseconds(budget.timeout_ms), budget.timeout_ms > 0};
  // an inner scope may not extend the deadline of an enclosing one
  if (previous_ && previous_->has_deadline && (!frame_->has_deadline || previous_->deadline < frame_->deadline)) {
    frame_->deadline = previous_->deadline;
    frame_->has_deadline = true;
  }
  g_frame = frame_;
}

BudgetScope::~BudgetScope() {
  g_frame = previous_;
  delete frame_;
}

const Budget& BudgetScope::current() { return g_frame ? g_frame->budget : kDefaultBudget; }

void BudgetScope::check_deadline() {
  if (g_frame && g_frame->has_deadline && std::chrono::steady_clock::now() > g_frame->deadline)
    throw BudgetExceeded("wall-clock budget exceeded");
}

const GroebnerStats& last_groebner_stats() { return g_stats; }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.leading_monomial());
  return out;
}

// ---------------------------------------------------------------- reduction kernel

namespace {

using Terms = std::vector<Term>;

struct StepCounter {
  std::size_t steps = 0;
  std::size_t limit;
  void tick() {
    ++steps;
    ++g_stats.reduction_steps;
    if (steps > limit) throw BudgetExceeded("reduction budget exceeded");
    if ((steps & 255u) == 0) BudgetScope::check_deadline();
  }
};

// h[pos+1..] - c * m * g[1..], merged; the leading terms cancel by construction.
Terms cancel_lead(const Terms& h, std::size_t pos, const Terms& g, const Monomial& m, const Rational& c,
                  const MonomialOrder& ord) {
  Terms out;
  out.reserve(h.size() - pos + g.size());
  std::size_t i = pos + 1, j = 1;
  Rational tmp;
  while (i < h.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = (i == h.size()) ? -1 : ord.compare(h[i].mono, gm);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      tmp = g[j].coeff * c;
      out.push_back({gm, -tmp});
      ++j;
    } else {
      tmp = h[i].coeff - g[j].coeff * c;
      if (tmp != 0) out.push_back({gm, tmp});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Divisor {
  const Terms* terms;
  Monomial lm;
};

const Divisor* find_divisor(const std::vector<Divisor>& divs, const Monomial& m) {
  for (const auto& d : divs)
    if (d.lm.divides(m)) return &d;
  return nullptr;
}

// Full reduction when `full`, otherwise stops at the first irreducible leading term.
Terms reduce_terms(Terms h, const std::vector<Divisor>& divs, const MonomialOrder& ord, bool full,
                   StepCounter& counter) {
  Terms rem;
  std::size_t pos = 0;
  while (pos < h.size()) {
    const Divisor* d = find_divisor(divs, h[pos].mono);
    if (!d) {
      if (!full) {
        rem.insert(rem.end(), h.begin() + static_cast<std::ptrdiff_t>(pos), h.end());
        return rem;
      }
      rem.push_back(h[pos++]);
      continue;
    }
    counter.tick();
    const Terms& g = *d->terms;
    Rational c = h[pos].coeff / g.front().coeff;
    Monomial m = h[pos].mono / d->lm;
    h = cancel_lead(h, pos, g, m, c, ord);
    pos = 0;
  }
  return rem;
}

void make_monic(Terms& t) {
  if (t.empty() || t.front().coeff == 1) return;
  Rational inv = 1 / t.front().coeff;
  for (auto& x : t) x.coeff *= inv;
}

Terms spoly_terms(const Terms& f, const Terms& g, const MonomialOrder& ord) {
  Monomial l = Monomial::lcm(f.front().mono, g.front().mono);
  Monomial mf = l / f.front().mono;
  Monomial mg = l / g.front().mono;
  // (1/lc f) mf f - (1/lc g) mg g
  Terms a;
  a.reserve(f.size());
  Rational cf = 1 / f.front().coeff;
  for (const auto& t : f) a.push_back({t.mono * mf, t.coeff * cf});
  Rational cg = 1 / g.front().coeff;
  return cancel_lead(a, 0, g, mg, cg, ord);
}

Terms terms_in_order(const Polynomial& p, const OrderPtr& order) { return p.with_order(order).terms(); }

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  auto gg = g.with_order(f.order());
  return Polynomial(f.ring(), spoly_terms(f.terms(), gg.terms(), *f.order()), f.order());
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors, const OrderPtr& order) {
  std::vector<Terms> store;
  store.reserve(divisors.size());
  for (const auto& d : divisors)
    if (!d.is_zero()) store.push_back(terms_in_order(d, order));
  std::vector<Divisor> divs;
  for (const auto& t : store) divs.push_back({&t, t.front().mono});
  StepCounter counter{0, BudgetScope::current().max_reductions};
  auto rem = reduce_terms(terms_in_order(f, order), divs, *order, true, counter);
  return Polynomial(f.ring(), std::move(rem), order);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring)) throw RingMismatch("normal_form: ring mismatch");
  return reduce(f, gb.elements, gb.order);
}

std::optional<Polynomial> confluence_witness(const std::vector<Polynomial>& set, const OrderPtr& order) {
  std::vector<Terms> store;
  for (const auto& p : set)
    if (!p.is_zero()) store.push_back(terms_in_order(p, order));
  if (store.empty()) return std::nullopt;
  std::vector<Divisor> divs;
  for (const auto& t : store) divs.push_back({&t, t.front().mono});
  StepCounter counter{0, BudgetScope::current().max_reductions};
  for (std::size_t i = 0; i < store.size(); ++i)
    for (std::size_t j = i + 1; j < store.size(); ++j) {
      if (divs[i].lm.coprime(divs[j].lm)) continue;
      auto r = reduce_terms(spoly_terms(store[i], store[j], *order), divs, *order, false, counter);
      if (!r.empty()) return Polynomial(set.front().ring(), std::move(r), order);
    }
  return std::nullopt;
}

// ---------------------------------------------------------------- Buchberger

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const OrderPtr& order) {
  const Budget& budget = BudgetScope::current();
  g_stats = {};
  if (generators.empty()) throw std::invalid_argument("buchberger: no generators (ring unknown)");
  RingPtr ring = generators.front().ring();
  for (const auto& g : generators)
    if (!same_ring(g.ring(), ring)) throw RingMismatch("buchberger: generators from different rings");
  if (order->nvars() != ring->nvars()) throw std::invalid_argument("buchberger: order does not match ring");
  const MonomialOrder& ord = *order;

  GroebnerBasis result{ring, order, {}};
  auto unit_basis = [&] {
    result.elements = {Polynomial::constant(ring, 1).with_order(order)};
    return result;
  };

  std::vector<Terms> polys;   // every element ever added
  std::vector<bool> active;   // still part of the current basis
  std::vector<Pair> pairs;
  StepCounter counter{0, budget.max_reductions};

  auto divisor_list = [&] {
    std::vector<Divisor> divs;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) divs.push_back({&polys[i], polys[i].front().mono});
    return divs;
  };

  // Gebauer-Moeller update with the new element h = polys.back().
  auto update = [&] {
    const std::size_t h = polys.size() - 1;
    const Monomial& lh = polys[h].front().mono;
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) fresh.push_back({g, h, Monomial::lcm(polys[g].front().mono, lh)});
    // chain criterion among the new pairs, keeping coprime pairs for the moment
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const auto& p = fresh[a];
      bool coprime = polys[p.i].front().mono.coprime(lh);
      bool drop = false;
      if (!coprime) {
        for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
          if (a == b) continue;
          const auto& q = fresh[b];
          if (!q.lcm.divides(p.lcm)) continue;
          // strict divisibility, or equal lcm with the earlier pair winning
          if (!(q.lcm == p.lcm) || b < a) drop = true;
        }
      }
      if (!drop) kept.push_back(p);
    }
    // product criterion
    std::vector<Pair> added;
    for (auto& p : kept)
      if (!polys[p.i].front().mono.coprime(lh)) added.push_back(std::move(p));
    // chain criterion on old pairs
    std::vector<Pair> survivors;
    survivors.reserve(pairs.size());
    for (auto& p : pairs) {
      if (lh.divides(p.lcm) && !(Monomial::lcm(polys[p.i].front().mono, lh) == p.lcm) &&
          !(Monomial::lcm(polys[p.j].front().mono, lh) == p.lcm))
        continue;
      survivors.push_back(std::move(p));
    }
    pairs = std::move(survivors);
    pairs.insert(pairs.end(), added.begin(), added.end());
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && lh.divides(polys[g].front().mono)) active[g] = false;
    std::size_t live = static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
    if (live > budget.max_basis) throw BudgetExceeded("basis size budget exceeded");
  };

  auto add = [&](Terms t) {
    make_monic(t);
    polys.push_back(std::move(t));
    active.push_back(true);
    update();
  };

  // seed with the input, smallest leading monomial first
  std::vector<Terms> input;
  for (const auto& g : generators)
    if (!g.is_zero()) input.push_back(terms_in_order(g, order));
  std::stable_sort(input.begin(), input.end(),
                   [&](const Terms& a, const Terms& b) { return ord.compare(a.front().mono, b.front().mono) < 0; });
  for (auto& t : input) {
    auto divs = divisor_list();
    auto r = reduce_terms(std::move(t), divs, ord, true, counter);
    if (r.empty()) continue;
    if (r.front().mono.is_one()) return unit_basis();
    add(std::move(r));
  }
  if (polys.empty()) return result;

  while (!pairs.empty()) {
    BudgetScope::check_deadline();
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      int c = ord.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    ++g_stats.pairs_considered;
    if (p.lcm.degree() > budget.max_degree) throw BudgetExceeded("degree budget exceeded");
    auto divs = divisor_list();
    auto r = reduce_terms(spoly_terms(polys[p.i], polys[p.j], ord), divs, ord, false, counter);
    ++g_stats.pairs_reduced;
    if (r.empty()) {
      ++g_stats.zero_reductions;
      continue;
    }
    if (r.front().mono.is_one()) return unit_basis();
    r = reduce_terms(std::move(r), divs, ord, true, counter);
    add(std::move(r));
  }

  // reduced basis: active elements have pairwise non-dividing leading monomials
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (active[i]) idx.push_back(i);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return ord.compare(polys[a].front().mono, polys[b].front().mono) < 0; });
  for (std::size_t a = 0; a < idx.size(); ++a) {
    std::vector<Divisor> others;
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (b != a) others.push_back({&polys[idx[b]], polys[idx[b]].front().mono});
    Terms& t = polys[idx[a]];
    Terms tail(t.begin() + 1, t.end());
    Terms red = reduce_terms(std::move(tail), others, ord, true, counter);
    red.insert(red.begin(), t.front());
    t = std::move(red);
  }
  std::reverse(idx.begin(), idx.end());
  for (auto i : idx) result.elements.emplace_back(ring, polys[i], order);

  if (budget.verify) {
    if (auto w = confluence_witness(result.elements, order))
      throw std::logic_error("buchberger: S-pair post-check failed with remainder " + w->to_string());
  }
  return result;
}

}  // namespace blowuplab
