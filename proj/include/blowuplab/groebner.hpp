#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "blowuplab/poly.hpp"

namespace blowuplab {

/// Resource limits for Groebner computations. Exceeding any of them raises
/// BudgetExceeded; a partial basis is never returned.
struct Budget {
  std::size_t max_basis = 4000;
  unsigned max_degree = 120;
  std::size_t max_reductions = 20'000'000;
  std::int64_t timeout_ms = 0;  // 0 disables the wall-clock limit
  bool verify = true;           // S-pair confluence post-check on every basis
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Installs a budget for Groebner computations on the current thread.
class BudgetScope {
 public:
  explicit BudgetScope(const Budget& budget);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

  static const Budget& current();
  /// Throws BudgetExceeded once the wall-clock limit of the innermost scope has passed.
  static void check_deadline();

  struct Frame;

 private:
  Frame* previous_;
  Frame* frame_;
};

/// Reduced Groebner basis: monic elements sorted by decreasing leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  OrderPtr order;
  std::vector<Polynomial> elements;

  bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
  bool is_zero() const { return elements.empty(); }
  std::vector<Monomial> leading_monomials() const;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy (smallest lcm degree, ties broken by the term order).
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const OrderPtr& order);

/// Remainder of f modulo a reduced basis (unique).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Full reduction of f by an arbitrary divisor list under `order`.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors, const OrderPtr& order);

/// Buchberger criterion applied to the set as given: every S-pair with
/// non-coprime leading monomials reduces to zero modulo the set.
/// Returns the first nonzero remainder found, or nullopt if confluent.
std::optional<Polynomial> confluence_witness(const std::vector<Polynomial>& set, const OrderPtr& order);

inline bool is_groebner_basis(const std::vector<Polynomial>& set, const OrderPtr& order) {
  return !confluence_witness(set, order).has_value();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Counters from the most recent buchberger() call on this thread.
struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
};
const GroebnerStats& last_groebner_stats();

}  // namespace blowuplab
