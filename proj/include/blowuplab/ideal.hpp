#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "blowuplab/groebner.hpp"
#include "blowuplab/poly.hpp"

namespace blowuplab {

/// Generator list plus a shared cache of reduced Groebner bases, one per term
/// order. Copies share the cache.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  static Ideal unit(RingPtr ring);
  /// Ideal generated by the listed variables.
  static Ideal of_variables(RingPtr ring, const std::vector<std::size_t>& vars);

  const RingPtr& ring() const { return state_->ring; }
  const std::vector<Polynomial>& generators() const { return state_->generators; }

  /// Reduced basis under the ring's default order (degrevlex).
  const GroebnerBasis& groebner() const;
  const GroebnerBasis& groebner(const OrderPtr& order) const;
  /// Records a basis already known to be the reduced basis under gb.order.
  void prime_cache(GroebnerBasis gb) const;

  bool contains(const Polynomial& f) const;
  /// other is a subset of this ideal
  bool contains(const Ideal& other) const;
  bool is_zero() const;
  bool is_unit() const;

  /// "⟨g1, g2, ...⟩" over the generators, "⟨0⟩" for the zero ideal.
  std::string to_string() const;

 private:
  struct State {
    RingPtr ring;
    std::vector<Polynomial> generators;
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> cache;
  };
  std::shared_ptr<State> state_;
};

std::string format_generators(const std::vector<Polynomial>& gens);

/// Equality of ideals (not generator lists): compares reduced bases under
/// the shared default order.
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, unsigned e);
/// Moves the ideal into a ring that contains its variables (matched by name).
Ideal extend(const Ideal& a, const RingPtr& target);

/// I ∩ K[remaining variables], returned in the subring of remaining variables.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& front);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);
/// (I : f), by intersecting with ⟨f⟩ and dividing.
Ideal colon(const Ideal& ideal, const Polynomial& f);
/// (I : J) as the intersection of (I : g) over the generators g of J.
Ideal colon(const Ideal& ideal, const Ideal& by);
/// (I : f^∞) via one auxiliary variable z and the relation 1 - z f.
Ideal saturate(const Ideal& ideal, const Polynomial& f);
/// (I : J^∞) as the intersection of (I : g^∞) over the generators g of J.
Ideal saturate(const Ideal& ideal, const Ideal& by);
/// (I : f^∞) by iterating colons until they stabilise.
Ideal saturate_iterated(const Ideal& ideal, const Polynomial& f);

}  // namespace blowuplab
