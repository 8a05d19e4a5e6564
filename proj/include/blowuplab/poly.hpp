#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blowuplab/exactnum.hpp"

namespace blowuplab {

inline constexpr std::size_t kMaxVars = 32;

/// Raised when polynomials from different rings are combined.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class VarKind : std::uint8_t { x, y, aux };

struct Bidegree {
  unsigned x = 0;
  unsigned y = 0;
  bool operator==(const Bidegree&) const = default;
};

class MonomialOrder;
class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;
using OrderPtr = std::shared_ptr<const MonomialOrder>;

/// Polynomial ring over Q with named variables. The standard layout is
/// x1..xk followed by y1..yn, bigraded by deg x = (1,0), deg y = (0,1).
/// Auxiliary variables (elimination tags) carry bidegree (0,0).
class PolyRing {
 public:
  struct Variable {
    std::string name;
    VarKind kind;
    bool operator==(const Variable&) const = default;
  };

  explicit PolyRing(std::vector<Variable> vars);

  /// K[x1..xk, y1..yn].
  static RingPtr bigraded(std::size_t k, std::size_t n);
  /// K[x1..xk].
  static RingPtr x_ring(std::size_t k) { return bigraded(k, 0); }
  /// K[y1..yn].
  static RingPtr y_ring(std::size_t n) { return bigraded(0, n); }

  std::size_t nvars() const { return vars_.size(); }
  std::size_t count(VarKind kind) const;
  const Variable& var(std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Index of the variable with the given name; throws RingMismatch if absent.
  std::size_t require(std::string_view name) const;

  /// Indices of all variables of the given kind, in ring order.
  std::vector<std::size_t> indices(VarKind kind) const;

  /// Same ring with extra auxiliary variables appended.
  RingPtr with_aux(const std::vector<std::string>& names) const;
  /// Ring keeping only the listed variable indices (in increasing order).
  RingPtr subring(const std::vector<std::size_t>& keep) const;

  /// Degree-reverse-lexicographic order in ring variable order.
  const OrderPtr& default_order() const { return default_order_; }

  bool operator==(const PolyRing& other) const { return vars_ == other.vars_; }

 private:
  std::vector<Variable> vars_;
  OrderPtr default_order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t i, unsigned e = 1);

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  std::uint32_t support() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return mask_ == other.mask_ && exp_ == other.exp_; }
  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exp_{};
  unsigned degree_ = 0;
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term order represented by an integer weight matrix; comparison is
/// lexicographic on the weight rows.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, deglex, lex, block, permuted };

  static OrderPtr degrevlex(std::size_t nvars);
  static OrderPtr deglex(std::size_t nvars);
  static OrderPtr lex(std::size_t nvars);
  /// Elimination order: the `front` variables are compared first with
  /// `front_kind`, the remaining ones with `back_kind`.
  static OrderPtr block(std::size_t nvars, std::vector<std::size_t> front,
                        Kind front_kind = Kind::degrevlex, Kind back_kind = Kind::degrevlex);
  /// `base` applied to variables ranked perm[0] > perm[1] > ...
  static OrderPtr permuted(std::vector<std::size_t> perm, Kind base);

  /// Parses "degrevlex", "deglex", "lex", or "perm:<i,j,...>[:base]" (0-based).
  static OrderPtr parse(std::string_view spec, std::size_t nvars);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::string& key() const { return key_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  struct Row {
    bool total = false;  // weight 1 on every variable
    std::vector<std::pair<std::uint8_t, int>> weights;
    long dot(const Monomial& m) const;
  };

  MonomialOrder(Kind kind, std::size_t nvars, std::string key, std::vector<Row> rows)
      : kind_(kind), nvars_(nvars), key_(std::move(key)), rows_(std::move(rows)) {}
  static std::vector<Row> base_rows(Kind base, const std::vector<std::size_t>& vars, bool whole_ring);

  Kind kind_;
  std::size_t nvars_;
  std::string key_;
  std::vector<Row> rows_;
};

std::string_view order_kind_name(MonomialOrder::Kind kind);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over Q; terms strictly decreasing in the attached order,
/// no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, std::vector<Term> terms, OrderPtr order = nullptr);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c);
  /// Parses expressions built from rationals, variable names, + - * ^ and parentheses.
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const OrderPtr& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  unsigned total_degree() const;

  Polynomial with_order(const OrderPtr& order) const;
  Polynomial monic() const;
  /// Divides by the gcd of integer numerators after clearing denominators; sign of the leading term made positive.
  Polynomial primitive() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Bidegree if every term has the same one.
  std::optional<Bidegree> bidegree() const;
  bool is_homogeneous() const;
  /// True if some term involves the variable.
  bool involves(std::size_t var) const;

  /// Replaces variable i by images[i] (all images in one common ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Renames variables: variable i goes to target variable var_map[i].
  Polynomial rename(const RingPtr& target, const std::vector<std::size_t>& var_map) const;
  /// Moves into a ring containing every variable used here, matched by name.
  Polynomial map_to(const RingPtr& target) const;
  /// Exact quotient by `d`, or nullopt if `d` does not divide.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  void canonicalize();
  void require_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);

/// Linear form sum_r coeffs[r] * x_{r+1} in a ring with at least coeffs.size() x-variables.
Polynomial linear_form(const RingPtr& ring, const RationalVector& coeffs);

}  // namespace blowuplab
