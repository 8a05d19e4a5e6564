#include "blowuplab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace blowuplab {

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(std::vector<Variable> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) {
    throw std::invalid_argument("PolyRing: at most " + std::to_string(kMaxVars) + " variables supported");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i].name == vars_[j].name) throw std::invalid_argument("PolyRing: duplicate variable " + vars_[i].name);
  default_order_ = MonomialOrder::degrevlex(vars_.size());
}

RingPtr PolyRing::bigraded(std::size_t k, std::size_t n) {
  std::vector<Variable> vars;
  for (std::size_t i = 1; i <= k; ++i) vars.push_back({"x" + std::to_string(i), VarKind::x});
  for (std::size_t j = 1; j <= n; ++j) vars.push_back({"y" + std::to_string(j), VarKind::y});
  return std::make_shared<const PolyRing>(std::move(vars));
}

std::size_t PolyRing::count(VarKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(vars_.begin(), vars_.end(), [&](const Variable& v) { return v.kind == kind; }));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw RingMismatch("variable '" + std::string(name) + "' not in ring");
  return *i;
}

std::vector<std::size_t> PolyRing::indices(VarKind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].kind == kind) out.push_back(i);
  return out;
}

RingPtr PolyRing::with_aux(const std::vector<std::string>& names) const {
  auto vars = vars_;
  for (const auto& n : names) vars.push_back({n, VarKind::aux});
  return std::make_shared<const PolyRing>(std::move(vars));
}

RingPtr PolyRing::subring(const std::vector<std::size_t>& keep) const {
  std::vector<Variable> vars;
  for (auto i : keep) vars.push_back(vars_.at(i));
  return std::make_shared<const PolyRing>(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) throw std::invalid_argument("Monomial: too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t i, unsigned e) {
  Monomial m;
  m.set(i, e);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("Monomial: exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<Exponent>(e);
  if (e) mask_ |= (1u << i);
  else mask_ &= ~(1u << i);
}

bool Monomial::divides(const Monomial& other) const {
  if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp_[i]) + other.exp_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("Monomial: exponent overflow");
    m.exp_[i] = static_cast<Exponent>(e);
  }
  m.degree_ = degree_ + other.degree_;
  m.mask_ = mask_ | other.mask_;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp_[i] = static_cast<Exponent>(exp_[i] - other.exp_[i]);
    if (m.exp_[i]) m.mask_ |= (1u << i);
  }
  m.degree_ = degree_ - other.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    m.degree_ += m.exp_[i];
  }
  m.mask_ = a.mask_ | b.mask_;
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    m.degree_ += m.exp_[i];
  }
  m.mask_ = a.mask_ & b.mask_;
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- MonomialOrder

std::string_view order_kind_name(MonomialOrder::Kind kind) {
  switch (kind) {
    case MonomialOrder::Kind::degrevlex: return "degrevlex";
    case MonomialOrder::Kind::deglex: return "deglex";
    case MonomialOrder::Kind::lex: return "lex";
    case MonomialOrder::Kind::block: return "block";
    case MonomialOrder::Kind::permuted: return "permuted";
  }
  return "?";
}

long MonomialOrder::Row::dot(const Monomial& m) const {
  if (total) return m.degree();
  long s = 0;
  for (auto [v, w] : weights) s += long(w) * m[v];
  return s;
}

std::vector<MonomialOrder::Row> MonomialOrder::base_rows(Kind base, const std::vector<std::size_t>& vars,
                                                         bool whole_ring) {
  std::vector<Row> rows;
  auto unit = [](std::size_t v, int w) {
    Row r;
    r.weights.push_back({static_cast<std::uint8_t>(v), w});
    return r;
  };
  if (vars.empty()) return rows;
  if (base == Kind::degrevlex || base == Kind::deglex) {
    Row deg;
    deg.total = whole_ring;
    for (auto v : vars) deg.weights.push_back({static_cast<std::uint8_t>(v), 1});
    rows.push_back(std::move(deg));
  }
  switch (base) {
    case Kind::degrevlex:
      for (std::size_t j = vars.size(); j-- > 1;) rows.push_back(unit(vars[j], -1));
      break;
    case Kind::deglex:
      for (std::size_t j = 0; j + 1 < vars.size(); ++j) rows.push_back(unit(vars[j], 1));
      break;
    case Kind::lex:
      for (auto v : vars) rows.push_back(unit(v, 1));
      break;
    default:
      throw std::invalid_argument("MonomialOrder: base order must be degrevlex, deglex or lex");
  }
  return rows;
}

namespace {
std::vector<std::size_t> iota_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}
}  // namespace

OrderPtr MonomialOrder::degrevlex(std::size_t nvars) {
  return OrderPtr(new MonomialOrder(Kind::degrevlex, nvars, "degrevlex", base_rows(Kind::degrevlex, iota_vars(nvars), true)));
}

OrderPtr MonomialOrder::deglex(std::size_t nvars) {
  return OrderPtr(new MonomialOrder(Kind::deglex, nvars, "deglex", base_rows(Kind::deglex, iota_vars(nvars), true)));
}

OrderPtr MonomialOrder::lex(std::size_t nvars) {
  return OrderPtr(new MonomialOrder(Kind::lex, nvars, "lex", base_rows(Kind::lex, iota_vars(nvars), true)));
}

OrderPtr MonomialOrder::block(std::size_t nvars, std::vector<std::size_t> front, Kind front_kind, Kind back_kind) {
  std::sort(front.begin(), front.end());
  front.erase(std::unique(front.begin(), front.end()), front.end());
  std::vector<std::size_t> back;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!std::binary_search(front.begin(), front.end(), i)) back.push_back(i);
  if (!front.empty() && front.back() >= nvars) throw std::invalid_argument("MonomialOrder::block: variable out of range");
  auto rows = base_rows(front_kind, front, false);
  auto back_rows = base_rows(back_kind, back, false);
  rows.insert(rows.end(), back_rows.begin(), back_rows.end());
  std::string key = "block[" + join_indices(front) + "|" + std::string(order_kind_name(front_kind)) + "|" +
                    std::string(order_kind_name(back_kind)) + "]";
  return OrderPtr(new MonomialOrder(Kind::block, nvars, std::move(key), std::move(rows)));
}

OrderPtr MonomialOrder::permuted(std::vector<std::size_t> perm, Kind base) {
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != iota_vars(perm.size())) throw std::invalid_argument("MonomialOrder::permuted: not a permutation");
  auto rows = base_rows(base, perm, true);
  std::string key = "perm[" + join_indices(perm) + "]:" + std::string(order_kind_name(base));
  return OrderPtr(new MonomialOrder(Kind::permuted, perm.size(), std::move(key), std::move(rows)));
}

OrderPtr MonomialOrder::parse(std::string_view spec, std::size_t nvars) {
  if (spec == "degrevlex") return degrevlex(nvars);
  if (spec == "deglex") return deglex(nvars);
  if (spec == "lex") return lex(nvars);
  if (spec.substr(0, 5) == "perm:") {
    auto rest = spec.substr(5);
    Kind base = Kind::degrevlex;
    auto colon = rest.find(':');
    if (colon != std::string_view::npos) {
      auto b = rest.substr(colon + 1);
      if (b == "lex") base = Kind::lex;
      else if (b == "deglex") base = Kind::deglex;
      else if (b != "degrevlex") throw std::invalid_argument("unknown base order '" + std::string(b) + "'");
      rest = rest.substr(0, colon);
    }
    std::vector<std::size_t> perm;
    std::string token;
    std::istringstream in{std::string(rest)};
    while (std::getline(in, token, ',')) {
      if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("malformed permutation '" + std::string(rest) + "'");
      perm.push_back(std::stoul(token));
    }
    if (perm.size() != nvars) throw std::invalid_argument("permutation length does not match ring size");
    return permuted(std::move(perm), base);
  }
  throw std::invalid_argument("unknown monomial order '" + std::string(spec) + "'");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& row : rows_) {
    long d = row.dot(a) - row.dot(b);
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)), order_(ring_->default_order()) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms, OrderPtr order)
    : ring_(std::move(ring)), order_(order ? std::move(order) : ring_->default_order()), terms_(std::move(terms)) {
  if (order_->nvars() != ring_->nvars()) throw std::invalid_argument("Polynomial: order does not match ring");
  canonicalize();
}

void Polynomial::canonicalize() {
  const auto& ord = *order_;
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  std::vector<Term> t;
  if (c != 0) t.push_back({Monomial{}, c});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw std::out_of_range("Polynomial::variable: index out of range");
  return Polynomial(std::move(ring), {{Monomial::variable(i), Rational(1)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto i = ring->require(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Rational& c) {
  std::vector<Term> t;
  if (c != 0) t.push_back({m, c});
  return Polynomial(std::move(ring), std::move(t));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::with_order(const OrderPtr& order) const {
  if (order == order_ || order->key() == order_->key()) {
    Polynomial p = *this;
    p.order_ = order;
    return p;
  }
  return Polynomial(ring_, terms_, order);
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(1 / leading_coeff());
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1, num = 0;
  for (const auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  for (const auto& t : terms_) {
    Integer v = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  Rational factor(den, num);
  factor.canonicalize();
  if (leading_coeff() < 0) factor = -factor;
  return scaled(factor);
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("polynomials belong to different rings");
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, const MonomialOrder& ord,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  if (other.order_->key() == order_->key()) {
    terms_ = merge_terms(terms_, other.terms_, *order_, false);
  } else {
    auto rhs = other.with_order(order_);
    terms_ = merge_terms(terms_, rhs.terms_, *order_, false);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  if (other.order_->key() == order_->key()) {
    terms_ = merge_terms(terms_, other.terms_, *order_, true);
  } else {
    auto rhs = other.with_order(order_);
    terms_ = merge_terms(terms_, rhs.terms_, *order_, true);
  }
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_, {}, order_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  std::vector<Term> t;
  t.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) t.push_back({m, std::move(c)});
  return Polynomial(ring_, std::move(t), order_);
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_, {}, order_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_, {}, order_);
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return p;  // multiplication by a monomial preserves term order
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1).with_order(order_);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::optional<Bidegree> Polynomial::bidegree() const {
  if (is_zero()) return std::nullopt;
  std::optional<Bidegree> deg;
  for (const auto& t : terms_) {
    Bidegree d;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (ring_->var(i).kind == VarKind::x) d.x += t.mono[i];
      else if (ring_->var(i).kind == VarKind::y) d.y += t.mono[i];
    }
    if (!deg) deg = d;
    else if (!(*deg == d)) return std::nullopt;
  }
  return deg;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.mono[var]) return true;
  return false;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars()) throw std::invalid_argument("substitute: need one image per variable");
  RingPtr target = images.empty() ? ring_ : images.front().ring();
  for (const auto& im : images)
    if (!same_ring(im.ring(), target)) throw RingMismatch("substitute: images in different rings");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (t.mono[v]) prod = prod * power(v, t.mono[v]);
    out += prod;
  }
  return out;
}

Polynomial Polynomial::rename(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ring_->nvars()) throw std::invalid_argument("rename: map size mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t v = 0; v < var_map.size(); ++v) {
      if (!t.mono[v]) continue;
      if (var_map[v] >= target->nvars()) throw RingMismatch("rename: variable " + ring_->var(v).name + " has no image");
      m.set(var_map[v], m[var_map[v]] + t.mono[v]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
  std::vector<std::size_t> map(ring_->nvars(), kMaxVars);
  for (std::size_t v = 0; v < ring_->nvars(); ++v) {
    auto idx = target->index_of(ring_->var(v).name);
    if (idx) map[v] = *idx;
    else if (involves(v)) throw RingMismatch("map_to: variable " + ring_->var(v).name + " missing from target ring");
  }
  return rename(target, map);
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  require_same_ring(d);
  if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
  Polynomial divisor = d.with_order(order_);
  Polynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const auto& lt = rem.terms_.front();
    if (!divisor.leading_monomial().divides(lt.mono)) return std::nullopt;
    Monomial m = lt.mono / divisor.leading_monomial();
    Rational c = lt.coeff / divisor.leading_coeff();
    rem -= divisor.mul_term(m, c);
    quotient.push_back({m, c});
  }
  return Polynomial(ring_, std::move(quotient), order_);
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool unit = t.mono.is_one();
    if (unit) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << "*";
      bool first_var = true;
      for (std::size_t v = 0; v < ring_->nvars(); ++v) {
        if (!t.mono[v]) continue;
        if (!first_var) out << "*";
        out << ring_->var(v).name;
        if (t.mono[v] > 1) out << "^" << t.mono[v];
        first_var = false;
      }
    }
    first = false;
  }
  return out.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  const auto& rhs = other.order_->key() == order_->key() ? other.terms_ : other.with_order(order_).terms_;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == rhs[i].mono) || terms_[i].coeff != rhs[i].coeff) return false;
  return true;
}

Polynomial linear_form(const RingPtr& ring, const RationalVector& coeffs) {
  auto xs = ring->indices(VarKind::x);
  if (coeffs.size() > xs.size()) throw RingMismatch("linear_form: ring has too few x-variables");
  std::vector<Term> t;
  for (std::size_t r = 0; r < coeffs.size(); ++r)
    if (coeffs[r] != 0) t.push_back({Monomial::variable(xs[r]), coeffs[r]});
  return Polynomial(ring, std::move(t));
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  Polynomial parse() {
    auto p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Polynomial t = term();
    acc += negate ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }
  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  Polynomial factor() {
    Polynomial base = primary();
    if (eat('^')) {
      skip();
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }
  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }
  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        return Polynomial::constant(ring_, parse_rational(num + "/" + den));
      }
      return Polynomial::constant(ring_, parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) name += s_[pos_++];
      auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  RingPtr ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) { return Parser(std::move(ring), text).parse(); }

}  // namespace blowuplab
