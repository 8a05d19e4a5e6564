#include "blowuplab/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "blowuplab/blowup.hpp"
#include "blowuplab/hilbert.hpp"

namespace blowuplab {

namespace {

const std::vector<std::pair<CheckKind, std::string>>& kind_table() {
  static const std::vector<std::pair<CheckKind, std::string>> table{
      {CheckKind::fiber_type, "fiber_type"},
      {CheckKind::rees_methods_agree, "rees_methods_agree"},
      {CheckKind::fiber_equals_ot, "fiber_equals_ot"},
      {CheckKind::colon_all_indices, "colon_all_indices"},
      {CheckKind::deletion_restriction, "deletion_restriction"},
      {CheckKind::deletion_colon_equiv, "deletion_colon_equiv"},
      {CheckKind::restricted_ot_in_colon, "restricted_ot_in_colon"},
      {CheckKind::content_saturation, "content_saturation"},
      {CheckKind::primary_decomposition, "primary_decomposition"},
      {CheckKind::g_condition, "g_condition"},
      {CheckKind::generic_jacobian_dual, "generic_jacobian_dual"},
      {CheckKind::hilbert_prediction, "hilbert_prediction"},
      {CheckKind::reduction_number, "reduction_number"},
      {CheckKind::analytic_spread, "analytic_spread"},
      {CheckKind::boolean_bigraded, "boolean_bigraded"},
      {CheckKind::universal_gb_sample, "universal_gb_sample"},
      {CheckKind::kplus1_radical, "kplus1_radical"},
      {CheckKind::stretched_rees, "stretched_rees"},
      {CheckKind::sylvester_forms, "sylvester_forms"},
      {CheckKind::cramer_inclusion, "cramer_inclusion"},
      {CheckKind::symmetric_codimension, "symmetric_codimension"},
      {CheckKind::rees_membership, "rees_membership"},
      {CheckKind::reduction_number_components, "reduction_number_components"},
  };
  return table;
}

struct Outcome {
  CheckStatus status;
  std::string witness;
};

Outcome pass(std::string w = {}) { return {CheckStatus::pass, std::move(w)}; }
Outcome fail(std::string w) { return {CheckStatus::fail, std::move(w)}; }
Outcome skip(std::string w) { return {CheckStatus::skipped, "precondition: " + std::move(w)}; }

template <class T>
class Lazy {
 public:
  template <class F>
  T get(F&& make) {
    std::lock_guard lock(mutex_);
    if (!value_) value_.emplace(make());
    return *value_;
  }

 private:
  std::mutex mutex_;
  std::optional<T> value_;
};

std::string one_based(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s;
}

/// A generator of `a` outside `b`, if any.
std::optional<Polynomial> missing_generator(const Ideal& a, const Ideal& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return g;
  return std::nullopt;
}

std::string inequality_witness(const std::string& left, const Ideal& a, const std::string& right, const Ideal& b) {
  if (auto g = missing_generator(a, b)) return left + " has " + g->to_string() + " outside " + right;
  if (auto g = missing_generator(b, a)) return right + " has " + g->to_string() + " outside " + left;
  return left + " and " + right + " differ";
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

const std::vector<CheckKind>& all_check_kinds() {
  static const std::vector<CheckKind> kinds = [] {
    std::vector<CheckKind> out;
    for (const auto& [k, _] : kind_table()) out.push_back(k);
    return out;
  }();
  return kinds;
}

std::string check_name(CheckKind kind) {
  for (const auto& [k, name] : kind_table())
    if (k == kind) return name;
  return "?";
}

std::optional<CheckKind> parse_check_kind(const std::string& name) {
  for (const auto& [k, n] : kind_table())
    if (n == name) return k;
  return std::nullopt;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------- context

class CheckContext {
 public:
  explicit CheckContext(Instance inst) : instance(std::move(inst)) {
    if (instance.simple) data.emplace(*instance.simple);
  }

  const Arrangement& a() const { return *instance.simple; }
  const RingPtr& ring() const { return data->ring; }

  Ideal sym() { return sym_.get([&] { return in_t(symmetric_ideal(a())); }); }
  Ideal rees() { return rees_.get([&] { return in_t(rees_ideal(a(), ReesMethod::kernel)); }); }
  Ideal ot() { return ot_.get([&] { return ot_ideal(a()); }); }
  Ideal fiber() { return fiber_.get([&] { return fiber_of(rees()); }); }
  std::vector<Circuit> circuits() { return circuits_.get([&] { return blowuplab::circuits(a()); }); }

  /// Moves an ideal of T, R or S into the shared ring T.
  Ideal in_t(const Ideal& i) const { return same_ring(i.ring(), ring()) ? i : extend(i, ring()); }

  Outcome run(CheckKind kind, const CheckOptions& options);

  Instance instance;
  std::optional<BlowupData> data;

 private:
  Outcome fiber_type();
  Outcome rees_methods_agree();
  Outcome fiber_equals_ot();
  Outcome colon_all_indices();
  Outcome deletion_restriction();
  Outcome deletion_colon_equiv();
  Outcome restricted_ot_in_colon();
  Outcome content_saturation();
  Outcome primary_decomposition();
  Outcome g_condition();
  Outcome generic_jacobian_dual();
  Outcome hilbert_prediction();
  Outcome reduction_number_check();
  Outcome analytic_spread();
  Outcome boolean_bigraded();
  Outcome universal_gb_sample(const CheckOptions& options);
  Outcome kplus1_radical();
  Outcome stretched_rees();
  Outcome sylvester_forms();
  Outcome cramer_inclusion();
  Outcome symmetric_codimension();
  Outcome rees_membership();
  Outcome reduction_number_components();

  std::vector<std::size_t> yvars_without(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < a().n(); ++j)
      if (j != i) out.push_back(data->y_var(j));
    return out;
  }
  Polynomial y(std::size_t i) const { return Polynomial::variable(ring(), data->y_var(i)); }

  Lazy<Ideal> sym_;
  Lazy<Ideal> rees_;
  Lazy<Ideal> ot_;
  Lazy<Ideal> fiber_;
  Lazy<std::vector<Circuit>> circuits_;
};

Outcome CheckContext::run(CheckKind kind, const CheckOptions& options) {
  if (kind == CheckKind::stretched_rees) return stretched_rees();
  if (!instance.simple) return skip("simple arrangement required");
  switch (kind) {
    case CheckKind::fiber_type: return fiber_type();
    case CheckKind::rees_methods_agree: return rees_methods_agree();
    case CheckKind::fiber_equals_ot: return fiber_equals_ot();
    case CheckKind::colon_all_indices: return colon_all_indices();
    case CheckKind::deletion_restriction: return deletion_restriction();
    case CheckKind::deletion_colon_equiv: return deletion_colon_equiv();
    case CheckKind::restricted_ot_in_colon: return restricted_ot_in_colon();
    case CheckKind::content_saturation: return content_saturation();
    case CheckKind::primary_decomposition: return primary_decomposition();
    case CheckKind::g_condition: return g_condition();
    case CheckKind::generic_jacobian_dual: return generic_jacobian_dual();
    case CheckKind::hilbert_prediction: return hilbert_prediction();
    case CheckKind::reduction_number: return reduction_number_check();
    case CheckKind::analytic_spread: return analytic_spread();
    case CheckKind::boolean_bigraded: return boolean_bigraded();
    case CheckKind::universal_gb_sample: return universal_gb_sample(options);
    case CheckKind::kplus1_radical: return kplus1_radical();
    case CheckKind::sylvester_forms: return sylvester_forms();
    case CheckKind::cramer_inclusion: return cramer_inclusion();
    case CheckKind::symmetric_codimension: return symmetric_codimension();
    case CheckKind::rees_membership: return rees_membership();
    case CheckKind::reduction_number_components: return reduction_number_components();
    case CheckKind::stretched_rees: break;
  }
  return fail("unknown check");
}

// ---------------------------------------------------------------- checks

Outcome CheckContext::fiber_type() {
  Ideal sum = sym() + in_t(ot());
  if (ideal_equal(rees(), sum)) return pass();
  return fail(inequality_witness("Rees ideal", rees(), "I_1 + OT", sum));
}

Outcome CheckContext::rees_methods_agree() {
  std::string order;
  for (auto method : {ReesMethod::colon, ReesMethod::saturation, ReesMethod::deletion}) {
    auto result = rees_ideal_with_order(a(), method);
    Ideal got = in_t(result.ideal);
    if (!ideal_equal(got, rees()))
      return fail(inequality_witness(rees_method_name(method), got, "kernel", rees()));
    if (method == ReesMethod::saturation) order = one_based(result.order);
  }
  return pass("saturation order " + order);
}

Outcome CheckContext::fiber_equals_ot() {
  if (ideal_equal(fiber(), ot())) return pass();
  return fail(inequality_witness("special fiber", fiber(), "OT", ot()));
}

Outcome CheckContext::colon_all_indices() {
  for (std::size_t i = 0; i < a().n(); ++i) {
    Ideal c = colon(sym(), data->forms[i] * y(i));
    if (!ideal_equal(c, rees()))
      return fail(inequality_witness("I_1 : l" + std::to_string(i + 1) + "*y" + std::to_string(i + 1), c, "Rees ideal", rees()));
  }
  return pass();
}

Outcome CheckContext::deletion_restriction() {
  if (a().n() < 2) return skip("n >= 2");
  for (std::size_t i = 0; i < a().n(); ++i) {
    Deletion del = deletion(a(), i);
    Ideal smaller = rees_by_kernel(del.arrangement, ring(), yvars_without(i));
    Ideal restricted = extend(eliminate(rees(), {data->y_var(i)}), ring());
    if (!ideal_equal(smaller, restricted))
      return fail(inequality_witness("Rees ideal of deletion " + std::to_string(i + 1), smaller,
                                     "Rees ideal restricted", restricted));
  }
  return pass();
}

Outcome CheckContext::deletion_colon_equiv() {
  std::size_t n = a().n();
  if (n < 2) return skip("n >= 2");
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    Deletion del = deletion(a(), i);
    Ideal sym_small = symmetric_ideal_in(del.arrangement, ring(), yvars_without(i));
    Polynomial delta = data->forms[i] * y(i) - data->forms[j] * y(j);
    Ideal lhs = colon(sym_small, delta);
    Ideal rhs = colon(sym_small, data->forms[i]);
    if (!ideal_equal(lhs, rhs))
      return fail(inequality_witness("colon by l" + std::to_string(i + 1) + "*y" + std::to_string(i + 1) + " - l" +
                                         std::to_string(j + 1) + "*y" + std::to_string(j + 1),
                                     lhs, "colon by l" + std::to_string(i + 1), rhs));
  }
  return pass();
}

Outcome CheckContext::restricted_ot_in_colon() {
  std::size_t count = 0;
  for (std::size_t i = 0; i < a().n(); ++i) {
    Ideal restricted = ot_restricted(a(), i);
    for (const auto& g : restricted.generators()) {
      Polynomial prod = data->forms[i] * g.map_to(ring());
      if (!sym().contains(prod)) return fail("l" + std::to_string(i + 1) + " * (" + g.to_string() + ") not in I_1");
      ++count;
    }
  }
  return pass(std::to_string(count) + " memberships");
}

Outcome CheckContext::content_saturation() {
  if (a().n() <= a().k()) return skip("n > k");
  Ideal minors = in_t(jacobian_dual_minors(a()));
  Ideal sat = saturate(sym(), minors);
  Ideal m = data->maximal_ideal();
  if (ideal_equal(sat, m)) return pass();
  return fail(inequality_witness("I_1 : I_k(B)^inf", sat, "mT", m));
}

Outcome CheckContext::primary_decomposition() {
  Ideal prod = products_ideal(a());
  std::vector<Ideal> parts;
  std::string desc;
  for (const auto& comp : primary_component_ideals(a())) {
    parts.push_back(comp.ideal);
    desc += (desc.empty() ? "" : " ") + std::string("{") + one_based(comp.flat.closure) + "}^" + comp.flat.mobius.get_str();
  }
  if (parts.empty()) return skip("rank-2 flats");
  Ideal inter = intersect(parts);
  if (ideal_equal(prod, inter)) return pass(desc);
  return fail(inequality_witness("I", prod, "intersection of components", inter));
}

Outcome CheckContext::g_condition() {
  if (!is_generic(a())) return skip("generic arrangement");
  std::size_t n = a().n();
  std::size_t k = a().k();
  std::string desc;
  for (std::size_t p = n - k + 1; p + 1 <= n; ++p) {
    std::size_t c = codim(minors_ideal_of_syzygy(a(), p));
    desc += (desc.empty() ? "" : " ") + std::string("p=") + std::to_string(p) + ":" + std::to_string(c);
    if (c != n - p + 1)
      return fail("codim I_" + std::to_string(p) + "(phi) = " + std::to_string(c) + ", expected " + std::to_string(n - p + 1));
  }
  return pass(desc);
}

Outcome CheckContext::generic_jacobian_dual() {
  if (!is_generic(a())) return skip("generic arrangement");
  Ideal minors = jacobian_dual_minors(a());
  if (ideal_equal(minors, ot())) return pass();
  return fail(inequality_witness("I_k(B)", minors, "OT", ot()));
}

Outcome CheckContext::hilbert_prediction() {
  HilbertSeries got = hilbert_series(ot());
  HilbertSeries want = ot_hilbert_prediction(a());
  if (got == want) return pass(got.to_string());
  return fail("HS(S/OT) = " + got.to_string() + ", predicted " + want.to_string());
}

Outcome CheckContext::reduction_number_check() {
  std::size_t r = reduction_number(fiber());
  if (r + 1 == a().k()) return pass("r = " + std::to_string(r));
  return fail("h-numerator degree " + std::to_string(r) + ", expected " + std::to_string(a().k() - 1) + "; the matroid has " +
              std::to_string(connected_components(a()).size()) + " connected components");
}

Outcome CheckContext::reduction_number_components() {
  std::size_t r = reduction_number(fiber());
  std::size_t c = connected_components(a()).size();
  if (r + c == a().k()) return pass("r = " + std::to_string(r) + " = k - " + std::to_string(c));
  return fail("h-numerator degree " + std::to_string(r) + ", k - components = " + std::to_string(a().k() - c));
}

Outcome CheckContext::analytic_spread() {
  std::size_t d = krull_dim(fiber());
  if (d == a().k()) return pass("dim = " + std::to_string(d));
  return fail("Krull dimension of the fiber is " + std::to_string(d) + ", expected " + std::to_string(a().k()));
}

Outcome CheckContext::boolean_bigraded() {
  if (a().n() != a().k()) return skip("Boolean arrangement (n = k)");
  std::size_t k = a().k();
  BigradedSeries want;
  want.numerator = {{{0, 0}, Integer(1)}};
  for (std::size_t i = 0; i + 1 < k; ++i) want.numerator = multiply(want.numerator, IntPoly2{{{0, 0}, Integer(1)}, {{1, 1}, Integer(-1)}});
  want.u_exponent = k;
  want.v_exponent = k;
  BigradedSeries got = bigraded_hilbert_series(rees());
  if (got.same_function(want)) return pass(got.to_string());
  return fail("HS(T/Rees) = " + got.to_string() + ", expected " + want.to_string());
}

Outcome CheckContext::universal_gb_sample(const CheckOptions& options) {
  Ideal ot_gens = ot();
  const auto& gens = ot_gens.generators();
  RingPtr s = ot_gens.ring();
  std::size_t nv = s->nvars();
  std::vector<OrderPtr> orders{MonomialOrder::degrevlex(nv), MonomialOrder::deglex(nv), MonomialOrder::lex(nv)};
  std::mt19937_64 rng(options.seed ^ fnv1a(instance.id));
  const MonomialOrder::Kind bases[] = {MonomialOrder::Kind::degrevlex, MonomialOrder::Kind::deglex, MonomialOrder::Kind::lex};
  std::size_t target = std::max<std::size_t>(20, options.sampled_orders);
  std::vector<std::size_t> perm(nv);
  for (std::size_t i = 0; i < nv; ++i) perm[i] = i;
  while (orders.size() < target) {
    for (std::size_t i = nv; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    orders.push_back(MonomialOrder::permuted(perm, bases[orders.size() % 3]));
  }
  for (const auto& ord : orders) {
    std::vector<Polynomial> set;
    for (const auto& g : gens) set.push_back(g.with_order(ord));
    if (auto w = confluence_witness(set, ord)) return fail("order " + ord->key() + ": S-pair remainder " + w->to_string());
  }
  return pass(std::to_string(orders.size()) + " orders, " + std::to_string(gens.size()) + " circuit generators (sampled)");
}

Outcome CheckContext::kplus1_radical() {
  if (a().n() != a().k() + 1) return skip("n = k + 1");
  auto primes = kplus1_primes(a());
  Ideal inter = intersect(primes);
  if (ideal_equal(inter, sym())) return pass(std::to_string(primes.size()) + " primes");
  return fail(inequality_witness("intersection of primes", inter, "I_1", sym()));
}

Outcome CheckContext::stretched_rees() {
  if (!instance.stretched || instance.stretched->is_simple()) return skip("stretched arrangement with a repeated form");
  const auto& b = *instance.stretched;
  auto fac = stretched_products_factorization(b);
  for (std::size_t e = 0; e < fac.products.size(); ++e)
    if (!(fac.products[e] == fac.gcd_part * fac.simple_part[e]))
      return fail("product " + std::to_string(e + 1) + " is not G times P_A entry");
  Ideal kernel = stretched_rees_by_kernel(b);
  Ideal support = stretched_rees_by_support(b);
  if (ideal_equal(kernel, support)) return pass("G = " + fac.gcd_part.to_string());
  return fail(inequality_witness("I(B)", kernel, "<I(A), D_A>", support));
}

Outcome CheckContext::sylvester_forms() {
  auto cs = circuits();
  for (const auto& c : cs) {
    Polynomial g = ot_generator(c, data->y_ring);
    Polynomial s = sylvester_form(a(), c);
    if (!(s == g) && !(s == -g))
      return fail("circuit {" + one_based(c.support) + "}: determinant " + s.to_string() + " vs " + g.to_string());
    // M * (l_{j_1}, ..., l_{j_{m-1}}) = consecutive differences
    PolyMatrix m = sylvester_matrix(a(), c);
    std::vector<std::size_t> j(c.support.begin() + 1, c.support.end());
    j.push_back(c.support.front());
    std::vector<Polynomial> ells;
    for (std::size_t r = 0; r + 1 < j.size(); ++r) ells.push_back(data->forms[j[r]]);
    PolyMatrix mt(ring(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) mt(r, col) = m(r, col).map_to(ring());
    auto lhs = mt.apply(ells);
    for (std::size_t r = 0; r + 1 < j.size(); ++r) {
      Polynomial delta = data->forms[j[r]] * y(j[r]) - data->forms[j[r + 1]] * y(j[r + 1]);
      if (!(lhs[r] == delta)) return fail("circuit {" + one_based(c.support) + "}: row " + std::to_string(r + 1) + " gives " + lhs[r].to_string());
    }
  }
  return pass(std::to_string(cs.size()) + " circuits");
}

Outcome CheckContext::cramer_inclusion() {
  Ideal minors = jacobian_dual_minors(a());
  for (const auto& mu : minors.generators()) {
    Polynomial mt = mu.map_to(ring());
    for (std::size_t r = 0; r < a().k(); ++r) {
      Polynomial prod = Polynomial::variable(ring(), data->x_var(r)) * mt;
      if (!sym().contains(prod)) return fail("x" + std::to_string(r + 1) + " * (" + mu.to_string() + ") not in I_1");
    }
    if (!rees().contains(mt)) return fail("minor " + mu.to_string() + " not in the Rees ideal");
  }
  return pass(std::to_string(minors.generators().size()) + " minors");
}

Outcome CheckContext::symmetric_codimension() {
  std::size_t c = codim(sym());
  std::size_t want = std::min(a().k(), a().n() - 1);
  if (c == want) return pass("codim " + std::to_string(c));
  return fail("codim I_1 = " + std::to_string(c) + ", expected " + std::to_string(want));
}

Outcome CheckContext::rees_membership() {
  if (auto g = missing_generator(sym(), rees())) return fail("I_1 generator " + g->to_string() + " outside the Rees ideal");
  if (auto g = missing_generator(in_t(ot()), rees())) return fail("OT generator " + g->to_string() + " outside the Rees ideal");
  for (std::size_t i = 0; i < a().n(); ++i) {
    if (rees().contains(data->forms[i])) return fail("l" + std::to_string(i + 1) + " lies in the Rees ideal");
    if (rees().contains(y(i))) return fail("y" + std::to_string(i + 1) + " lies in the Rees ideal");
  }
  std::vector<Polynomial> images;
  for (std::size_t r = 0; r < a().k(); ++r) images.push_back(Polynomial::variable(ring(), r));
  for (const auto& f : data->products) images.push_back(f);
  Ideal ot_gens = ot();
  for (const auto& g : ot_gens.generators()) {
    Polynomial v = g.map_to(ring()).substitute(images);
    if (!v.is_zero()) return fail("OT generator " + g.to_string() + " does not vanish on the products");
  }
  return pass();
}

// ---------------------------------------------------------------- sessions

CheckSession::CheckSession(Instance instance) : context_(std::make_unique<CheckContext>(std::move(instance))) {}
CheckSession::~CheckSession() = default;

const Instance& CheckSession::instance() const { return context_->instance; }

CheckReport CheckSession::run(CheckKind kind, const CheckOptions& options) {
  CheckReport report{context_->instance.id, check_name(kind), CheckStatus::pass, {}, 0};
  auto start = std::chrono::steady_clock::now();
  try {
    BudgetScope scope(options.budget);
    Outcome o = context_->run(kind, options);
    report.status = o.status;
    report.witness = std::move(o.witness);
  } catch (const BudgetExceeded& e) {
    report.status = CheckStatus::inconclusive;
    report.witness = std::string("budget exceeded: ") + e.what();
  } catch (const std::exception& e) {
    report.status = CheckStatus::fail;
    report.witness = std::string("error: ") + e.what();
  }
  if (options.timings)
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CheckReport run_check(const Instance& instance, CheckKind kind, const CheckOptions& options) {
  CheckSession session(instance);
  return session.run(kind, options);
}

std::vector<CheckReport> run_battery(const std::vector<Instance>& instances, const std::vector<CheckKind>& kinds,
                                     const CheckOptions& options, unsigned jobs) {
  std::vector<std::unique_ptr<CheckSession>> sessions;
  for (const auto& inst : instances) sessions.push_back(std::make_unique<CheckSession>(inst));
  std::vector<std::pair<std::size_t, CheckKind>> tasks;
  for (std::size_t i = 0; i < sessions.size(); ++i)
    for (auto k : kinds) tasks.emplace_back(i, k);
  std::vector<CheckReport> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
      reports[t] = sessions[tasks[t].first]->run(tasks[t].second, options);
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs && j < tasks.size(); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& x, const CheckReport& y) {
    return std::tie(x.arrangement, x.check) < std::tie(y.arrangement, y.check);
  });
  return reports;
}

int exit_code_for(const std::vector<CheckReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::fail) return 1;
    if (r.status == CheckStatus::inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["arrangement"] = r.arrangement;
  j["check"] = r.check;
  j["status"] = status_name(r.status);
  if (!r.witness.empty()) j["witness"] = r.witness;
  j["millis"] = r.millis;
  return j;
}

std::string to_text(const CheckReport& r) {
  std::string s = r.arrangement + "  " + r.check + "  " + status_name(r.status);
  if (!r.witness.empty()) s += "  " + r.witness;
  return s;
}

// ---------------------------------------------------------------- corpus

namespace {

Instance simple(std::string id, std::size_t k, const std::vector<std::vector<int>>& forms) {
  std::vector<RationalVector> fs;
  for (const auto& f : forms) {
    RationalVector v;
    for (int c : f) v.emplace_back(c);
    fs.push_back(std::move(v));
  }
  Instance out;
  out.id = std::move(id);
  out.simple.emplace(k, std::move(fs));
  return out;
}

}  // namespace

std::vector<Instance> builtin_corpus() {
  std::vector<Instance> out;
  for (std::size_t k = 2; k <= 4; ++k) {
    Instance b;
    b.id = "boolean_k" + std::to_string(k);
    b.simple.emplace(Arrangement::boolean(k));
    out.push_back(std::move(b));
  }
  std::vector<std::vector<int>> pencil{{1, 0}, {0, 1}};
  for (int n = 3; n <= 6; ++n) {
    pencil.push_back({1, n - 2});
    out.push_back(simple("generic_k2_n" + std::to_string(n), 2, pencil));
  }
  out.push_back(simple("pencil_pm_k2_n4", 2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}));
  out.push_back(simple("circuit4_k3_n4", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  out.push_back(simple("coloop_k3_n4", 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  out.push_back(simple("two_triples_k3_n5", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}}));
  // x1-x2, x1-x3, x2-x3 in the coordinates u = x1-x2, v = x2-x3
  out.push_back(simple("braid_a2_k2_n3", 2, {{1, 0}, {1, 1}, {0, 1}}));

  Instance st;
  st.id = "stretched_k2_m4";
  st.stretched.emplace(StretchedArrangement{Arrangement(2, {{1, 0}, {0, 1}, {1, 1}}), {2, 1, 1},
                                            {{Rational(1), Rational(-1)}, {Rational(1)}, {Rational(1)}}});
  st.stretched->validate();
  out.push_back(std::move(st));
  return out;
}

}  // namespace blowuplab
