#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blowuplab/arrangement.hpp"
#include "blowuplab/blowup.hpp"
#include "blowuplab/checks.hpp"
#include "blowuplab/groebner.hpp"
#include "blowuplab/hilbert.hpp"
#include "blowuplab/ideal.hpp"

using namespace blowuplab;

namespace {

struct Named {
  std::string id;
  Arrangement a;
};

std::vector<Named> simple_corpus() {
  std::vector<Named> out;
  for (const auto& inst : builtin_corpus())
    if (inst.simple) out.push_back({inst.id, *inst.simple});
  return out;
}

// Collects the members that violate a criterion.
struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> bad;
  void record(const std::string& what, bool ok) {
    ++checked;
    if (!ok) bad.push_back(what);
  }
  std::string summary() const {
    std::ostringstream s;
    s << checked << " cases";
    if (!bad.empty()) {
      s << ", failing:";
      for (const auto& b : bad) s << " " << b;
    }
    return s.str();
  }
};

bool same_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Tally rees_agreement(const std::vector<Named>& corpus) {
  Tally t;
  for (const auto& [id, a] : corpus) {
    auto oracle = rees_ideal(a, ReesMethod::kernel);
    for (auto m : {ReesMethod::colon, ReesMethod::saturation, ReesMethod::deletion})
      t.record(id + "/" + rees_method_name(m), ideal_equal(rees_ideal(a, m), oracle));
  }
  return t;
}

Tally fiber_type(const std::vector<Named>& corpus) {
  Tally t;
  for (const auto& [id, a] : corpus) {
    BlowupData d(a);
    auto expected = symmetric_ideal(a) + extend(ot_ideal(a), d.ring);
    t.record(id, ideal_equal(rees_ideal(a, ReesMethod::kernel), expected));
  }
  return t;
}

Tally fiber_is_ot(const std::vector<Named>& corpus) {
  Tally t;
  for (const auto& [id, a] : corpus) t.record(id, ideal_equal(fiber_of(rees_ideal(a, ReesMethod::kernel)), ot_ideal(a)));
  return t;
}

Tally hilbert_identity(const std::vector<Named>& corpus) {
  Tally t;
  for (const auto& [id, a] : corpus) t.record(id, hilbert_series(ot_ideal(a)) == ot_hilbert_prediction(a));
  return t;
}

Tally numerical_invariants(const std::vector<Named>& corpus) {
  Tally t;
  for (const auto& [id, a] : corpus) {
    auto fiber = special_fiber_ideal(a);
    std::size_t dim = krull_dim(fiber);
    std::size_t r = reduction_number(fiber);
    std::ostringstream what;
    what << id << "(dim=" << dim << ",r=" << r << ",k=" << a.k() << ")";
    t.record(what.str(), dim == a.k() && r + 1 == a.k());
  }
  return t;
}

Tally boolean_bigraded() {
  Tally t;
  for (std::size_t k = 2; k <= 4; ++k) {
    auto hs = bigraded_hilbert_series(rees_ideal(Arrangement::boolean(k), ReesMethod::kernel));
    IntPoly2 num{{{0, 0}, 1}};
    for (std::size_t i = 0; i + 1 < k; ++i) num = multiply(num, IntPoly2{{{0, 0}, 1}, {{1, 1}, -1}});
    t.record("boolean_k" + std::to_string(k), hs.same_function(BigradedSeries{num, k, k}));
  }
  return t;
}

Tally sylvester(const std::vector<Named>& corpus) {
  Tally t;
  for (const auto& [id, a] : corpus) {
    BlowupData d(a);
    for (const auto& c : circuits(a))
      t.record(id, same_up_to_sign(sylvester_form(a, c).map_to(d.ring), ot_generator(c, d.ring)));
  }
  return t;
}

Tally jacobian_dual(const std::vector<Named>& corpus) {
  Tally t;
  for (const auto& [id, a] : corpus) {
    BlowupData d(a);
    auto minors = jacobian_dual_minors(a);
    if (is_generic(a)) t.record(id + "/generic", ideal_equal(minors, ot_ideal(a)));
    auto sym = symmetric_ideal(a);
    bool inside = true;
    Ideal lifted = extend(minors, d.ring);
    for (const auto& g : lifted.generators())
      for (std::size_t r = 0; r < a.k(); ++r) inside = inside && sym.contains(Polynomial::variable(d.ring, r) * g);
    t.record(id + "/cramer", inside);
  }
  return t;
}

Tally primary_decomposition(const std::vector<Named>& corpus) {
  Tally t;
  for (const auto& [id, a] : corpus) {
    if (a.k() != 2 && a.k() != 3) continue;
    std::vector<Ideal> parts;
    for (const auto& c : primary_component_ideals(a)) parts.push_back(c.ideal);
    t.record(id, ideal_equal(intersect(parts), products_ideal(a)));
  }
  return t;
}

Tally through_checks(const std::vector<CheckKind>& kinds) {
  Tally t;
  auto reports = run_battery(builtin_corpus(), kinds, {}, 1);
  for (const auto& r : reports) {
    if (r.status == CheckStatus::skipped) continue;
    t.record(r.arrangement + "/" + r.check, r.status == CheckStatus::pass);
  }
  return t;
}

Tally deletion_restriction(const std::vector<Named>& corpus) {
  Tally t = through_checks(
      {CheckKind::deletion_restriction, CheckKind::restricted_ot_in_colon, CheckKind::deletion_colon_equiv, CheckKind::kplus1_radical});
  // direct: I(A') = I(A) ∩ T' for the last form
  for (const auto& [id, a] : corpus) {
    if (a.n() < 2) continue;
    BlowupData d(a);
    std::size_t i = a.n() - 1;
    auto restricted = eliminate(rees_ideal(a, ReesMethod::kernel), {d.y_var(i)});
    auto sub = deletion(a, i).arrangement;
    std::vector<std::size_t> yvars;
    for (std::size_t j = 0; j < i; ++j) yvars.push_back(restricted.ring()->require("y" + std::to_string(j + 1)));
    t.record(id + "/direct", ideal_equal(restricted, rees_by_kernel(sub, restricted.ring(), yvars)));
  }
  bool k3_radical = false;
  for (const auto& [id, a] : corpus)
    if (a.k() == 3 && a.n() == 4) {
      k3_radical = true;
      t.record(id + "/radical", ideal_equal(intersect(kplus1_primes(a)), symmetric_ideal(a)));
    }
  t.record("k3_radical_present", k3_radical);
  return t;
}

Tally g_condition(const std::vector<Named>& corpus) {
  Tally t;
  for (const auto& [id, a] : corpus) {
    if (!is_generic(a)) continue;
    std::size_t n = a.n();
    for (std::size_t p = n - a.k() + 1; p <= n - 1; ++p) {
      std::size_t c = codim(minors_ideal_of_syzygy(a, p));
      t.record(id + "/p=" + std::to_string(p), c == n - p + 1);
    }
  }
  return t;
}

Tally gb_self_checks(const std::vector<Named>& corpus) {
  Tally t;
  std::mt19937 rng(1234);
  for (const auto& [id, a] : corpus) {
    auto rees = rees_ideal(a, ReesMethod::kernel);
    const auto& gb = rees.groebner();
    t.record(id + "/confluent", is_groebner_basis(gb.elements, gb.order));
    auto gens = rees.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    auto again = buchberger(gens, gb.order);
    t.record(id + "/canonical", again.elements == gb.elements);
  }
  Tally sampled = through_checks({CheckKind::universal_gb_sample});
  t.checked += sampled.checked;
  t.bad.insert(t.bad.end(), sampled.bad.begin(), sampled.bad.end());
  CheckOptions defaults;
  t.record("at_least_20_orders", defaults.sampled_orders >= 20);
  return t;
}

Tally determinism(const std::string& cli) {
  Tally t;
  int s1 = 0, s2 = 0, s3 = 0;
  std::string a = run_capture(cli + " corpus", s1);
  std::string b = run_capture(cli + " corpus", s2);
  std::string c = run_capture(cli + " corpus --jobs 4", s3);
  t.record("nonempty", !a.empty());
  t.record("repeat", a == b);
  t.record("jobs", a == c);
  t.record("same_status", s1 == s2 && s2 == s3);
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  auto corpus = simple_corpus();

  struct Criterion {
    int number;
    std::string name;
    std::function<Tally()> run;
  };
  std::vector<Criterion> criteria{
      {1, "Rees methods agree with the kernel", [&] { return rees_agreement(corpus); }},
      {2, "Rees ideal is I_1 + OT", [&] { return fiber_type(corpus); }},
      {3, "special fiber equals OT", [&] { return fiber_is_ot(corpus); }},
      {4, "OT Hilbert series matches the Poincare prediction", [&] { return hilbert_identity(corpus); }},
      {5, "analytic spread k and reduction number k-1", [&] { return numerical_invariants(corpus); }},
      {6, "Boolean bigraded series", [&] { return boolean_bigraded(); }},
      {7, "Sylvester forms equal circuit generators up to sign", [&] { return sylvester(corpus); }},
      {8, "generic Jacobian dual and Cramer inclusion", [&] { return jacobian_dual(corpus); }},
      {9, "primary decomposition of the product ideal", [&] { return primary_decomposition(corpus); }},
      {10, "deletion and restriction identities", [&] { return deletion_restriction(corpus); }},
      {11, "G_k condition on generic members", [&] { return g_condition(corpus); }},
      {12, "Groebner self-checks and sampled universal bases", [&] { return gb_self_checks(corpus); }},
      {13, "corpus output is byte-identical across runs",
       [&] {
         if (cli.empty()) {
           Tally t;
           t.record("cli path missing", false);
           return t;
         }
         return determinism(cli);
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    std::string error;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool ok = error.empty() && t.bad.empty() && t.checked > 0;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " ("
              << (error.empty() ? t.summary() : "error: " + error) << ")" << std::endl;
  }
  std::cout << (13 - failed) << "/13 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
