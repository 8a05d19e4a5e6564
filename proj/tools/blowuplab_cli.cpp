#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "blowuplab/blowup.hpp"
#include "blowuplab/checks.hpp"
#include "blowuplab/hilbert.hpp"
#include "blowuplab/io.hpp"

using namespace blowuplab;
using ojson = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string input;
  std::string order = "degrevlex";
  unsigned jobs = 1;
  unsigned max_degree = Budget{}.max_degree;
  std::size_t max_basis = Budget{}.max_basis;
  std::int64_t timeout_ms = -1;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool timings = false;

  Budget budget() const {
    Budget b;
    b.max_degree = max_degree;
    b.max_basis = max_basis;
    b.timeout_ms = timeout_ms >= 0 ? timeout_ms : 0;
    if (timeout_ms < 0) {
      if (const char* env = std::getenv("BLOWUPLAB_BUDGET_MS")) b.timeout_ms = std::atoll(env);
    }
    return b;
  }
  bool text() const { return format == "text"; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string one_based(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s;
}

ojson index_list(const std::vector<std::size_t>& v) {
  ojson out = ojson::array();
  for (auto i : v) out.push_back(i + 1);
  return out;
}

ojson poly_list(const std::vector<Polynomial>& ps) {
  ojson out = ojson::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

ojson series_json(const HilbertSeries& s) {
  ojson num = ojson::array();
  for (const auto& c : s.numerator) num.push_back(c.get_str());
  return ojson{{"numerator", num}, {"denominator_exponent", s.denom_exponent}, {"text", s.to_string()}};
}

const Arrangement& require_simple(const Instance& inst) {
  if (!inst.simple) throw UsageError("this command needs a simple arrangement, not a stretched one");
  return *inst.simple;
}

void emit(const RunConfig& cfg, const ojson& j, const std::string& text) {
  if (cfg.text()) std::cout << text;
  else std::cout << j.dump() << "\n";
}

// ---------------------------------------------------------------- commands

int cmd_circuits(const RunConfig& cfg) {
  Instance inst = load_instance(cfg.input);
  const Arrangement& a = require_simple(inst);
  ojson arr = ojson::array();
  std::string text;
  for (const auto& c : circuits(a)) {
    ojson coeffs = ojson::array();
    std::string cs;
    for (const auto& q : c.coeffs) {
      coeffs.push_back(to_string(q));
      cs += (cs.empty() ? "" : ",") + to_string(q);
    }
    arr.push_back(ojson{{"support", index_list(c.support)}, {"coeffs", coeffs}});
    text += "{" + one_based(c.support) + "}  (" + cs + ")\n";
  }
  emit(cfg, ojson{{"circuits", arr}}, text);
  return 0;
}

int cmd_lattice(const RunConfig& cfg) {
  Instance inst = load_instance(cfg.input);
  const Arrangement& a = require_simple(inst);
  ojson arr = ojson::array();
  std::string text;
  for (const auto& f : intersection_lattice(a)) {
    arr.push_back(ojson{{"closure", index_list(f.closure)}, {"rank", f.rank}, {"mobius", f.mobius.get_str()}});
    text += "rank " + std::to_string(f.rank) + "  {" + one_based(f.closure) + "}  mu = " + f.mobius.get_str() + "\n";
  }
  emit(cfg, ojson{{"flats", arr}}, text);
  return 0;
}

int cmd_poincare(const RunConfig& cfg) {
  Instance inst = load_instance(cfg.input);
  const Arrangement& a = require_simple(inst);
  IntPoly p = poincare_polynomial(a);
  ojson coeffs = ojson::array();
  for (const auto& c : p) coeffs.push_back(c.get_str());
  HilbertSeries pred = ot_hilbert_prediction(a);
  emit(cfg, ojson{{"poincare", coeffs}, {"text", int_poly_to_string(p, "t")}, {"ot_hilbert_prediction", series_json(pred)}},
       "pi(t) = " + int_poly_to_string(p, "t") + "\nHS(OT) = " + pred.to_string() + "\n");
  return 0;
}

int cmd_products(const RunConfig& cfg, std::size_t fold) {
  Instance inst = load_instance(cfg.input);
  const Arrangement& a = require_simple(inst);
  if (fold == 0) fold = a.n() - 1;
  auto ps = fold_products(a, fold);
  std::string text;
  for (const auto& p : ps) text += p.to_string() + "\n";
  emit(cfg, ojson{{"fold", fold}, {"products", poly_list(ps)}}, text);
  return 0;
}

ReesMethod parse_method(const std::string& m) {
  if (m == "kernel") return ReesMethod::kernel;
  if (m == "colon") return ReesMethod::colon;
  if (m == "saturation") return ReesMethod::saturation;
  if (m == "deletion") return ReesMethod::deletion;
  throw UsageError("unknown Rees method: " + m);
}

int cmd_ideal(const RunConfig& cfg, const std::string& which, const std::string& method, std::size_t p, std::size_t index) {
  Instance inst = load_instance(cfg.input);
  const Arrangement& a = require_simple(inst);
  Ideal ideal = Ideal::unit(PolyRing::x_ring(1));
  ojson extra = ojson::object();
  if (which == "ot") {
    ideal = ot_ideal(a);
  } else if (which == "sym") {
    ideal = symmetric_ideal(a);
  } else if (which == "rees") {
    if (index < 1 || index > a.n()) throw UsageError("--index must lie in 1.." + std::to_string(a.n()));
    auto r = rees_ideal_with_order(a, parse_method(method), index - 1);
    ideal = r.ideal;
    extra["method"] = method;
    extra["order"] = index_list(r.order);
  } else if (which == "fiber") {
    ideal = special_fiber_ideal(a);
  } else if (which == "jacdual") {
    PolyMatrix b = jacobian_dual(a);
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      ojson row = ojson::array();
      for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(b(r, c).to_string());
      rows.push_back(row);
    }
    extra["matrix"] = rows;
    ideal = jacobian_dual_minors(a);
  } else if (which == "minors") {
    if (p == 0) p = a.n() - 1;
    ideal = minors_ideal_of_syzygy(a, p);
    extra["p"] = p;
  } else {
    throw UsageError("unknown ideal: " + which + " (expected ot, sym, rees, fiber, jacdual or minors)");
  }
  OrderPtr order = MonomialOrder::parse(cfg.order, ideal.ring()->nvars());
  const GroebnerBasis& gb = ideal.groebner(order);
  ojson j{{"ideal", which}, {"generators", poly_list(ideal.generators())}, {"text", ideal.to_string()}};
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  j["groebner"] = ojson{{"order", order->key()}, {"elements", poly_list(gb.elements)}};
  std::string text = ideal.to_string() + "\n";
  if (extra.contains("matrix")) {
    for (const auto& row : extra["matrix"]) {
      std::string line;
      for (const auto& e : row) line += (line.empty() ? "[ " : ", ") + e.get<std::string>();
      text += line + " ]\n";
    }
  }
  text += "groebner basis (" + order->key() + "): " + format_generators(gb.elements) + "\n";
  emit(cfg, j, text);
  return 0;
}

int cmd_hilbert(const RunConfig& cfg, const std::string& of, bool bigraded) {
  Instance inst = load_instance(cfg.input);
  const Arrangement& a = require_simple(inst);
  Ideal ideal = Ideal::unit(PolyRing::x_ring(1));
  if (of == "ot") ideal = ot_ideal(a);
  else if (of == "fiber") ideal = special_fiber_ideal(a);
  else if (of == "sym") ideal = symmetric_ideal(a);
  else if (of == "rees") ideal = rees_ideal(a, ReesMethod::kernel);
  else throw UsageError("unknown ideal for hilbert: " + of + " (expected ot, fiber, sym or rees)");
  if (bigraded) {
    if (of == "ot" || of == "fiber") ideal = extend(ideal, PolyRing::bigraded(a.k(), a.n()));
    BigradedSeries s = bigraded_hilbert_series(ideal);
    ojson j(to_json(s));
    j["of"] = of;
    j["text"] = s.to_string();
    emit(cfg, j, s.to_string() + "\n");
    return 0;
  }
  HilbertSeries s = hilbert_series(ideal);
  ojson j{{"of", of}, {"series", series_json(s)}, {"krull_dim", s.denom_exponent}, {"h_vector", series_json(s)["numerator"]},
          {"reduction_number", s.numerator_degree()}};
  emit(cfg, j,
       "HS = " + s.to_string() + "\nkrull_dim = " + std::to_string(s.denom_exponent) +
           "\nnumerator degree = " + std::to_string(s.numerator_degree()) + "\n");
  return 0;
}

int cmd_decompose(const RunConfig& cfg) {
  Instance inst = load_instance(cfg.input);
  const Arrangement& a = require_simple(inst);
  ojson comps = ojson::array();
  std::string text;
  std::vector<Ideal> parts;
  for (const auto& c : primary_component_ideals(a)) {
    comps.push_back(ojson{{"flat", index_list(c.flat.closure)}, {"mobius", c.flat.mobius.get_str()},
                          {"ideal", poly_list(c.ideal.generators())}});
    text += "{" + one_based(c.flat.closure) + "}  mu = " + c.flat.mobius.get_str() + "  " + c.ideal.to_string() + "\n";
    parts.push_back(c.ideal);
  }
  Ideal prod = products_ideal(a);
  bool equal = !parts.empty() && ideal_equal(intersect(parts), prod);
  emit(cfg, ojson{{"components", comps}, {"products", poly_list(prod.generators())}, {"intersection_equals_products", equal}},
       text + "intersection equals I: " + (equal ? "yes" : "no") + "\n");
  return 0;
}

int cmd_stretch(const RunConfig& cfg, std::size_t contract) {
  Instance inst = load_instance(cfg.input);
  if (contract > 0) {
    const Arrangement& a = require_simple(inst);
    if (contract > a.n()) throw UsageError("--contract must lie in 1.." + std::to_string(a.n()));
    Contraction c = contraction(a, contract - 1);
    ojson j = ojson::parse(to_json(c.result).dump());
    ojson p = ojson::array();
    for (std::size_t r = 0; r < c.change_of_coordinates.rows(); ++r) {
      ojson row = ojson::array();
      for (auto& q : c.change_of_coordinates.row(r)) row.push_back(to_string(q));
      p.push_back(row);
    }
    ojson placement = ojson::array();
    for (const auto& pl : c.placement)
      placement.push_back(ojson{{"form", pl.original + 1}, {"group", pl.group + 1}, {"position", pl.position + 1}});
    ojson out{{"contraction", j}, {"change_of_coordinates", p}, {"placement", placement}};
    emit(cfg, out, out.dump(2) + "\n");
    return 0;
  }
  StretchedArrangement b = inst.stretched ? *inst.stretched : StretchedArrangement::trivial(*inst.simple);
  auto fac = stretched_products_factorization(b);
  ojson rel = ojson::array();
  std::string rtext;
  for (const auto& r : fac.relations) {
    std::string s = "y" + std::to_string(r.first + 1) + " - " + to_string(r.scalar) + "*y" + std::to_string(r.other + 1);
    rel.push_back(ojson{{"first", r.first + 1}, {"other", r.other + 1}, {"scalar", to_string(r.scalar)}, {"text", s}});
    rtext += "  " + s + "\n";
  }
  ojson out{{"G", fac.gcd_part.to_string()}, {"P_A", poly_list(fac.simple_part)}, {"products", poly_list(fac.products)},
            {"D_A", rel}};
  std::string text = "G = " + fac.gcd_part.to_string() + "\nP_A = " + format_generators(fac.simple_part) + "\nD_A:\n" + rtext;
  emit(cfg, out, text);
  return 0;
}

int emit_reports(const RunConfig& cfg, const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (cfg.text()) std::cout << to_text(r) << "\n";
    else std::cout << to_json(r).dump() << "\n";
  }
  return exit_code_for(reports);
}

CheckOptions check_options(const RunConfig& cfg) {
  CheckOptions o;
  o.budget = cfg.budget();
  o.seed = cfg.seed;
  o.timings = cfg.timings;
  return o;
}

int cmd_check(const RunConfig& cfg, const std::string& kind) {
  Instance inst = load_instance(cfg.input);
  std::vector<CheckKind> kinds;
  if (kind == "all") {
    kinds = all_check_kinds();
  } else if (auto k = parse_check_kind(kind)) {
    kinds = {*k};
  } else {
    throw UsageError("unknown check: " + kind);
  }
  return emit_reports(cfg, run_battery({inst}, kinds, check_options(cfg), cfg.jobs));
}

int cmd_corpus(const RunConfig& cfg) {
  return emit_reports(cfg, run_battery(builtin_corpus(), all_check_kinds(), check_options(cfg), cfg.jobs));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blowuplab: blowup algebras of hyperplane arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--order", cfg.order, "monomial order: degrevlex, deglex, lex or perm:<i,j,...>[:base]");
  app.add_option("--jobs", cfg.jobs, "worker threads for check batteries")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", cfg.max_degree, "Groebner degree budget");
  app.add_option("--max-basis", cfg.max_basis, "Groebner basis size budget");
  app.add_option("--timeout-ms", cfg.timeout_ms, "wall-clock budget per computation (0 disables)");
  app.add_option("--seed", cfg.seed, "seed for the sampled order battery");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timings", cfg.timings, "report wall-clock milliseconds in check reports");

  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", cfg.input, "arrangement JSON file")->required(); };

  auto* circuits_cmd = app.add_subcommand("circuits", "minimal dependencies");
  add_input(circuits_cmd);
  auto* lattice_cmd = app.add_subcommand("lattice", "flats with Mobius values");
  add_input(lattice_cmd);
  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial and predicted OT series");
  add_input(poincare_cmd);
  std::size_t fold = 0;
  auto* products_cmd = app.add_subcommand("products", "products of the forms");
  add_input(products_cmd);
  products_cmd->add_option("--fold", fold, "factors per product (default n-1)");

  std::string which;
  std::string method = "kernel";
  std::size_t p = 0;
  std::size_t index = 1;
  auto* ideal_cmd = app.add_subcommand("ideal", "build an ideal: ot, sym, rees, fiber, jacdual, minors");
  add_input(ideal_cmd);
  ideal_cmd->add_option("which", which, "ot|sym|rees|fiber|jacdual|minors")->required();
  ideal_cmd->add_option("--method", method, "Rees method: kernel, colon, saturation, deletion");
  ideal_cmd->add_option("--index", index, "form used by the colon method (1-based)");
  ideal_cmd->add_option("--p", p, "minor size for the syzygy minors (default n-1)");

  std::string of = "ot";
  bool bigraded = false;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of a quotient");
  add_input(hilbert_cmd);
  hilbert_cmd->add_option("--of", of, "ot, fiber, sym or rees");
  hilbert_cmd->add_flag("--bigraded", bigraded, "bigraded series in T");

  auto* decompose_cmd = app.add_subcommand("decompose", "primary components of the product ideal");
  add_input(decompose_cmd);

  std::size_t contract = 0;
  auto* stretch_cmd = app.add_subcommand("stretch", "stretched factorization, or a contraction with --contract");
  add_input(stretch_cmd);
  stretch_cmd->add_option("--contract", contract, "contract this form (1-based)");

  std::string kind;
  auto* check_cmd = app.add_subcommand("check", "run one check or all of them");
  add_input(check_cmd);
  check_cmd->add_option("kind", kind, "check name or all")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "run every check on the built-in corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    BudgetScope scope(cfg.budget());
    if (*circuits_cmd) return cmd_circuits(cfg);
    if (*lattice_cmd) return cmd_lattice(cfg);
    if (*poincare_cmd) return cmd_poincare(cfg);
    if (*products_cmd) return cmd_products(cfg, fold);
    if (*ideal_cmd) return cmd_ideal(cfg, which, method, p, index);
    if (*hilbert_cmd) return cmd_hilbert(cfg, of, bigraded);
    if (*decompose_cmd) return cmd_decompose(cfg);
    if (*stretch_cmd) return cmd_stretch(cfg, contract);
    if (*check_cmd) return cmd_check(cfg, kind);
    if (*corpus_cmd) return cmd_corpus(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
