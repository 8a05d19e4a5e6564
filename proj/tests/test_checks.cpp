#include <set>

#include "doctest.h"
#include "blowuplab/arrangement.hpp"
#include "blowuplab/checks.hpp"
#include "blowuplab/io.hpp"

using namespace blowuplab;

TEST_CASE("check names round trip") {
  for (auto k : all_check_kinds()) {
    auto parsed = parse_check_kind(check_name(k));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == k);
  }
  CHECK_FALSE(parse_check_kind("no_such_check").has_value());
}

TEST_CASE("single checks") {
  auto tri = parse_instance(R"({"k":2,"forms":[[1,0],[0,1],[1,1]]})", "tri.json");
  auto r = run_check(tri, CheckKind::fiber_type);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.arrangement == "tri");
  CHECK(r.check == "fiber_type");

  auto b3 = parse_instance(R"({"k":3,"forms":[[1,0,0],[0,1,0],[0,0,1]]})", "b3.json");
  CHECK(run_check(b3, CheckKind::rees_methods_agree).status == CheckStatus::pass);
  auto skipped = run_check(tri, CheckKind::boolean_bigraded);
  CHECK(skipped.status == CheckStatus::skipped);
  CHECK(skipped.witness.rfind("precondition", 0) == 0);

  auto tt = parse_instance(R"({"k":3,"forms":[[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1]]})", "tt.json");
  CHECK(run_check(tt, CheckKind::fiber_equals_ot).status == CheckStatus::pass);
}

TEST_CASE("budget exhaustion is inconclusive") {
  auto tt = parse_instance(R"({"k":3,"forms":[[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1]]})", "tt.json");
  CheckOptions opts;
  opts.budget.max_basis = 3;
  auto r = run_check(tt, CheckKind::rees_methods_agree, opts);
  CHECK(r.status == CheckStatus::inconclusive);
  CHECK(exit_code_for({r}) == 3);
}

TEST_CASE("report rendering") {
  CheckReport r{"a", "fiber_type", CheckStatus::fail, "w", 0};
  CHECK(to_json(r).dump() == R"({"arrangement":"a","check":"fiber_type","status":"fail","witness":"w","millis":0})");
  CheckReport q{"a", "fiber_type", CheckStatus::pass, "", 0};
  CHECK(to_json(q).dump() == R"({"arrangement":"a","check":"fiber_type","status":"pass","millis":0})");
  CHECK(exit_code_for({q}) == 0);
  CHECK(exit_code_for({q, r}) == 1);
}

TEST_CASE("the corpus exercises every check kind") {
  auto corpus = builtin_corpus();
  std::set<std::string> ids;
  for (const auto& inst : corpus) ids.insert(inst.id);
  CHECK(ids.size() == corpus.size());
  auto reports = run_battery(corpus, all_check_kinds(), {}, 1);
  CHECK(reports.size() == corpus.size() * all_check_kinds().size());
  std::set<std::string> exercised;
  for (const auto& r : reports)
    if (r.status != CheckStatus::skipped) exercised.insert(r.check);
  for (auto k : all_check_kinds()) CHECK_MESSAGE(exercised.count(check_name(k)) == 1, check_name(k));
  for (const auto& r : reports) {
    if (r.check == "reduction_number") continue;  // see below
    CHECK_MESSAGE(r.status != CheckStatus::fail, (r.arrangement + " " + r.check + " " + r.witness));
    CHECK(r.status != CheckStatus::inconclusive);
  }
  // k - 1 holds exactly when the matroid is connected
  for (const auto& inst : corpus) {
    if (!inst.simple) continue;
    bool connected = connected_components(*inst.simple).size() == 1;
    auto r = run_check(inst, CheckKind::reduction_number);
    CHECK_MESSAGE((r.status == CheckStatus::pass) == connected, inst.id);
  }
  auto threaded = run_battery(corpus, all_check_kinds(), {}, 3);
  REQUIRE(threaded.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) CHECK(to_json(threaded[i]).dump() == to_json(reports[i]).dump());
}
