#include <algorithm>
#include <random>

#include "doctest.h"
#include "blowuplab/blowup.hpp"
#include "blowuplab/groebner.hpp"
#include "blowuplab/ideal.hpp"
#include "test_util.hpp"

using namespace blowuplab;
using testutil::I;
using testutil::P;

TEST_CASE("buchberger examples") {
  auto T = PolyRing::bigraded(3, 3);
  auto gb = buchberger({P(T, "2*x1*y1 - 2*x2*y2")}, T->default_order());
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0] == P(T, "x1*y1 - x2*y2"));

  auto sym = buchberger({P(T, "x1*y1 - x2*y2"), P(T, "x2*y2 - x3*y3")}, T->default_order());
  CHECK(is_groebner_basis(sym.elements, sym.order));
  CHECK(sym.elements.size() == 2);

  auto S = PolyRing::y_ring(4);
  auto ot = ot_ideal(testutil::pencil4());
  CHECK(ot.generators().size() == 4);
  CHECK(is_groebner_basis(ot.generators(), S->default_order()));
}

TEST_CASE("confluence witness detects a non-basis") {
  auto R = PolyRing::x_ring(2);
  std::vector<Polynomial> set{P(R, "x1^2 - x2"), P(R, "x1*x2 - 1")};
  CHECK_FALSE(is_groebner_basis(set, R->default_order()));
  auto gb = buchberger(set, R->default_order());
  CHECK(is_groebner_basis(gb.elements, gb.order));
}

TEST_CASE("reduced basis is independent of generator order") {
  auto T = PolyRing::bigraded(2, 4);
  std::vector<Polynomial> gens{P(T, "x1*y1 - x2*y2"), P(T, "x2*y2 - (x1+x2)*y3"), P(T, "(x1+x2)*y3 - (x1-x2)*y4"),
                               P(T, "y1*y2 - y1*y3 - y2*y3"), P(T, "x1^2 + x2*y4")};
  std::mt19937 rng(3);
  for (const auto& ord : {T->default_order(), MonomialOrder::lex(T->nvars()), MonomialOrder::block(T->nvars(), {0, 1})}) {
    auto base = buchberger(gens, ord);
    for (int t = 0; t < 6; ++t) {
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (auto& g : shuffled) g = g.scaled(Rational(t + 2, 3));
      auto other = buchberger(shuffled, ord);
      REQUIRE(other.elements.size() == base.elements.size());
      for (std::size_t i = 0; i < base.elements.size(); ++i) CHECK(other.elements[i] == base.elements[i]);
    }
  }
}

TEST_CASE("budget exceeded is an error, not an answer") {
  auto R = PolyRing::x_ring(3);
  Budget tight;
  tight.max_basis = 2;
  BudgetScope scope(tight);
  CHECK_THROWS_AS(buchberger({P(R, "x1^3 - x2*x3"), P(R, "x2^3 - x1*x3"), P(R, "x3^3 - x1*x2")}, R->default_order()),
                  BudgetExceeded);
}

TEST_CASE("membership examples") {
  auto T = PolyRing::bigraded(2, 3);
  auto sym = symmetric_ideal(testutil::triangle());
  for (const auto& g : sym.generators()) CHECK(sym.contains(g));
  CHECK(sym.contains(P(T, "x1*(y2*y3 + y1*y3 - y1*y2)")));
  CHECK_FALSE(sym.contains(P(T, "y2*y3 + y1*y3 - y1*y2")));
  auto R = PolyRing::x_ring(1);
  CHECK_FALSE(I(R, {"x1"}).contains(P(R, "1")));
}

TEST_CASE("ideal equality examples") {
  auto R = PolyRing::x_ring(2);
  CHECK(ideal_equal(I(R, {"x1", "x2"}), I(R, {"x1+x2", "x2"})));
  CHECK_FALSE(ideal_equal(I(R, {"x1"}), I(R, {"x1^2"})));
  CHECK(ideal_equal(Ideal(R), I(R, {"0"})));
  CHECK(Ideal::unit(R).is_unit());
}

TEST_CASE("elimination examples") {
  auto T = PolyRing::bigraded(2, 2);
  auto Tt = T->with_aux({"t"});
  auto e = eliminate(I(Tt, {"y1 - t*x2", "y2 - t*x1"}), {Tt->require("t")});
  CHECK(ideal_equal(extend(e, T), I(T, {"x1*y1 - x2*y2"})));
  for (const auto& g : e.generators()) CHECK_FALSE(g.involves(Tt->require("t")));

  auto y_only = eliminate(I(T, {"x1*y1 - x2*y2"}), {0, 1});
  CHECK(y_only.is_zero());

  auto S = PolyRing::y_ring(3);
  auto fiber = fiber_of(rees_ideal(testutil::triangle(), ReesMethod::kernel));
  CHECK(ideal_equal(extend(fiber, S), I(S, {"y2*y3 + y1*y3 - y1*y2"})));
}

TEST_CASE("eliminated generators are members of the original ideal") {
  auto T = PolyRing::bigraded(2, 4);
  auto rees = rees_ideal(testutil::pencil4(), ReesMethod::kernel);
  auto fiber = fiber_of(rees);
  for (const auto& g : fiber.generators()) {
    auto lifted = g.map_to(T);
    CHECK(rees.contains(lifted));
    CHECK_FALSE(lifted.involves(0));
    CHECK_FALSE(lifted.involves(1));
  }
}

TEST_CASE("intersection examples") {
  auto R = PolyRing::x_ring(3);
  auto a = I(R, {"x1^2", "x2*x3 - x1"});
  CHECK(ideal_equal(intersect(a, a), a));
  CHECK(ideal_equal(intersect(I(R, {"x1"}), I(R, {"x2"})), I(R, {"x1*x2"})));
  auto three = intersect(std::vector<Ideal>{I(R, {"x1", "x2"}), I(R, {"x1", "x3"}), I(R, {"x2", "x3"})});
  CHECK(ideal_equal(three, I(R, {"x1*x2", "x1*x3", "x2*x3"})));
}

TEST_CASE("colon examples") {
  auto R = PolyRing::x_ring(2);
  auto a = I(R, {"x1*x2", "x2^3"});
  CHECK(ideal_equal(colon(a, P(R, "1")), a));
  CHECK(ideal_equal(colon(I(R, {"x1*x2"}), P(R, "x1")), I(R, {"x2"})));

  auto tri = testutil::triangle();
  auto T = PolyRing::bigraded(2, 3);
  auto by_colon = colon(symmetric_ideal(tri), P(T, "x1*y1"));
  CHECK(ideal_equal(by_colon, I(T, {"x1*y1 - x2*y2", "x2*y2 - (x1+x2)*y3", "y2*y3 + y1*y3 - y1*y2"})));
  CHECK(ideal_equal(by_colon, rees_ideal(tri, ReesMethod::kernel)));
}

TEST_CASE("saturation examples") {
  auto T = PolyRing::bigraded(2, 1);
  CHECK(ideal_equal(saturate(I(T, {"x1^2*y1"}), P(T, "x1")), I(T, {"y1"})));
  auto a = I(T, {"x1*y1 - x2^2", "y1^3"});
  CHECK(ideal_equal(saturate(a, P(T, "1")), a));
  CHECK(ideal_equal(saturate(a, Ideal::unit(T)), a));

  // ⟨x1y1 - x2y2, I(A')⟩ : x1^∞ with A' = {x2, x1+x2}
  auto T3 = PolyRing::bigraded(2, 3);
  auto tri = testutil::triangle();
  auto seed = I(T3, {"x1*y1 - x2*y2", "x2*y2 - (x1+x2)*y3"});
  CHECK(ideal_equal(saturate(seed, P(T3, "x1")), rees_ideal(tri, ReesMethod::kernel)));
}

TEST_CASE("colon and saturation are nested and saturation is stable") {
  auto T = PolyRing::bigraded(2, 4);
  auto sym = symmetric_ideal(testutil::pencil4());
  for (const char* f : {"x1", "x1*y1", "x1 - x2"}) {
    auto g = P(T, f);
    auto c = colon(sym, g);
    auto s = saturate(sym, g);
    CHECK(c.contains(sym));
    CHECK(s.contains(c));
    CHECK(ideal_equal(saturate(s, g), s));
    CHECK(ideal_equal(saturate_iterated(sym, g), s));
  }
}

TEST_CASE("products and powers") {
  auto R = PolyRing::x_ring(2);
  auto m = I(R, {"x1", "x2"});
  CHECK(ideal_equal(power(m, 2), I(R, {"x1^2", "x1*x2", "x2^2"})));
  CHECK(ideal_equal(product(m, I(R, {"x1"})), I(R, {"x1^2", "x1*x2"})));
  CHECK(ideal_equal(m + I(R, {"x1^5"}), m));
}
