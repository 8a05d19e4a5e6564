#include <algorithm>

#include "doctest.h"
#include "blowuplab/arrangement.hpp"
#include "blowuplab/checks.hpp"
#include "blowuplab/poly_matrix.hpp"
#include "test_util.hpp"

using namespace blowuplab;
using testutil::arr;
using testutil::P;

using Idx = std::vector<std::size_t>;

namespace {

std::vector<Arrangement> simple_corpus() {
  std::vector<Arrangement> out;
  for (const auto& inst : builtin_corpus())
    if (inst.simple) out.push_back(*inst.simple);
  return out;
}

Idx closure_of(const Flat& f) { return f.closure; }

}  // namespace

TEST_CASE("arrangement validation") {
  CHECK_THROWS_WITH_AS(arr(2, {{1, 0}, {0, 0}, {0, 1}}), doctest::Contains("zero form at index 2"), ArrangementError);
  CHECK_THROWS_WITH_AS(arr(2, {{1, 0}, {2, 0}, {0, 1}}), doctest::Contains("stretch"), ArrangementError);
  CHECK_THROWS_AS(arr(2, {{1, 0}}), ArrangementError);
  CHECK_THROWS_AS(arr(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), ArrangementError);
  CHECK_THROWS_AS(arr(2, {{1, 0, 0}, {0, 1}}), ArrangementError);
  CHECK(proportional({1, 2}, {Rational(-1, 2), -1}));
  CHECK_FALSE(proportional({1, 2}, {1, 3}));
}

TEST_CASE("circuit examples") {
  auto tri = circuits(testutil::triangle());
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].support == Idx{0, 1, 2});
  CHECK(tri[0].coeffs == RationalVector{1, 1, -1});

  CHECK(circuits(Arrangement::boolean(3)).empty());

  auto pen = circuits(testutil::pencil4());
  REQUIRE(pen.size() == 4);
  CHECK(pen[0].support == Idx{0, 1, 2});
  CHECK(pen[1].support == Idx{0, 1, 3});
  CHECK(pen[2].support == Idx{0, 2, 3});
  CHECK(pen[2].coeffs == RationalVector{1, Rational(-1, 2), Rational(-1, 2)});
  CHECK(pen[3].support == Idx{1, 2, 3});

  auto tt = circuits(testutil::two_triples());
  REQUIRE(tt.size() == 3);
  CHECK(tt[0].support == Idx{0, 1, 3});
  CHECK(tt[1].support == Idx{0, 2, 4});
  CHECK(tt[2].support == Idx{1, 2, 3, 4});
}

TEST_CASE("circuits are minimal dependencies on the corpus") {
  for (const auto& a : simple_corpus()) {
    auto cs = circuits(a);
    CHECK(std::is_sorted(cs.begin(), cs.end(), [](const Circuit& x, const Circuit& y) { return x.support < y.support; }));
    for (const auto& c : cs) {
      CHECK(a.rank_of(c.support) == c.support.size() - 1);
      CHECK(c.coeffs.front() == 1);
      for (std::size_t drop = 0; drop < c.support.size(); ++drop) {
        Idx sub = c.support;
        sub.erase(sub.begin() + drop);
        CHECK(a.rank_of(sub) == sub.size());
      }
      for (std::size_t r = 0; r < a.k(); ++r) {
        Rational s = 0;
        for (std::size_t j = 0; j < c.support.size(); ++j) s += c.coeffs[j] * a.form(c.support[j])[r];
        CHECK(s == 0);
      }
      for (const auto& q : c.coeffs) CHECK(q != 0);
    }
    // brute force: every dependent subset contains some circuit
    std::size_t n = a.n();
    std::size_t found = 0;
    for (std::size_t size = 1; size <= n; ++size)
      for (const auto& s : subsets(n, size)) {
        bool minimal_dependent = a.rank_of(s) < s.size();
        for (std::size_t drop = 0; drop < s.size() && minimal_dependent; ++drop) {
          Idx sub = s;
          sub.erase(sub.begin() + drop);
          if (a.rank_of(sub) < sub.size()) minimal_dependent = false;
        }
        if (minimal_dependent) ++found;
      }
    CHECK(found == cs.size());
  }
}

TEST_CASE("deletion examples") {
  auto d1 = deletion(testutil::triangle(), 2);
  CHECK(d1.arrangement.n() == 2);
  CHECK_FALSE(d1.coloop);
  auto d2 = deletion(Arrangement::boolean(3), 2);
  CHECK(d2.coloop);
  CHECK(d2.arrangement.rank() == 2);
  auto d3 = deletion(testutil::pencil4(), 0);
  CHECK(d3.arrangement.n() == 3);
  CHECK(d3.arrangement.rank() == 2);
  CHECK_FALSE(d3.coloop);
  CHECK(deletion(testutil::coloop4(), 3).coloop);
  CHECK_THROWS(deletion(testutil::triangle(), 7));
}

TEST_CASE("deletion never adds circuits") {
  for (const auto& a : simple_corpus())
    for (std::size_t i = 0; i < a.n(); ++i) CHECK(circuits(a).size() >= circuits(deletion(a, i).arrangement).size());
}

TEST_CASE("contraction examples") {
  auto c1 = contraction(testutil::triangle(), 2);
  CHECK(c1.result.support.k() == 1);
  CHECK(c1.result.support.n() == 1);
  CHECK(c1.result.multiplicities == Idx{2});
  CHECK(c1.result.coefficients[0] == RationalVector{1, -1});

  auto c2 = contraction(Arrangement::boolean(3), 2);
  CHECK(c2.result.support.n() == 2);
  CHECK(c2.result.multiplicities == Idx{1, 1});
  CHECK(c2.result.is_simple());

  auto c3 = contraction(testutil::circuit4(), 0);
  CHECK(c3.result.support.k() == 2);
  CHECK(c3.result.support.n() == 3);
  CHECK(c3.result.multiplicities == Idx{1, 1, 1});
  CHECK(c3.result.total() == 3);

  CHECK_THROWS(contraction(testutil::triangle(), 3));
}

TEST_CASE("contraction agrees with the coordinate change") {
  for (const auto& a : simple_corpus()) {
    if (a.k() < 2) continue;
    for (std::size_t i = 0; i < a.n(); ++i) {
      auto c = contraction(a, i);
      auto Pinv_t = inverse(c.change_of_coordinates).transpose();
      auto expanded = c.result.expanded_forms();
      auto elems = c.result.elements();
      REQUIRE(c.placement.size() == a.n() - 1);
      CHECK(c.result.total() == a.n() - 1);
      for (const auto& pl : c.placement) {
        auto col = QMatrix::from_columns(a.k(), {a.form(pl.original)});
        auto image = Pinv_t * col;
        std::size_t pos = 0;
        while (elems[pos] != std::pair{pl.group, pl.position}) ++pos;
        for (std::size_t r = 0; r + 1 < a.k(); ++r) CHECK(image(r, 0) == expanded[pos][r]);
      }
      // image of ℓ_i is the last coordinate
      auto li = Pinv_t * QMatrix::from_columns(a.k(), {a.form(i)});
      for (std::size_t r = 0; r + 1 < a.k(); ++r) CHECK(li(r, 0) == 0);
    }
  }
}

TEST_CASE("intersection lattice examples") {
  auto tri = intersection_lattice(testutil::triangle());
  REQUIRE(tri.size() == 5);
  CHECK(tri[0].closure.empty());
  CHECK(tri[0].mobius == 1);
  for (int i = 1; i <= 3; ++i) {
    CHECK(tri[i].rank == 1);
    CHECK(tri[i].mobius == -1);
  }
  CHECK(tri[4].closure == Idx{0, 1, 2});
  CHECK(tri[4].mobius == 2);

  auto b3 = intersection_lattice(Arrangement::boolean(3));
  REQUIRE(b3.size() == 8);
  for (const auto& f : b3) CHECK(f.mobius == ((f.rank % 2) ? -1 : 1));

  auto b1 = intersection_lattice(Arrangement::boolean(1));
  REQUIRE(b1.size() == 2);
  CHECK(b1[1].mobius == -1);

  auto cl = intersection_lattice(testutil::coloop4());
  auto it = std::find_if(cl.begin(), cl.end(), [](const Flat& f) { return closure_of(f) == Idx{0, 1, 2}; });
  REQUIRE(it != cl.end());
  CHECK(it->rank == 2);
  CHECK(it->mobius == 2);
}

TEST_CASE("lattice invariants on the corpus") {
  for (const auto& a : simple_corpus()) {
    auto lat = intersection_lattice(a);
    Integer total = 0;
    for (const auto& f : lat) {
      total += f.mobius;
      CHECK(a.rank_of(f.closure) == f.rank);
      for (std::size_t j = 0; j < a.n(); ++j) {
        if (std::binary_search(f.closure.begin(), f.closure.end(), j)) continue;
        Idx bigger = f.closure;
        bigger.push_back(j);
        CHECK(a.rank_of(bigger) == f.rank + 1);
      }
    }
    CHECK(total == 0);
    auto pi = poincare_polynomial(a);
    CHECK(pi.size() == a.k() + 1);
    for (const auto& c : pi) CHECK(c > 0);
  }
}

TEST_CASE("Poincare polynomial and prediction") {
  CHECK(poincare_polynomial(testutil::triangle()) == IntPoly{1, 3, 2});
  CHECK(poincare_polynomial(Arrangement::boolean(1)) == IntPoly{1, 1});
  CHECK(poincare_polynomial(Arrangement::boolean(3)) == IntPoly{1, 3, 3, 1});
  CHECK(poincare_polynomial(Arrangement::boolean(4)) == IntPoly{1, 4, 6, 4, 1});

  auto p = ot_hilbert_prediction(testutil::triangle());
  CHECK(p.numerator == IntPoly{1, 1});
  CHECK(p.denom_exponent == 2);
  for (std::size_t k = 1; k <= 4; ++k) {
    auto b = ot_hilbert_prediction(Arrangement::boolean(k));
    CHECK(b.numerator == IntPoly{1});
    CHECK(b.denom_exponent == k);
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(Arrangement::boolean(3)).size() == 3);
  CHECK(connected_components(testutil::triangle()).size() == 1);
  auto cl = connected_components(testutil::coloop4());
  REQUIRE(cl.size() == 2);
  CHECK(cl[0] == Idx{0, 1, 2});
  CHECK(cl[1] == Idx{3});
  CHECK(connected_components(testutil::two_triples()).size() == 1);
}

TEST_CASE("genericity") {
  CHECK(is_generic(testutil::triangle()));
  CHECK(is_generic(Arrangement::boolean(3)));
  CHECK(is_generic(testutil::circuit4()));
  CHECK_FALSE(is_generic(testutil::coloop4()));
  CHECK_FALSE(is_generic(testutil::two_triples()));
}

TEST_CASE("stretched factorization examples") {
  auto R = PolyRing::x_ring(2);
  auto support = Arrangement::boolean(2);
  StretchedArrangement b1{support, {2, 1}, {{1, 1}, {1}}};
  auto f1 = stretched_products_factorization(b1);
  CHECK(f1.gcd_part == P(R, "x1"));
  REQUIRE(f1.simple_part.size() == 3);
  CHECK(f1.simple_part[0] == P(R, "x2"));
  CHECK(f1.simple_part[1] == P(R, "x2"));
  CHECK(f1.simple_part[2] == P(R, "x1"));
  REQUIRE(f1.relations.size() == 1);
  CHECK(f1.relations[0].first == 0);
  CHECK(f1.relations[0].other == 1);
  CHECK(f1.relations[0].scalar == 1);

  StretchedArrangement b2{support, {2, 1}, {{1, 2}, {1}}};
  auto f2 = stretched_products_factorization(b2);
  CHECK(f2.products[0] == P(R, "2*x1*x2"));
  CHECK(f2.products[1] == P(R, "x1*x2"));
  CHECK(f2.products[2] == P(R, "2*x1^2"));
  CHECK(f2.gcd_part == P(R, "x1"));
  CHECK(f2.simple_part[0] == P(R, "2*x2"));
  CHECK(f2.simple_part[1] == P(R, "x2"));
  CHECK(f2.simple_part[2] == P(R, "2*x1"));
  REQUIRE(f2.relations.size() == 1);
  CHECK(f2.relations[0].scalar == 2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(f2.gcd_part * f2.simple_part[i] == f2.products[i]);

  auto tri = testutil::triangle();
  auto f3 = stretched_products_factorization(StretchedArrangement::trivial(tri));
  CHECK(f3.gcd_part == P(R, "1"));
  CHECK(f3.relations.empty());
  CHECK(f3.simple_part[0] == P(R, "x2*(x1+x2)"));

  StretchedArrangement bad{support, {2, 1}, {{2, 1}, {1}}};
  CHECK_THROWS_AS(bad.validate(), ArrangementError);
  StretchedArrangement zero{support, {2, 1}, {{1, 0}, {1}}};
  CHECK_THROWS_AS(zero.validate(), ArrangementError);
}
