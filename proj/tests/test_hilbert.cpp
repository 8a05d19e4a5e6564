#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "blowuplab/arrangement.hpp"
#include "blowuplab/blowup.hpp"
#include "blowuplab/hilbert.hpp"
#include "test_util.hpp"

using namespace blowuplab;
using testutil::I;
using testutil::P;

namespace {

// Number of monomials of each degree <= max_degree avoiding every generator.
std::vector<Integer> count_standard(const std::vector<Monomial>& gens, std::size_t nvars, unsigned max_degree) {
  std::vector<Integer> out(max_degree + 1, 0);
  std::vector<unsigned> e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v + 1 == nvars || nvars == 0) {
      if (nvars) e[v] = left;
      Monomial m(e);
      bool standard = std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
      if (standard) out[m.degree()] += 1;
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      e[v] = a;
      rec(v + 1, left - a);
    }
  };
  for (unsigned d = 0; d <= max_degree; ++d) rec(0, d);
  return out;
}

Monomial mono(std::vector<unsigned> e) { return Monomial(e); }

}  // namespace

TEST_CASE("series of monomial quotients") {
  auto free3 = hilbert_series_of_monomials({}, 3);
  CHECK(free3.numerator == IntPoly{1});
  CHECK(free3.denom_exponent == 3);

  auto one = hilbert_series_of_monomials({mono({1, 1, 0})}, 3);
  CHECK(one.numerator == IntPoly{1, 1});
  CHECK(one.denom_exponent == 2);
  CHECK(one.expand(3) == std::vector<Integer>{1, 3, 5, 7});
  CHECK(one.to_string() == "(1 + s)/(1 - s)^2");

  auto unit = hilbert_series_of_monomials({mono({0, 0})}, 2);
  CHECK(unit.numerator.empty());
}

TEST_CASE("series agree with a brute-force count to degree 8") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<unsigned> ex(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t nvars = 1 + trial % 4;
    std::size_t ngens = 1 + trial % 5;
    std::vector<Monomial> gens;
    for (std::size_t g = 0; g < ngens; ++g) {
      std::vector<unsigned> e(nvars);
      for (auto& x : e) x = ex(rng);
      if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; })) e[0] = 1;
      gens.push_back(Monomial(e));
    }
    auto hs = hilbert_series_of_monomials(gens, nvars);
    CHECK(hs.expand(8) == count_standard(gens, nvars, 8));
  }
}

TEST_CASE("series of ideals from their initial ideals") {
  auto S = PolyRing::y_ring(3);
  auto fiber = fiber_of(rees_ideal(testutil::triangle(), ReesMethod::kernel));
  auto hs = hilbert_series(fiber);
  CHECK(hs.numerator == IntPoly{1, 1});
  CHECK(hs.denom_exponent == 2);
  CHECK(hs == ot_hilbert_prediction(testutil::triangle()));
  CHECK(krull_dim(fiber) == 2);
  CHECK(h_vector(fiber) == std::vector<Integer>{1, 1});
  CHECK(reduction_number(fiber) == 1);

  for (std::size_t k = 2; k <= 4; ++k) {
    auto f = special_fiber_ideal(Arrangement::boolean(k));
    CHECK(krull_dim(f) == k);
    CHECK(h_vector(f) == std::vector<Integer>{1});
    CHECK(reduction_number(f) == 0);
  }

  auto quartic = testutil::arr(2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}});
  auto f5 = special_fiber_ideal(quartic);
  CHECK(krull_dim(f5) == 2);
  CHECK(reduction_number(f5) == 1);
  CHECK(h_vector(f5) == std::vector<Integer>{1, 3});

  CHECK_THROWS(hilbert_series(I(S, {"y1^2 - y2"})));
}

TEST_CASE("series do not depend on the presentation") {
  auto S = PolyRing::y_ring(4);
  auto a = I(S, {"y1*y2 - y3*y4", "y1^2 - y2*y3", "y2^3"});
  auto b = I(S, {"y1^2 - y2*y3 + (y1*y2 - y3*y4)", "y2^3", "y1*y2 - y3*y4", "y1^2*y4 - y2*y3*y4"});
  REQUIRE(ideal_equal(a, b));
  CHECK(hilbert_series(a) == hilbert_series(b));
  CHECK(codim(Ideal::unit(S)) == 5);
  CHECK(codim(Ideal(S)) == 0);
}

TEST_CASE("bigraded series") {
  auto T11 = PolyRing::bigraded(1, 1);
  auto free = bigraded_hilbert_series(Ideal(T11));
  BigradedSeries expect{{{{0, 0}, 1}}, 1, 1};
  CHECK(free.same_function(expect));

  for (std::size_t k = 2; k <= 4; ++k) {
    auto rees = rees_ideal(Arrangement::boolean(k), ReesMethod::kernel);
    auto hs = bigraded_hilbert_series(rees);
    IntPoly2 num{{{0, 0}, 1}};
    for (std::size_t i = 0; i + 1 < k; ++i) num = multiply(num, IntPoly2{{{0, 0}, 1}, {{1, 1}, -1}});
    CHECK(hs.same_function(BigradedSeries{num, k, k}));
    CHECK_FALSE(hs.same_function(BigradedSeries{num, k, k + 1}));
  }
}

TEST_CASE("bigraded series specialise to the single-graded one") {
  auto tri = testutil::triangle();
  auto rees = rees_ideal(tri, ReesMethod::kernel);
  auto bi = bigraded_hilbert_series(rees);
  auto single = hilbert_series(rees).expand(6);
  for (unsigned d = 0; d <= 6; ++d) {
    Integer sum = 0;
    for (unsigned a = 0; a <= d; ++a) sum += bi.coefficient(a, d - a);
    CHECK(sum == single[d]);
  }
  // x-degree 0 slice is the special fiber
  auto fiber = hilbert_series(fiber_of(rees)).expand(6);
  for (unsigned b = 0; b <= 6; ++b) CHECK(bi.coefficient(0, b) == fiber[b]);
}

TEST_CASE("series reduction and expansion") {
  auto hs = HilbertSeries::reduced(multiply(IntPoly{1, 2}, one_minus_s_power(2)), 5);
  CHECK(hs.numerator == IntPoly{1, 2});
  CHECK(hs.denom_exponent == 3);
  CHECK(HilbertSeries::reduced({1}, 1).expand(4) == std::vector<Integer>{1, 1, 1, 1, 1});
  CHECK(int_poly_to_string({1, 0, -3}, "t") == "1 - 3t^2");
}
