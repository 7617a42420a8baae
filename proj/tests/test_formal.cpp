#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "mpvi/error.hpp"
#include "mpvi/formal.hpp"

using namespace mpvi;

namespace {

const Arrangement three_lines = corpus::make(2, {{1, 0}, {0, 1}, {1, 1}});
const Arrangement boolean2 = corpus::boolean(2);

std::size_t hyperplane_index(const StratumTable& table, std::size_t i) {
  for (std::size_t x = 1; x < table.top_node(); ++x) {
    if (table.codim(x) == 1 && table.containing(x) == std::vector<std::size_t>{i}) return x - 1;
  }
  FAIL("hyperplane missing");
  return 0;
}

LaurentMulti random_multi(std::mt19937_64& rng, std::size_t vars, std::size_t terms) {
  std::vector<LaurentMulti::Term> t;
  for (std::size_t k = 0; k < terms; ++k) {
    LaurentMulti::Exponent e(vars);
    for (auto& x : e) x = static_cast<long>(rng() % 7) - 3;
    t.emplace_back(e, Integer(static_cast<long>(rng() % 9) - 4));
  }
  return LaurentMulti::from_terms(vars, t);
}

}  // namespace

TEST_CASE("edge directions") {
  StratumTable pencil(three_lines);
  const auto& v1 = pencil.edge_of_node(hyperplane_index(pencil, 0) + 1);
  CHECK(melem_for_edge(three_lines, v1).coeffs == std::vector<long>{1, 1, 0});
  StratumTable b(boolean2);
  const auto& v2 = b.edge_of_node(hyperplane_index(b, 1) + 1);
  CHECK(melem_for_edge(boolean2, v2).coeffs == std::vector<long>{-1, -1});

  // The smallest edge of a non-essential arrangement has c_K = -dim K.
  for (const auto& s : corpus::non_essential()) {
    EdgeLattice lattice(s.arrangement);
    const Edge* smallest = &lattice.edge(0);
    for (const auto& e : lattice.edges()) {
      if (e.codim > smallest->codim) smallest = &e;
    }
    MElem c = melem_for_edge(s.arrangement, *smallest);
    CHECK(c.is_integer());
    CHECK(c.coeffs[0] == -static_cast<long>(smallest->space.dim()));
  }
}

TEST_CASE("edge directions along a chain are independent") {
  for (const auto& s : corpus::all()) {
    CAPTURE(s.name);
    StratumTable table(s.arrangement);
    for (std::size_t x = 1; x < table.top_node(); ++x) {
      MElem cx = melem_for_edge(s.arrangement, table.edge_of_node(x));
      if (!cx.is_integer()) {
        long rest = 0;
        for (std::size_t i = 1; i < cx.coeffs.size(); ++i) rest = std::max(rest, std::abs(cx.coeffs[i]));
        CHECK(rest <= 1);
      }
      for (std::size_t y = 1; y < table.top_node(); ++y) {
        if (!table.below(x, y)) continue;
        CHECK(linearly_independent(cx, melem_for_edge(s.arrangement, table.edge_of_node(y))));
      }
    }
  }
}

TEST_CASE("binomial division and the vanishing test agree") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t vars = 1 + rng() % 4;
    LaurentMulti g = random_multi(rng, vars, 1 + rng() % 6);
    LaurentMulti::Exponent c(vars);
    do {
      for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
    } while (std::all_of(c.begin(), c.end(), [](long x) { return x == 0; }));
    LaurentMulti product = g.times_binomial(c);
    auto back = product.divide_binomial(c);
    REQUIRE(back.has_value());
    CHECK(*back == g);
    CHECK(product.vanishes_on_binomial(c));
    const bool divisible = g.divide_binomial(c).has_value();
    CHECK(divisible == g.vanishes_on_binomial(c));
  }
}

TEST_CASE("bezout vectors") {
  for (std::vector<long> c : {std::vector<long>{3, 5}, {-4, 6, 9}, {0, -1}, {2, 0, 3, -7}}) {
    auto y = bezout_vector(c);
    long s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += y[i] * c[i];
    CHECK(s == 1);
  }
  CHECK_THROWS(bezout_vector({2, 4}));
}

TEST_CASE("formal integrals of small arrangements") {
  CHECK(formal_is_zero(formal_pv(boolean2)));
  CHECK(formal_is_zero(formal_pv(corpus::make(2, {{1, 0}}))));
  FormalFraction f = formal_pv(three_lines);
  CHECK_FALSE(formal_is_zero(f));

  // G at L^(c_1) = 1 is (L - 1)(L^(c_2) - 1)(L^(c_3) - 1): not divisible.
  StratumTable pencil(three_lines);
  const std::size_t v1 = hyperplane_index(pencil, 0);
  CHECK(pole_multiplicity(f, v1) == 1);
  CHECK(is_pole(f, v1));
  CHECK_FALSE(f.numerator.vanishes_on_binomial(f.denominator[v1].coeffs));

  FormalFraction fb = formal_pv(boolean2);
  for (std::size_t i = 0; i < fb.denominator.size(); ++i) {
    CHECK(pole_multiplicity(fb, i) == 2);
    CHECK_FALSE(is_pole(fb, i));
  }
  FormalFraction product = formal_pv(product_arrangement(corpus::pencil(3), corpus::boolean(1)));
  for (std::size_t i = 0; i < product.denominator.size(); ++i) CHECK_FALSE(is_pole(product, i));

  FormalFraction line = formal_pv(corpus::make(2, {{1, 0}}));
  try {
    is_pole(line, 0);
    FAIL("expected IntegerDirection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IntegerDirection);
  }
  CHECK_FALSE(is_integer_direction_pole(line, 0));
}

TEST_CASE("specialization recovers the principal value integral") {
  FormalFraction f = formal_pv(three_lines);
  ExponentVector a{Rational(1, 2), Rational(1, 4), Rational(1, 4)};
  CHECK(specialize(f, a) == PuiseuxRational(4, LaurentPoly(0, {1, 2, 3, 2, 1})));
  CHECK(specialize(formal_pv(boolean2), {Rational(1, 2), Rational(-1, 2)}).is_zero());
  CHECK(specialize(formal_pv(corpus::make(2, {{1, 0}})), {Rational(-1)}).is_zero());

  std::mt19937_64 rng(23);
  for (const auto& s : corpus::all()) {
    if (s.arrangement.size() > 5) continue;
    CAPTURE(s.name);
    StratumTable table(s.arrangement);
    FormalFraction g = formal_pv(table);
    for (int k = 0; k < 3; ++k) {
      ExponentVector b = random_exponents(table, rng);
      const long q = root_order(b);
      CHECK(specialize(g, b) == pv_integral(table, b).shifted(s.arrangement.projective_dim() * q));
    }
  }
}

TEST_CASE("without poles the formal integral is a polynomial in L") {
  for (const auto& s : corpus::all()) {
    if (s.arrangement.size() > 5) continue;
    CAPTURE(s.name);
    FormalFraction f = formal_pv(s.arrangement);
    bool any_pole = false;
    for (std::size_t i = 0; i < f.denominator.size(); ++i) {
      any_pole = any_pole || (f.denominator[i].is_integer() ? is_integer_direction_pole(f, i) : is_pole(f, i));
    }
    if (any_pole) continue;
    auto reduced = reduce_fully(f);
    REQUIRE(reduced.has_value());
    CHECK(reduced->is_univariate_in_u());
  }
}
