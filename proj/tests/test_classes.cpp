#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "mpvi/classes.hpp"
#include "mpvi/error.hpp"
#include "oracle.hpp"

using namespace mpvi;

namespace {

LPoly poly(std::vector<long> c) { return LPoly(0, std::vector<Integer>(c.begin(), c.end())); }

const Arrangement three_lines = corpus::make(2, {{1, 0}, {0, 1}, {1, 1}});
const Arrangement boolean2 = corpus::boolean(2);

std::size_t node_of(const StratumTable& table, const Subspace& s) {
  for (std::size_t x = 1; x < table.top_node(); ++x) {
    if (table.space(x) == s) return x;
  }
  FAIL("subspace is not a proper edge");
  return 0;
}

std::size_t hyperplane_node(const StratumTable& table, std::size_t i) {
  for (std::size_t x = 1; x < table.top_node(); ++x) {
    if (table.codim(x) == 1 && table.containing(x) == std::vector<std::size_t>{i}) return x;
  }
  FAIL("hyperplane missing");
  return 0;
}

bool is_superchain(const Chain& big, const Chain& small) {
  for (std::size_t x : small) {
    if (std::find(big.begin(), big.end(), x) == big.end()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("affine complement classes") {
  CHECK(affine_complement_class(corpus::make(2, {{1, 0}})) == poly({0, -1, 1}));
  CHECK(affine_complement_class(boolean2) == poly({1, -2, 1}));
  CHECK(affine_complement_class(three_lines) == poly({2, -3, 1}));
  for (const auto& s : corpus::all()) {
    CAPTURE(s.name);
    auto expected = oracle::affine_class_by_subsets(s.arrangement);
    CHECK(affine_complement_class(s.arrangement) == LPoly(0, expected));
  }
}

TEST_CASE("complement classes count points over finite fields") {
  for (const auto& s : corpus::all()) {
    if (s.arrangement.ambient_dim() > 3 || s.arrangement.size() > 5) continue;
    CAPTURE(s.name);
    const LPoly cls = affine_complement_class(s.arrangement);
    for (long p : {101L, 103L}) CHECK(cls.evaluate(p) == oracle::count_complement_points(s.arrangement, p));
  }
}

TEST_CASE("projective complement classes") {
  CHECK(projective_complement_class(boolean2) == poly({-1, 1}));
  CHECK(projective_complement_class(three_lines) == poly({-2, 1}));
  for (std::size_t N = 2; N <= 5; ++N) {
    std::vector<long> normal(N, 0);
    normal[0] = 1;
    CHECK(projective_complement_class(corpus::make(N, {normal})) == LPoly::monomial(1, static_cast<long>(N) - 1));
  }
  CHECK(projective_complement_class(Arrangement::from_canonical(3, {})) == projective_space_class(2));
  CHECK(euler_characteristic(poly({-2, 1})) == -1);
}

TEST_CASE("interval classes agree with explicit quotient arrangements") {
  for (const auto& s : corpus::all()) {
    CAPTURE(s.name);
    StratumTable table(s.arrangement);
    for (std::size_t low = 0; low < table.node_count(); ++low) {
      for (std::size_t high = 0; high < table.node_count(); ++high) {
        if (!table.below(low, high)) continue;
        auto q = quotient_arrangement(s.arrangement, table.space(low), table.space(high));
        CHECK(table.open_class(low, high) == projective_complement_class(q.arrangement));
        CHECK(table.closed_class(low, high) == resolution_class(q.arrangement));
      }
    }
  }
}

TEST_CASE("chain strata of the three-line pencil") {
  StratumTable table(three_lines);
  const std::size_t v1 = hyperplane_node(table, 0);
  CHECK(chain_stratum_class(table, {v1}, false) == poly({1}));
  CHECK(chain_stratum_class(table, {}, false) == poly({-2, 1}));
  CHECK(chain_stratum_class(table, {}, true) == poly({1, 1}));

  StratumTable b(boolean2);
  try {
    chain_stratum_class(b, {hyperplane_node(b, 0), hyperplane_node(b, 1)}, false);
    FAIL("expected NotAChain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAChain);
  }
}

TEST_CASE("resolution classes") {
  for (std::size_t N = 1; N <= 4; ++N) {
    std::vector<long> normal(N, 0);
    normal[N - 1] = 1;
    CHECK(resolution_class(corpus::make(N, {normal})) == projective_space_class(static_cast<long>(N) - 1));
  }
  CHECK(resolution_class(boolean2) == poly({1, 1}));
  CHECK(resolution_class(three_lines) == poly({1, 1}));
  for (const auto& s : corpus::all()) {
    CAPTURE(s.name);
    LPoly r = resolution_class(s.arrangement);
    CHECK(r.valuation() >= 0);
    CHECK(r.coeff(0) == 1);
    if (s.arrangement.ambient_dim() == 2) CHECK(r == poly({1, 1}));
  }
}

TEST_CASE("closed strata are sums of open strata over superchains") {
  for (const auto& s : corpus::all()) {
    CAPTURE(s.name);
    StratumTable table(s.arrangement);
    const auto chains = table.chains();
    for (const auto& chain : chains) {
      LPoly sum;
      for (const auto& other : chains) {
        if (is_superchain(other, chain)) sum += chain_stratum_class(table, other, false);
      }
      CHECK(chain_stratum_class(table, chain, true) == sum);
    }
  }
}

TEST_CASE("strata through an edge factor as restriction times quotient") {
  for (const auto& s : corpus::all()) {
    CAPTURE(s.name);
    const Arrangement& arr = s.arrangement;
    StratumTable table(arr);
    const Subspace whole = Subspace::whole(arr.ambient_dim());
    const Subspace zero = Subspace::zero(arr.ambient_dim());
    for (std::size_t w = 1; w < table.top_node(); ++w) {
      auto restricted = quotient_arrangement(arr, zero, table.space(w));
      StratumTable inner(restricted.arrangement);
      const LPoly outside = projective_complement_class(quotient_arrangement(arr, table.space(w), whole).arrangement);
      table.for_each_chain([&](const Chain& chain) {
        if (!std::all_of(chain.begin(), chain.end(), [&](std::size_t x) { return table.below(x, w); })) return;
        Chain extended = chain;
        extended.push_back(w);
        Chain projected;
        for (std::size_t x : chain) projected.push_back(node_of(inner, restricted.project(table.space(x))));
        CHECK(chain_stratum_class(table, extended, false) == chain_stratum_class(inner, projected, false) * outside);
      });
    }
  }
}

TEST_CASE("concentrated sums vanish on products") {
  const std::vector<std::pair<Arrangement, Arrangement>> factors{
      {corpus::pencil(3), corpus::boolean(1)},
      {corpus::boolean(1), corpus::pencil(3)},
      {corpus::pencil(3), corpus::pencil(3)},
      {corpus::pencil(4), corpus::boolean(2)},
      {corpus::boolean(2), corpus::boolean(1)},
  };
  for (const auto& [first, second] : factors) {
    const Arrangement arr = product_arrangement(first, second);
    StratumTable table(arr);
    const std::size_t n1 = first.ambient_dim();
    const std::size_t N = arr.ambient_dim();
    EdgeLattice second_lattice(second);
    std::vector<Subspace> candidates;
    for (const auto& e : second_lattice.edges()) candidates.push_back(e.space);
    for (const auto& w : candidates) {
      // V' x W inside V' x V''
      RationalMatrix rows;
      for (std::size_t i = 0; i < n1; ++i) {
        RationalVector v(N, 0);
        v[i] = 1;
        rows.push_back(v);
      }
      for (const auto& r : w.basis()) {
        RationalVector v(N, 0);
        std::copy(r.begin(), r.end(), v.begin() + static_cast<long>(n1));
        rows.push_back(v);
      }
      const Subspace target(N, rows);
      if (target.dim() == 0) continue;
      const std::size_t x = node_of(table, target);
      LPoly total;
      const LPoly one_minus_l = poly({1, -1});
      table.for_each_chain([&](const Chain& chain) {
        for (std::size_t c : chain) {
          if (c != x && !table.below(c, x)) return;
        }
        LPoly term = chain_stratum_class(table, chain, false);
        for (std::size_t k = 0; k < chain.size(); ++k) term *= one_minus_l;
        total += term;
      });
      CHECK(total.is_zero());
    }
  }
}

TEST_CASE("union classes of projective subspaces") {
  auto span = [](std::vector<std::vector<long>> rows) {
    RationalMatrix m;
    for (auto& r : rows) m.emplace_back(r.begin(), r.end());
    return Subspace(rows.front().size(), m);
  };
  const Subspace line_a = span({{1, 0, 0}, {0, 1, 0}});
  const Subspace line_b = span({{1, 0, 0}, {0, 0, 1}});
  const Subspace point = span({{1, 0, 0}});
  CHECK(union_class({line_a}) == poly({1, 1}));
  CHECK(union_class({span({{1, 0}}), span({{0, 1}})}) == poly({2}));
  CHECK(union_class({line_a, line_b, point}) == poly({1, 2}));
  CHECK(union_class({point, line_a}) == union_class({line_a}));
  try {
    union_class({line_a, line_b});
    FAIL("expected NotIntersectionClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIntersectionClosed);
  }
  // The hyperplanes of an arrangement with their intersections give the
  // complement of the projective complement.
  for (const auto& s : corpus::all()) {
    EdgeLattice lattice(s.arrangement);
    std::vector<Subspace> family;
    for (std::size_t i : lattice.proper()) family.push_back(lattice.edge(i).space);
    CHECK(union_class(family) + projective_complement_class(s.arrangement) ==
          projective_space_class(s.arrangement.projective_dim()));
  }
}
