#include "mpvi/classes.hpp"

#include <algorithm>
#include <numeric>

#include "mpvi/error.hpp"

namespace mpvi {

namespace {

LPoly divide_by_l_minus_one(const LPoly& affine, const std::string& subject) {
  auto quotient = affine.divide_exact(LPoly::binomial(1));
  if (!quotient) throw Error(ErrorKind::NonDivisible, "complement class not divisible by L - 1", subject);
  return *quotient;
}

}  // namespace

LPoly affine_complement_class(const Arrangement& arrangement) {
  const EdgeLattice lattice(arrangement);
  const std::size_t m = lattice.size();
  // mu(x, V) for every edge x, top-down; edges are sorted by codimension.
  std::vector<Integer> mu(m);
  LPoly total = LPoly::monomial(1, static_cast<long>(arrangement.ambient_dim()));
  for (std::size_t x = 0; x < m; ++x) {
    Integer acc = 1;
    for (std::size_t z = 0; z < x; ++z) {
      if (lattice.strictly_below(x, z)) acc += mu[z];
    }
    mu[x] = -acc;
    total += LPoly::monomial(mu[x], static_cast<long>(lattice.edge(x).space.dim()));
  }
  return total;
}

LPoly projective_complement_class(const Arrangement& arrangement) {
  if (arrangement.size() == 0) return projective_space_class(static_cast<long>(arrangement.ambient_dim()) - 1);
  return divide_by_l_minus_one(affine_complement_class(arrangement), arrangement.to_string());
}

StratumTable::StratumTable(const Arrangement& arrangement)
    : arrangement_(arrangement), lattice_(arrangement) {
  const auto& proper = lattice_.proper();
  nodes_ = proper.size() + 2;
  const std::size_t top = nodes_ - 1;
  const std::size_t n = nodes_;

  dims_.assign(n, 0);
  containing_.assign(n, {});
  containing_[0].resize(arrangement_.size());
  std::iota(containing_[0].begin(), containing_[0].end(), std::size_t{0});
  for (std::size_t k = 1; k < top; ++k) {
    dims_[k] = lattice_.edge(proper[k - 1]).space.dim();
    containing_[k] = lattice_.edge(proper[k - 1]).containing;
  }
  dims_[top] = arrangement_.ambient_dim();

  below_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i == 0 || j == top) below_[i * n + j] = true;
      else if (j != 0 && i != top) below_[i * n + j] = lattice_.strictly_below(proper[i - 1], proper[j - 1]);
    }
  }

  std::vector<bool> in_poset(n, true);
  in_poset[0] = lattice_.origin().has_value();

  std::vector<std::size_t> by_dim(n);
  std::iota(by_dim.begin(), by_dim.end(), std::size_t{0});
  std::stable_sort(by_dim.begin(), by_dim.end(),
                   [&](std::size_t a, std::size_t b) { return dims_[a] < dims_[b]; });

  // Möbius function mu(x, y) of the inclusion order on the poset elements.
  std::vector<Integer> mu(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (!in_poset[x]) continue;
    mu[x * n + x] = 1;
    for (std::size_t y : by_dim) {
      if (!below(x, y)) continue;
      Integer acc = 0;
      for (std::size_t z = 0; z < n; ++z) {
        if (in_poset[z] && (z == x || below(x, z)) && below(z, y)) acc += mu[x * n + z];
      }
      mu[x * n + y] = -acc;
    }
  }

  open_.assign(n * n, LPoly());
  for (std::size_t low = 0; low < n; ++low) {
    for (std::size_t high = 0; high < n; ++high) {
      if (!below(low, high)) continue;
      const long m = static_cast<long>(dims_[high] - dims_[low]);
      LPoly affine = LPoly::monomial(1, m);
      bool empty = true;
      for (std::size_t x = 0; x < n; ++x) {
        if (!in_poset[x] || !(x == low || below(low, x)) || !below(x, high)) continue;
        empty = false;
        affine += LPoly::monomial(mu[x * n + high], static_cast<long>(dims_[x] - dims_[low]));
      }
      open_[low * n + high] = empty ? projective_space_class(m - 1)
                                    : divide_by_l_minus_one(affine, space(low).to_string() + " / " +
                                                                        space(high).to_string());
    }
  }

  // h[x] = sum over chains low < W_1 < ... < W_r < x of proper edges of the
  // product of open classes; h[high] is the closed class of the interval.
  closed_.assign(n * n, LPoly());
  for (std::size_t low = 0; low < n; ++low) {
    std::vector<LPoly> h(n);
    h[low] = LPoly(Integer(1));
    for (std::size_t x : by_dim) {
      if (!below(low, x)) continue;
      LPoly acc;
      for (std::size_t y = 0; y < n; ++y) {
        if (h[y].is_zero() || !below(y, x)) continue;
        if (y != low && (y == 0 || y == top)) continue;
        acc += h[y] * open_class(y, x);
      }
      closed_[low * n + x] = acc;
      if (x != top && x != 0) h[x] = std::move(acc);
    }
  }
}

const Edge& StratumTable::edge_of_node(std::size_t node) const {
  if (node == 0 || node >= top_node()) throw std::out_of_range("node is not a proper edge");
  return lattice_.edge(lattice_.proper()[node - 1]);
}

Subspace StratumTable::space(std::size_t node) const {
  if (node == 0) return Subspace::zero(arrangement_.ambient_dim());
  if (node == top_node()) return Subspace::whole(arrangement_.ambient_dim());
  return edge_of_node(node).space;
}

void StratumTable::for_each_chain(const std::function<void(const Chain&)>& visit) const {
  Chain chain;
  const std::size_t top = top_node();
  std::function<void()> extend = [&]() {
    visit(chain);
    for (std::size_t k = 1; k < top; ++k) {
      if (!chain.empty() && !below(chain.back(), k)) continue;
      chain.push_back(k);
      extend();
      chain.pop_back();
    }
  };
  extend();
}

std::vector<Chain> StratumTable::chains() const {
  std::vector<Chain> out;
  for_each_chain([&](const Chain& c) { out.push_back(c); });
  return out;
}

LPoly chain_stratum_class(const StratumTable& table, const Chain& chain, bool closed) {
  const std::size_t top = table.top_node();
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k] == 0 || chain[k] >= top) throw Error(ErrorKind::NotAChain, "chain entries must be proper edges");
    if (k > 0 && !table.below(chain[k - 1], chain[k])) {
      throw Error(ErrorKind::NotAChain, "chain is not strictly increasing",
                  table.space(chain[k - 1]).to_string() + " vs " + table.space(chain[k]).to_string());
    }
  }
  LPoly product(Integer(1));
  std::size_t prev = StratumTable::origin_node;
  for (std::size_t k = 0; k <= chain.size(); ++k) {
    const std::size_t next = k < chain.size() ? chain[k] : top;
    product *= closed ? table.closed_class(prev, next) : table.open_class(prev, next);
    prev = next;
  }
  return product;
}

LPoly chain_stratum_class(const Arrangement& arrangement, const Chain& chain, bool closed) {
  return chain_stratum_class(StratumTable(arrangement), chain, closed);
}

LPoly resolution_class(const StratumTable& table) {
  LPoly total;
  table.for_each_chain([&](const Chain& c) { total += chain_stratum_class(table, c, false); });
  return total;
}

LPoly resolution_class(const Arrangement& arrangement) { return resolution_class(StratumTable(arrangement)); }

LPoly union_class(const std::vector<Subspace>& family) {
  std::vector<Subspace> members;
  for (const auto& s : family) {
    if (!members.empty() && s.ambient_dim() != members.front().ambient_dim()) {
      throw Error(ErrorKind::DimensionMismatch, "family members live in different ambient spaces");
    }
    if (s.dim() == 0) throw Error(ErrorKind::NotIntersectionClosed, "the zero subspace is empty projectively");
    if (std::find(members.begin(), members.end(), s) == members.end()) members.push_back(s);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Subspace meet = members[i].intersect(members[j]);
      if (meet.dim() > 0 && std::find(members.begin(), members.end(), meet) == members.end()) {
        throw Error(ErrorKind::NotIntersectionClosed, "intersection missing from the family", meet.to_string());
      }
    }
  }
  std::sort(members.begin(), members.end(),
            [](const Subspace& a, const Subspace& b) { return a.dim() > b.dim() || (a.dim() == b.dim() && a < b); });
  // w[x] = sum over chains starting at x of (-1)^(length - 1).
  std::vector<Integer> w(members.size());
  LPoly total;
  for (std::size_t x = 0; x < members.size(); ++x) {
    Integer acc = 1;
    for (std::size_t y = 0; y < x; ++y) {
      if (members[y].dim() > members[x].dim() && members[y].contains(members[x])) acc -= w[y];
    }
    w[x] = acc;
    total += projective_space_class(static_cast<long>(members[x].dim()) - 1) * acc;
  }
  return total;
}

}  // namespace mpvi
