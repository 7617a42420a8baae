#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mpvi/arrangement.hpp"
#include "mpvi/laurent.hpp"

namespace mpvi {

// sum over lattice elements x (ambient included) of mu(ambient, x) L^dim x.
LPoly affine_complement_class(const Arrangement& arrangement);

// Class of P(V) minus the arrangement; the affine class divided by L - 1.
// An empty arrangement in C^m gives [P^(m-1)].
LPoly projective_complement_class(const Arrangement& arrangement);

// A chain W_1 < ... < W_r of proper edges, as StratumTable node ids.
using Chain = std::vector<std::size_t>;

// Interval data of the poset {origin} + S + {V} used by the resolution
// strata. Node 0 is the origin, nodes 1..|S| are the proper edges in lattice
// order, and the last node is the ambient space.
class StratumTable {
 public:
  explicit StratumTable(const Arrangement& arrangement);

  const Arrangement& arrangement() const { return arrangement_; }
  const EdgeLattice& lattice() const { return lattice_; }

  std::size_t node_count() const { return nodes_; }
  std::size_t stratum_count() const { return nodes_ - 2; }
  static constexpr std::size_t origin_node = 0;
  std::size_t top_node() const { return nodes_ - 1; }

  const Edge& edge_of_node(std::size_t node) const;
  std::size_t dim(std::size_t node) const { return dims_[node]; }
  std::size_t codim(std::size_t node) const { return arrangement_.ambient_dim() - dims_[node]; }
  const std::vector<std::size_t>& containing(std::size_t node) const { return containing_[node]; }
  Subspace space(std::size_t node) const;

  bool below(std::size_t i, std::size_t j) const { return below_[i * nodes_ + j]; }

  // [U] of the arrangement induced in high/low.
  const LPoly& open_class(std::size_t low, std::size_t high) const { return open_[low * nodes_ + high]; }
  // Class of the canonical resolution of P(high/low).
  const LPoly& closed_class(std::size_t low, std::size_t high) const {
    return closed_[low * nodes_ + high];
  }

  // Visits every chain of proper edges, the empty chain first, in
  // lexicographic order of node ids.
  void for_each_chain(const std::function<void(const Chain&)>& visit) const;
  std::vector<Chain> chains() const;

 private:
  Arrangement arrangement_;
  EdgeLattice lattice_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<bool> below_;
  std::vector<LPoly> open_;
  std::vector<LPoly> closed_;
};

// [E_I°] (closed = false) or [E_I] (closed = true).
LPoly chain_stratum_class(const StratumTable& table, const Chain& chain, bool closed);
LPoly chain_stratum_class(const Arrangement& arrangement, const Chain& chain, bool closed);

// Sum of the open strata over all chains; the class of the resolution.
LPoly resolution_class(const StratumTable& table);
LPoly resolution_class(const Arrangement& arrangement);

// Class of the union of the projectivizations of a family of linear
// subspaces closed under nonzero intersection.
LPoly union_class(const std::vector<Subspace>& family);

}  // namespace mpvi
