#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mpvi/subspace.hpp"

namespace mpvi {

// A central arrangement of d distinct hyperplanes in C^N, each stored by its
// primitive integer normal with first nonzero entry positive.
class Arrangement {
 public:
  Arrangement() = default;

  std::size_t ambient_dim() const { return ambient_dim_; }
  // Dimension n of the projectivization P^n, n = N - 1.
  long projective_dim() const { return static_cast<long>(ambient_dim_) - 1; }
  std::size_t size() const { return normals_.size(); }
  const IntegerVector& normal(std::size_t i) const { return normals_[i]; }
  const std::vector<IntegerVector>& normals() const { return normals_; }

  std::string to_string() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

  // Builds from normals that are already canonical and distinct. May be empty;
  // induced arrangements (quotients by an edge) can have no hyperplanes.
  static Arrangement from_canonical(std::size_t ambient_dim, std::vector<IntegerVector> normals);

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntegerVector> normals_;
};

// Canonicalizes the normals and rejects zero or repeated hyperplanes.
Arrangement parse_arrangement(std::size_t ambient_dim, const std::vector<IntegerVector>& raw_normals);
Arrangement parse_arrangement(std::size_t ambient_dim,
                              const std::vector<std::vector<long>>& raw_normals);

// Hyperplanes of both factors in C^(N1 + N2), the first factor's first.
Arrangement product_arrangement(const Arrangement& first, const Arrangement& second);

struct Edge {
  Subspace space;
  std::size_t codim = 0;
  std::vector<std::size_t> containing;  // sorted indices i with W in V_i
};

// All intersections of nonempty subsets of hyperplanes, sorted by
// (codim, basis). The ambient space is not an edge; the origin is one
// exactly when the arrangement is essential.
class EdgeLattice {
 public:
  explicit EdgeLattice(const Arrangement& arrangement);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  std::size_t size() const { return edges_.size(); }

  // Index of the origin among edges(), if it is an intersection.
  std::optional<std::size_t> origin() const { return origin_; }
  // Indices of edges other than the origin.
  const std::vector<std::size_t>& proper() const { return proper_; }

  // edges[i] strictly contained in edges[j].
  bool strictly_below(std::size_t i, std::size_t j) const {
    return below_[i * edges_.size() + j];
  }

  std::optional<std::size_t> find(const Subspace& space) const;

 private:
  std::size_t ambient_dim_;
  std::vector<Edge> edges_;
  std::optional<std::size_t> origin_;
  std::vector<std::size_t> proper_;
  std::vector<bool> below_;
};

EdgeLattice edge_lattice(const Arrangement& arrangement);

// The arrangement induced in high/low by the hyperplanes containing low but
// not high, in coordinates given by a basis of high modulo low.
struct QuotientArrangement {
  Arrangement arrangement;
  Subspace low;
  Subspace high;
  RationalMatrix complement;  // rows extending low's basis to high's

  // Image of a subspace x with low <= x <= high in the quotient coordinates.
  Subspace project(const Subspace& x) const;
};

QuotientArrangement quotient_arrangement(const Arrangement& arrangement, const Subspace& low,
                                         const Subspace& high);

bool is_essential(const Arrangement& arrangement);

// Euler characteristic of the projective complement is nonzero.
bool is_indecomposable(const Arrangement& arrangement);

// The arrangement induced in C^N / W is indecomposable.
bool is_dense_edge(const Arrangement& arrangement, const Subspace& edge);

// b_W = codim W + sum over hyperplanes containing W of (a_i - 1).
Rational b_coefficient(const Edge& edge, const std::vector<Rational>& a);

}  // namespace mpvi
