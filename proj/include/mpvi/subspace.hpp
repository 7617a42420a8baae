#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mpvi/arith.hpp"

namespace mpvi {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major
using IntegerVector = std::vector<Integer>;

// Reduced row-echelon form of the row space; zero rows dropped.
RationalMatrix rref(RationalMatrix rows, std::size_t columns);

std::size_t rank(const RationalMatrix& rows, std::size_t columns);

// RREF basis of { x : row . x = 0 for every row }.
RationalMatrix null_space(const RationalMatrix& rows, std::size_t columns);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const IntegerVector& a, const RationalVector& b);

// Coefficients c with sum_j c_j rows[j] = v, for linearly independent rows
// spanning a space that contains v. Throws std::invalid_argument otherwise.
RationalVector solve_in_span(const RationalMatrix& rows, const RationalVector& v);

// Scales to a primitive integer vector with first nonzero entry positive.
IntegerVector primitive_integer_vector(const RationalVector& v);

// A linear subspace of Q^n stored by the RREF of a spanning set, so equal
// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, RationalMatrix spanning_rows);

  static Subspace whole(std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);
  // Common zero locus of the given linear forms.
  static Subspace kernel_of(std::size_t ambient_dim, const RationalMatrix& forms);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return ambient_dim_ - basis_.size(); }
  const RationalMatrix& basis() const { return basis_; }

  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& other) const;
  bool annihilated_by(const IntegerVector& form) const;

  Subspace intersect(const Subspace& other) const;

  // Coordinates of v in basis(); v must lie in the subspace.
  RationalVector coordinates(const RationalVector& v) const;

  std::string to_string() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_dim_ = 0;
  RationalMatrix basis_;
};

}  // namespace mpvi
