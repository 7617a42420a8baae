#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpvi/classes.hpp"
#include "mpvi/pv.hpp"

namespace mpvi {

// lambda_0 + sum_i lambda_i s_i modulo n + 1 + sum_i s_i, stored with s_d
// eliminated: coeffs = (lambda_0, lambda_1, ..., lambda_{d-1}).
struct MElem {
  std::vector<long> coeffs;

  static MElem canonical(long n, long lambda0, const std::vector<long>& lambdas);

  bool is_integer() const;
  MElem operator-() const;
  friend bool operator==(const MElem&, const MElem&) = default;

  // Value after s_i -> a_i - 1.
  Rational evaluate(const ExponentVector& a) const;
  std::string to_string() const;
};

MElem melem_for_edge(const Arrangement& arrangement, const Edge& edge);

// Laurent polynomial in u = L and v_i = L^(s_i), i < d, as a sorted list of
// (exponent vector, coefficient) with exponents (e_0, e_1, ..., e_{d-1}).
class LaurentMulti {
 public:
  using Exponent = std::vector<long>;
  using Term = std::pair<Exponent, Integer>;

  LaurentMulti() = default;
  explicit LaurentMulti(std::size_t vars) : vars_(vars) {}
  static LaurentMulti constant(std::size_t vars, const Integer& c);
  // Embeds a polynomial in u.
  static LaurentMulti from_u(std::size_t vars, const LaurentPoly& p);
  // Builds from arbitrary terms, sorting and merging.
  static LaurentMulti from_terms(std::size_t vars, std::vector<Term> terms);

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  LaurentMulti& operator+=(const LaurentMulti& other);
  LaurentMulti shifted(const Exponent& by) const;
  // Multiplies by x^c - 1.
  LaurentMulti times_binomial(const Exponent& c) const;
  LaurentMulti times_u(const LaurentPoly& p) const;

  // Exact quotient by x^c - 1, or nullopt.
  std::optional<LaurentMulti> divide_binomial(const Exponent& c) const;
  // Whether the polynomial vanishes on the torus x^c = 1, by reducing along
  // each line in direction c rather than dividing.
  bool vanishes_on_binomial(const Exponent& c) const;

  // Only u appears.
  bool is_univariate_in_u() const;
  LaurentPoly as_u_poly() const;

  friend bool operator==(const LaurentMulti&, const LaurentMulti&) = default;

 private:
  std::size_t vars_ = 0;
  std::vector<Term> terms_;
};

// G / prod over W in S of (L^(c_W) - 1).
struct FormalFraction {
  long n = 0;
  std::size_t d = 0;
  LaurentMulti numerator;
  std::vector<MElem> denominator;        // c_W in the order of the proper edges
  std::vector<std::string> edge_labels;  // edge bases, same order
};

FormalFraction formal_pv(const StratumTable& table);
FormalFraction formal_pv(const Arrangement& arrangement);

bool formal_is_zero(const FormalFraction& f);

// kappa_W = #{W' : c_W' = +-c_W}.
long pole_multiplicity(const FormalFraction& f, std::size_t index);

// Whether c_W of the index-th proper edge is a pole; throws
// IntegerDirection when c_W is an integer.
bool is_pole(const FormalFraction& f, std::size_t index);

// For an integer c_W = -k: whether G fails to be divisible by
// (u^k - 1)^kappa.
bool is_integer_direction_pole(const FormalFraction& f, std::size_t index);

// Cancels every binomial of the denominator from G; the quotient when all
// divisions are exact.
std::optional<LaurentMulti> reduce_fully(const FormalFraction& f);

// Substitutes s_i -> a_i - 1; equals L^n times the PV integral.
PuiseuxRational specialize(const FormalFraction& f, const ExponentVector& a);

// c_W and c_W' are Z-linearly independent (with the constant coordinate).
bool linearly_independent(const MElem& x, const MElem& y);

// A vector y with y . c = 1 for a primitive integer vector c.
std::vector<long> bezout_vector(const std::vector<long>& c);

}  // namespace mpvi
