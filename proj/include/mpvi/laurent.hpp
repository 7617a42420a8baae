#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpvi/arith.hpp"

namespace mpvi {

// Univariate Laurent polynomial with integer coefficients, stored densely
// from the lowest nonzero exponent. The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant);
  LaurentPoly(long low, std::vector<Integer> coeffs);

  static LaurentPoly monomial(Integer coeff, long exponent);
  // x^k - 1, for any integer k (k = 0 gives zero).
  static LaurentPoly binomial(long k);

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest / highest exponent with a nonzero coefficient. Undefined on zero.
  long valuation() const { return low_; }
  long degree() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(long exponent) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& scalar);
  LaurentPoly operator-() const;

  // Multiplies by x^k.
  LaurentPoly shifted(long k) const;
  // Substitutes x -> x^k for k >= 1.
  LaurentPoly stretched(long k) const;

  // Exact quotient by a polynomial divisor with nonzero constant term and
  // leading coefficient +-1; nullopt if the division leaves a remainder.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  Integer evaluate(const Integer& x) const;  // requires valuation() >= 0
  Integer coefficient_sum() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Renders with the given variable name, highest degree first.
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();

  long low_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Integer& s);

// Grothendieck-ring classes are polynomials in the Lefschetz class L.
using LPoly = LaurentPoly;

// [P^k] = 1 + L + ... + L^k; [P^{-1}] = 0.
LPoly projective_space_class(long k);

// Evaluation at L = 1.
Integer euler_characteristic(const LPoly& p);

}  // namespace mpvi
