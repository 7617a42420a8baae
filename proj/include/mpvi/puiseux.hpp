#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mpvi/laurent.hpp"

namespace mpvi {

// Power series prefix: coefficients of t^valuation, t^(valuation+1), ...
struct SeriesExpansion {
  long valuation = 0;
  std::vector<Integer> coefficients;

  Integer coefficient(long exponent) const;
};

// An exact element of Q(t), t = L^(1/q).
//
// The value is numerator / prod_e Phi_e(t)^m_e with Phi_e the cyclotomic
// polynomials. Every quantity built here has a denominator of that shape,
// since all denominators come from binomials L^b - 1. Powers of t are
// absorbed into the Laurent numerator. The representation is kept reduced:
// the numerator is not divisible by any Phi_e present in the denominator,
// which makes it canonical for fixed q.
class PuiseuxRational {
 public:
  using CyclotomicFactors = std::map<long, int>;

  explicit PuiseuxRational(long root_order = 1);
  PuiseuxRational(long root_order, LaurentPoly numerator);

  // 1 / (t^k - 1), k != 0.
  static PuiseuxRational inverse_binomial(long root_order, long k);

  // Rebuilds a value from an expanded fraction num/den. The denominator must
  // be +-t^j times a product of cyclotomic polynomials; throws ParseError
  // otherwise.
  static PuiseuxRational from_fraction(long root_order, const LaurentPoly& numerator,
                                       const LaurentPoly& denominator);

  // sum_i values[i] * polys[i], reduced once at the end.
  static PuiseuxRational linear_combination(
      const std::vector<std::pair<const PuiseuxRational*, LaurentPoly>>& terms,
      long root_order);

  long root_order() const { return q_; }
  bool is_zero() const { return num_.is_zero(); }
  const LaurentPoly& numerator() const { return num_; }
  const CyclotomicFactors& denominator_factors() const { return den_; }

  // Reduced num/den as polynomials in t with nonnegative exponents; the
  // denominator is monic and carries the power of t.
  std::pair<LaurentPoly, LaurentPoly> as_fraction() const;

  // Same value written in t' = t^(1/k).
  PuiseuxRational refined(long k) const;
  PuiseuxRational with_root_order(long q) const;

  // Multiplies by t^k.
  PuiseuxRational shifted(long k) const;

  PuiseuxRational& operator+=(const PuiseuxRational& other);
  PuiseuxRational& operator-=(const PuiseuxRational& other);
  PuiseuxRational& operator*=(const PuiseuxRational& other);
  PuiseuxRational& operator*=(const LaurentPoly& poly);
  PuiseuxRational operator-() const;

  // Laurent expansion in t up to and including t^order.
  SeriesExpansion series(long order) const;

  friend bool operator==(const PuiseuxRational& a, const PuiseuxRational& b);

  // e.g. "t^-4*(t^4 + 2*t^3 + 3*t^2 + 2*t + 1), t = L^(1/4)"
  std::string to_string() const;

 private:
  PuiseuxRational(long q, LaurentPoly num, CyclotomicFactors den);
  void reduce();

  long q_;
  LaurentPoly num_;
  CyclotomicFactors den_;
};

PuiseuxRational operator+(PuiseuxRational a, const PuiseuxRational& b);
PuiseuxRational operator-(PuiseuxRational a, const PuiseuxRational& b);
PuiseuxRational operator*(PuiseuxRational a, const PuiseuxRational& b);
bool operator!=(const PuiseuxRational& a, const PuiseuxRational& b);

}  // namespace mpvi
