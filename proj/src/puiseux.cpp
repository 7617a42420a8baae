#include "mpvi/puiseux.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mpvi/cyclotomic.hpp"
#include "mpvi/error.hpp"

namespace mpvi {

namespace {

LaurentPoly cyclotomic_product(const PuiseuxRational::CyclotomicFactors& factors) {
  LaurentPoly p(Integer(1));
  for (auto [e, m] : factors) {
    for (int i = 0; i < m; ++i) p *= cyclotomic(e);
  }
  return p;
}

// Multiplies num by prod Phi_e^(target_e - have_e).
LaurentPoly lift(LaurentPoly num, const PuiseuxRational::CyclotomicFactors& have,
                 const PuiseuxRational::CyclotomicFactors& target) {
  for (auto [e, m] : target) {
    auto it = have.find(e);
    int missing = m - (it == have.end() ? 0 : it->second);
    for (int i = 0; i < missing; ++i) num *= cyclotomic(e);
  }
  return num;
}

PuiseuxRational::CyclotomicFactors max_factors(const PuiseuxRational::CyclotomicFactors& a,
                                               const PuiseuxRational::CyclotomicFactors& b) {
  auto out = a;
  for (auto [e, m] : b) out[e] = std::max(out[e], m);
  return out;
}

}  // namespace

Integer SeriesExpansion::coefficient(long exponent) const {
  long idx = exponent - valuation;
  if (idx < 0 || idx >= static_cast<long>(coefficients.size())) return 0;
  return coefficients[static_cast<std::size_t>(idx)];
}

PuiseuxRational::PuiseuxRational(long root_order) : q_(root_order) {
  if (q_ < 1) throw std::invalid_argument("root order must be positive");
}

PuiseuxRational::PuiseuxRational(long root_order, LaurentPoly numerator)
    : q_(root_order), num_(std::move(numerator)) {
  if (q_ < 1) throw std::invalid_argument("root order must be positive");
}

PuiseuxRational::PuiseuxRational(long q, LaurentPoly num, CyclotomicFactors den)
    : q_(q), num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

PuiseuxRational PuiseuxRational::inverse_binomial(long root_order, long k) {
  if (k == 0) throw std::invalid_argument("1/(t^0 - 1) is undefined");
  // t^k - 1 = -t^k (t^-k - 1) for k < 0.
  LaurentPoly num = k > 0 ? LaurentPoly(Integer(1)) : LaurentPoly::monomial(-1, -k);
  return PuiseuxRational(root_order, std::move(num), binomial_factorization(k));
}

PuiseuxRational PuiseuxRational::from_fraction(long root_order, const LaurentPoly& numerator,
                                               const LaurentPoly& denominator) {
  if (denominator.is_zero()) throw Error(ErrorKind::ParseError, "zero denominator");
  LaurentPoly rest = denominator.shifted(-denominator.valuation());
  CyclotomicFactors factors;
  const long deg = rest.degree();
  // phi(e) >= sqrt(e/2), so only e <= 2 deg^2 can divide.
  for (long e = 1; deg > 0 && e <= 2 * deg * deg + 2; ++e) {
    while (rest.degree() > 0) {
      auto q = rest.divide_exact(cyclotomic(e));
      if (!q) break;
      rest = std::move(*q);
      factors[e] += 1;
    }
  }
  if (rest.degree() != 0 || (rest.coeff(0) != 1 && rest.coeff(0) != -1)) {
    throw Error(ErrorKind::ParseError, "denominator is not a product of cyclotomic factors");
  }
  LaurentPoly num = numerator.shifted(-denominator.valuation());
  num *= rest.coeff(0);
  return PuiseuxRational(root_order, std::move(num), std::move(factors));
}

PuiseuxRational PuiseuxRational::linear_combination(
    const std::vector<std::pair<const PuiseuxRational*, LaurentPoly>>& terms, long root_order) {
  CyclotomicFactors den;
  for (const auto& [value, poly] : terms) {
    if (value->q_ != root_order) throw std::invalid_argument("mixed root orders");
    if (!value->is_zero() && !poly.is_zero()) den = max_factors(den, value->den_);
  }
  LaurentPoly num;
  for (const auto& [value, poly] : terms) {
    if (value->is_zero() || poly.is_zero()) continue;
    num += lift(value->num_ * poly, value->den_, den);
  }
  return PuiseuxRational(root_order, std::move(num), std::move(den));
}

void PuiseuxRational::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    // Phi_e(0) != 0, so divisibility only sees the polynomial part.
    LaurentPoly base = num_.shifted(-num_.valuation());
    const long val = num_.valuation();
    while (it->second > 0) {
      auto q = base.divide_exact(cyclotomic(it->first));
      if (!q) break;
      base = std::move(*q);
      --it->second;
    }
    num_ = base.shifted(val);
    it = (it->second == 0) ? den_.erase(it) : std::next(it);
  }
}

std::pair<LaurentPoly, LaurentPoly> PuiseuxRational::as_fraction() const {
  LaurentPoly den = cyclotomic_product(den_);
  if (num_.is_zero()) return {LaurentPoly(), LaurentPoly(Integer(1))};
  long shift = num_.valuation() < 0 ? -num_.valuation() : 0;
  return {num_.shifted(shift), den.shifted(shift)};
}

PuiseuxRational PuiseuxRational::refined(long k) const {
  if (k < 1) throw std::invalid_argument("refinement factor must be positive");
  if (k == 1) return *this;
  CyclotomicFactors den;
  for (auto [e, m] : den_) {
    for (auto [f, mf] : stretched_cyclotomic_factorization(e, k)) den[f] += m * mf;
  }
  PuiseuxRational out(q_ * k);
  out.num_ = num_.stretched(k);
  out.den_ = std::move(den);
  return out;
}

PuiseuxRational PuiseuxRational::with_root_order(long q) const {
  if (q % q_ != 0) throw std::invalid_argument("target root order must be a multiple");
  return refined(q / q_);
}

PuiseuxRational PuiseuxRational::shifted(long k) const {
  PuiseuxRational out = *this;
  out.num_ = num_.shifted(k);
  return out;
}

PuiseuxRational& PuiseuxRational::operator+=(const PuiseuxRational& other) {
  if (other.is_zero()) return *this;
  long q = std::lcm(q_, other.q_);
  PuiseuxRational a = with_root_order(q);
  PuiseuxRational b = other.with_root_order(q);
  CyclotomicFactors den = max_factors(a.den_, b.den_);
  LaurentPoly num = lift(a.num_, a.den_, den) + lift(b.num_, b.den_, den);
  return *this = PuiseuxRational(q, std::move(num), std::move(den));
}

PuiseuxRational& PuiseuxRational::operator-=(const PuiseuxRational& other) {
  return *this += -other;
}

PuiseuxRational& PuiseuxRational::operator*=(const PuiseuxRational& other) {
  long q = std::lcm(q_, other.q_);
  PuiseuxRational a = with_root_order(q);
  PuiseuxRational b = other.with_root_order(q);
  CyclotomicFactors den = a.den_;
  for (auto [e, m] : b.den_) den[e] += m;
  return *this = PuiseuxRational(q, a.num_ * b.num_, std::move(den));
}

PuiseuxRational& PuiseuxRational::operator*=(const LaurentPoly& poly) {
  return *this = PuiseuxRational(q_, num_ * poly, den_);
}

PuiseuxRational PuiseuxRational::operator-() const {
  PuiseuxRational out = *this;
  out.num_ = -num_;
  return out;
}

SeriesExpansion PuiseuxRational::series(long order) const {
  SeriesExpansion s;
  if (num_.is_zero()) return s;
  s.valuation = num_.valuation();
  if (order < s.valuation) return s;
  const std::size_t count = static_cast<std::size_t>(order - s.valuation + 1);
  LaurentPoly den = cyclotomic_product(den_);
  const Integer& d0 = den.coeff(0);  // +-1 for cyclotomic products
  std::vector<Integer> out(count, 0);
  const auto& n = num_.coefficients();
  for (std::size_t i = 0; i < count; ++i) {
    Integer acc = i < n.size() ? n[i] : Integer(0);
    const std::size_t dmax = std::min<std::size_t>(i, static_cast<std::size_t>(den.degree()));
    for (std::size_t j = 1; j <= dmax; ++j) {
      const Integer& dj = den.coefficients()[j];
      if (dj != 0) acc -= dj * out[i - j];
    }
    out[i] = d0 == 1 ? acc : Integer(-acc);
  }
  s.coefficients = std::move(out);
  return s;
}

bool operator==(const PuiseuxRational& a, const PuiseuxRational& b) {
  if (a.q_ == b.q_) return a.num_ == b.num_ && a.den_ == b.den_;
  long q = std::lcm(a.q_, b.q_);
  PuiseuxRational x = a.with_root_order(q);
  PuiseuxRational y = b.with_root_order(q);
  return x.num_ == y.num_ && x.den_ == y.den_;
}

bool operator!=(const PuiseuxRational& a, const PuiseuxRational& b) { return !(a == b); }

PuiseuxRational operator+(PuiseuxRational a, const PuiseuxRational& b) { return a += b; }
PuiseuxRational operator-(PuiseuxRational a, const PuiseuxRational& b) { return a -= b; }
PuiseuxRational operator*(PuiseuxRational a, const PuiseuxRational& b) { return a *= b; }

std::string PuiseuxRational::to_string() const {
  std::ostringstream out;
  if (num_.is_zero()) {
    out << "0";
  } else {
    long val = num_.valuation();
    LaurentPoly body = num_.shifted(-val);
    if (val != 0) out << "t^" << val << "*";
    out << "(" << body.to_string("t") << ")";
    for (auto [e, m] : den_) {
      out << " / Phi_" << e << "(t)";
      if (m > 1) out << "^" << m;
    }
  }
  out << ", t = L^(1/" << q_ << ")";
  return out.str();
}

}  // namespace mpvi
