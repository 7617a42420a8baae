#include "mpvi/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mpvi {

LaurentPoly::LaurentPoly(Integer constant) : low_(0), coeffs_{std::move(constant)} {
  normalize();
}

LaurentPoly::LaurentPoly(long low, std::vector<Integer> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(Integer coeff, long exponent) {
  return LaurentPoly(exponent, {std::move(coeff)});
}

LaurentPoly LaurentPoly::binomial(long k) {
  if (k == 0) return {};
  if (k > 0) {
    std::vector<Integer> c(static_cast<std::size_t>(k) + 1, 0);
    c.front() = -1;
    c.back() = 1;
    return LaurentPoly(0, std::move(c));
  }
  std::vector<Integer> c(static_cast<std::size_t>(-k) + 1, 0);
  c.front() = 1;
  c.back() = -1;
  return LaurentPoly(k, std::move(c));
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<Integer>(coeffs_.begin() + static_cast<long>(first),
                                   coeffs_.begin() + static_cast<long>(last));
    low_ += static_cast<long>(first);
  }
}

Integer LaurentPoly::coeff(long exponent) const {
  if (is_zero() || exponent < low_ || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  long lo = std::min(low_, other.low_);
  long hi = std::max(degree(), other.degree());
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    c[static_cast<std::size_t>(other.low_ - lo) + i] += other.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  if (is_zero() || other.is_zero()) return *this = LaurentPoly();
  std::vector<Integer> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  low_ += other.low_;
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) return *this = LaurentPoly();
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::stretched(long k) const {
  if (k < 1) throw std::invalid_argument("stretch factor must be positive");
  if (is_zero() || k == 1) return *this;
  std::vector<Integer> c((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(k)] = coeffs_[i];
  return LaurentPoly(low_ * k, std::move(c));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero() || divisor.low_ != 0) {
    throw std::invalid_argument("divisor must be a polynomial with nonzero constant term");
  }
  const Integer& lead = divisor.coeffs_.back();
  if (lead != 1 && lead != -1) throw std::invalid_argument("divisor must be monic up to sign");
  if (is_zero()) return LaurentPoly();
  const std::size_t dn = divisor.coeffs_.size() - 1;
  if (coeffs_.size() - 1 < dn) return std::nullopt;
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> quot(coeffs_.size() - dn, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer c = rem[k + dn];
    if (c == 0) continue;
    if (lead == -1) c = -c;
    quot[k] = c;
    for (std::size_t j = 0; j <= dn; ++j) {
      if (divisor.coeffs_[j] != 0) rem[k + j] -= c * divisor.coeffs_[j];
    }
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (rem[j] != 0) return std::nullopt;
  }
  return LaurentPoly(low_, std::move(quot));
}

Integer LaurentPoly::evaluate(const Integer& x) const {
  if (is_zero()) return 0;
  if (low_ < 0) throw std::domain_error("cannot evaluate negative powers over the integers");
  Integer acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  Integer xp;
  mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(low_));
  return acc * xp;
}

Integer LaurentPoly::coefficient_sum() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long e = degree(); e >= low_; --e) {
    Integer c = coeff(e);
    if (c == 0) continue;
    Integer mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (e == 0 || mag != 1) out << mag.get_str();
    if (e != 0) {
      if (mag != 1) out << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
LaurentPoly operator*(LaurentPoly a, const Integer& s) { return a *= s; }

LPoly projective_space_class(long k) {
  if (k < 0) return {};
  return LaurentPoly(0, std::vector<Integer>(static_cast<std::size_t>(k) + 1, 1));
}

Integer euler_characteristic(const LPoly& p) { return p.coefficient_sum(); }

}  // namespace mpvi
