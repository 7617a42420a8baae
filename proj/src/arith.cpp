#include "mpvi/arith.hpp"

#include <cctype>
#include <limits>

#include "mpvi/error.hpp"

namespace mpvi {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroNormal: return "ZeroNormal";
    case ErrorKind::DuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::NotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorKind::LogarithmicPole: return "LogarithmicPole";
    case ErrorKind::DegreeCondition: return "DegreeCondition";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::NegativeExponentDetected: return "NegativeExponentDetected";
    case ErrorKind::NotEssential: return "NotEssential";
    case ErrorKind::Decomposable: return "Decomposable";
    case ErrorKind::WitnessSearchFailed: return "WitnessSearchFailed";
    case ErrorKind::IntegerDirection: return "IntegerDirection";
  }
  return "UnknownError";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ZeroNormal:
    case ErrorKind::DuplicateHyperplane:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DegreeCondition:
    case ErrorKind::InvalidExponent:
      return true;
    default:
      return false;
  }
}

Integer binomial(long upper, long lower) {
  if (lower < 0) return 0;
  if (upper >= 0) {
    if (lower > upper) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(upper),
                 static_cast<unsigned long>(lower));
    return result;
  }
  // C(-k, m) = (-1)^m C(k + m - 1, m)
  Integer result = binomial(-upper + lower - 1, lower);
  return (lower % 2 == 0) ? result : Integer(-result);
}

Rational binomial(const Rational& upper, long lower) {
  if (lower < 0) return 0;
  Rational result = 1;
  for (long j = 0; j < lower; ++j) {
    result *= (upper - j);
    result /= (j + 1);
  }
  return result;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer q = 1;
  for (const auto& v : values) q = lcm(q, v.get_den());
  return q;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  std::string numerator;
  if (text.substr(0, 3) == "\xE2\x88\x92") {  // U+2212 MINUS SIGN
    numerator.push_back('-');
    pos = 3;
  } else if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') numerator.push_back('-');
    ++pos;
  }
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    numerator.push_back(text[pos++]);
  }
  if (pos == start) fail();
  std::string denominator = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') fail();
    ++pos;
    std::size_t dstart = pos;
    denominator.clear();
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      denominator.push_back(text[pos++]);
    }
    if (pos == dstart || pos != text.size()) fail();
  }
  Integer num(numerator), den(denominator);
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

long to_long(const Integer& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
  return value.get_si();
}

}  // namespace mpvi
