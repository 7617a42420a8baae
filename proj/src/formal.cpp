#include "mpvi/formal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "mpvi/error.hpp"

namespace mpvi {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long content(const std::vector<long>& c) {
  long g = 0;
  for (long x : c) g = std::gcd(g, x);
  return g;
}

// Pole test along c: kappa successive divisions, each preceded by the
// vanishing check.
bool fails_power_divisibility(const LaurentMulti& g, const std::vector<long>& c, long kappa) {
  LaurentMulti current = g;
  for (long k = 0; k < kappa; ++k) {
    if (current.is_zero()) return false;
    const bool vanishes = current.vanishes_on_binomial(c);
    auto quotient = current.divide_binomial(c);
    if (vanishes != quotient.has_value()) throw std::logic_error("divisibility tests disagree");
    if (!quotient) return true;
    current = std::move(*quotient);
  }
  return false;
}

}  // namespace

MElem MElem::canonical(long n, long lambda0, const std::vector<long>& lambdas) {
  MElem m;
  const long last = lambdas.empty() ? 0 : lambdas.back();
  m.coeffs.push_back(lambda0 - last * (n + 1));
  for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) m.coeffs.push_back(lambdas[i] - last);
  return m;
}

bool MElem::is_integer() const {
  return std::all_of(coeffs.begin() + 1, coeffs.end(), [](long x) { return x == 0; });
}

MElem MElem::operator-() const {
  MElem m = *this;
  for (auto& x : m.coeffs) x = -x;
  return m;
}

Rational MElem::evaluate(const ExponentVector& a) const {
  Rational v = coeffs[0];
  for (std::size_t i = 1; i < coeffs.size(); ++i) v += coeffs[i] * (a.at(i - 1) - 1);
  return v;
}

std::string MElem::to_string() const {
  std::ostringstream out;
  out << coeffs[0];
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    long c = coeffs[i];
    if (c == 0) continue;
    out << (c > 0 ? " + " : " - ");
    if (std::abs(c) != 1) out << std::abs(c) << "*";
    out << "s" << i;
  }
  return out.str();
}

MElem melem_for_edge(const Arrangement& arrangement, const Edge& edge) {
  std::vector<long> lambdas(arrangement.size(), 0);
  for (std::size_t i : edge.containing) lambdas[i] = 1;
  return MElem::canonical(arrangement.projective_dim(), static_cast<long>(edge.codim), lambdas);
}

LaurentMulti LaurentMulti::constant(std::size_t vars, const Integer& c) {
  LaurentMulti m(vars);
  if (c != 0) m.terms_.emplace_back(Exponent(vars, 0), c);
  return m;
}

LaurentMulti LaurentMulti::from_u(std::size_t vars, const LaurentPoly& p) {
  LaurentMulti m(vars);
  if (p.is_zero()) return m;
  for (long e = p.valuation(); e <= p.degree(); ++e) {
    Integer c = p.coeff(e);
    if (c == 0) continue;
    Exponent x(vars, 0);
    x[0] = e;
    m.terms_.emplace_back(std::move(x), c);
  }
  return m;
}

LaurentMulti LaurentMulti::from_terms(std::size_t vars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentMulti m(vars);
  for (auto& t : terms) {
    if (!m.terms_.empty() && m.terms_.back().first == t.first) m.terms_.back().second += t.second;
    else m.terms_.push_back(std::move(t));
    if (m.terms_.back().second == 0) m.terms_.pop_back();
  }
  return m;
}

LaurentMulti& LaurentMulti::operator+=(const LaurentMulti& other) {
  if (other.terms_.empty()) return *this;
  if (vars_ == 0) vars_ = other.vars_;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Integer c = a->second + b->second;
      if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentMulti LaurentMulti::shifted(const Exponent& by) const {
  LaurentMulti m = *this;
  for (auto& [e, c] : m.terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += by[i];
  }
  return m;
}

LaurentMulti LaurentMulti::times_binomial(const Exponent& c) const {
  LaurentMulti out = shifted(c);
  LaurentMulti negated = *this;
  for (auto& t : negated.terms_) t.second = -t.second;
  out += negated;
  return out;
}

LaurentMulti LaurentMulti::times_u(const LaurentPoly& p) const {
  LaurentMulti out(vars_);
  if (p.is_zero()) return out;
  Exponent shift(vars_, 0);
  for (long e = p.valuation(); e <= p.degree(); ++e) {
    Integer c = p.coeff(e);
    if (c == 0) continue;
    shift[0] = e;
    LaurentMulti part = shifted(shift);
    for (auto& t : part.terms_) t.second *= c;
    out += part;
  }
  return out;
}

std::optional<LaurentMulti> LaurentMulti::divide_binomial(const Exponent& c) const {
  const long g = content(c);
  if (g == 0) throw std::invalid_argument("division by x^0 - 1");
  if (terms_.empty()) return *this;
  Exponent step(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) step[i] = c[i] / g;
  std::size_t pivot = 0;
  while (step[pivot] == 0) ++pivot;

  // Each line base + k * step becomes a polynomial in w = x^step.
  std::map<Exponent, std::map<long, Integer>> lines;
  for (const auto& [e, coeff] : terms_) {
    const long k = floor_div(e[pivot], step[pivot]);
    Exponent base = e;
    for (std::size_t i = 0; i < base.size(); ++i) base[i] -= k * step[i];
    lines[std::move(base)][k] = coeff;
  }
  const LaurentPoly divisor = LaurentPoly::binomial(g);
  std::vector<Term> out;
  for (const auto& [base, poly] : lines) {
    const long low = poly.begin()->first;
    std::vector<Integer> dense(static_cast<std::size_t>(poly.rbegin()->first - low + 1), 0);
    for (const auto& [k, coeff] : poly) dense[static_cast<std::size_t>(k - low)] = coeff;
    auto quotient = LaurentPoly(low, std::move(dense)).divide_exact(divisor);
    if (!quotient) return std::nullopt;
    for (long k = quotient->valuation(); k <= quotient->degree(); ++k) {
      Integer coeff = quotient->coeff(k);
      if (coeff == 0) continue;
      Exponent e = base;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += k * step[i];
      out.emplace_back(std::move(e), std::move(coeff));
    }
  }
  return from_terms(vars_, std::move(out));
}

bool LaurentMulti::vanishes_on_binomial(const Exponent& c) const {
  const long g = content(c);
  if (g == 0) throw std::invalid_argument("x^0 - 1 vanishes identically");
  std::vector<long> step(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) step[i] = c[i] / g;
  // Integer forms spanning the orthogonal complement of step label the
  // lines; y . e locates a monomial on its line.
  RationalMatrix forms;
  for (const auto& row : null_space({RationalVector(step.begin(), step.end())}, step.size())) {
    IntegerVector v = primitive_integer_vector(row);
    forms.emplace_back(v.begin(), v.end());
  }
  const std::vector<long> y = bezout_vector(step);
  std::map<std::pair<std::vector<Integer>, long>, Integer> sums;
  for (const auto& [e, coeff] : terms_) {
    std::vector<Integer> key;
    RationalVector er(e.begin(), e.end());
    for (const auto& f : forms) key.push_back(dot(f, er).get_num());
    long along = 0;
    for (std::size_t i = 0; i < e.size(); ++i) along += y[i] * e[i];
    along = ((along % g) + g) % g;
    sums[{std::move(key), along}] += coeff;
  }
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

bool LaurentMulti::is_univariate_in_u() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return std::all_of(t.first.begin() + 1, t.first.end(), [](long x) { return x == 0; });
  });
}

LaurentPoly LaurentMulti::as_u_poly() const {
  if (!is_univariate_in_u()) throw std::logic_error("polynomial involves the s-variables");
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p += LaurentPoly::monomial(c, e[0]);
  return p;
}

FormalFraction formal_pv(const StratumTable& table) {
  const Arrangement& arr = table.arrangement();
  FormalFraction f;
  f.n = arr.projective_dim();
  f.d = arr.size();
  const std::size_t vars = f.d;
  const std::size_t top = table.top_node();
  std::vector<std::vector<long>> c(table.node_count());
  LaurentMulti product = LaurentMulti::constant(vars, 1);
  for (std::size_t x = 1; x < top; ++x) {
    MElem m = melem_for_edge(arr, table.edge_of_node(x));
    if (content(m.coeffs) == 0) throw std::logic_error("c_W vanishes");
    c[x] = m.coeffs;
    product = product.times_binomial(c[x]);
    f.denominator.push_back(std::move(m));
    f.edge_labels.push_back(table.space(x).to_string());
  }

  // Depth-first over chains; q holds the product of the binomials of the
  // edges outside the chain.
  LaurentMulti total(vars);
  Chain chain;
  const LaurentPoly u_minus_one = LaurentPoly::binomial(1);
  std::function<void(const LaurentMulti&, const LaurentPoly&)> visit = [&](const LaurentMulti& q,
                                                                         const LaurentPoly& power) {
    LaurentPoly weight = chain_stratum_class(table, chain, false) * power;
    total += q.times_u(weight);
    for (std::size_t k = 1; k < top; ++k) {
      if (!chain.empty() && !table.below(chain.back(), k)) continue;
      auto next = q.divide_binomial(c[k]);
      if (!next) throw std::logic_error("binomial product not divisible by its own factor");
      chain.push_back(k);
      visit(*next, power * u_minus_one);
      chain.pop_back();
    }
  };
  visit(product, LaurentPoly(Integer(1)));
  f.numerator = std::move(total);
  return f;
}

FormalFraction formal_pv(const Arrangement& arrangement) { return formal_pv(StratumTable(arrangement)); }

bool formal_is_zero(const FormalFraction& f) { return f.numerator.is_zero(); }

long pole_multiplicity(const FormalFraction& f, std::size_t index) {
  const MElem& c = f.denominator.at(index);
  const MElem minus = -c;
  return static_cast<long>(std::count_if(f.denominator.begin(), f.denominator.end(),
                                         [&](const MElem& m) { return m == c || m == minus; }));
}

bool is_pole(const FormalFraction& f, std::size_t index) {
  const MElem& c = f.denominator.at(index);
  if (c.is_integer()) {
    throw Error(ErrorKind::IntegerDirection, "c_W is the integer " + c.to_string(), f.edge_labels[index]);
  }
  return fails_power_divisibility(f.numerator, c.coeffs, pole_multiplicity(f, index));
}

bool is_integer_direction_pole(const FormalFraction& f, std::size_t index) {
  const MElem& c = f.denominator.at(index);
  if (!c.is_integer()) throw std::invalid_argument("c_W is not an integer");
  std::vector<long> direction(c.coeffs.size(), 0);
  direction[0] = std::abs(c.coeffs[0]);
  return fails_power_divisibility(f.numerator, direction, pole_multiplicity(f, index));
}

std::optional<LaurentMulti> reduce_fully(const FormalFraction& f) {
  LaurentMulti current = f.numerator;
  for (const auto& c : f.denominator) {
    auto q = current.divide_binomial(c.coeffs);
    if (!q) return std::nullopt;
    current = std::move(*q);
  }
  return current;
}

PuiseuxRational specialize(const FormalFraction& f, const ExponentVector& a) {
  if (a.size() != f.d) throw Error(ErrorKind::DimensionMismatch, "exponent vector has the wrong length");
  Rational sum = 0;
  for (const auto& x : a) sum += x;
  if (sum != static_cast<long>(f.d) - f.n - 1) throw Error(ErrorKind::DegreeCondition, "degree condition fails");
  const long q = root_order(a);
  std::map<long, Integer> collected;
  for (const auto& [e, coeff] : f.numerator.terms()) {
    Rational exponent = e[0];
    for (std::size_t i = 1; i < e.size(); ++i) exponent += e[i] * (a[i - 1] - 1);
    exponent *= q;
    collected[to_long(exponent.get_num())] += coeff;
  }
  LaurentPoly num;
  for (const auto& [e, coeff] : collected) num += LaurentPoly::monomial(coeff, e);
  PuiseuxRational value(q, num);
  for (std::size_t i = 0; i < f.denominator.size(); ++i) {
    Rational v = f.denominator[i].evaluate(a);
    if (v == 0) throw Error(ErrorKind::LogarithmicPole, "c_W specializes to 0", f.edge_labels[i]);
    value *= PuiseuxRational::inverse_binomial(q, to_long(Rational(v * q).get_num()));
  }
  return value;
}

bool linearly_independent(const MElem& x, const MElem& y) {
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    for (std::size_t j = i + 1; j < x.coeffs.size(); ++j) {
      if (x.coeffs[i] * y.coeffs[j] != x.coeffs[j] * y.coeffs[i]) return true;
    }
  }
  return false;
}

std::vector<long> bezout_vector(const std::vector<long>& c) {
  std::vector<long> y(c.size(), 0);
  long g = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    if (g == 0) {
      g = c[j];
      y[j] = 1;
      continue;
    }
    // s * g + t * c_j = gcd(g, c_j)
    long old_r = g, r = c[j], old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      long quo = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - quo * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - quo * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - quo * t);
    }
    for (auto& v : y) v *= old_s;
    y[j] = old_t;
    g = old_r;
  }
  if (g == -1) {
    for (auto& v : y) v = -v;
    g = 1;
  }
  if (g != 1) throw std::invalid_argument("vector is not primitive");
  return y;
}

}  // namespace mpvi
