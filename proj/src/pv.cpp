#include "mpvi/pv.hpp"

#include <algorithm>
#include <numeric>

#include "mpvi/error.hpp"

namespace mpvi {

namespace {

std::vector<std::size_t> proper_nodes_by_dim(const StratumTable& table) {
  std::vector<std::size_t> nodes(table.stratum_count());
  std::iota(nodes.begin(), nodes.end(), std::size_t{1});
  std::stable_sort(nodes.begin(), nodes.end(),
                   [&](std::size_t x, std::size_t y) { return table.dim(x) < table.dim(y); });
  return nodes;
}

long exponent_in_t(long q, const Rational& value) {
  Rational scaled = value * q;
  if (scaled.get_den() != 1) throw std::logic_error("exponent not a multiple of 1/q");
  return to_long(scaled.get_num());
}

constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % prime);
}

std::uint64_t pow_mod(std::uint64_t base, const Integer& exponent) {
  Integer e = exponent % Integer(prime - 1);
  if (e < 0) e += prime - 1;
  std::uint64_t result = 1;
  for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2) + 1; bit-- > 0;) {
    result = mul_mod(result, result);
    if (mpz_tstbit(e.get_mpz_t(), bit)) result = mul_mod(result, base);
  }
  return result;
}

std::uint64_t reduce_mod(const Integer& x) {
  Integer r = x % Integer(prime);
  if (r < 0) r += prime;
  return r.get_ui();
}

std::uint64_t evaluate_mod(const LaurentPoly& p, std::uint64_t x) {
  std::uint64_t acc = 0;
  if (p.is_zero()) return acc;
  for (long e = p.degree(); e >= p.valuation(); --e) acc = (mul_mod(acc, x) + reduce_mod(p.coeff(e))) % prime;
  return mul_mod(acc, pow_mod(x, Integer(p.valuation())));
}

long checked_root_order(const StratumTable& table, const ExponentVector& a) {
  check_exponents(table.arrangement(), a);
  return root_order(a);
}

}  // namespace

void check_exponents(const Arrangement& arrangement, const ExponentVector& a) {
  if (a.size() != arrangement.size()) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(arrangement.size()) +
                                                  " exponents, got " + std::to_string(a.size()));
  }
  Rational sum = 0;
  for (const auto& x : a) sum += x;
  const long target = static_cast<long>(arrangement.size()) - static_cast<long>(arrangement.ambient_dim());
  if (sum != target) {
    throw Error(ErrorKind::DegreeCondition,
                "sum of exponents is " + to_string(sum) + ", expected " + std::to_string(target));
  }
}

std::vector<Rational> b_values(const StratumTable& table, const ExponentVector& a) {
  std::vector<Rational> b(table.node_count(), 0);
  for (std::size_t x = 1; x < table.top_node(); ++x) b[x] = b_coefficient(table.edge_of_node(x), a);
  return b;
}

long root_order(const ExponentVector& a) { return to_long(common_denominator(a)); }

void check_no_logarithmic_pole(const StratumTable& table, const std::vector<Rational>& b) {
  for (std::size_t x = 1; x < table.top_node(); ++x) {
    if (b[x] == 0) {
      throw Error(ErrorKind::LogarithmicPole, "b_W = 0 along an edge", table.space(x).to_string());
    }
  }
}

PuiseuxRational pole_factor(long q, const Rational& b) {
  PuiseuxRational f = PuiseuxRational::inverse_binomial(q, exponent_in_t(q, b));
  f *= LaurentPoly::binomial(q);
  return f;
}

PuiseuxRational pv_integral(const StratumTable& table, const ExponentVector& a) {
  const long q = checked_root_order(table, a);
  const auto b = b_values(table, a);
  check_no_logarithmic_pole(table, b);
  const std::size_t top = table.top_node();
  const long n = table.arrangement().projective_dim();

  // g[x] = sum over chains ending at x of [strata below x] * prod f_W.
  std::vector<PuiseuxRational> g(table.node_count(), PuiseuxRational(q));
  g[0] = PuiseuxRational(q, LaurentPoly(Integer(1)));
  std::vector<std::size_t> done{0};
  auto gather = [&](std::size_t x) {
    std::vector<std::pair<const PuiseuxRational*, LaurentPoly>> terms;
    for (std::size_t y : done) {
      if (table.below(y, x)) terms.emplace_back(&g[y], table.open_class(y, x).stretched(q));
    }
    return PuiseuxRational::linear_combination(terms, q);
  };
  for (std::size_t x : proper_nodes_by_dim(table)) {
    g[x] = gather(x) * pole_factor(q, b[x]);
    done.push_back(x);
  }
  return gather(top).shifted(-n * q);
}

PuiseuxRational pv_integral(const Arrangement& arrangement, const ExponentVector& a) {
  return pv_integral(StratumTable(arrangement), a);
}

bool pv_certified_nonzero(const StratumTable& table, const ExponentVector& a, int trials, std::uint64_t seed) {
  check_exponents(table.arrangement(), a);
  const Integer q = common_denominator(a);
  const auto b = b_values(table, a);
  check_no_logarithmic_pole(table, b);
  const auto order = proper_nodes_by_dim(table);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t t = 2 + rng() % (prime - 3);
    const std::uint64_t L = pow_mod(t, q);
    if (L == 1) continue;
    std::vector<std::uint64_t> g(table.node_count(), 0);
    g[0] = 1;
    std::vector<std::size_t> done{0};
    auto gather = [&](std::size_t x) {
      std::uint64_t sum = 0;
      for (std::size_t y : done) {
        if (table.below(y, x)) sum = (sum + mul_mod(g[y], evaluate_mod(table.open_class(y, x), L))) % prime;
      }
      return sum;
    };
    bool pole = false;
    for (std::size_t x : order) {
      Rational scaled = b[x] * Rational(q);
      const std::uint64_t den = (pow_mod(t, scaled.get_num()) + prime - 1) % prime;
      if (den == 0) {
        pole = true;
        break;
      }
      // f = (L - 1) / (t^(q b) - 1), inverted by Fermat.
      g[x] = mul_mod(mul_mod(gather(x), L - 1), pow_mod(den, Integer(prime - 2)));
      done.push_back(x);
    }
    if (!pole && gather(table.top_node()) != 0) return true;
  }
  return false;
}

PuiseuxRational pv_integral_by_chains(const StratumTable& table, const ExponentVector& a) {
  const long q = checked_root_order(table, a);
  const auto b = b_values(table, a);
  check_no_logarithmic_pole(table, b);
  std::vector<PuiseuxRational> f(table.node_count(), PuiseuxRational(q));
  for (std::size_t x = 1; x < table.top_node(); ++x) f[x] = pole_factor(q, b[x]);
  PuiseuxRational total(q);
  table.for_each_chain([&](const Chain& chain) {
    PuiseuxRational term(q, chain_stratum_class(table, chain, false).stretched(q));
    for (std::size_t w : chain) term *= f[w];
    total += term;
  });
  return total.shifted(-table.arrangement().projective_dim() * q);
}

PuiseuxRational pv_integral_closed_form_check(const StratumTable& table, const ExponentVector& a) {
  const long q = checked_root_order(table, a);
  const auto b = b_values(table, a);
  check_no_logarithmic_pole(table, b);
  const PuiseuxRational one(q, LaurentPoly(Integer(1)));
  std::vector<PuiseuxRational> f(table.node_count(), PuiseuxRational(q));
  for (std::size_t x = 1; x < table.top_node(); ++x) f[x] = pole_factor(q, b[x]) - one;
  PuiseuxRational total(q);
  table.for_each_chain([&](const Chain& chain) {
    PuiseuxRational term(q, chain_stratum_class(table, chain, true).stretched(q));
    for (std::size_t w : chain) term *= f[w];
    total += term;
  });
  return total.shifted(-table.arrangement().projective_dim() * q);
}

ConstantTermReport series_constant_term_report(const StratumTable& table, const ExponentVector& a,
                                               long truncation) {
  const long q = root_order(a);
  const long n = table.arrangement().projective_dim();
  PuiseuxRational scaled = pv_integral(table, a).with_root_order(q).shifted(n * q);
  ConstantTermReport report;
  report.truncation = truncation > 0 ? truncation : 4 * n * q;
  report.series = scaled.series(report.truncation);
  if (!scaled.is_zero() && report.series.valuation < 0) {
    throw Error(ErrorKind::NegativeExponentDetected,
                "L^n * PV has a term t^" + std::to_string(report.series.valuation));
  }
  report.constant_term = report.series.coefficient(0);
  return report;
}

Integer series_constant_term(const StratumTable& table, const ExponentVector& a, long truncation) {
  return series_constant_term_report(table, a, truncation).constant_term;
}

Integer delta_chain_count(const StratumTable& table, const ExponentVector& a) {
  check_exponents(table.arrangement(), a);
  const auto b = b_values(table, a);
  check_no_logarithmic_pole(table, b);
  // c[x] = sum over all-negative chains ending at x of (-1)^length.
  std::vector<Integer> c(table.node_count(), 0);
  Integer delta = 1;
  for (std::size_t x : proper_nodes_by_dim(table)) {
    if (b[x] >= 0) continue;
    Integer acc = 1;
    for (std::size_t y = 1; y < table.top_node(); ++y) {
      if (b[y] < 0 && table.below(y, x)) acc += c[y];
    }
    c[x] = -acc;
    delta += c[x];
  }
  return delta;
}

PuiseuxRational generic_closed_form(long n, const ExponentVector& a) {
  const long d = static_cast<long>(a.size());
  Rational sum = 0;
  for (const auto& x : a) {
    if (x == 0 || x == 1) throw Error(ErrorKind::InvalidExponent, "exponent " + to_string(x) + " is 0 or 1");
    sum += x;
  }
  if (sum != d - n - 1) {
    throw Error(ErrorKind::DegreeCondition,
                "sum of exponents is " + to_string(sum) + ", expected " + std::to_string(d - n - 1));
  }
  const long q = root_order(a);
  // Elementary symmetric polynomials S_j in t^(q a_i).
  std::vector<LaurentPoly> s(static_cast<std::size_t>(d) + 1);
  s[0] = LaurentPoly(Integer(1));
  for (long k = 0; k < d; ++k) {
    LaurentPoly x = LaurentPoly::monomial(1, exponent_in_t(q, a[static_cast<std::size_t>(k)]));
    for (long j = k + 1; j >= 1; --j) s[static_cast<std::size_t>(j)] += s[static_cast<std::size_t>(j - 1)] * x;
  }
  LaurentPoly body;
  for (long r = 0; r <= d; ++r) {
    LaurentPoly inner;
    for (long i = 0; i <= n; ++i) {
      Integer coeff = binomial(d - 1 - r, i) * binomial(r - 1, n - i);
      if (coeff != 0) inner += LaurentPoly::monomial(coeff, (n - i) * q);
    }
    if (inner.is_zero()) continue;
    inner *= s[static_cast<std::size_t>(d - r)];
    if ((n + r) % 2 != 0) inner = -inner;
    body += inner;
  }
  PuiseuxRational value(q, body.shifted(-n * q));
  for (const auto& x : a) value *= PuiseuxRational::inverse_binomial(q, exponent_in_t(q, x));
  return value;
}

bool is_generic(const Arrangement& arrangement) {
  EdgeLattice lattice(arrangement);
  for (std::size_t i : lattice.proper()) {
    if (lattice.edge(i).containing.size() != lattice.edge(i).codim) return false;
  }
  return true;
}

GIdentityValues g_identity(long n, long m, long d, long r) {
  GIdentityValues v;
  v.brute_force = 0;
  v.unrewritten = 0;
  for (long i = 0; i <= n; ++i) {
    for (long a = 0; a <= m; ++a) {
      Integer common = binomial(r, i) * binomial(i, m - a);
      if ((n + i - m) % 2 != 0) common = -common;
      v.brute_force += common * binomial(d - 1 - i, d - 1 - n + a);
      v.unrewritten += common * binomial(d - 1 - i, n - i - a);
    }
  }
  v.closed_form = binomial(d - 1 - r, n - m) * binomial(r - 1, m);
  if (n % 2 != 0) v.closed_form = -v.closed_form;
  return v;
}

Integer f_term(long n, long m, long d, long i) {
  Integer total = 0;
  for (long a = 0; a <= m; ++a) total += binomial(i, m - a) * binomial(d - 1 - i, d - 1 - n + a);
  return total;
}

PositiveExponentWitness construct_positive_a(const StratumTable& table, std::optional<Rational> delta,
                                             std::optional<Rational> epsilon) {
  const Arrangement& arr = table.arrangement();
  if (!is_essential(arr)) throw Error(ErrorKind::NotEssential, "arrangement is not essential", arr.to_string());
  if (!is_indecomposable(arr)) throw Error(ErrorKind::Decomposable, "arrangement is decomposable", arr.to_string());
  const std::size_t N = arr.ambient_dim();
  const std::size_t d = arr.size();
  const long n = arr.projective_dim();

  PositiveExponentWitness w;
  RationalMatrix basis;
  for (std::size_t i = 0; i < d && basis.size() < N; ++i) {
    basis.emplace_back(arr.normal(i).begin(), arr.normal(i).end());
    if (rank(basis, N) == basis.size()) w.coordinate_hyperplanes.push_back(i);
    else basis.pop_back();
  }

  // Supports of the remaining normals in the new coordinates.
  std::vector<std::size_t> others;
  std::vector<std::vector<std::size_t>> supports;
  for (std::size_t i = 0; i < d; ++i) {
    if (std::find(w.coordinate_hyperplanes.begin(), w.coordinate_hyperplanes.end(), i) !=
        w.coordinate_hyperplanes.end())
      continue;
    RationalVector z = solve_in_span(basis, RationalVector(arr.normal(i).begin(), arr.normal(i).end()));
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < N; ++j) {
      if (z[j] != 0) support.push_back(j);
    }
    others.push_back(i);
    supports.push_back(std::move(support));
  }

  std::vector<std::size_t> picked;  // positions in others
  std::vector<bool> covered(N, false), used(others.size(), false);
  std::size_t covered_count = 0;
  std::vector<long> zeta;
  auto take = [&](std::size_t k) {
    long fresh = 0;
    for (std::size_t j : supports[k]) {
      if (!covered[j]) {
        covered[j] = true;
        ++covered_count;
        ++fresh;
      }
    }
    used[k] = true;
    picked.push_back(k);
    zeta.push_back(fresh);
  };
  if (others.empty()) throw Error(ErrorKind::Decomposable, "no hyperplane beyond a coordinate system");
  take(0);
  while (covered_count < N) {
    bool progressed = false;
    for (std::size_t k = 0; k < others.size() && !progressed; ++k) {
      if (used[k]) continue;
      bool meets = false, leaves = false;
      for (std::size_t j : supports[k]) (covered[j] ? meets : leaves) = true;
      if (meets && leaves) {
        take(k);
        progressed = true;
      }
    }
    if (!progressed) throw Error(ErrorKind::Decomposable, "coordinate supports split into blocks");
  }
  for (std::size_t k : picked) w.chosen.push_back(others[k]);

  const long r = static_cast<long>(picked.size());
  const long d_prime = static_cast<long>(d) - n - 1 - r;
  const long r_prime = n + 1 + r;
  std::vector<long> n_i(N, 0);
  for (std::size_t k : picked) {
    for (std::size_t j : supports[k]) ++n_i[j];
  }

  const Integer scale = Integer(static_cast<long>(d) + n + 2) * (static_cast<long>(d) + n + 2);
  Integer four_pow = 1;
  for (std::size_t k = 0; k < table.stratum_count(); ++k) four_pow *= 4;
  Rational del = delta ? *delta : Rational(1) / Rational(4 * scale);
  Rational eps = epsilon ? *epsilon : del / Rational(4 * scale * four_pow);

  for (int round = 0; round <= 20; ++round) {
    ExponentVector a(d, Rational(1) + r_prime * eps);
    for (std::size_t i = 0; i < N; ++i) {
      a[w.coordinate_hyperplanes[i]] =
          Rational(1) - Rational(n + 1, n + 2) + n_i[i] * del - d_prime * eps;
    }
    for (std::size_t j = 0; j < picked.size(); ++j) {
      Rational m_j = static_cast<long>(supports[picked[j]].size());
      a[others[picked[j]]] = Rational(1) - Rational(zeta[j], n + 2) - m_j * del - d_prime * eps;
    }
    for (auto& x : a) x.canonicalize();
    const auto b = b_values(table, a);
    bool positive = true;
    for (std::size_t x = 1; x < table.top_node(); ++x) positive = positive && b[x] > 0;
    if (positive) {
      check_exponents(arr, a);
      w.a = std::move(a);
      w.delta = del;
      w.epsilon = eps;
      w.halvings = round;
      return w;
    }
    del /= 2;
    eps /= 2;
  }
  throw Error(ErrorKind::WitnessSearchFailed, "no positive exponent vector after 20 halvings");
}

ExponentVector random_exponents(const StratumTable& table, std::mt19937_64& rng, const SamplerOptions& options) {
  const Arrangement& arr = table.arrangement();
  const std::size_t d = arr.size();
  const long target = static_cast<long>(d) - static_cast<long>(arr.ambient_dim());
  auto draw = [&](long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
  };
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    const long q = draw(2, std::max<long>(2, options.max_root_order));
    ExponentVector a(d);
    Rational rest = target;
    for (std::size_t i = 0; i + 1 < d; ++i) {
      a[i] = Rational(draw(-options.numerator_range * q, options.numerator_range * q), q);
      a[i].canonicalize();
      rest -= a[i];
    }
    a[d - 1] = rest;
    if (options.avoid_zero_one &&
        std::any_of(a.begin(), a.end(), [](const Rational& x) { return x == 0 || x == 1; }))
      continue;
    const auto b = b_values(table, a);
    bool ok = true;
    for (std::size_t x = 1; x < table.top_node(); ++x) ok = ok && b[x] != 0;
    if (ok) return a;
  }
  throw Error(ErrorKind::WitnessSearchFailed, "could not draw an exponent vector without logarithmic poles");
}

}  // namespace mpvi
