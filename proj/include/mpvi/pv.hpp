#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mpvi/classes.hpp"
#include "mpvi/puiseux.hpp"

namespace mpvi {

using ExponentVector = std::vector<Rational>;

// Throws DimensionMismatch on a length mismatch and DegreeCondition unless
// sum a_i = d - n - 1.
void check_exponents(const Arrangement& arrangement, const ExponentVector& a);

// b_W for every node of the table; entries for the origin and the top node
// are left at zero.
std::vector<Rational> b_values(const StratumTable& table, const ExponentVector& a);

// Least common multiple of the denominators of the a_i.
long root_order(const ExponentVector& a);

// Throws LogarithmicPole naming the first edge with b_W = 0.
void check_no_logarithmic_pole(const StratumTable& table, const std::vector<Rational>& b);

// (L - 1) / (L^b - 1) in t = L^(1/q).
PuiseuxRational pole_factor(long q, const Rational& b);

PuiseuxRational pv_integral(const StratumTable& table, const ExponentVector& a);
PuiseuxRational pv_integral(const Arrangement& arrangement, const ExponentVector& a);

// Evaluates the chain recursion at random points of F_p, p = 2^61 - 1. A
// nonzero value proves the integral is nonzero; this stays cheap when the root
// order q is far too large to expand the integral. False means every trial
// point gave zero (or hit a pole).
bool pv_certified_nonzero(const StratumTable& table, const ExponentVector& a, int trials = 8,
                          std::uint64_t seed = 1);

// The same sum over explicitly enumerated chains and open strata.
PuiseuxRational pv_integral_by_chains(const StratumTable& table, const ExponentVector& a);

// Sum over closed strata [E_I] with the factors shifted by -1.
PuiseuxRational pv_integral_closed_form_check(const StratumTable& table, const ExponentVector& a);

struct ConstantTermReport {
  Integer constant_term;
  long truncation = 0;
  SeriesExpansion series;  // of L^n * PV in t
};

// truncation <= 0 selects 4 n q.
ConstantTermReport series_constant_term_report(const StratumTable& table, const ExponentVector& a,
                                               long truncation = 0);
Integer series_constant_term(const StratumTable& table, const ExponentVector& a, long truncation = 0);

// 1 + sum over chains of proper edges with every b_W < 0 of (-1)^length.
Integer delta_chain_count(const StratumTable& table, const ExponentVector& a);

// The closed form for an arrangement of d hyperplanes in general position
// in P^n; requires a_i not in {0, 1}.
PuiseuxRational generic_closed_form(long n, const ExponentVector& a);

// Checks that every codim-k edge lies on exactly k hyperplanes, for all
// codimensions up to n + 1.
bool is_generic(const Arrangement& arrangement);

struct GIdentityValues {
  Integer brute_force;   // double sum with the last binomial C(d-1-i, d-1-n+a)
  Integer unrewritten;   // same sum with C(d-1-i, n-i-a) in its place
  Integer closed_form;     // (-1)^n C(d-1-r, n-m) C(r-1, m)
};

GIdentityValues g_identity(long n, long m, long d, long r);

// F(n, m, d, i) = sum_{a=0}^m C(i, m-a) C(d-1-i, d-1-n+a).
Integer f_term(long n, long m, long d, long i);

struct PositiveExponentWitness {
  ExponentVector a;
  Rational delta;
  Rational epsilon;
  int halvings = 0;
  std::vector<std::size_t> coordinate_hyperplanes;  // the n+1 used as coordinates
  std::vector<std::size_t> chosen;                  // C_1, ..., C_r
};

// An exponent vector with every b_W > 0. delta and epsilon override the
// default starting values.
PositiveExponentWitness construct_positive_a(const StratumTable& table,
                                             std::optional<Rational> delta = std::nullopt,
                                             std::optional<Rational> epsilon = std::nullopt);

struct SamplerOptions {
  long max_root_order = 6;
  long numerator_range = 2;   // numerators drawn from [-range * q, range * q]
  bool avoid_zero_one = false;  // reject a_i in {0, 1}
  int max_attempts = 10000;
};

// A random valid exponent vector: sum a_i = d - n - 1 and every b_W != 0.
ExponentVector random_exponents(const StratumTable& table, std::mt19937_64& rng,
                                const SamplerOptions& options = {});

}  // namespace mpvi
