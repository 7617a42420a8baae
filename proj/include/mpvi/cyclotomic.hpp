#pragma once

#include <map>
#include <vector>

#include "mpvi/laurent.hpp"

namespace mpvi {

// n-th cyclotomic polynomial; memoized, safe to call concurrently.
const LaurentPoly& cyclotomic(long n);

std::vector<long> divisors(long n);

// Cyclotomic indices of x^k - 1, i.e. the divisors of |k|.
std::map<long, int> binomial_factorization(long k);

// Multiset of cyclotomic indices of Phi_n(x^k), k >= 1.
std::map<long, int> stretched_cyclotomic_factorization(long n, long k);

}  // namespace mpvi
