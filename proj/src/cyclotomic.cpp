#include "mpvi/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace mpvi {

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors of a nonpositive integer");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

const LaurentPoly& cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::unordered_map<long, std::unique_ptr<LaurentPoly>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  LaurentPoly value = LaurentPoly::binomial(n);
  for (long d : divisors(n)) {
    if (d == n) continue;
    value = *value.divide_exact(cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<LaurentPoly>(std::move(value)));
  return *it->second;
}

std::map<long, int> binomial_factorization(long k) {
  if (k == 0) throw std::invalid_argument("x^0 - 1 is zero");
  std::map<long, int> factors;
  for (long d : divisors(k < 0 ? -k : k)) factors[d] = 1;
  return factors;
}

std::map<long, int> stretched_cyclotomic_factorization(long n, long k) {
  // Phi_n(x^p) = Phi_{np}(x) if p | n, else Phi_{np}(x) Phi_n(x).
  std::map<long, int> current{{n, 1}};
  long rest = k;
  for (long p = 2; rest > 1; ++p) {
    while (rest % p == 0) {
      rest /= p;
      std::map<long, int> next;
      for (auto [m, mult] : current) {
        next[m * p] += mult;
        if (m % p != 0) next[m] += mult;
      }
      current = std::move(next);
    }
  }
  return current;
}

}  // namespace mpvi
