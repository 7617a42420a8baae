#include "mpvi/residue.hpp"

#include <random>

#include "mpvi/error.hpp"

namespace mpvi {

namespace {

void validate(const StratumTable& table, const MultiplicityVector& m) {
  if (m.size() != table.arrangement().size()) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(table.arrangement().size()) +
                                                  " multiplicities, got " + std::to_string(m.size()));
  }
  for (long x : m) {
    if (x < 1) throw Error(ErrorKind::InvalidExponent, "multiplicities must be positive");
  }
}

}  // namespace

std::vector<Rational> residue_exponents(const StratumTable& table, const MultiplicityVector& m) {
  validate(table, m);
  long total = 0;
  for (long x : m) total += x;
  const Rational ratio(static_cast<long>(table.arrangement().ambient_dim()), total);
  std::vector<Rational> alpha(table.node_count(), 0);
  for (std::size_t x = 1; x < table.top_node(); ++x) {
    long n_w = 0;
    for (std::size_t i : table.containing(x)) n_w += m[i];
    alpha[x] = Rational(static_cast<long>(table.codim(x))) - ratio * n_w;
    alpha[x].canonicalize();
  }
  return alpha;
}

NdPoleResult nd_pole_check(const StratumTable& table, const MultiplicityVector& m) {
  const Arrangement& arr = table.arrangement();
  if (!is_essential(arr)) throw Error(ErrorKind::NotEssential, "arrangement is not essential", arr.to_string());
  if (!is_indecomposable(arr)) throw Error(ErrorKind::Decomposable, "arrangement is decomposable", arr.to_string());
  const auto alpha = residue_exponents(table, m);
  NdPoleResult result;
  long total = 0;
  for (long x : m) total += x;
  result.candidate_pole = Rational(-static_cast<long>(arr.ambient_dim()), total);
  result.candidate_pole.canonicalize();

  result.exponents.assign(arr.size(), 0);
  for (std::size_t x = 1; x < table.top_node(); ++x) {
    const Edge& e = table.edge_of_node(x);
    if (e.codim == 1) result.exponents[e.containing.front()] = alpha[x];
  }
  result.generic = true;
  for (std::size_t x = 1; x < table.top_node(); ++x) result.generic = result.generic && alpha[x] != 0;
  if (result.generic) {
    result.residue = pv_integral(table, result.exponents);
    result.is_pole = !result.residue->is_zero();
  }
  return result;
}

WitnessSearchResult genericity_witness_search(const StratumTable& table, long bound, std::size_t samples,
                                              std::uint64_t seed, std::size_t exhaustive_limit) {
  if (bound < 1) throw Error(ErrorKind::InvalidExponent, "bound must be at least 1");
  const std::size_t d = table.arrangement().size();
  WitnessSearchResult result;
  auto consider = [&](const MultiplicityVector& m) {
    ++result.tested;
    NdPoleResult r = nd_pole_check(table, m);
    if (!r.generic) ++result.non_generic;
    else if (*r.is_pole) result.witnesses.push_back(m);
    else ++result.vanishing;
  };

  double count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= static_cast<double>(bound);
  if (count <= static_cast<double>(exhaustive_limit)) {
    MultiplicityVector m(d, 1);
    while (true) {
      consider(m);
      std::size_t k = 0;
      while (k < d && m[k] == bound) m[k++] = 1;
      if (k == d) break;
      ++m[k];
    }
  } else {
    result.sampled = true;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      MultiplicityVector m(d);
      for (auto& x : m) x = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(bound));
      consider(m);
    }
  }
  return result;
}

}  // namespace mpvi
