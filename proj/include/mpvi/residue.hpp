#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mpvi/pv.hpp"

namespace mpvi {

using MultiplicityVector = std::vector<long>;

// alpha_W = codim W - (N / N_0) N_W per table node; node 0 (the origin)
// gets 0 and the top node is left at 0.
std::vector<Rational> residue_exponents(const StratumTable& table, const MultiplicityVector& m);

struct NdPoleResult {
  bool generic = false;
  std::optional<PuiseuxRational> residue;  // R_0, present when generic
  std::optional<bool> is_pole;             // absent when not generic
  Rational candidate_pole;                 // -N / sum m_i
  ExponentVector exponents;                // a_i = alpha of the i-th hyperplane
};

NdPoleResult nd_pole_check(const StratumTable& table, const MultiplicityVector& m);

struct WitnessSearchResult {
  std::vector<MultiplicityVector> witnesses;
  std::size_t tested = 0;
  std::size_t non_generic = 0;
  std::size_t vanishing = 0;  // generic but with zero residue
  bool sampled = false;
};

// Scans {1..bound}^d, or draws `samples` random vectors when bound^d
// exceeds `exhaustive_limit`.
WitnessSearchResult genericity_witness_search(const StratumTable& table, long bound,
                                              std::size_t samples = 200, std::uint64_t seed = 1,
                                              std::size_t exhaustive_limit = 4096);

}  // namespace mpvi
