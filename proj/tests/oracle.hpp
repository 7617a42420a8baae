#pragma once

// Reference computations that avoid the library's lattice, interval and
// rational-function code: subsets, ranks and plain rational evaluation.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "mpvi/arrangement.hpp"
#include "mpvi/puiseux.hpp"

namespace oracle {

using mpvi::Arrangement;
using mpvi::Integer;
using mpvi::Rational;

inline std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_of_subset(const Arrangement& a, const std::vector<std::size_t>& subset) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i : subset) rows.emplace_back(a.normal(i).begin(), a.normal(i).end());
  return rank_of(rows);
}

// Flats = closures of nonempty subsets of hyperplanes; key = closed subset.
struct Flat {
  std::vector<std::size_t> hyperplanes;
  std::size_t dim;
};

inline std::vector<Flat> flats(const Arrangement& a) {
  const std::size_t d = a.size();
  std::set<std::vector<std::size_t>> seen;
  std::vector<Flat> out;
  for (unsigned long mask = 1; mask < (1ul << d); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1) subset.push_back(i);
    }
    const std::size_t r = rank_of_subset(a, subset);
    std::vector<std::size_t> closure;
    for (std::size_t i = 0; i < d; ++i) {
      auto with = subset;
      with.push_back(i);
      if (rank_of_subset(a, with) == r) closure.push_back(i);
    }
    if (seen.insert(closure).second) out.push_back({closure, a.ambient_dim() - r});
  }
  return out;
}

// Coefficients of [C^N minus A] in L by inclusion-exclusion over all subsets.
inline std::vector<Integer> affine_class_by_subsets(const Arrangement& a) {
  std::vector<Integer> coeffs(a.ambient_dim() + 1, 0);
  const std::size_t d = a.size();
  for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1) subset.push_back(i);
    }
    const std::size_t dim = a.ambient_dim() - rank_of_subset(a, subset);
    coeffs[dim] += subset.size() % 2 ? -1 : 1;
  }
  return coeffs;
}

inline Integer count_complement_points(const Arrangement& a, long p) {
  const std::size_t n = a.ambient_dim();
  std::vector<std::vector<long>> normals;
  for (const auto& v : a.normals()) {
    std::vector<long> w;
    for (const auto& x : v) w.push_back(((x.get_si() % p) + p) % p);
    normals.push_back(w);
  }
  std::vector<long> x(n, 0);
  Integer count = 0;
  while (true) {
    bool off = true;
    for (const auto& w : normals) {
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += w[j] * x[j];
      if (s % p == 0) {
        off = false;
        break;
      }
    }
    if (off) ++count;
    std::size_t k = 0;
    while (k < n && x[k] == p - 1) x[k++] = 0;
    if (k == n) break;
    ++x[k];
  }
  return count;
}

inline Rational power(const Rational& base, long e) {
  Rational r = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  for (long i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

inline Rational evaluate(const mpvi::LaurentPoly& p, const Rational& t) {
  Rational v = 0;
  if (p.is_zero()) return v;
  for (long e = p.valuation(); e <= p.degree(); ++e) v += p.coeff(e) * power(t, e);
  return v;
}

inline Rational evaluate(const mpvi::PuiseuxRational& f, const Rational& t) {
  auto [num, den] = f.as_fraction();
  return evaluate(num, t) / evaluate(den, t);
}

// PV integral at L = t^q, summing over chains of flats with interval
// classes computed by inclusion-exclusion.
inline Rational pv_at(const Arrangement& a, const std::vector<Rational>& exps, const Rational& t) {
  const std::size_t N = a.ambient_dim();
  Integer q = 1;
  for (const auto& x : exps) q = mpvi::lcm(q, x.get_den());
  const Rational L = power(t, q.get_si());
  std::vector<Flat> fs;
  for (auto& f : flats(a)) {
    if (f.dim > 0) fs.push_back(f);
  }
  auto contains = [](const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  // U of the arrangement induced between a flat `low` (hyperplane set hl,
  // dim dl) and `high` (hh, dh).
  auto interval = [&](const std::vector<std::size_t>& hl, std::size_t dl, const std::vector<std::size_t>& hh,
                      std::size_t dh) {
    std::vector<std::size_t> induced;
    for (std::size_t i : hl) {
      if (!std::binary_search(hh.begin(), hh.end(), i)) induced.push_back(i);
    }
    Rational affine = 0;
    for (unsigned long mask = 0; mask < (1ul << induced.size()); ++mask) {
      std::vector<std::size_t> subset = hh;
      std::size_t bits = 0;
      for (std::size_t i = 0; i < induced.size(); ++i) {
        if (mask >> i & 1) {
          subset.push_back(induced[i]);
          ++bits;
        }
      }
      const std::size_t dim = N - rank_of_subset(a, subset);
      affine += (bits % 2 ? -1 : 1) * power(L, static_cast<long>(dim - dl));
    }
    if (induced.empty()) {
      Rational proj = 0;
      for (std::size_t j = 0; j < dh - dl; ++j) proj += power(L, static_cast<long>(j));
      return proj;
    }
    return Rational(affine / (L - 1));
  };
  std::vector<std::size_t> all(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) all[i] = i;
  Rational total = 0;
  std::vector<std::size_t> chain;  // indices into fs, increasing subspaces
  std::function<void()> walk = [&]() {
    Rational term = 1;
    std::vector<std::size_t> hl = all;
    std::size_t dl = 0;
    for (std::size_t k : chain) {
      term *= interval(hl, dl, fs[k].hyperplanes, fs[k].dim);
      Rational b = static_cast<long>(N - fs[k].dim);
      for (std::size_t i : fs[k].hyperplanes) b += exps[i] - 1;
      term *= (L - 1) / (power(t, Rational(b * q).get_num().get_si()) - 1);
      hl = fs[k].hyperplanes;
      dl = fs[k].dim;
    }
    term *= interval(hl, dl, {}, N);
    total += term;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (!chain.empty()) {
        const Flat& last = fs[chain.back()];
        if (!(fs[k].dim > last.dim && contains(last.hyperplanes, fs[k].hyperplanes))) continue;
      }
      chain.push_back(k);
      walk();
      chain.pop_back();
    }
  };
  walk();
  return total / power(L, static_cast<long>(N) - 1);
}

}  // namespace oracle
