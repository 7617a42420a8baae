#include "mpvi/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "mpvi/classes.hpp"
#include "mpvi/error.hpp"

namespace mpvi {

namespace {

RationalMatrix forms_of(const Arrangement& arrangement, const std::vector<std::size_t>& indices) {
  RationalMatrix forms;
  forms.reserve(indices.size());
  for (std::size_t i : indices) {
    const auto& n = arrangement.normal(i);
    forms.emplace_back(n.begin(), n.end());
  }
  return forms;
}

std::vector<std::size_t> containing_set(const Arrangement& arrangement, const Subspace& space) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    if (space.annihilated_by(arrangement.normal(i))) out.push_back(i);
  }
  return out;
}

}  // namespace

Arrangement Arrangement::from_canonical(std::size_t ambient_dim, std::vector<IntegerVector> normals) {
  Arrangement a;
  a.ambient_dim_ = ambient_dim;
  a.normals_ = std::move(normals);
  return a;
}

std::string Arrangement::to_string() const {
  std::ostringstream out;
  out << "C^" << ambient_dim_ << " [";
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    out << (i ? ", " : "") << "(";
    for (std::size_t j = 0; j < normals_[i].size(); ++j) out << (j ? "," : "") << normals_[i][j].get_str();
    out << ")";
  }
  out << "]";
  return out.str();
}

Arrangement parse_arrangement(std::size_t ambient_dim, const std::vector<IntegerVector>& raw_normals) {
  if (ambient_dim < 1) throw Error(ErrorKind::DimensionMismatch, "ambient dimension must be >= 1");
  if (raw_normals.empty()) throw Error(ErrorKind::ParseError, "an arrangement needs at least one hyperplane");
  std::vector<IntegerVector> normals;
  std::set<IntegerVector> seen;
  for (std::size_t i = 0; i < raw_normals.size(); ++i) {
    const auto& raw = raw_normals[i];
    if (raw.size() != ambient_dim) {
      throw Error(ErrorKind::DimensionMismatch, "normal " + std::to_string(i) + " has length " +
                                                    std::to_string(raw.size()) + ", expected " +
                                                    std::to_string(ambient_dim));
    }
    RationalVector as_rational(raw.begin(), raw.end());
    IntegerVector canonical = primitive_integer_vector(as_rational);
    if (std::all_of(canonical.begin(), canonical.end(), [](const Integer& x) { return x == 0; })) {
      throw Error(ErrorKind::ZeroNormal, "normal " + std::to_string(i) + " is zero");
    }
    if (!seen.insert(canonical).second) {
      throw Error(ErrorKind::DuplicateHyperplane,
                  "normal " + std::to_string(i) + " repeats an earlier hyperplane");
    }
    normals.push_back(std::move(canonical));
  }
  return Arrangement::from_canonical(ambient_dim, std::move(normals));
}

Arrangement parse_arrangement(std::size_t ambient_dim, const std::vector<std::vector<long>>& raw_normals) {
  std::vector<IntegerVector> raw;
  for (const auto& v : raw_normals) {
    IntegerVector w;
    for (long x : v) w.emplace_back(x);
    raw.push_back(std::move(w));
  }
  return parse_arrangement(ambient_dim, raw);
}

Arrangement product_arrangement(const Arrangement& first, const Arrangement& second) {
  const std::size_t n1 = first.ambient_dim(), n2 = second.ambient_dim();
  std::vector<IntegerVector> normals;
  for (const auto& v : first.normals()) {
    IntegerVector w(n1 + n2, 0);
    std::copy(v.begin(), v.end(), w.begin());
    normals.push_back(std::move(w));
  }
  for (const auto& v : second.normals()) {
    IntegerVector w(n1 + n2, 0);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<long>(n1));
    normals.push_back(std::move(w));
  }
  return Arrangement::from_canonical(n1 + n2, std::move(normals));
}

EdgeLattice::EdgeLattice(const Arrangement& arrangement) : ambient_dim_(arrangement.ambient_dim()) {
  // Closure under intersection with single hyperplanes, starting from the
  // hyperplanes themselves.
  std::map<Subspace, Edge> found;
  std::set<std::vector<std::size_t>> tried;
  std::deque<std::vector<std::size_t>> queue;
  for (std::size_t i = 0; i < arrangement.size(); ++i) queue.push_back({i});
  while (!queue.empty()) {
    std::vector<std::size_t> generators = std::move(queue.front());
    queue.pop_front();
    if (!tried.insert(generators).second) continue;
    Subspace space = Subspace::kernel_of(ambient_dim_, forms_of(arrangement, generators));
    if (found.count(space)) continue;
    Edge edge{space, space.codim(), containing_set(arrangement, space)};
    for (std::size_t i = 0; i < arrangement.size(); ++i) {
      if (std::binary_search(edge.containing.begin(), edge.containing.end(), i)) continue;
      auto next = edge.containing;
      next.insert(std::upper_bound(next.begin(), next.end(), i), i);
      queue.push_back(std::move(next));
    }
    found.emplace(std::move(space), std::move(edge));
  }
  // std::map order on Subspace is (dimension descending, basis), which is
  // (codim ascending, basis).
  for (auto& [space, edge] : found) edges_.push_back(std::move(edge));
  const std::size_t m = edges_.size();
  below_.assign(m * m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (edges_[i].space.dim() == 0) origin_ = i;
    else proper_.push_back(i);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& ci = edges_[i].containing;
      const auto& cj = edges_[j].containing;
      below_[i * m + j] = ci.size() > cj.size() && std::includes(ci.begin(), ci.end(), cj.begin(), cj.end());
    }
  }
}

std::optional<std::size_t> EdgeLattice::find(const Subspace& space) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), space,
                             [](const Edge& e, const Subspace& s) { return e.space < s; });
  if (it == edges_.end() || it->space != space) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

EdgeLattice edge_lattice(const Arrangement& arrangement) { return EdgeLattice(arrangement); }

QuotientArrangement quotient_arrangement(const Arrangement& arrangement, const Subspace& low,
                                         const Subspace& high) {
  if (!high.contains(low) || high.dim() == low.dim()) {
    throw Error(ErrorKind::NotNested, "quotient requires low strictly inside high",
                low.to_string() + " / " + high.to_string());
  }
  const std::size_t n = arrangement.ambient_dim();
  RationalMatrix combined = low.basis();
  RationalMatrix complement;
  for (const auto& row : high.basis()) {
    combined.push_back(row);
    if (rank(combined, n) == combined.size()) complement.push_back(row);
    else combined.pop_back();
  }
  std::vector<IntegerVector> normals;
  std::set<IntegerVector> seen;
  for (const auto& normal : arrangement.normals()) {
    if (!low.annihilated_by(normal) || high.annihilated_by(normal)) continue;
    RationalVector image;
    for (const auto& e : complement) image.push_back(dot(normal, e));
    IntegerVector canonical = primitive_integer_vector(image);
    if (seen.insert(canonical).second) normals.push_back(std::move(canonical));
  }
  return QuotientArrangement{Arrangement::from_canonical(complement.size(), std::move(normals)), low,
                             high, std::move(complement)};
}

Subspace QuotientArrangement::project(const Subspace& x) const {
  if (!high.contains(x) || !x.contains(low)) {
    throw Error(ErrorKind::NotNested, "subspace is not between the quotient bounds", x.to_string());
  }
  RationalMatrix full = low.basis();
  full.insert(full.end(), complement.begin(), complement.end());
  const std::size_t offset = low.dim();
  RationalMatrix rows;
  for (const auto& v : x.basis()) {
    RationalVector coords = solve_in_span(full, v);
    rows.emplace_back(coords.begin() + static_cast<long>(offset), coords.end());
  }
  return Subspace(complement.size(), std::move(rows));
}

bool is_essential(const Arrangement& arrangement) {
  RationalMatrix forms;
  for (const auto& n : arrangement.normals()) forms.emplace_back(n.begin(), n.end());
  return rank(forms, arrangement.ambient_dim()) == arrangement.ambient_dim();
}

bool is_indecomposable(const Arrangement& arrangement) {
  return euler_characteristic(projective_complement_class(arrangement)) != 0;
}

bool is_dense_edge(const Arrangement& arrangement, const Subspace& edge) {
  return is_indecomposable(
      quotient_arrangement(arrangement, edge, Subspace::whole(arrangement.ambient_dim())).arrangement);
}

Rational b_coefficient(const Edge& edge, const std::vector<Rational>& a) {
  Rational b = static_cast<long>(edge.codim);
  for (std::size_t i : edge.containing) b += a.at(i) - 1;
  return b;
}

}  // namespace mpvi
