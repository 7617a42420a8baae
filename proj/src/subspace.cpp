#include "mpvi/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace mpvi {

RationalMatrix rref(RationalMatrix rows, std::size_t columns) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < columns && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    Rational inv = 1 / rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t c = col; c < columns; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t rank(const RationalMatrix& rows, std::size_t columns) {
  return rref(rows, columns).size();
}

RationalMatrix null_space(const RationalMatrix& rows, std::size_t columns) {
  RationalMatrix reduced = rref(rows, columns);
  std::vector<long> pivot_of_col(columns, -1);
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    for (std::size_t c = 0; c < columns; ++c) {
      if (reduced[r][c] != 0) {
        pivot_of_col[c] = static_cast<long>(r);
        break;
      }
    }
  }
  RationalMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    RationalVector v(columns, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < columns; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = -reduced[static_cast<std::size_t>(pivot_of_col[c])][free];
    }
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis), columns);
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntegerVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * b[i];
  }
  return s;
}

RationalVector solve_in_span(const RationalMatrix& rows, const RationalVector& v) {
  const std::size_t k = rows.size();
  const std::size_t n = v.size();
  // Augmented system: n equations in k unknowns.
  RationalMatrix system(n, RationalVector(k + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) system[i][j] = rows[j][i];
    system[i][k] = v[i];
  }
  RationalMatrix reduced = rref(std::move(system), k + 1);
  RationalVector coeffs(k, 0);
  std::size_t found = 0;
  for (const auto& row : reduced) {
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    if (pivot == k) throw std::invalid_argument("vector is not in the span");
    coeffs[pivot] = row[k];
    ++found;
  }
  if (found != k) throw std::invalid_argument("rows are linearly dependent");
  return coeffs;
}

IntegerVector primitive_integer_vector(const RationalVector& v) {
  Integer den = common_denominator(v);
  IntegerVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * den;
    out[i] = scaled.get_num();
    g = gcd(g, out[i]);
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& x : out) {
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  }
  for (auto& x : out) x = x / g * sign;
  return out;
}

Subspace::Subspace(std::size_t ambient_dim, RationalMatrix spanning_rows)
    : ambient_dim_(ambient_dim), basis_(rref(std::move(spanning_rows), ambient_dim)) {}

Subspace Subspace::whole(std::size_t ambient_dim) {
  RationalMatrix id(ambient_dim, RationalVector(ambient_dim, 0));
  for (std::size_t i = 0; i < ambient_dim; ++i) id[i][i] = 1;
  return Subspace(ambient_dim, std::move(id));
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::kernel_of(std::size_t ambient_dim, const RationalMatrix& forms) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = null_space(forms, ambient_dim);
  return s;
}

bool Subspace::contains(const RationalVector& v) const {
  RationalMatrix rows = basis_;
  rows.push_back(v);
  return rank(rows, ambient_dim_) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() > dim()) return false;
  RationalMatrix rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return rank(rows, ambient_dim_) == basis_.size();
}

bool Subspace::annihilated_by(const IntegerVector& form) const {
  for (const auto& row : basis_) {
    if (dot(form, row) != 0) return false;
  }
  return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Annihilators add under intersection.
  RationalMatrix forms = null_space(basis_, ambient_dim_);
  RationalMatrix more = null_space(other.basis_, ambient_dim_);
  forms.insert(forms.end(), more.begin(), more.end());
  return kernel_of(ambient_dim_, forms);
}

RationalVector Subspace::coordinates(const RationalVector& v) const {
  // basis_ is in RREF: the coefficient of row r is v at the pivot of row r.
  RationalVector coords(basis_.size());
  RationalVector check(ambient_dim_, 0);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    std::size_t pivot = 0;
    while (basis_[r][pivot] == 0) ++pivot;
    coords[r] = v[pivot];
    for (std::size_t c = 0; c < ambient_dim_; ++c) check[c] += coords[r] * basis_[r][c];
  }
  if (check != v) throw std::invalid_argument("vector does not lie in the subspace");
  return coords;
}

std::string Subspace::to_string() const {
  std::ostringstream out;
  out << "span[";
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    out << (r ? ", " : "") << "(";
    for (std::size_t c = 0; c < ambient_dim_; ++c) out << (c ? "," : "") << basis_[r][c].get_str();
    out << ")";
  }
  out << "]";
  return out.str();
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  if (auto c = b.basis_.size() <=> a.basis_.size(); c != 0) return c;  // larger first
  for (std::size_t r = 0; r < a.basis_.size(); ++r) {
    for (std::size_t col = 0; col < a.ambient_dim_; ++col) {
      int c = cmp(a.basis_[r][col], b.basis_[r][col]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace mpvi
