#include "pbwdeg/rational.hpp"

#include <sstream>
#include <utility>

#include "pbwdeg/error.hpp"

namespace pbwdeg {

std::vector<std::size_t> rref(Matrix& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t pick = lead;
    while (pick < rows.size() && sgn(rows[pick][col]) == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[lead], rows[pick]);
    Rational inv = 1 / rows[lead][col];
    for (std::size_t c = col; c < cols; ++c) rows[lead][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || sgn(rows[r][col]) == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[lead][c];
    }
    pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

std::size_t rank(Matrix rows, std::size_t cols) { return rref(rows, cols).size(); }

Matrix nullspace(const Matrix& a, std::size_t cols) {
  Matrix m = a;
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

Vector apply(const Matrix& map, const Vector& x) {
  Vector y(map.size(), 0);
  for (std::size_t r = 0; r < map.size(); ++r) {
    if (map[r].size() != x.size()) throw UsageError("apply: dimension mismatch");
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (sgn(map[r][c]) != 0 && sgn(x[c]) != 0) y[r] += map[r][c] * x[c];
    }
  }
  return y;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && sgn(a[pick][col]) == 0) ++pick;
    if (pick == n) return 0;
    if (pick != col) {
      std::swap(a[pick], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

RationalSubspace RationalSubspace::span(std::size_t ambient, Matrix vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw UsageError("span: vector length != ambient");
  }
  RationalSubspace s(ambient);
  rref(vectors, ambient);
  s.basis_ = std::move(vectors);
  return s;
}

RationalSubspace RationalSubspace::coordinate(std::size_t ambient,
                                              std::span<const int> indices) {
  Matrix rows;
  for (int k : indices) {
    if (k < 1 || static_cast<std::size_t>(k) > ambient) {
      throw UsageError("coordinate index out of range");
    }
    Vector v(ambient, 0);
    v[k - 1] = 1;
    rows.push_back(std::move(v));
  }
  return span(ambient, std::move(rows));
}

RationalSubspace RationalSubspace::whole(std::size_t ambient) {
  RationalSubspace s(ambient);
  s.basis_ = identity_matrix(ambient);
  return s;
}

bool RationalSubspace::contains(const Vector& v) const {
  Matrix m = basis_;
  m.push_back(v);
  return rank(std::move(m), ambient_) == dim();
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
  if (other.ambient_ != ambient_) throw UsageError("contains: ambient mismatch");
  Matrix m = basis_;
  m.insert(m.end(), other.basis_.begin(), other.basis_.end());
  return rank(std::move(m), ambient_) == dim();
}

RationalSubspace RationalSubspace::operator+(const RationalSubspace& other) const {
  if (other.ambient_ != ambient_) throw UsageError("sum: ambient mismatch");
  Matrix m = basis_;
  m.insert(m.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, std::move(m));
}

Matrix RationalSubspace::annihilator() const { return nullspace(basis_, ambient_); }

RationalSubspace RationalSubspace::intersect(const RationalSubspace& other) const {
  if (other.ambient_ != ambient_) throw UsageError("intersect: ambient mismatch");
  Matrix constraints = annihilator();
  Matrix more = other.annihilator();
  constraints.insert(constraints.end(), more.begin(), more.end());
  return span(ambient_, nullspace(constraints, ambient_));
}

RationalSubspace RationalSubspace::image(const Matrix& map) const {
  Matrix rows;
  rows.reserve(basis_.size());
  for (const auto& b : basis_) rows.push_back(apply(map, b));
  return span(map.size(), std::move(rows));
}

RationalSubspace RationalSubspace::preimage(const Matrix& map,
                                            const RationalSubspace& target,
                                            std::size_t domain_ambient) {
  if (map.size() != target.ambient()) throw UsageError("preimage: codomain mismatch");
  // x in preimage iff a.(map x) = 0 for every annihilator row a.
  Matrix constraints;
  for (const auto& a : target.annihilator()) {
    Vector row(domain_ambient, 0);
    for (std::size_t r = 0; r < map.size(); ++r) {
      if (sgn(a[r]) == 0) continue;
      for (std::size_t c = 0; c < domain_ambient; ++c) row[c] += a[r] * map[r][c];
    }
    constraints.push_back(std::move(row));
  }
  return span(domain_ambient, nullspace(constraints, domain_ambient));
}

std::size_t RationalSubspace::dim_meet_prefix(std::size_t k) const {
  Matrix tail;
  tail.reserve(basis_.size());
  for (const auto& b : basis_) tail.emplace_back(b.begin() + static_cast<long>(k), b.end());
  return dim() - rank(std::move(tail), ambient_ - k);
}

std::optional<std::vector<int>> RationalSubspace::coordinate_support() const {
  std::vector<int> support;
  for (const auto& row : basis_) {
    int hit = -1;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (sgn(row[c]) == 0) continue;
      if (hit >= 0) return std::nullopt;
      hit = static_cast<int>(c) + 1;
    }
    support.push_back(hit);
  }
  return support;
}

std::string RationalSubspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < basis_[r].size(); ++c) {
      if (c) os << ' ';
      os << basis_[r][c];
    }
  }
  os << "} in Q^" << ambient_;
  return os.str();
}

}  // namespace pbwdeg
