#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbwdeg {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
/// Row-major. A linear map C^in -> C^out is stored as `out` rows of length `in`.
using Matrix = std::vector<Vector>;

/// num/den in lowest terms.
inline Rational fraction(long num, long den) {
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

/// Reduces `rows` (each of length `cols`) to reduced row echelon form in
/// place, dropping zero rows. Returns the pivot columns.
std::vector<std::size_t> rref(Matrix& rows, std::size_t cols);
std::size_t rank(Matrix rows, std::size_t cols);
/// Basis of {x : a x = 0}, x in Q^cols.
Matrix nullspace(const Matrix& a, std::size_t cols);
Vector apply(const Matrix& map, const Vector& x);
Matrix identity_matrix(std::size_t n);
Rational determinant(Matrix a);

/// A subspace of Q^N stored by its canonical RREF basis, so equality is
/// structural.
class RationalSubspace {
 public:
  explicit RationalSubspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static RationalSubspace span(std::size_t ambient, Matrix vectors);
  /// span of e_k for the given 1-based indices.
  static RationalSubspace coordinate(std::size_t ambient,
                                     std::span<const int> indices);
  static RationalSubspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const RationalSubspace& other) const;
  RationalSubspace operator+(const RationalSubspace& other) const;
  RationalSubspace intersect(const RationalSubspace& other) const;
  /// Rows spanning the annihilator {a : a.u = 0 for all u}.
  Matrix annihilator() const;

  /// Image under `map` (out x ambient).
  RationalSubspace image(const Matrix& map) const;
  /// {x in Q^domain_ambient : map x in target}, where map is
  /// target.ambient() x domain_ambient.
  static RationalSubspace preimage(const Matrix& map,
                                   const RationalSubspace& target,
                                   std::size_t domain_ambient);

  /// dim(U ∩ span(e_1..e_k)).
  std::size_t dim_meet_prefix(std::size_t k) const;
  /// Sorted 1-based indices if U is a coordinate subspace.
  std::optional<std::vector<int>> coordinate_support() const;

  std::string to_string() const;

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
};

}  // namespace pbwdeg
