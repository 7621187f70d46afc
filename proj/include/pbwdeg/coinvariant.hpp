#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbwdeg/weyl.hpp"

namespace pbwdeg {

using Coefficient = std::int64_t;
/// Exponent vector (a_1, a_2, ...) with trailing zeros removed, so that
/// std::vector ordering is lexicographic order with x_1 > x_2 > ...
using Exponent = std::vector<int>;

/// Sparse polynomial in Z[x_1, x_2, ...].
class IntPolynomial {
 public:
  IntPolynomial() = default;
  static IntPolynomial constant(Coefficient c);
  static IntPolynomial monomial(Exponent e, Coefficient c = 1);
  /// x_i, 1-based.
  static IntPolynomial variable(int i);

  const std::map<Exponent, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree of the highest term; -1 for the zero polynomial.
  int degree() const;
  /// Number of variables actually occurring (largest index).
  int variables() const;
  Coefficient coefficient(const Exponent& e) const;
  void add_term(Exponent e, Coefficient c);

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator*(Coefficient c) const;
  /// s_i f: exchanges x_i and x_{i+1}.
  IntPolynomial swap_variables(int i) const;
  /// Lexicographically smallest term. For a Schubert polynomial this is the
  /// code monomial.
  std::optional<std::pair<Exponent, Coefficient>> lowest_term() const;

  /// Sparse "coef x1^a1 x2^a2" terms joined by " + ", lex-descending.
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::map<Exponent, Coefficient> terms_;
};

/// (f - s_i f) / (x_i - x_{i+1}).
IntPolynomial divided_difference(const IntPolynomial& f, int i);

/// Schubert polynomial of w in S_n: divided differences along a reduced word
/// of w^{-1} w_0 applied to x_1^{n-1} x_2^{n-2} ... x_{n-1}.
IntPolynomial schubert_polynomial(const Permutation& w);

/// Same polynomial reached from the dominant permutation above w (whose
/// Schubert polynomial is the code monomial). Stable under S_n -> S_{n+1},
/// memoised per thread. This is the route used by basis expansion.
const IntPolynomial& stable_schubert_polynomial(const Permutation& w);

/// Coordinates of p modulo the ideal generated by positive-degree symmetric
/// polynomials in x_1..x_n, in the Schubert basis {S_w : w in S_n}.
/// Expands p over all Schubert polynomials by repeatedly subtracting the
/// Schubert polynomial whose code is the lex-smallest exponent of p,
/// then drops indices outside S_n.
std::map<Permutation, Coefficient> schubert_expansion(const IntPolynomial& p, int n);

/// Integer combination of Schubert classes [X_u]^* of a partial flag variety.
class SchubertClass {
 public:
  SchubertClass() = default;
  explicit SchubertClass(FlagShape ambient) : ambient_(std::move(ambient)) {}
  static SchubertClass basis(const Permutation& u, const FlagShape& ambient);
  static SchubertClass unit(const FlagShape& ambient);

  const FlagShape& ambient() const { return ambient_; }
  const std::map<Permutation, Coefficient>& coeffs() const { return coeffs_; }
  Coefficient coefficient(const Permutation& u) const;
  void add(const Permutation& u, Coefficient c);
  bool is_zero() const { return coeffs_.empty(); }
  IntPolynomial representative() const;

  SchubertClass operator+(const SchubertClass& other) const;
  std::string to_string() const;

  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

 private:
  FlagShape ambient_;
  std::map<Permutation, Coefficient> coeffs_;
};

/// Product in H^*(Fl_{d,n}) via polynomial representatives.
/// Throws std::logic_error if a result index is not a minimal coset
/// representative of the ambient shape.
SchubertClass product_in_schubert_basis(const SchubertClass& a, const SchubertClass& b);

/// Number of minimal coset representatives of each length.
std::vector<long long> betti_numbers(const FlagShape& shape);

/// Graded ranks of the W_d-invariants of the coinvariant algebra, computed
/// as the joint kernel of (s_i - 1), i not in d, acting on the quotient.
std::vector<long long> invariant_coinvariant_ranks(const FlagShape& shape);

/// Schubert-basis presentation of H^*(Fl_{d,n}) or, with a truncation w,
/// of H^*(X_w): products are computed in the ambient ring and indices u
/// with u not <= w are discarded.
class PresentedRing {
 public:
  const FlagShape& shape() const { return shape_; }
  const std::optional<Permutation>& truncation() const { return truncation_; }
  /// Basis permutations grouped by length.
  const std::vector<std::vector<Permutation>>& graded_basis() const { return basis_; }
  std::vector<Permutation> basis() const;
  std::vector<long long> graded_ranks() const;
  bool in_basis(const Permutation& u) const;

  /// Product of two basis elements (tabulated).
  const SchubertClass& product(const Permutation& u, const Permutation& v) const;
  /// Bilinear extension of the tabulated products.
  SchubertClass multiply(const SchubertClass& a, const SchubertClass& b) const;
  /// Checks (uv)w == u(vw) over all basis triples.
  bool is_associative() const;

  friend PresentedRing cohomology_of_flag_variety(const FlagShape& shape);
  friend PresentedRing cohomology_of_schubert(const Permutation& w, const FlagShape& shape);

 private:
  void tabulate();

  FlagShape shape_;
  std::optional<Permutation> truncation_;
  std::vector<std::vector<Permutation>> basis_;
  std::map<std::pair<Permutation, Permutation>, SchubertClass> products_;
};

PresentedRing cohomology_of_flag_variety(const FlagShape& shape);
PresentedRing cohomology_of_schubert(const Permutation& w, const FlagShape& shape);

}  // namespace pbwdeg
