#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbwdeg {

/// Element of S_N in one-line notation, values 1..N.
class Permutation {
 public:
  Permutation() = default;
  /// Throws UsageError unless `window` is a bijection on {1..N}.
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// s_i swapping i and i+1, 1 <= i < n.
  static Permutation simple(int i, int n);
  /// "3,1,4,2".
  static Permutation parse(std::string_view csv);

  int size() const { return static_cast<int>(window_.size()); }
  /// w(i), 1-based.
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> window() const { return window_; }

  int length() const;
  Permutation inverse() const;
  /// (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& other) const;
  /// w s_i: swaps positions i and i+1.
  Permutation times_simple(int i) const;
  /// Lehmer code c_i = #{j > i : w(j) < w(i)}.
  std::vector<int> code() const;
  /// Positions i with w(i) > w(i+1).
  std::vector<int> descents() const;
  /// Drops trailing fixed points (the S_infinity representative).
  Permutation trimmed() const;
  /// Same element viewed in S_n, n >= size().
  Permutation extended(int n) const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> window_;
};

/// The permutation of S_infinity with the given Lehmer code.
Permutation permutation_from_code(std::span<const int> code);

/// Element of the hyperoctahedral group: |window| is a permutation of 1..n.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);
  static SignedPermutation parse(std::string_view csv);
  /// Inverse of `to_embedded`; throws unless u commutes with the flip.
  static SignedPermutation from_embedded(const Permutation& u);
  static std::vector<SignedPermutation> all(int n);

  int size() const { return static_cast<int>(window_.size()); }
  std::span<const int> window() const { return window_; }
  /// The flip-symmetric element of S_{2n}: u(n+i) = n+x for w(i) = x > 0,
  /// n+1-x for w(i) = -x, and u(2n+1-i) = 2n+1-u(i). Type C Bruhat order
  /// is the order induced from S_{2n}.
  Permutation to_embedded() const;
  /// inv + #{i <= j : w(i) + w(j) < 0}.
  int length() const;
  std::string to_string() const;

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> window_;
};

/// Partial flag shape (d_1 < ... < d_r) in C^N.
class FlagShape {
 public:
  FlagShape() = default;
  FlagShape(std::vector<int> dims, int ambient);
  static FlagShape complete(int n);

  std::span<const int> dims() const { return dims_; }
  int ambient() const { return ambient_; }
  int members() const { return static_cast<int>(dims_.size()); }
  /// Sizes d_1, d_2 - d_1, ..., N - d_r.
  std::vector<int> block_sizes() const;
  std::string to_string() const;

  friend bool operator==(const FlagShape&, const FlagShape&) = default;

 private:
  std::vector<int> dims_;
  int ambient_ = 0;
};

/// entry(i, k) = #{j <= d_i : w(j) <= k}, the dimension of the i-th member
/// of the coordinate flag E^w met with E_k.
class RankTable {
 public:
  RankTable(const Permutation& w, const FlagShape& shape);
  /// From a table of dim(U_i ∩ E_k) values; validates the invariants.
  RankTable(std::vector<std::vector<int>> entries, const FlagShape& shape);

  int entry(int member, int level) const {
    return entries_[static_cast<std::size_t>(member - 1)][static_cast<std::size_t>(level)];
  }
  /// True iff every entry of *this is >= the matching entry of `other`,
  /// i.e. the flag of *this lies in the closure of the cell of `other`.
  bool dominates(const RankTable& other) const;
  /// Levels k at which member i jumps, i.e. its coordinate support.
  std::vector<int> jumps(int member) const;

 private:
  std::vector<std::vector<int>> entries_;
  FlagShape shape_;
};

bool is_min_coset_rep(const Permutation& w, const FlagShape& shape);
/// Bruhat order on S_N by rank-table dominance.
bool bruhat_leq(const Permutation& y, const Permutation& w);
/// Type C Bruhat order through the embedding into S_{2n}.
bool bruhat_leq(const SignedPermutation& y, const SignedPermutation& w);

/// All minimal coset representatives, sorted by (length, window).
std::vector<Permutation> min_coset_reps(const FlagShape& shape);
/// The representative whose coordinate flag has the given member sets
/// (1-based, nested, |members[i]| = d_i).
Permutation coset_rep_of_coordinate_flag(const std::vector<std::vector<int>>& members,
                                         const FlagShape& shape);
/// Member sets {w(1..d_i)} of the coordinate flag E^w, each sorted.
std::vector<std::vector<int>> coordinate_flag(const Permutation& w, const FlagShape& shape);
/// {y in min_coset_reps(shape) : y <= w}, grouped by length 0..l(w).
std::vector<std::vector<Permutation>> bruhat_interval(const Permutation& w,
                                                      const FlagShape& shape);

}  // namespace pbwdeg
