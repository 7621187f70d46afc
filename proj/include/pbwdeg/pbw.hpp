#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pbwdeg/rational.hpp"
#include "pbwdeg/weyl.hpp"

namespace pbwdeg {

/// Degeneration datum j = (j_1 < ... < j_r) on C^n with the derived
/// projection indices b_k and ambient member dimensions l_i.
class PBWShape {
 public:
  /// Requires 1 <= j_1 < ... < j_r <= n-2 and r >= 1.
  static PBWShape from_j(int n, std::vector<int> j);
  /// Every admissible j for this n, ordered by (r, j).
  static std::vector<PBWShape> all(int n);

  int n() const { return n_; }
  int r() const { return static_cast<int>(j_.size()); }
  /// n + r, the dimension receiving the embedding.
  int ambient() const { return n_ + r(); }
  std::span<const int> j() const { return j_; }
  std::span<const int> b() const { return b_; }
  std::span<const int> ell() const { return ell_; }
  /// b_k, 1 <= k <= n-1.
  int b(int k) const { return b_[static_cast<std::size_t>(k - 1)]; }
  /// l_i, 1 <= i <= n-1.
  int ell(int i) const { return ell_[static_cast<std::size_t>(i - 1)]; }
  /// (l_1 < ... < l_{n-1}) in C^{n+r}.
  FlagShape ell_shape() const;
  std::string to_string() const;

  friend bool operator==(const PBWShape&, const PBWShape&) = default;

 private:
  int n_ = 0;
  std::vector<int> j_, b_, ell_;
};

/// Member sets S_1..S_{n-1} (1-based, sorted) of a coordinate point.
/// Not necessarily nested.
using CoordinateSubspaceTuple = std::vector<std::vector<int>>;

/// (V_1, ..., V_{n-1}, t) with dim V_i = i.
struct DegenerationPoint {
  std::vector<RationalSubspace> spaces;
  Rational t;
};

/// Which kernel bound the maps pi_i use. The literal variant kills
/// e~_1..e~_{l_i - i - 1}; the corrected one kills e~_1..e~_{l_i - i} and is
/// the only one under which zeta lands in nested flags.
enum class PiConvention { Corrected, Literal };

/// Diagonal map on C^n fixing e_k (k != index) and scaling e_index by t;
/// index 0 is the identity.
Matrix pr_matrix(int index, const Rational& t, int n);
RationalSubspace pr(int index, const Rational& t, const RationalSubspace& u);

DegenerationPoint coordinate_point(const CoordinateSubspaceTuple& sets, int n, const Rational& t);
/// pr_{b_i,t}(V_i) ⊆ V_{i+1} for all i. Throws UsageError on bad dimensions.
bool is_member(const DegenerationPoint& point, const PBWShape& shape);
/// Each space contained in the next.
bool is_nested(std::span<const RationalSubspace> spaces);

/// All coordinate tuples in the t = 0 fibre, lexicographically sorted.
/// Serial reference implementation.
std::vector<CoordinateSubspaceTuple> fixed_points(const PBWShape& shape);
/// Same result; the search is split over the choice of S_1 with OpenMP.
std::vector<CoordinateSubspaceTuple> fixed_points_parallel(const PBWShape& shape);

/// pi_i : span(e~_1..e~_domain) -> C^n.
struct PiMap {
  int domain = 0;
  Matrix matrix;  // n x domain
};
PiMap pi_map(int i, const PBWShape& shape, PiConvention convention = PiConvention::Corrected);

/// (pi_1^{-1}(V_1), ..., pi_{n-1}^{-1}(V_{n-1})) in C^{n+r}. Requires a
/// member of the t = 0 fibre.
std::vector<RationalSubspace> zeta(const DegenerationPoint& point, const PBWShape& shape,
                                   PiConvention convention = PiConvention::Corrected);
/// zeta of a coordinate tuple as coordinate sets; throws std::logic_error if
/// an image member is not a coordinate subspace.
CoordinateSubspaceTuple zeta_coordinates(const CoordinateSubspaceTuple& sets, const PBWShape& shape,
                                         PiConvention convention = PiConvention::Corrected);

/// Schubert cell of a flag: rank table dim(U_i ∩ E_k), converted to the
/// minimal coset representative of the cell containing it.
Permutation flag_position(std::span<const RationalSubspace> members, const FlagShape& shape);

struct DegenerationCells {
  Permutation w;                    ///< Bruhat maximum of the positions.
  std::vector<Permutation> positions;  ///< Positions of zeta(fixed points), sorted.
  std::size_t fixed_point_count = 0;
};
/// Maps every fixed point through zeta, reads off cell positions and returns
/// their unique Bruhat maximum w_j. Throws Falsified if there is no unique
/// maximum, if two fixed points share a position, or if the positions are
/// not exactly the lower interval below w_j.
DegenerationCells derive_cells(const PBWShape& shape);
Permutation derive_w_j(const PBWShape& shape);
/// Graded sizes of the interval below w_j.
std::vector<long long> poincare_polynomial_of_y(const PBWShape& shape);

/// Deterministic small rationals: numerator in [-9, 9], denominator in [1, 9].
Rational random_rational(std::mt19937_64& rng);
/// Random i-dimensional subspace of `inside`.
RationalSubspace random_subspace(const RationalSubspace& inside, std::size_t dim, std::mt19937_64& rng);
/// A random member of the fibre over t, chosen top-down:
/// V_i random in pr_{b_i,t}^{-1}(V_{i+1}).
DegenerationPoint sample_member(const PBWShape& shape, const Rational& t, std::mt19937_64& rng);
/// (V_1, pr_{b_1,t}^{-1} V_2, ..., pr_{b_1,t}^{-1}...pr_{b_{n-2},t}^{-1} V_{n-1}),
/// the identification of a t != 0 fibre with Fl_n.
std::vector<RationalSubspace> trivialise(const DegenerationPoint& point, const PBWShape& shape);

}  // namespace pbwdeg
