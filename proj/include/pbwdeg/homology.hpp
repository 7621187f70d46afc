#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pbwdeg/pbw.hpp"
#include "pbwdeg/smith.hpp"

namespace pbwdeg {

/// Coefficients of a torus character in the basis eps_1, ..., eps_N.
using Weight = std::vector<int>;

/// The Schubert curve X_{s_i} = {E_1 ⊂ ... ⊂ E_{i-1} ⊂ U ⊂ E_{i+1} ⊂ ...}
/// on the classical side.
struct CurveDatum {
  int index = 0;
  int n = 0;
  CoordinateSubspaceTuple start;  ///< E_•
  CoordinateSubspaceTuple end;    ///< E_• with i and i+1 exchanged in member i
  int moving_member = 0;
  Weight character;  ///< eps_i - eps_{i+1} in C^n

  /// The point with U = E_{i-1} ⊕ C(a1 e_i + a2 e_{i+1}) at parameter t.
  DegenerationPoint point(const Rational& a1, const Rational& a2, const Rational& t) const;
};

CurveDatum schubert_curve(int i, int n);

/// Endpoints and `samples` random points of X_{s_i} lie in the fibre over t.
bool curve_in_fiber(int i, const PBWShape& shape, const Rational& t, int samples, std::uint64_t seed = 1);

/// Support (p, q), p < q, of the line that moves along a torus curve.
struct MovingLine {
  int from = 0;
  int to = 0;
};

/// Generic machinery shared with the symplectic layer. `image(a1, a2)` is the
/// embedded flag at curve parameter (a1 : a2); `torus(rng)` draws diagonal
/// entries of a torus element. Finds the unique moving coordinate pair of the
/// lowest moving member and checks mu . image(a1, a2) = image(mu_p a1, mu_q a2)
/// on random samples. Throws Falsified when either step fails.
MovingLine torus_curve_line(const std::function<std::vector<RationalSubspace>(const Rational&, const Rational&)>& image,
                            const std::function<std::vector<Rational>(std::mt19937_64&)>& torus,
                            std::mt19937_64& rng, int samples = 5);

/// Weight of the ambient torus of SL_{n+r} on zeta of the open curve X°_{s_i},
/// computed from the moving line. Throws Falsified unless it equals
/// eps_i - eps_{i+1}.
Weight curve_character(int i, const PBWShape& shape, std::uint64_t seed = 1);

/// Degrees of zeta(X_{s_i}) against the member determinant classes of
/// Fl_{l, n+r}. Throws Falsified on a zero vector.
std::vector<std::int64_t> curve_class_vector(int i, const PBWShape& shape);

/// Columns: class vectors of the n-1 curves; rows: members of l, row k
/// standing for the curve class of s_{l_k}. Throws Falsified if some
/// s_{l_k} is not below w_j.
IntegerMatrix g2_matrix(const PBWShape& shape);

struct SurjectivityVerdict {
  IntegerMatrix g2;
  SmithNormalFormResult snf;
  bool split_injective = false;
};
SurjectivityVerdict verify_surjectivity(const PBWShape& shape);

struct EquivariantVerdict {
  std::vector<Weight> characters;
  bool characters_distinct = false;
  bool torus_stable = false;
  bool holds() const { return characters_distinct && torus_stable; }
};
EquivariantVerdict equivariant_verdict(const PBWShape& shape, int samples = 20, std::uint64_t seed = 1);

/// max(0, b_2k(Y) - b_2k(Fl_n)) per degree k.
std::vector<long long> kernel_lower_bounds(const PBWShape& shape);

struct PipelineOptions {
  int samples = 20;
  std::uint64_t seed = 1;
  std::vector<Rational> fibre_parameters = {Rational(0), Rational(1), fraction(5, 7), Rational(-2)};
  /// Under Literal the pipeline first checks that zeta lands in nested flags
  /// on every fixed point and `samples` random members, and stops with a
  /// failure if it does not. Everything after that step uses Corrected.
  PiConvention pi = PiConvention::Corrected;
};

/// Everything the CLI reports for one shape. Falsifications are collected in
/// `failures` rather than thrown.
struct ShapeReport {
  PBWShape shape;
  std::size_t fixed_point_count = 0;
  Permutation w_j;
  std::vector<long long> poincare_y;
  std::vector<long long> betti_fl;
  std::vector<long long> kernel_lower_bounds;
  bool curves_in_fibres = false;
  SurjectivityVerdict surjectivity;
  EquivariantVerdict equivariant;
  std::vector<std::string> failures;

  bool ok() const {
    return failures.empty() && curves_in_fibres && surjectivity.split_injective && equivariant.holds();
  }
};

ShapeReport run_pipeline(const PBWShape& shape, const PipelineOptions& options = {});
/// Serial reference over all shapes of a given n.
std::vector<ShapeReport> run_all(int n, const PipelineOptions& options = {});
/// Same reports in the same order, one OpenMP task per shape.
std::vector<ShapeReport> run_all_parallel(int n, const PipelineOptions& options = {});

}  // namespace pbwdeg
