#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pbwdeg/homology.hpp"
#include "pbwdeg/pbw.hpp"
#include "pbwdeg/smith.hpp"

namespace pbwdeg {

/// Skew form given by its Gram matrix: b[u, w] = u^T G w.
class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);

  std::size_t dim() const { return gram_.size(); }
  const Matrix& gram() const { return gram_; }
  Rational operator()(const Vector& u, const Vector& w) const;
  bool is_skew() const;
  bool is_nondegenerate() const;

 private:
  Matrix gram_;
};

/// ((0, J), (-J, 0)) on C^{2n}, J the antidiagonal of ones.
BilinearForm w_form(int n);

/// Sign completion of the form pairing e_k with e_{2n-1-k} (k <= 2n-2) and
/// e_{2n-1} with e_{2n}.
enum class PairingSigns {
  Standard,  ///< b[e_k, e_{2n-1-k}] = +1 for k <= n-1, b[e_{2n-1}, e_{2n}] = +1
  Flipped,   ///< same, except b[e_{2n-1}, e_{2n}] = -1
};
BilinearForm v_form(int n, PairingSigns signs = PairingSigns::Standard);
/// Partner index k* of the pairing behind v_form (1-based).
int v_partner(int k, int n);

RationalSubspace perp(const RationalSubspace& u, const BilinearForm& form);

/// (V_m^⊥, ..., V_1^⊥) for a chain V_1..V_m.
std::vector<RationalSubspace> iota(std::span<const RationalSubspace> chain, const BilinearForm& form);
DegenerationPoint iota_t(const DegenerationPoint& point, const BilinearForm& form);

/// The type A datum behind the degenerate symplectic flag variety:
/// C^{2n} with j = (1, ..., 2n-2).
PBWShape sp_type_a_shape(int n);

/// Upper half (V_1, ..., V_n) of an iota-fixed chain.
struct SymplecticPoint {
  std::vector<RationalSubspace> spaces;
  Rational t;
};

/// (V_1, ..., V_n, V_{n-1}^⊥, ..., V_1^⊥, t).
DegenerationPoint sp_complete(const SymplecticPoint& point, const BilinearForm& form);
/// V_n Lagrangian and every pr containment of the completed chain. Throws
/// UsageError on bad dimensions.
bool sp_is_member(const SymplecticPoint& point, const BilinearForm& form);
bool sp_is_member(const SymplecticPoint& point);

/// Coordinate (S_1, ..., S_n) in the fibre over t under v_form, sorted.
std::vector<CoordinateSubspaceTuple> sp_fixed_points(int n, const Rational& t);

/// Random member of the fibre over t: a greedy random Lagrangian V_n, then
/// V_i random in pr_{b_i,t}^{-1}(V_{i+1}).
SymplecticPoint sp_sample_member(int n, const Rational& t, std::mt19937_64& rng,
                                 PairingSigns signs = PairingSigns::Standard);

/// F_{i-1} ⊂ U ⊂ F_{i+1} through the flag F_k = E_k (k < n),
/// F_n = E_{n-1} ⊕ Ce_{2n-1}, with F_{n+1} read as F_{n-1}^⊥.
struct FFlagCurve {
  int index = 0;
  int n = 0;
  int from = 0;  ///< U = F_{i-1} ⊕ C(a1 e_from + a2 e_to)
  int to = 0;
  CoordinateSubspaceTuple start;  ///< F_•, (a1 : a2) = (1 : 0)
  CoordinateSubspaceTuple end;    ///< (a1 : a2) = (0 : 1)

  SymplecticPoint point(const Rational& a1, const Rational& a2, const Rational& t) const;
};
FFlagCurve f_flag_curve(int i, int n);

/// Form on C^{4n-2} pulled back through the maps pi_k: B(e~_a, e~_b) =
/// b_V(pi_k e~_a, pi_{2n-k} e~_b). Throws std::logic_error if different k
/// disagree or the result is not an antidiagonal skew form.
BilinearForm induced_form(int n);

struct SymplecticVerdict {
  int n = 0;
  PBWShape shape;  ///< sp_type_a_shape(n)
  std::size_t fixed_point_count = 0;
  std::size_t generic_fixed_point_count = 0;
  bool curves_in_fibres = false;
  std::vector<Weight> characters;  ///< ambient weights on C^{4n-2}
  bool characters_distinct = false;
  IntegerMatrix g2;  ///< rows: members 1..n of l; columns: curves
  SmithNormalFormResult snf;
  bool split_injective = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && curves_in_fibres && characters_distinct && split_injective; }
};
SymplecticVerdict sp_verify_surjectivity(int n, int samples = 20, std::uint64_t seed = 1);

/// zeta(iota^0 p) = iota(zeta p) on every coordinate member of the t = 0
/// fibre and on `samples` random members, iota on the right taken with
/// respect to induced_form(n).
bool check_commuting_diagram(int n, int samples, std::uint64_t seed = 1);
/// Same identity on `samples` random points of the type A fibre over 0, which
/// iota^0 need not fix.
bool check_commuting_diagram_type_a(int n, int samples, std::uint64_t seed, const BilinearForm& ambient);

}  // namespace pbwdeg
