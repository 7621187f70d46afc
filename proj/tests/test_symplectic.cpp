#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "pbwdeg/error.hpp"
#include "pbwdeg/symplectic.hpp"
#include "pbwdeg/weyl.hpp"

using namespace pbwdeg;

namespace {

RationalSubspace coord(int dim, std::vector<int> idx) {
  return RationalSubspace::coordinate(static_cast<std::size_t>(dim), idx);
}

// Coordinate perp under v_form: indices whose partner is outside S.
std::vector<int> coordinate_perp(const std::vector<int>& s, int n) {
  std::vector<int> out;
  for (int k = 1; k <= 2 * n; ++k) {
    if (std::find(s.begin(), s.end(), v_partner(k, n)) == s.end()) out.push_back(k);
  }
  return out;
}

std::set<CoordinateSubspaceTuple> iota_fixed_halves(const std::vector<CoordinateSubspaceTuple>& type_a, int n) {
  std::set<CoordinateSubspaceTuple> out;
  for (const auto& chain : type_a) {
    bool fixed = true;
    for (int k = 1; k <= 2 * n - 1; ++k) {
      if (chain[static_cast<std::size_t>(2 * n - k - 1)] != coordinate_perp(chain[static_cast<std::size_t>(k - 1)], n)) fixed = false;
    }
    if (fixed) out.insert(CoordinateSubspaceTuple(chain.begin(), chain.begin() + n));
  }
  return out;
}

bool isotropic(const RationalSubspace& u, const BilinearForm& b) {
  for (const auto& x : u.basis())
    for (const auto& y : u.basis())
      if (sgn(b(x, y)) != 0) return false;
  return true;
}

SymplecticPoint coordinate_sp_point(const CoordinateSubspaceTuple& sets, int n, const Rational& t) {
  SymplecticPoint p{{}, t};
  for (const auto& s : sets) p.spaces.push_back(coord(2 * n, s));
  return p;
}

}  // namespace

TEST_CASE("forms") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(w_form(n).is_skew());
    CHECK(w_form(n).is_nondegenerate());
    for (auto signs : {PairingSigns::Standard, PairingSigns::Flipped}) {
      if (n < 2) continue;
      const auto v = v_form(n, signs);
      CHECK(v.is_skew());
      CHECK(v.is_nondegenerate());
      for (int k = 1; k <= 2 * n; ++k) {
        CHECK(v_partner(v_partner(k, n), n) == k);
        for (int l = 1; l <= 2 * n; ++l) {
          Vector a(static_cast<std::size_t>(2 * n), 0), b(static_cast<std::size_t>(2 * n), 0);
          a[static_cast<std::size_t>(k - 1)] = 1;
          b[static_cast<std::size_t>(l - 1)] = 1;
          CHECK((sgn(v(a, b)) != 0) == (l == v_partner(k, n)));
        }
      }
    }
  }
  CHECK(v_partner(1, 2) == 2);
  CHECK(v_partner(3, 2) == 4);
  CHECK(v_partner(2, 3) == 3);
  CHECK(v_partner(5, 3) == 6);
  const auto e = [](int dim, int k) {
    Vector v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(k - 1)] = 1;
    return v;
  };
  CHECK(v_form(2)(e(4, 3), e(4, 4)) == 1);
  CHECK(v_form(2, PairingSigns::Flipped)(e(4, 3), e(4, 4)) == -1);
  CHECK(v_form(2)(e(4, 1), e(4, 2)) == 1);
}

TEST_CASE("perp and iota") {
  CHECK(perp(coord(4, {1}), w_form(2)) == coord(4, {1, 2, 3}));
  CHECK(perp(coord(4, {1}), v_form(2)) == coord(4, {1, 3, 4}));
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 3; ++n) {
    const auto form = v_form(n);
    const auto whole = RationalSubspace::whole(static_cast<std::size_t>(2 * n));
    for (int s = 0; s < 20; ++s) {
      std::vector<RationalSubspace> chain;
      RationalSubspace top = whole;
      for (int d = 2 * n - 1; d >= 1; --d) {
        top = random_subspace(top, static_cast<std::size_t>(d), rng);
        chain.insert(chain.begin(), top);
      }
      for (const auto& u : chain) {
        CHECK(perp(perp(u, form), form) == u);
        CHECK(perp(u, form).dim() == static_cast<std::size_t>(2 * n) - u.dim());
      }
      CHECK(perp(chain[1], form).contains(perp(chain[2], form)));
      CHECK(iota(iota(chain, form), form) == chain);
      CHECK(is_nested(iota(chain, form)));
    }
  }
}

TEST_CASE("type A datum") {
  for (int n = 2; n <= 4; ++n) {
    const auto shape = sp_type_a_shape(n);
    CHECK(shape.n() == 2 * n);
    CHECK(shape.ambient() == 4 * n - 2);
    std::vector<int> ell;
    for (int i = 1; i <= 2 * n - 1; ++i) ell.push_back(2 * i - 1);
    CHECK(std::vector<int>(shape.ell().begin(), shape.ell().end()) == ell);
  }
}

TEST_CASE("membership examples") {
  CHECK(sp_is_member(coordinate_sp_point({{1}, {1, 3}}, 2, 0)));
  CHECK(sp_is_member(coordinate_sp_point({{1}, {1, 3}}, 2, 1)));
  // E_1 ⊂ E_2 is not isotropic for this pairing
  CHECK_FALSE(sp_is_member(coordinate_sp_point({{1}, {1, 2}}, 2, 0)));
  CHECK_FALSE(sp_is_member(coordinate_sp_point({{1}, {1, 2}}, 2, 1)));
  CHECK_FALSE(sp_is_member(coordinate_sp_point({{3}, {3, 4}}, 2, 1)));
  CHECK_THROWS_AS(sp_is_member(coordinate_sp_point({{1, 3}, {1, 3}}, 2, 0)), UsageError);
}

TEST_CASE("coordinate members are the iota-fixed type A fixed points") {
  CHECK(sp_fixed_points(2, 0).size() == 10);
  CHECK(sp_fixed_points(2, 1).size() == SignedPermutation::all(2).size());
  CHECK(sp_fixed_points(3, 0).size() == 98);
  CHECK(sp_fixed_points(3, 1).size() == SignedPermutation::all(3).size());
  for (int n = 2; n <= 3; ++n) {
    const auto type_a = fixed_points(sp_type_a_shape(n));
    const auto expected = iota_fixed_halves(type_a, n);
    const auto got = sp_fixed_points(n, 0);
    CHECK(std::set<CoordinateSubspaceTuple>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
    for (const auto& fp : got) {
      CHECK(sp_is_member(coordinate_sp_point(fp, n, 0), v_form(n, PairingSigns::Flipped)));
    }
  }
}

TEST_CASE("t = 1 members are isotropic flags") {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 3; ++n) {
    const auto form = v_form(n);
    for (int s = 0; s < 20; ++s) {
      SymplecticPoint p = sp_sample_member(n, 1, rng);
      CHECK(sp_is_member(p));
      CHECK(is_nested(p.spaces));
      CHECK(isotropic(p.spaces.back(), form));
      // random line: member iff nested
      p.spaces[0] = random_subspace(RationalSubspace::whole(static_cast<std::size_t>(2 * n)), 1, rng);
      CHECK(sp_is_member(p) == is_nested(p.spaces));
      if (s % 4 == 0) p.spaces[0] = random_subspace(p.spaces[1], 1, rng);
      CHECK(sp_is_member(p) == (is_nested(p.spaces) && isotropic(p.spaces.back(), form)));
    }
  }
}

TEST_CASE("sampled members") {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 3; ++n) {
    for (auto signs : {PairingSigns::Standard, PairingSigns::Flipped}) {
      const auto form = v_form(n, signs);
      for (const Rational& t : {Rational(0), Rational(1), fraction(-3, 4)}) {
        for (int s = 0; s < 10; ++s) {
          const SymplecticPoint p = sp_sample_member(n, t, rng, signs);
          CHECK(sp_is_member(p, form));
          CHECK(is_member(sp_complete(p, form), sp_type_a_shape(n)));
          const auto full = sp_complete(p, form);
          CHECK(iota_t(full, form).spaces == full.spaces);
        }
      }
    }
  }
}

TEST_CASE("F-flag curves") {
  CHECK(f_flag_curve(1, 2).from == 1);
  CHECK(f_flag_curve(1, 2).to == 3);
  CHECK(f_flag_curve(2, 2).from == 3);
  CHECK(f_flag_curve(2, 2).to == 4);
  CHECK(f_flag_curve(1, 3).to == 2);
  CHECK(f_flag_curve(2, 3).to == 5);
  CHECK(f_flag_curve(3, 3).from == 5);
  CHECK(f_flag_curve(3, 3).to == 6);
  CHECK(f_flag_curve(1, 2).start == CoordinateSubspaceTuple{{1}, {1, 3}});
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      const auto c = f_flag_curve(i, n);
      CHECK(c.start != c.end);
      for (const Rational& t : {Rational(0), Rational(1)}) {
        CHECK(sp_is_member(coordinate_sp_point(c.start, n, t)));
        CHECK(sp_is_member(coordinate_sp_point(c.end, n, t)));
        for (int s = 0; s < 4; ++s) CHECK(sp_is_member(c.point(random_rational(rng), 1, t)));
      }
    }
  }
}

TEST_CASE("induced form") {
  for (int n = 2; n <= 3; ++n) {
    const auto b = induced_form(n);
    CHECK(b.dim() == static_cast<std::size_t>(4 * n - 2));
    CHECK(b.is_skew());
    CHECK(b.is_nondegenerate());
  }
}

TEST_CASE("symplectic verdicts") {
  const auto two = sp_verify_surjectivity(2, 10, 1);
  CHECK(two.ok());
  CHECK(two.fixed_point_count == 10);
  CHECK(two.generic_fixed_point_count == 8);
  CHECK(two.g2.rows() == 2);
  CHECK(two.g2.cols() == 2);
  CHECK(two.snf.divisors == std::vector<std::int64_t>{1, 1});
  CHECK(std::set<Weight>(two.characters.begin(), two.characters.end()).size() == 2);
  for (const auto& w : two.characters) CHECK(w.size() == 6);
  const auto three = sp_verify_surjectivity(3, 10, 1);
  CHECK(three.ok());
  CHECK(three.fixed_point_count == 98);
  CHECK(three.generic_fixed_point_count == 48);
  CHECK(three.snf.divisors == std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("iota commutes with zeta") {
  for (int n = 2; n <= 3; ++n) {
    CHECK(check_commuting_diagram(n, 10, 3));
    CHECK(check_commuting_diagram_type_a(n, 10, 3, induced_form(n)));
  }
  // the standard form on the ambient space does not make the square commute
  CHECK_FALSE(check_commuting_diagram_type_a(2, 10, 3, w_form(3)));
}
