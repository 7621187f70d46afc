#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "pbwdeg/error.hpp"
#include "pbwdeg/pbw.hpp"

using namespace pbwdeg;

namespace {

Permutation P(const char* csv) { return Permutation::parse(csv); }

RationalSubspace coord(int n, std::vector<int> idx) {
  return RationalSubspace::coordinate(static_cast<std::size_t>(n), idx);
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
    std::vector<int> s;
    for (int e = 1; e <= n; ++e)
      if (mask & (1 << (e - 1))) s.push_back(e);
    out.push_back(s);
  }
  return out;
}

// t = 0 membership of a coordinate tuple: S_i minus {b_i} sits inside S_{i+1}.
std::vector<CoordinateSubspaceTuple> brute_fixed_points(const PBWShape& shape) {
  const int n = shape.n();
  std::vector<CoordinateSubspaceTuple> out;
  CoordinateSubspaceTuple cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& s : subsets_of_size(n, i)) {
      if (i > 1) {
        bool ok = true;
        for (int e : cur.back())
          if (e != shape.b(i - 1) && std::find(s.begin(), s.end(), e) == s.end()) ok = false;
        if (!ok) continue;
      }
      cur.push_back(s);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

// zeta on coordinates: the first l_i - i basis vectors, plus every index whose
// residue mod n lies in S_i, up to n + l_i - i.
CoordinateSubspaceTuple brute_zeta(const CoordinateSubspaceTuple& sets, const PBWShape& shape) {
  const int n = shape.n();
  CoordinateSubspaceTuple out;
  for (int i = 1; i <= n - 1; ++i) {
    const int shift = shape.ell(i) - i;
    const auto& s = sets[static_cast<std::size_t>(i - 1)];
    std::vector<int> z;
    for (int k = 1; k <= n + shift; ++k) {
      const int target = (k - 1) % n + 1;
      if (k <= shift || std::find(s.begin(), s.end(), target) != s.end()) z.push_back(k);
    }
    out.push_back(z);
  }
  return out;
}

bool is_min_rep_window(const oracle::Window& w, std::span<const int> dims) {
  for (std::size_t a = 0; a + 1 < w.size(); ++a) {
    if (w[a] > w[a + 1] && std::find(dims.begin(), dims.end(), static_cast<int>(a) + 1) == dims.end()) return false;
  }
  return true;
}

Matrix Q(const std::vector<std::vector<int>>& rows) {
  Matrix m;
  for (const auto& r : rows) {
    Vector v;
    for (int x : r) v.emplace_back(x);
    m.push_back(v);
  }
  return m;
}

}  // namespace

TEST_CASE("shape data") {
  const auto s = PBWShape::from_j(3, {1});
  CHECK(std::vector<int>(s.b().begin(), s.b().end()) == std::vector<int>{1, 0});
  CHECK(std::vector<int>(s.ell().begin(), s.ell().end()) == std::vector<int>{1, 3});
  CHECK(s.ambient() == 4);
  const auto t = PBWShape::from_j(4, {1, 2});
  CHECK(std::vector<int>(t.b().begin(), t.b().end()) == std::vector<int>{1, 2, 0});
  CHECK(std::vector<int>(t.ell().begin(), t.ell().end()) == std::vector<int>{1, 3, 5});
  const auto u = PBWShape::from_j(5, {1, 3});
  CHECK(std::vector<int>(u.ell().begin(), u.ell().end()) == std::vector<int>{1, 3, 4, 6});
  CHECK(PBWShape::all(5).size() == 7);
  CHECK_THROWS_AS(PBWShape::from_j(3, {}), UsageError);
  CHECK_THROWS_AS(PBWShape::from_j(3, {2}), UsageError);
  CHECK_THROWS_AS(PBWShape::from_j(5, {2, 1}), UsageError);
  CHECK_THROWS_AS(PBWShape::from_j(5, {0}), UsageError);
}

TEST_CASE("pr") {
  const Rational half = fraction(1, 2);
  const auto u = RationalSubspace::span(3, Q({{1, 1, 0}}));
  CHECK(pr(1, 0, u) == coord(3, {2}));
  CHECK(pr(1, half, u) == RationalSubspace::span(3, Q({{1, 2, 0}})));
  CHECK(pr(0, 0, u) == u);
  CHECK(pr(2, 0, coord(3, {2})).dim() == 0);
  std::mt19937_64 rng(3);
  for (int s = 0; s < 30; ++s) {
    const auto v = random_subspace(RationalSubspace::whole(4), 2, rng);
    for (int idx = 0; idx <= 4; ++idx) {
      CHECK(pr(idx, 1, v) == v);
      CHECK(pr(idx, 0, pr(idx, 0, v)) == pr(idx, 0, v));
    }
  }
}

TEST_CASE("membership examples") {
  const auto shape = PBWShape::from_j(3, {1});
  CHECK(is_member(coordinate_point({{1}, {2, 3}}, 3, 0), shape));
  CHECK_FALSE(is_member(coordinate_point({{1}, {2, 3}}, 3, 1), shape));
  CHECK_FALSE(is_member(coordinate_point({{2}, {1, 3}}, 3, 0), shape));
  const DegenerationPoint p{{RationalSubspace::span(3, Q({{1, 1, 0}})), coord(3, {2, 3})}, 0};
  CHECK(is_member(p, shape));
  const DegenerationPoint q{{RationalSubspace::span(3, Q({{1, 1, 0}})), coord(3, {2, 3})}, fraction(1, 3)};
  CHECK_FALSE(is_member(q, shape));
  const DegenerationPoint bad{{coord(3, {1, 2}), coord(3, {2, 3})}, 0};
  CHECK_THROWS_AS(is_member(bad, shape), UsageError);
}

TEST_CASE("pi maps") {
  const auto shape = PBWShape::from_j(3, {1});
  const PiMap m = pi_map(2, shape);
  CHECK(m.domain == 4);
  const Matrix expected = Q({{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK((m.matrix == expected));
  const PiMap lit = pi_map(2, shape, PiConvention::Literal);
  const Matrix literal = Q({{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK((lit.matrix == literal));
  CHECK((pi_map(1, shape).matrix == identity_matrix(3)));
  CHECK_THROWS_AS(pi_map(3, shape), UsageError);
}

TEST_CASE("pi maps intertwine with pr at t = 0 for every shape with n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& shape : PBWShape::all(n)) {
      for (int i = 1; i <= n - 2; ++i) {
        const PiMap lo = pi_map(i, shape), hi = pi_map(i + 1, shape);
        const Matrix pr0 = pr_matrix(shape.b(i), 0, n);
        for (int k = 1; k <= lo.domain; ++k) {
          Vector e(static_cast<std::size_t>(lo.domain), 0), f(static_cast<std::size_t>(hi.domain), 0);
          e[static_cast<std::size_t>(k - 1)] = 1;
          f[static_cast<std::size_t>(k - 1)] = 1;
          const bool same = pbwdeg::apply(pr0, pbwdeg::apply(lo.matrix, e)) == pbwdeg::apply(hi.matrix, f);
          CHECK(same);
        }
      }
    }
  }
}

TEST_CASE("kernel of pi_i has dimension l_i - i") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& shape : PBWShape::all(n)) {
      for (int i = 1; i <= n - 1; ++i) {
        const PiMap m = pi_map(i, shape);
        int zero_columns = 0;
        for (int k = 0; k < m.domain; ++k) {
          bool zero = true;
          for (const auto& row : m.matrix) zero = zero && sgn(row[static_cast<std::size_t>(k)]) == 0;
          zero_columns += zero ? 1 : 0;
        }
        CHECK(zero_columns == shape.ell(i) - i);
        CHECK(m.domain == n + shape.ell(i) - i);
      }
    }
  }
}

TEST_CASE("zeta examples") {
  const auto shape = PBWShape::from_j(3, {1});
  CHECK(zeta_coordinates({{1}, {1, 2}}, shape) == CoordinateSubspaceTuple{{1}, {1, 2, 4}});
  CHECK(zeta_coordinates({{2}, {2, 3}}, shape) == CoordinateSubspaceTuple{{2}, {1, 2, 3}});
  CHECK(zeta_coordinates({{3}, {1, 3}}, shape) == CoordinateSubspaceTuple{{3}, {1, 3, 4}});
  CHECK_THROWS_AS(zeta(coordinate_point({{1}, {1, 2}}, 3, 1), shape), UsageError);
}

TEST_CASE("fixed points against brute force and the coordinate zeta rule for n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& shape : PBWShape::all(n)) {
      const auto fps = fixed_points(shape);
      CHECK(fps == brute_fixed_points(shape));
      CHECK(fps == fixed_points_parallel(shape));
      for (const auto& fp : fps) {
        CHECK(is_member(coordinate_point(fp, n, 0), shape));
        const auto z = zeta_coordinates(fp, shape);
        CHECK(z == brute_zeta(fp, shape));
        for (std::size_t i = 0; i + 1 < z.size(); ++i) {
          CHECK(std::includes(z[i + 1].begin(), z[i + 1].end(), z[i].begin(), z[i].end()));
        }
      }
    }
  }
  CHECK(fixed_points(PBWShape::from_j(3, {1})).size() == 7);
}

TEST_CASE("zeta lands in nested flags on random members") {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 5; ++n) {
    for (const auto& shape : PBWShape::all(n)) {
      for (int s = 0; s < 100 / n; ++s) {
        const auto p = sample_member(shape, 0, rng);
        REQUIRE(is_member(p, shape));
        const auto z = zeta(p, shape);
        CHECK(is_nested(z));
        for (int i = 1; i <= n - 1; ++i) CHECK(z[static_cast<std::size_t>(i - 1)].dim() == static_cast<std::size_t>(shape.ell(i)));
      }
    }
  }
}

TEST_CASE("the literal kernel bound breaks nestedness") {
  const auto shape = PBWShape::from_j(3, {1});
  bool broken = false;
  for (const auto& fp : fixed_points(shape)) {
    try {
      const auto z = zeta(coordinate_point(fp, 3, 0), shape, PiConvention::Literal);
      if (!is_nested(z)) broken = true;
    } catch (const std::logic_error&) {
      broken = true;
    }
  }
  CHECK(broken);
}

TEST_CASE("w_j and the interval below it") {
  const auto shape = PBWShape::from_j(3, {1});
  CHECK(derive_w_j(shape) == P("3,1,4,2"));
  CHECK(poincare_polynomial_of_y(shape) == std::vector<long long>{1, 2, 3, 1});
  CHECK(derive_w_j(PBWShape::from_j(4, {1})) == P("4,1,5,3,2"));
  for (int n = 3; n <= 5; ++n) {
    for (const auto& shape : PBWShape::all(n)) {
      const DegenerationCells cells = derive_cells(shape);
      long long total = 0;
      for (auto c : poincare_polynomial_of_y(shape)) total += c;
      CHECK(static_cast<std::size_t>(total) == cells.fixed_point_count);
      CHECK(cells.positions.size() == cells.fixed_point_count);
      if (shape.ambient() <= 7) {
        const auto interval = oracle::subword_interval({cells.w.window().begin(), cells.w.window().end()});
        std::size_t count = 0;
        for (const auto& y : interval) count += is_min_rep_window(y, shape.ell()) ? 1 : 0;
        CHECK(count == cells.fixed_point_count);
      }
    }
  }
}

TEST_CASE("flag positions of coordinate flags") {
  const FlagShape shape({1, 3}, 4);
  for (const auto& w : min_coset_reps(shape)) {
    std::vector<RationalSubspace> members;
    for (const auto& s : coordinate_flag(w, shape)) members.push_back(coord(4, s));
    CHECK(flag_position(members, shape) == w);
  }
}

TEST_CASE("generic fibres are flag varieties") {
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 5; ++n) {
    for (const auto& shape : PBWShape::all(n)) {
      for (const Rational& t : {Rational(1), fraction(5, 7), Rational(-2)}) {
        const auto p = sample_member(shape, t, rng);
        CHECK(is_member(p, shape));
        const auto flag = trivialise(p, shape);
        CHECK(is_nested(flag));
        for (std::size_t i = 0; i < flag.size(); ++i) CHECK(flag[i].dim() == i + 1);
      }
      // at t = 1 pr is the identity: membership is nestedness
      for (int s = 0; s < 5; ++s) {
        DegenerationPoint q{{}, 1};
        for (int i = 1; i <= n - 1; ++i)
          q.spaces.push_back(random_subspace(RationalSubspace::whole(static_cast<std::size_t>(n)), static_cast<std::size_t>(i), rng));
        CHECK(is_member(q, shape) == is_nested(q.spaces));
        const auto nested = sample_member(shape, 1, rng);
        CHECK(is_nested(nested.spaces));
      }
    }
  }
}
