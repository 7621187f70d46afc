#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "pbwdeg/error.hpp"
#include "pbwdeg/weyl.hpp"

using namespace pbwdeg;

namespace {

Permutation P(const char* csv) { return Permutation::parse(csv); }

std::vector<Permutation> all_of(int n) {
  std::vector<Permutation> out;
  for (auto& w : oracle::all_windows(n)) out.emplace_back(w);
  return out;
}

std::vector<std::vector<int>> all_dims(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> d;
    for (int k = 1; k < n; ++k)
      if (mask & (1 << (k - 1))) d.push_back(k);
    out.push_back(d);
  }
  return out;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("length") {
  CHECK(Permutation::identity(4).length() == 0);
  CHECK(P("3,1,4,2").length() == 3);
  CHECK(P("3,2,1").length() == 3);
  for (int n = 1; n <= 6; ++n) CHECK(Permutation::longest(n).length() == n * (n - 1) / 2);
}

TEST_CASE("length agrees with inversion count and is w0-conjugation invariant") {
  for (int n = 1; n <= 5; ++n) {
    const Permutation w0 = Permutation::longest(n);
    for (const auto& w : all_of(n)) {
      CHECK(w.length() == oracle::inversions({w.window().begin(), w.window().end()}));
      CHECK((w0 * w * w0).length() == w.length());
    }
  }
}

TEST_CASE("window validation and parsing") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), UsageError);
  CHECK_THROWS_AS(Permutation({0, 1}), UsageError);
  CHECK_THROWS_AS(Permutation::parse("1,x"), UsageError);
  CHECK(P("3,1,4,2").to_string() == "3,1,4,2");
  CHECK(P("3,1,4,2").code() == std::vector<int>{2, 0, 1, 0});
  CHECK(permutation_from_code(std::vector<int>{2, 0, 1}) == P("3,1,4,2"));
  CHECK(P("2,1,3,4").trimmed() == P("2,1"));
  CHECK(P("2,1").extended(4) == P("2,1,3,4"));
  CHECK(P("3,1,4,2").inverse() * P("3,1,4,2") == Permutation::identity(4));
  CHECK(Permutation::identity(3).times_simple(1) == Permutation::simple(1, 3));
}

TEST_CASE("bruhat examples") {
  CHECK(bruhat_leq(Permutation::identity(3), P("2,3,1")));
  CHECK(bruhat_leq(P("2,1,3"), P("3,2,1")));
  CHECK_FALSE(bruhat_leq(P("3,1,2"), P("2,3,1")));
  CHECK_FALSE(bruhat_leq(P("2,3,1"), P("3,1,2")));
  CHECK_THROWS_AS(bruhat_leq(P("2,1"), P("2,1,3")), UsageError);
}

TEST_CASE("bruhat order matches the subword oracle on S_4 and S_5") {
  for (int n = 4; n <= 5; ++n) {
    const auto elems = all_of(n);
    std::size_t mismatches = 0;
    for (const auto& w : elems) {
      const auto interval = oracle::subword_interval({w.window().begin(), w.window().end()});
      for (const auto& y : elems) {
        const bool expected = interval.count({y.window().begin(), y.window().end()}) > 0;
        if (bruhat_leq(y, w) != expected) ++mismatches;
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("min coset representatives") {
  const FlagShape shape({1, 3}, 4);
  const auto reps = min_coset_reps(shape);
  CHECK(reps.size() == 12);
  std::vector<Permutation> length_one;
  for (const auto& w : reps)
    if (w.length() == 1) length_one.push_back(w);
  CHECK(length_one == std::vector<Permutation>{P("1,2,4,3"), P("2,1,3,4")});
  CHECK(min_coset_reps(FlagShape::complete(4)).size() == 24);
  for (std::size_t k = 1; k < reps.size(); ++k) {
    const auto key = [](const Permutation& w) { return std::make_pair(w.length(), w); };
    CHECK(key(reps[k - 1]) < key(reps[k]));
  }
}

TEST_CASE("coset count identity for every shape with N <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& d : all_dims(n)) {
      const FlagShape shape(d, n);
      long long denom = 1;
      for (int b : shape.block_sizes()) denom *= factorial(b);
      const auto reps = min_coset_reps(shape);
      CHECK(static_cast<long long>(reps.size()) * denom == factorial(n));
      for (const auto& w : reps) {
        for (int a : w.descents()) CHECK(std::find(d.begin(), d.end(), a) != d.end());
      }
    }
  }
}

TEST_CASE("coordinate flags and their representatives") {
  const FlagShape shape({1, 3}, 4);
  CHECK(coset_rep_of_coordinate_flag({{1}, {1, 2, 3}}, shape) == Permutation::identity(4));
  CHECK(coset_rep_of_coordinate_flag({{3}, {1, 3, 4}}, shape) == P("3,1,4,2"));
  CHECK(coset_rep_of_coordinate_flag({{2}, {1, 2, 3}}, shape) == P("2,1,3,4"));
  CHECK_THROWS_AS(coset_rep_of_coordinate_flag({{4}, {1, 2, 3}}, shape), UsageError);
  CHECK_THROWS_AS(coset_rep_of_coordinate_flag({{1, 2}, {1, 2, 3}}, shape), UsageError);
  for (const auto& w : min_coset_reps(shape)) CHECK(coset_rep_of_coordinate_flag(coordinate_flag(w, shape), shape) == w);
}

TEST_CASE("rank tables") {
  const FlagShape shape({1, 3}, 4);
  const RankTable t(P("3,1,4,2"), shape);
  CHECK(t.entry(1, 2) == 0);
  CHECK(t.entry(1, 3) == 1);
  CHECK(t.entry(2, 4) == 3);
  CHECK(t.jumps(2) == std::vector<int>{1, 3, 4});
  CHECK(RankTable(Permutation::identity(4), shape).dominates(t));
  CHECK_THROWS_AS(RankTable({{0, 1, 1, 1, 1}, {0, 1, 1, 2, 2}}, shape), UsageError);  // member 2 ends at 2
  CHECK_THROWS_AS(RankTable({{0, 2, 1, 1, 1}, {0, 1, 2, 3, 3}}, shape), UsageError);  // step of 2
}

TEST_CASE("bruhat intervals") {
  const FlagShape shape({1, 3}, 4);
  auto sizes = [](const std::vector<std::vector<Permutation>>& graded) {
    std::vector<std::size_t> out;
    for (const auto& level : graded) out.push_back(level.size());
    return out;
  };
  CHECK(sizes(bruhat_interval(Permutation::identity(4), shape)) == std::vector<std::size_t>{1});
  CHECK(sizes(bruhat_interval(P("3,1,4,2"), shape)) == std::vector<std::size_t>{1, 2, 3, 1});
  const auto reps = min_coset_reps(shape);
  const auto top = bruhat_interval(reps.back(), shape);
  std::size_t total = 0;
  for (const auto& level : top) total += level.size();
  CHECK(total == 12);
  CHECK_THROWS_AS(bruhat_interval(P("1,3,2,4"), shape), UsageError);

  // interval of (3,1,4,2) by brute force over the 12 reps with the oracle
  const auto oracle_set = oracle::subword_interval({3, 1, 4, 2});
  std::size_t count = 0;
  for (const auto& y : reps) count += oracle_set.count({y.window().begin(), y.window().end()});
  CHECK(count == 7);
}

TEST_CASE("intervals are graded: each element covers one of length one less") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& d : all_dims(n)) {
      const FlagShape shape(d, n);
      const auto reps = min_coset_reps(shape);
      const auto& w = reps[reps.size() / 2];
      const auto graded = bruhat_interval(w, shape);
      std::size_t total = 0;
      for (const auto& level : graded) total += level.size();
      CHECK(total >= static_cast<std::size_t>(w.length()) + 1);
      for (std::size_t k = 1; k < graded.size(); ++k) {
        for (const auto& y : graded[k]) {
          bool covers = false;
          for (const auto& x : graded[k - 1]) covers = covers || bruhat_leq(x, y);
          CHECK(covers);
        }
      }
    }
  }
}

TEST_CASE("signed permutations") {
  const auto b2 = SignedPermutation::all(2);
  CHECK(b2.size() == 8);
  CHECK(SignedPermutation::all(3).size() == 48);
  CHECK_THROWS_AS(SignedPermutation({1, -1}), UsageError);
  CHECK(SignedPermutation::parse("-2,1").to_string() == "-2,1");
  for (int n = 1; n <= 4; ++n) {
    oracle::Poly dist;
    for (const auto& w : SignedPermutation::all(n)) {
      const auto len = static_cast<std::size_t>(w.length());
      if (dist.size() <= len) dist.resize(len + 1, 0);
      ++dist[len];
      const Permutation u = w.to_embedded();
      CHECK(SignedPermutation::from_embedded(u) == w);
      const int m = 2 * n + 1;
      for (int i = 1; i <= 2 * n; ++i) CHECK(u(m - i) == m - u(i));
    }
    CHECK(dist == oracle::type_c_poincare(n));
  }
  CHECK_THROWS_AS(SignedPermutation::from_embedded(P("2,1,3,4")), UsageError);
}

TEST_CASE("signed bruhat order is graded by type C length") {
  const auto b3 = SignedPermutation::all(3);
  const SignedPermutation id({1, 2, 3}), top({-1, -2, -3});
  for (const auto& y : b3) {
    CHECK(bruhat_leq(id, y));
    CHECK(bruhat_leq(y, top));
    for (const auto& w : b3) {
      if (!(y == w) && bruhat_leq(y, w)) CHECK(y.length() < w.length());
    }
  }
}

TEST_CASE("signed bruhat order matches the type C subword oracle on B_2 and B_3") {
  for (int n = 2; n <= 3; ++n) {
    const auto elems = SignedPermutation::all(n);
    std::size_t mismatches = 0;
    for (const auto& w : elems) {
      CHECK(w.length() == oracle::signed_length({w.window().begin(), w.window().end()}));
      const auto interval = oracle::signed_subword_interval({w.window().begin(), w.window().end()});
      for (const auto& y : elems) {
        if (bruhat_leq(y, w) != (interval.count({y.window().begin(), y.window().end()}) > 0)) ++mismatches;
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("random S_6 pairs against the subword oracle") {
  const auto elems = all_of(6);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::size_t mismatches = 0;
  for (int s = 0; s < 2000; ++s) {
    const auto& y = elems[pick(rng)];
    const auto& w = elems[pick(rng)];
    const auto interval = oracle::subword_interval({w.window().begin(), w.window().end()});
    if (bruhat_leq(y, w) != (interval.count({y.window().begin(), y.window().end()}) > 0)) ++mismatches;
  }
  CHECK(mismatches == 0);
}
