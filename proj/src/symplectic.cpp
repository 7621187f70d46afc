#include "pbwdeg/symplectic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pbwdeg/error.hpp"

namespace pbwdeg {

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k - 1); }

std::vector<int> range_1(int k) {
  std::vector<int> out;
  for (int a = 1; a <= k; ++a) out.push_back(a);
  return out;
}

// k-subsets of {1..m}, lexicographic.
std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick = range_1(k);
  for (;;) {
    out.push_back(pick);
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == m - k + pos + 1) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small, int except) {
  return std::all_of(small.begin(), small.end(), [&](int v) {
    return v == except || std::binary_search(big.begin(), big.end(), v);
  });
}

// Coordinate perp under v_form: indices whose partner is outside s.
std::vector<int> coordinate_perp(const std::vector<int>& s, int n) {
  std::vector<int> out;
  for (int k = 1; k <= 2 * n; ++k) {
    if (!std::binary_search(s.begin(), s.end(), v_partner(k, n))) out.push_back(k);
  }
  return out;
}

CoordinateSubspaceTuple complete_sets(const CoordinateSubspaceTuple& half, int n) {
  CoordinateSubspaceTuple full = half;
  for (int i = n + 1; i <= 2 * n - 1; ++i) full.push_back(coordinate_perp(half[idx(2 * n - i)], n));
  return full;
}

Rational nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Rational q = random_rational(rng);
    if (sgn(q) != 0) return q;
  }
}

void check_n(int n) {
  if (n < 2) throw UsageError("symplectic layer needs n >= 2");
}

}  // namespace

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  for (const auto& row : gram_) {
    if (row.size() != gram_.size()) throw UsageError("Gram matrix must be square");
  }
}

Rational BilinearForm::operator()(const Vector& u, const Vector& w) const {
  if (u.size() != dim() || w.size() != dim()) throw UsageError("form argument of the wrong length");
  Rational s = 0;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (sgn(u[a]) == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b) s += u[a] * gram_[a][b] * w[b];
  }
  return s;
}

bool BilinearForm::is_skew() const {
  for (std::size_t a = 0; a < dim(); ++a) {
    for (std::size_t b = 0; b < dim(); ++b) {
      if (gram_[a][b] + gram_[b][a] != 0) return false;
    }
  }
  return true;
}

bool BilinearForm::is_nondegenerate() const { return sgn(determinant(gram_)) != 0; }

BilinearForm w_form(int n) {
  if (n < 1) throw UsageError("w_form needs n >= 1");
  const auto m = static_cast<std::size_t>(2 * n);
  Matrix g(m, Vector(m, 0));
  for (int k = 1; k <= n; ++k) {
    g[idx(k)][idx(2 * n + 1 - k)] = 1;
    g[idx(2 * n + 1 - k)][idx(k)] = -1;
  }
  return BilinearForm(std::move(g));
}

int v_partner(int k, int n) {
  if (k < 1 || k > 2 * n) throw UsageError("v_partner index out of range");
  if (k <= 2 * n - 2) return 2 * n - 1 - k;
  return k == 2 * n - 1 ? 2 * n : 2 * n - 1;
}

BilinearForm v_form(int n, PairingSigns signs) {
  if (n < 1) throw UsageError("v_form needs n >= 1");
  const auto m = static_cast<std::size_t>(2 * n);
  Matrix g(m, Vector(m, 0));
  for (int k = 1; k <= n - 1; ++k) {
    g[idx(k)][idx(2 * n - 1 - k)] = 1;
    g[idx(2 * n - 1 - k)][idx(k)] = -1;
  }
  const int last = signs == PairingSigns::Standard ? 1 : -1;
  g[idx(2 * n - 1)][idx(2 * n)] = last;
  g[idx(2 * n)][idx(2 * n - 1)] = -last;
  return BilinearForm(std::move(g));
}

RationalSubspace perp(const RationalSubspace& u, const BilinearForm& form) {
  if (u.ambient() != form.dim()) throw UsageError("perp: ambient dimension mismatch");
  Matrix rows;
  for (const auto& v : u.basis()) {
    Vector row(form.dim(), 0);
    for (std::size_t a = 0; a < form.dim(); ++a) {
      if (sgn(v[a]) == 0) continue;
      for (std::size_t b = 0; b < form.dim(); ++b) row[b] += v[a] * form.gram()[a][b];
    }
    rows.push_back(std::move(row));
  }
  return RationalSubspace::span(form.dim(), nullspace(rows, form.dim()));
}

std::vector<RationalSubspace> iota(std::span<const RationalSubspace> chain, const BilinearForm& form) {
  std::vector<RationalSubspace> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back(perp(*it, form));
  return out;
}

DegenerationPoint iota_t(const DegenerationPoint& point, const BilinearForm& form) {
  return {iota(point.spaces, form), point.t};
}

PBWShape sp_type_a_shape(int n) {
  check_n(n);
  return PBWShape::from_j(2 * n, range_1(2 * n - 2));
}

DegenerationPoint sp_complete(const SymplecticPoint& point, const BilinearForm& form) {
  const int n = static_cast<int>(point.spaces.size());
  DegenerationPoint p;
  p.t = point.t;
  p.spaces = point.spaces;
  for (int i = n + 1; i <= 2 * n - 1; ++i) p.spaces.push_back(perp(point.spaces[idx(2 * n - i)], form));
  return p;
}

bool sp_is_member(const SymplecticPoint& point, const BilinearForm& form) {
  const int n = static_cast<int>(point.spaces.size());
  check_n(n);
  if (form.dim() != static_cast<std::size_t>(2 * n)) throw UsageError("form does not match the point");
  for (int i = 1; i <= n; ++i) {
    const auto& v = point.spaces[idx(i)];
    if (v.ambient() != form.dim() || v.dim() != static_cast<std::size_t>(i)) {
      throw UsageError("space " + std::to_string(i) + " has the wrong dimension");
    }
  }
  if (!(perp(point.spaces.back(), form) == point.spaces.back())) return false;
  return is_member(sp_complete(point, form), sp_type_a_shape(n));
}

bool sp_is_member(const SymplecticPoint& point) {
  return sp_is_member(point, v_form(static_cast<int>(point.spaces.size())));
}

std::vector<CoordinateSubspaceTuple> sp_fixed_points(int n, const Rational& t) {
  check_n(n);
  const PBWShape shape = sp_type_a_shape(n);
  const BilinearForm form = v_form(n);
  const bool degenerate = sgn(t) == 0;
  std::vector<std::vector<std::vector<int>>> by_size(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) by_size[static_cast<std::size_t>(k)] = subsets(2 * n, k);

  std::vector<CoordinateSubspaceTuple> out;
  CoordinateSubspaceTuple current;
  auto extend = [&](auto&& self) -> void {
    const int i = static_cast<int>(current.size());
    if (i == n) {
      const auto& top = current.back();
      for (int v : top) {
        if (std::binary_search(top.begin(), top.end(), v_partner(v, n))) return;
      }
      SymplecticPoint p{coordinate_point(current, 2 * n, t).spaces, t};
      if (sp_is_member(p, form)) out.push_back(current);
      return;
    }
    for (const auto& next : by_size[static_cast<std::size_t>(i + 1)]) {
      if (i > 0 && !contains_all(next, current.back(), degenerate ? shape.b(i) : 0)) continue;
      current.push_back(next);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

SymplecticPoint sp_sample_member(int n, const Rational& t, std::mt19937_64& rng, PairingSigns signs) {
  check_n(n);
  const BilinearForm form = v_form(n, signs);
  const auto m = static_cast<std::size_t>(2 * n);
  RationalSubspace lagrangian(m);
  while (lagrangian.dim() < static_cast<std::size_t>(n)) {
    const RationalSubspace room = perp(lagrangian, form);
    Vector v(m, 0);
    for (const auto& b : room.basis()) {
      Rational c = random_rational(rng);
      for (std::size_t x = 0; x < m; ++x) v[x] += c * b[x];
    }
    if (lagrangian.contains(v)) continue;
    lagrangian = lagrangian + RationalSubspace::span(m, {v});
  }
  SymplecticPoint p;
  p.t = t;
  p.spaces.resize(static_cast<std::size_t>(n));
  p.spaces.back() = lagrangian;
  for (int i = n - 1; i >= 1; --i) {
    auto room = RationalSubspace::preimage(pr_matrix(i, t, 2 * n), p.spaces[idx(i + 1)], m);
    p.spaces[idx(i)] = random_subspace(room, static_cast<std::size_t>(i), rng);
  }
  return p;
}

FFlagCurve f_flag_curve(int i, int n) {
  check_n(n);
  if (i < 1 || i > n) throw UsageError("curve index out of range");
  FFlagCurve c;
  c.index = i;
  c.n = n;
  for (int k = 1; k <= n - 1; ++k) c.start.push_back(range_1(k));
  auto top = range_1(n - 1);
  top.push_back(2 * n - 1);
  c.start.push_back(top);
  if (i <= n - 2) {
    c.from = i;
    c.to = i + 1;
  } else if (i == n - 1) {
    c.from = n - 1;
    c.to = 2 * n - 1;
  } else {
    c.from = 2 * n - 1;
    c.to = 2 * n;
  }
  c.end = c.start;
  auto moved = range_1(i - 1);
  moved.push_back(c.to);
  c.end[idx(i)] = moved;
  return c;
}

SymplecticPoint FFlagCurve::point(const Rational& a1, const Rational& a2, const Rational& t) const {
  if (sgn(a1) == 0 && sgn(a2) == 0) throw UsageError("curve parameter (0:0)");
  const auto m = static_cast<std::size_t>(2 * n);
  SymplecticPoint p{coordinate_point(start, 2 * n, t).spaces, t};
  Matrix rows = RationalSubspace::coordinate(m, range_1(index - 1)).basis();
  Vector line(m, 0);
  line[idx(from)] = a1;
  line[idx(to)] = a2;
  rows.push_back(std::move(line));
  p.spaces[idx(index)] = RationalSubspace::span(m, std::move(rows));
  return p;
}

BilinearForm induced_form(int n) {
  const PBWShape shape = sp_type_a_shape(n);
  const BilinearForm bv = v_form(n);
  const int big = shape.ambient();
  std::map<std::pair<int, int>, Rational> seen;
  auto column = [](const PiMap& map, int a) {
    Vector v;
    for (const auto& row : map.matrix) v.push_back(row[idx(a)]);
    return v;
  };
  auto is_zero = [](const Vector& v) { return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; }); };
  for (int k = 1; k <= 2 * n - 1; ++k) {
    const PiMap left = pi_map(k, shape), right = pi_map(2 * n - k, shape);
    for (int a = 1; a <= left.domain; ++a) {
      const Vector u = column(left, a);
      if (is_zero(u)) continue;
      for (int b = 1; b <= right.domain; ++b) {
        const Vector w = column(right, b);
        if (is_zero(w)) continue;
        const Rational value = bv(u, w);
        auto [it, fresh] = seen.emplace(std::pair{a, b}, value);
        if (!fresh && it->second != value) {
          throw std::logic_error("induced form: pullbacks disagree at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
      }
    }
  }
  Matrix g(static_cast<std::size_t>(big), Vector(static_cast<std::size_t>(big), 0));
  for (const auto& [key, value] : seen) {
    if (sgn(value) == 0) continue;
    if (key.first + key.second != big + 1) throw std::logic_error("induced form is not antidiagonal");
    g[idx(key.first)][idx(key.second)] = value;
  }
  BilinearForm form(std::move(g));
  if (!form.is_skew() || !form.is_nondegenerate()) throw std::logic_error("induced form is not symplectic");
  return form;
}

SymplecticVerdict sp_verify_surjectivity(int n, int samples, std::uint64_t seed) {
  SymplecticVerdict v;
  v.n = n;
  v.shape = sp_type_a_shape(n);
  const BilinearForm form = v_form(n);
  const int big = v.shape.ambient();
  v.fixed_point_count = sp_fixed_points(n, 0).size();
  v.generic_fixed_point_count = sp_fixed_points(n, 1).size();

  std::mt19937_64 rng(seed);
  const std::vector<Rational> fibres = {Rational(0), Rational(1), fraction(5, 7), Rational(-2)};
  v.curves_in_fibres = true;
  for (int i = 1; i <= n; ++i) {
    const FFlagCurve curve = f_flag_curve(i, n);
    for (const auto& t : fibres) {
      std::vector<std::pair<Rational, Rational>> params = {{1, 0}, {0, 1}};
      for (int s = 0; s < samples; ++s) params.emplace_back(nonzero_rational(rng), nonzero_rational(rng));
      for (const auto& [a1, a2] : params) {
        if (!sp_is_member(curve.point(a1, a2, t), form)) {
          v.curves_in_fibres = false;
          v.failures.push_back("sp n=" + std::to_string(n) + ": curve " + std::to_string(i) +
                               " leaves the fibre over t = " + t.get_str());
          break;
        }
      }
    }
  }

  v.g2 = IntegerMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  try {
    for (int i = 1; i <= n; ++i) {
      const FFlagCurve curve = f_flag_curve(i, n);
      auto image = [&](const Rational& a1, const Rational& a2) {
        return zeta(sp_complete(curve.point(a1, a2, 0), form), v.shape);
      };
      auto torus = [&](std::mt19937_64& g) {
        std::vector<Rational> mu(static_cast<std::size_t>(big));
        for (int a = 1; a <= big / 2; ++a) {
          mu[idx(a)] = nonzero_rational(g);
          mu[idx(big + 1 - a)] = 1 / mu[idx(a)];
        }
        return mu;
      };
      const MovingLine line = torus_curve_line(image, torus, rng);
      Weight w(static_cast<std::size_t>(big), 0);
      w[idx(line.from)] += 1;
      w[idx(line.to)] -= 1;
      v.characters.push_back(w);

      const auto start = zeta_coordinates(complete_sets(curve.start, n), v.shape);
      const auto end = zeta_coordinates(complete_sets(curve.end, n), v.shape);
      std::vector<std::int64_t> degrees;
      for (std::size_t k = 0; k < start.size(); ++k) {
        std::vector<int> lost;
        std::set_difference(start[k].begin(), start[k].end(), end[k].begin(), end[k].end(), std::back_inserter(lost));
        if (lost.size() > 1) throw Falsified("sp curve " + std::to_string(i) + " moves more than one line in a member");
        degrees.push_back(static_cast<std::int64_t>(lost.size()));
      }
      for (int k = 1; k <= n; ++k) {
        const auto& s = start[idx(k)];
        const bool rule = std::binary_search(s.begin(), s.end(), line.from) !=
                          std::binary_search(s.begin(), s.end(), line.to);
        if ((degrees[idx(k)] == 1) != rule) {
          throw Falsified("sp curve " + std::to_string(i) + ": degree rule and member-change rule disagree");
        }
        if (degrees[idx(k)] != degrees[idx(2 * n - k)]) {
          throw Falsified("sp curve " + std::to_string(i) + ": class vector is not iota-symmetric");
        }
        v.g2(idx(k), idx(i)) = degrees[idx(k)];
      }
    }
    v.characters_distinct = std::set<Weight>(v.characters.begin(), v.characters.end()).size() == v.characters.size();
    v.snf = smith_normal_form(v.g2);
    v.split_injective = v.snf.split_injective(v.g2.cols());
  } catch (const Falsified& e) {
    v.failures.emplace_back(e.what());
  }
  return v;
}

bool check_commuting_diagram(int n, int samples, std::uint64_t seed) {
  const PBWShape shape = sp_type_a_shape(n);
  const BilinearForm form = v_form(n);
  const BilinearForm ambient = induced_form(n);
  auto commutes = [&](const DegenerationPoint& p) {
    return zeta(iota_t(p, form), shape) == iota(zeta(p, shape), ambient);
  };
  for (const auto& sets : sp_fixed_points(n, 0)) {
    if (!commutes(coordinate_point(complete_sets(sets, n), 2 * n, 0))) return false;
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    if (!commutes(sp_complete(sp_sample_member(n, 0, rng), form))) return false;
  }
  return true;
}

bool check_commuting_diagram_type_a(int n, int samples, std::uint64_t seed, const BilinearForm& ambient) {
  const PBWShape shape = sp_type_a_shape(n);
  const BilinearForm form = v_form(n);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const DegenerationPoint p = sample_member(shape, 0, rng);
    const DegenerationPoint q = iota_t(p, form);
    if (!is_member(q, shape)) return false;
    if (!(zeta(q, shape) == iota(zeta(p, shape), ambient))) return false;
  }
  return true;
}

}  // namespace pbwdeg
