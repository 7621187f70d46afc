#include "pbwdeg/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pbwdeg/error.hpp"

namespace pbwdeg {

namespace {

// k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  if (k > n) return out;
  for (;;) {
    out.push_back(pick);
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small, int except) {
  for (int v : small) {
    if (v == except) continue;
    if (!std::binary_search(big.begin(), big.end(), v)) return false;
  }
  return true;
}

void extend_fixed_points(const PBWShape& shape, const std::vector<std::vector<std::vector<int>>>& by_size,
                         CoordinateSubspaceTuple& current, std::vector<CoordinateSubspaceTuple>& out) {
  const int i = static_cast<int>(current.size());
  if (i == shape.n() - 1) {
    out.push_back(current);
    return;
  }
  // pr_{b_i,0} kills e_{b_i}: S_i \ {b_i} must lie in S_{i+1}.
  const int killed = shape.b(i);
  for (const auto& next : by_size[static_cast<std::size_t>(i + 1)]) {
    if (!contains_all(next, current.back(), killed)) continue;
    current.push_back(next);
    extend_fixed_points(shape, by_size, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<std::vector<int>>> subsets_by_size(int n) {
  std::vector<std::vector<std::vector<int>>> by_size(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) by_size[static_cast<std::size_t>(k)] = subsets(n, k);
  return by_size;
}

RationalSubspace pad(const RationalSubspace& u, std::size_t ambient) {
  Matrix rows;
  for (auto row : u.basis()) {
    row.resize(ambient, 0);
    rows.push_back(std::move(row));
  }
  return RationalSubspace::span(ambient, std::move(rows));
}

}  // namespace

PBWShape PBWShape::from_j(int n, std::vector<int> j) {
  if (j.empty()) throw UsageError("j must be nonempty (r >= 1)");
  if (j.front() < 1 || j.back() > n - 2) {
    throw UsageError("j entries must lie in [1, n-2] for n = " + std::to_string(n));
  }
  for (std::size_t z = 1; z < j.size(); ++z) {
    if (j[z] <= j[z - 1]) throw UsageError("j must be strictly increasing");
  }
  PBWShape s;
  s.n_ = n;
  s.j_ = std::move(j);
  s.b_.assign(static_cast<std::size_t>(n - 1), 0);
  for (std::size_t z = 0; z < s.j_.size(); ++z) s.b_[static_cast<std::size_t>(s.j_[z] - 1)] = static_cast<int>(z) + 1;
  s.ell_.push_back(1);
  for (int i = 2; i <= n - 1; ++i) {
    auto below = std::count_if(s.j_.begin(), s.j_.end(), [i](int jz) { return jz < i; });
    s.ell_.push_back(static_cast<int>(below) + i);
  }
  return s;
}

std::vector<PBWShape> PBWShape::all(int n) {
  std::vector<PBWShape> out;
  for (int r = 1; r <= n - 2; ++r) {
    for (auto& j : subsets(n - 2, r)) out.push_back(from_j(n, std::move(j)));
  }
  return out;
}

FlagShape PBWShape::ell_shape() const { return FlagShape(ell_, ambient()); }

std::string PBWShape::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " j=(";
  for (std::size_t z = 0; z < j_.size(); ++z) os << (z ? "," : "") << j_[z];
  os << ")";
  return os.str();
}

Matrix pr_matrix(int index, const Rational& t, int n) {
  if (index < 0 || index > n) throw UsageError("pr index out of range");
  Matrix m = identity_matrix(static_cast<std::size_t>(n));
  if (index > 0) m[static_cast<std::size_t>(index - 1)][static_cast<std::size_t>(index - 1)] = t;
  return m;
}

RationalSubspace pr(int index, const Rational& t, const RationalSubspace& u) {
  return u.image(pr_matrix(index, t, static_cast<int>(u.ambient())));
}

DegenerationPoint coordinate_point(const CoordinateSubspaceTuple& sets, int n, const Rational& t) {
  DegenerationPoint p;
  p.t = t;
  for (const auto& s : sets) p.spaces.push_back(RationalSubspace::coordinate(static_cast<std::size_t>(n), s));
  return p;
}

bool is_member(const DegenerationPoint& point, const PBWShape& shape) {
  const int n = shape.n();
  if (static_cast<int>(point.spaces.size()) != n - 1) throw UsageError("point must have n-1 spaces");
  for (int i = 1; i <= n - 1; ++i) {
    const auto& v = point.spaces[static_cast<std::size_t>(i - 1)];
    if (v.ambient() != static_cast<std::size_t>(n) || v.dim() != static_cast<std::size_t>(i)) {
      throw UsageError("space " + std::to_string(i) + " has the wrong dimension");
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    if (!point.spaces[static_cast<std::size_t>(i)].contains(
            pr(shape.b(i), point.t, point.spaces[static_cast<std::size_t>(i - 1)]))) {
      return false;
    }
  }
  return true;
}

bool is_nested(std::span<const RationalSubspace> spaces) {
  for (std::size_t i = 1; i < spaces.size(); ++i) {
    if (!spaces[i].contains(spaces[i - 1])) return false;
  }
  return true;
}

std::vector<CoordinateSubspaceTuple> fixed_points(const PBWShape& shape) {
  const auto by_size = subsets_by_size(shape.n());
  std::vector<CoordinateSubspaceTuple> out;
  for (const auto& first : by_size[1]) {
    CoordinateSubspaceTuple current{first};
    extend_fixed_points(shape, by_size, current, out);
  }
  return out;
}

std::vector<CoordinateSubspaceTuple> fixed_points_parallel(const PBWShape& shape) {
  const auto by_size = subsets_by_size(shape.n());
  const auto& firsts = by_size[1];
  std::vector<std::vector<CoordinateSubspaceTuple>> parts(firsts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t a = 0; a < firsts.size(); ++a) {
    CoordinateSubspaceTuple current{firsts[a]};
    extend_fixed_points(shape, by_size, current, parts[a]);
  }
  std::vector<CoordinateSubspaceTuple> out;
  for (auto& part : parts) out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return out;
}

PiMap pi_map(int i, const PBWShape& shape, PiConvention convention) {
  const int n = shape.n();
  if (i < 1 || i > n - 1) throw UsageError("pi_map index out of range");
  const int shift = shape.ell(i) - i;
  const int kernel = convention == PiConvention::Corrected ? shift : shift - 1;
  PiMap map;
  map.domain = n + shift;
  map.matrix.assign(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(map.domain), 0));
  for (int k = 1; k <= map.domain; ++k) {
    if (k <= kernel) continue;
    int target = k <= n ? k : k - n;
    map.matrix[static_cast<std::size_t>(target - 1)][static_cast<std::size_t>(k - 1)] = 1;
  }
  return map;
}

std::vector<RationalSubspace> zeta(const DegenerationPoint& point, const PBWShape& shape, PiConvention convention) {
  if (sgn(point.t) != 0 || !is_member(point, shape)) {
    throw UsageError("zeta needs a member of the t = 0 fibre");
  }
  const auto ambient = static_cast<std::size_t>(shape.ambient());
  std::vector<RationalSubspace> out;
  for (int i = 1; i <= shape.n() - 1; ++i) {
    PiMap map = pi_map(i, shape, convention);
    RationalSubspace pre = RationalSubspace::preimage(map.matrix, point.spaces[static_cast<std::size_t>(i - 1)],
                                                      static_cast<std::size_t>(map.domain));
    if (pre.dim() != static_cast<std::size_t>(shape.ell(i))) {
      throw std::logic_error("zeta: preimage of member " + std::to_string(i) + " has dimension " +
                             std::to_string(pre.dim()) + ", expected " + std::to_string(shape.ell(i)));
    }
    out.push_back(pad(pre, ambient));
  }
  return out;
}

CoordinateSubspaceTuple zeta_coordinates(const CoordinateSubspaceTuple& sets, const PBWShape& shape,
                                         PiConvention convention) {
  CoordinateSubspaceTuple out;
  for (const auto& member : zeta(coordinate_point(sets, shape.n(), 0), shape, convention)) {
    auto support = member.coordinate_support();
    if (!support) throw std::logic_error("zeta of a coordinate point is not coordinate: " + member.to_string());
    out.push_back(std::move(*support));
  }
  return out;
}

Permutation flag_position(std::span<const RationalSubspace> members, const FlagShape& shape) {
  if (static_cast<int>(members.size()) != shape.members()) throw UsageError("flag_position: member count");
  const auto n = static_cast<std::size_t>(shape.ambient());
  std::vector<std::vector<int>> entries;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].ambient() != n || members[i].dim() != static_cast<std::size_t>(shape.dims()[i])) {
      throw UsageError("flag_position: member " + std::to_string(i + 1) + " has the wrong dimension");
    }
    std::vector<int> row;
    for (std::size_t k = 0; k <= n; ++k) row.push_back(static_cast<int>(members[i].dim_meet_prefix(k)));
    entries.push_back(std::move(row));
  }
  if (!is_nested(members)) throw UsageError("flag_position: members are not nested");
  RankTable table(std::move(entries), shape);
  std::vector<std::vector<int>> sets;
  for (int i = 1; i <= shape.members(); ++i) sets.push_back(table.jumps(i));
  return coset_rep_of_coordinate_flag(sets, shape);
}

DegenerationCells derive_cells(const PBWShape& shape) {
  const FlagShape target = shape.ell_shape();
  const auto fps = fixed_points_parallel(shape);
  DegenerationCells cells;
  cells.fixed_point_count = fps.size();
  for (const auto& fp : fps) {
    auto image = zeta(coordinate_point(fp, shape.n(), 0), shape);
    cells.positions.push_back(flag_position(image, target));
  }
  std::sort(cells.positions.begin(), cells.positions.end());
  if (std::adjacent_find(cells.positions.begin(), cells.positions.end()) != cells.positions.end()) {
    throw Falsified(shape.to_string() + ": two fixed points map to the same cell");
  }
  const Permutation* top = &cells.positions.front();
  for (const auto& y : cells.positions) {
    if (y.length() > top->length()) top = &y;
  }
  for (const auto& y : cells.positions) {
    if (!bruhat_leq(y, *top)) {
      throw Falsified(shape.to_string() + ": fixed-point cells have no unique Bruhat maximum");
    }
  }
  cells.w = *top;
  std::vector<Permutation> interval;
  for (const auto& level : bruhat_interval(cells.w, target)) interval.insert(interval.end(), level.begin(), level.end());
  std::sort(interval.begin(), interval.end());
  if (interval != cells.positions) {
    throw Falsified(shape.to_string() + ": fixed-point cells are not the interval below " + cells.w.to_string());
  }
  return cells;
}

Permutation derive_w_j(const PBWShape& shape) { return derive_cells(shape).w; }

std::vector<long long> poincare_polynomial_of_y(const PBWShape& shape) {
  std::vector<long long> out;
  for (const auto& level : bruhat_interval(derive_w_j(shape), shape.ell_shape())) {
    out.push_back(static_cast<long long>(level.size()));
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  auto num = static_cast<long>(rng() % 19) - 9;
  auto den = static_cast<long>(rng() % 9) + 1;
  return fraction(num, den);
}

RationalSubspace random_subspace(const RationalSubspace& inside, std::size_t dim, std::mt19937_64& rng) {
  if (dim > inside.dim()) throw UsageError("random_subspace: dimension exceeds the container");
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix rows;
    for (std::size_t k = 0; k < dim; ++k) {
      Vector v(inside.ambient(), 0);
      for (const auto& b : inside.basis()) {
        Rational c = random_rational(rng);
        for (std::size_t x = 0; x < v.size(); ++x) v[x] += c * b[x];
      }
      rows.push_back(std::move(v));
    }
    auto s = RationalSubspace::span(inside.ambient(), std::move(rows));
    if (s.dim() == dim) return s;
  }
  throw std::logic_error("random_subspace: no independent sample");
}

DegenerationPoint sample_member(const PBWShape& shape, const Rational& t, std::mt19937_64& rng) {
  const int n = shape.n();
  DegenerationPoint p;
  p.t = t;
  p.spaces.resize(static_cast<std::size_t>(n - 1));
  p.spaces.back() = random_subspace(RationalSubspace::whole(static_cast<std::size_t>(n)),
                                    static_cast<std::size_t>(n - 1), rng);
  for (int i = n - 2; i >= 1; --i) {
    auto room = RationalSubspace::preimage(pr_matrix(shape.b(i), t, n), p.spaces[static_cast<std::size_t>(i)],
                                           static_cast<std::size_t>(n));
    p.spaces[static_cast<std::size_t>(i - 1)] = random_subspace(room, static_cast<std::size_t>(i), rng);
  }
  return p;
}

std::vector<RationalSubspace> trivialise(const DegenerationPoint& point, const PBWShape& shape) {
  if (sgn(point.t) == 0) throw UsageError("trivialise needs t != 0");
  const int n = shape.n();
  std::vector<RationalSubspace> out;
  for (int k = 1; k <= n - 1; ++k) {
    RationalSubspace w = point.spaces[static_cast<std::size_t>(k - 1)];
    for (int m = k - 1; m >= 1; --m) {
      w = RationalSubspace::preimage(pr_matrix(shape.b(m), point.t, n), w, static_cast<std::size_t>(n));
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace pbwdeg
