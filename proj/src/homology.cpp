#include "pbwdeg/homology.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "pbwdeg/coinvariant.hpp"
#include "pbwdeg/error.hpp"

namespace pbwdeg {

namespace {

Rational nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Rational q = random_rational(rng);
    if (sgn(q) != 0) return q;
  }
}

Matrix diagonal(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), Vector(entries.size(), 0));
  for (std::size_t k = 0; k < entries.size(); ++k) m[k][k] = entries[k];
  return m;
}

std::vector<int> first_n(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = k + 1;
  return out;
}

std::string weight_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + ")";
}

}  // namespace

DegenerationPoint CurveDatum::point(const Rational& a1, const Rational& a2, const Rational& t) const {
  if (sgn(a1) == 0 && sgn(a2) == 0) throw UsageError("curve parameter (0:0)");
  DegenerationPoint p = coordinate_point(start, n, t);
  Matrix rows = RationalSubspace::coordinate(static_cast<std::size_t>(n), first_n(index - 1)).basis();
  Vector line(static_cast<std::size_t>(n), 0);
  line[static_cast<std::size_t>(index - 1)] = a1;
  line[static_cast<std::size_t>(index)] = a2;
  rows.push_back(std::move(line));
  p.spaces[static_cast<std::size_t>(index - 1)] = RationalSubspace::span(static_cast<std::size_t>(n), std::move(rows));
  return p;
}

CurveDatum schubert_curve(int i, int n) {
  if (i < 1 || i > n - 1) throw UsageError("curve index out of range");
  CurveDatum c;
  c.index = i;
  c.n = n;
  for (int k = 1; k <= n - 1; ++k) c.start.push_back(first_n(k));
  c.end = c.start;
  auto& moved = c.end[static_cast<std::size_t>(i - 1)];
  moved.back() = i + 1;
  c.moving_member = i;
  c.character.assign(static_cast<std::size_t>(n), 0);
  c.character[static_cast<std::size_t>(i - 1)] = 1;
  c.character[static_cast<std::size_t>(i)] = -1;
  return c;
}

bool curve_in_fiber(int i, const PBWShape& shape, const Rational& t, int samples, std::uint64_t seed) {
  const CurveDatum curve = schubert_curve(i, shape.n());
  if (!is_member(coordinate_point(curve.start, shape.n(), t), shape)) return false;
  if (!is_member(coordinate_point(curve.end, shape.n(), t), shape)) return false;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Rational a1 = random_rational(rng), a2 = random_rational(rng);
    if (sgn(a1) == 0 && sgn(a2) == 0) a1 = 1;
    if (!is_member(curve.point(a1, a2, t), shape)) return false;
  }
  return true;
}

MovingLine torus_curve_line(const std::function<std::vector<RationalSubspace>(const Rational&, const Rational&)>& image,
                            const std::function<std::vector<Rational>(std::mt19937_64&)>& torus,
                            std::mt19937_64& rng, int samples) {
  const auto generic = image(nonzero_rational(rng), nonzero_rational(rng));
  MovingLine line;
  for (const auto& member : generic) {
    int moving_rows = 0;
    for (const auto& row : member.basis()) {
      std::vector<int> support;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (sgn(row[c]) != 0) support.push_back(static_cast<int>(c) + 1);
      }
      if (support.size() == 1) continue;
      if (support.size() != 2) throw Falsified("moving line is not supported on two coordinates: " + member.to_string());
      ++moving_rows;
      line = {support[0], support[1]};
    }
    if (moving_rows > 1) throw Falsified("more than one moving line in a member: " + member.to_string());
    if (moving_rows == 1) break;
  }
  if (line.from == 0) throw Falsified("curve image is torus-fixed (contracted curve)");

  for (int s = 0; s < samples; ++s) {
    Rational a1 = nonzero_rational(rng), a2 = nonzero_rational(rng);
    const auto mu = torus(rng);
    const Matrix act = diagonal(mu);
    const auto moved = image(a1, a2);
    const auto expected = image(mu[static_cast<std::size_t>(line.from - 1)] * a1,
                                mu[static_cast<std::size_t>(line.to - 1)] * a2);
    for (std::size_t k = 0; k < moved.size(); ++k) {
      if (!(moved[k].image(act) == expected[k])) {
        throw Falsified("torus does not act on the curve through the character of (" + std::to_string(line.from) +
                        "," + std::to_string(line.to) + ")");
      }
    }
  }
  return line;
}

namespace {

MovingLine type_a_line(int i, const PBWShape& shape, std::uint64_t seed) {
  const CurveDatum curve = schubert_curve(i, shape.n());
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
  auto image = [&](const Rational& a1, const Rational& a2) { return zeta(curve.point(a1, a2, 0), shape); };
  auto torus = [&](std::mt19937_64& g) {
    std::vector<Rational> mu;
    for (int k = 0; k < shape.ambient(); ++k) mu.push_back(nonzero_rational(g));
    return mu;
  };
  return torus_curve_line(image, torus, rng);
}

}  // namespace

Weight curve_character(int i, const PBWShape& shape, std::uint64_t seed) {
  const MovingLine line = type_a_line(i, shape, seed);
  Weight w(static_cast<std::size_t>(shape.ambient()), 0);
  w[static_cast<std::size_t>(line.from - 1)] += 1;
  w[static_cast<std::size_t>(line.to - 1)] -= 1;
  if (line.from != i || line.to != i + 1) {
    throw Falsified(shape.to_string() + ": curve " + std::to_string(i) + " has character " + weight_string(w) +
                    ", expected eps_" + std::to_string(i) + " - eps_" + std::to_string(i + 1));
  }
  return w;
}

std::vector<std::int64_t> curve_class_vector(int i, const PBWShape& shape) {
  const Weight w = curve_character(i, shape);
  const CurveDatum curve = schubert_curve(i, shape.n());
  const auto start = zeta_coordinates(curve.start, shape);
  const auto end = zeta_coordinates(curve.end, shape);
  const int p = i, q = i + 1;
  std::vector<std::int64_t> out;
  bool any = false;
  for (std::size_t k = 0; k < start.size(); ++k) {
    const auto& s = start[k];
    bool has_p = std::binary_search(s.begin(), s.end(), p);
    bool has_q = std::binary_search(s.begin(), s.end(), q);
    std::int64_t degree = has_p != has_q ? 1 : 0;
    if ((degree == 1) != (start[k] != end[k])) {
      throw Falsified(shape.to_string() + ": degree rule and member-change rule disagree for curve " +
                      std::to_string(i));
    }
    any = any || degree != 0;
    out.push_back(degree);
  }
  if (!any) throw Falsified(shape.to_string() + ": curve " + std::to_string(i) + " has zero class");
  return out;
}

IntegerMatrix g2_matrix(const PBWShape& shape) {
  const Permutation w = derive_w_j(shape);
  const int members = shape.n() - 1;
  for (int k = 1; k <= members; ++k) {
    if (!bruhat_leq(Permutation::simple(shape.ell(k), shape.ambient()), w)) {
      throw Falsified(shape.to_string() + ": s_" + std::to_string(shape.ell(k)) + " is not below w_j = " +
                      w.to_string());
    }
  }
  IntegerMatrix g(static_cast<std::size_t>(members), static_cast<std::size_t>(members));
  for (int i = 1; i <= members; ++i) {
    auto column = curve_class_vector(i, shape);
    for (int k = 0; k < members; ++k) g(static_cast<std::size_t>(k), static_cast<std::size_t>(i - 1)) = column[static_cast<std::size_t>(k)];
  }
  return g;
}

SurjectivityVerdict verify_surjectivity(const PBWShape& shape) {
  SurjectivityVerdict v;
  v.g2 = g2_matrix(shape);
  v.snf = smith_normal_form(v.g2);
  v.split_injective = v.snf.split_injective(v.g2.cols());
  return v;
}

EquivariantVerdict equivariant_verdict(const PBWShape& shape, int samples, std::uint64_t seed) {
  EquivariantVerdict v;
  const int n = shape.n();
  for (int i = 1; i <= n - 1; ++i) v.characters.push_back(curve_character(i, shape, seed));
  v.characters_distinct = std::set<Weight>(v.characters.begin(), v.characters.end()).size() == v.characters.size();

  v.torus_stable = true;
  std::mt19937_64 rng(seed);
  for (int i = 1; i <= n - 1 && v.torus_stable; ++i) {
    const CurveDatum curve = schubert_curve(i, n);
    for (int s = 0; s < samples; ++s) {
      Rational a1 = nonzero_rational(rng), a2 = nonzero_rational(rng);
      std::vector<Rational> lambda;
      for (int k = 0; k < n; ++k) lambda.push_back(nonzero_rational(rng));
      const Matrix act = diagonal(lambda);
      const DegenerationPoint p = curve.point(a1, a2, 0);
      const DegenerationPoint expected = curve.point(lambda[static_cast<std::size_t>(i - 1)] * a1,
                                                     lambda[static_cast<std::size_t>(i)] * a2, 0);
      for (std::size_t k = 0; k < p.spaces.size(); ++k) {
        if (!(p.spaces[k].image(act) == expected.spaces[k])) v.torus_stable = false;
      }
      if (!is_member(expected, shape)) v.torus_stable = false;
    }
  }
  return v;
}

std::vector<long long> kernel_lower_bounds(const PBWShape& shape) {
  const auto y = poincare_polynomial_of_y(shape);
  const auto fl = betti_numbers(FlagShape::complete(shape.n()));
  std::vector<long long> out(std::max(y.size(), fl.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    long long a = k < y.size() ? y[k] : 0;
    long long b = k < fl.size() ? fl[k] : 0;
    out[k] = std::max(0LL, a - b);
  }
  return out;
}

ShapeReport run_pipeline(const PBWShape& shape, const PipelineOptions& options) {
  ShapeReport report;
  report.shape = shape;
  report.betti_fl = betti_numbers(FlagShape::complete(shape.n()));
  auto guard = [&](auto&& stage) {
    try {
      stage();
    } catch (const Falsified& e) {
      report.failures.emplace_back(e.what());
    }
  };
  if (options.pi == PiConvention::Literal) {
    std::mt19937_64 rng(options.seed);
    std::vector<DegenerationPoint> points;
    for (const auto& sets : fixed_points(shape)) points.push_back(coordinate_point(sets, shape.n(), 0));
    for (int s = 0; s < options.samples; ++s) points.push_back(sample_member(shape, 0, rng));
    for (const auto& p : points) {
      std::string problem;
      try {
        if (!is_nested(zeta(p, shape, PiConvention::Literal))) problem = "is not a nested flag";
      } catch (const std::logic_error& e) {
        problem = std::string("is not a flag of the right shape (") + e.what() + ")";
      }
      if (!problem.empty()) {
        std::string where;
        for (const auto& v : p.spaces) where += (where.empty() ? "" : ", ") + v.to_string();
        report.failures.push_back(shape.to_string() + ": under the literal pi clause, zeta of the t = 0 point (" +
                                  where + ") " + problem);
        return report;
      }
    }
  }
  guard([&] {
    auto cells = derive_cells(shape);
    report.fixed_point_count = cells.fixed_point_count;
    report.w_j = cells.w;
    report.poincare_y = poincare_polynomial_of_y(shape);
    report.kernel_lower_bounds = kernel_lower_bounds(shape);
  });
  guard([&] {
    report.curves_in_fibres = true;
    for (int i = 1; i <= shape.n() - 1; ++i) {
      for (const auto& t : options.fibre_parameters) {
        if (!curve_in_fiber(i, shape, t, options.samples, options.seed)) {
          report.curves_in_fibres = false;
          report.failures.push_back(shape.to_string() + ": curve " + std::to_string(i) +
                                    " leaves the fibre over t = " + t.get_str());
        }
      }
    }
  });
  guard([&] { report.surjectivity = verify_surjectivity(shape); });
  guard([&] { report.equivariant = equivariant_verdict(shape, options.samples, options.seed); });
  return report;
}

std::vector<ShapeReport> run_all(int n, const PipelineOptions& options) {
  std::vector<ShapeReport> out;
  for (const auto& shape : PBWShape::all(n)) out.push_back(run_pipeline(shape, options));
  return out;
}

std::vector<ShapeReport> run_all_parallel(int n, const PipelineOptions& options) {
  const auto shapes = PBWShape::all(n);
  std::vector<ShapeReport> out(shapes.size());
  std::vector<std::exception_ptr> errors(shapes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    try {
      out[k] = run_pipeline(shapes[k], options);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace pbwdeg
