// pbwdeg: certificates for PBW degenerations of flag varieties.
//
//   pbwdeg shape  --n 5 --j 1,3
//   pbwdeg verify --n 3 --j 1 | --all 5
//   pbwdeg betti  --n 3 --j 1
//   pbwdeg ring   --n 3 --j 1
//   pbwdeg sp verify --n 2
//
// Exit codes: 0 ok, 2 usage, 3 a verdict came out false, 4 internal error.

#include <charconv>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbwdeg/coinvariant.hpp"
#include "pbwdeg/error.hpp"
#include "pbwdeg/homology.hpp"
#include "pbwdeg/report.hpp"
#include "pbwdeg/symplectic.hpp"

namespace {

using namespace pbwdeg;

constexpr int kExitUsage = 2;
constexpr int kExitFalsified = 3;
constexpr int kExitInternal = 4;

constexpr int kVerifyCap = 5;
constexpr int kRingCap = 4;
constexpr int kSpCap = 3;

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 1;
  int samples = 20;
  bool strict_pi = false;
  bool cap_override = false;
};

struct ShapeArgs {
  int n = 0;
  std::string j;
};

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) throw UsageError("--j expects integers like 1,3");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

void check_cap(int n, int cap, const Globals& g) {
  if (n > cap && !g.cap_override) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the default cap " + std::to_string(cap) +
                     " (pass --cap-override)");
  }
}

PBWShape shape_from(const ShapeArgs& a, const Globals& g, int cap) {
  if (a.n < 3) throw UsageError("--n must be at least 3");
  if (a.j.empty()) throw UsageError("--j is required and must be nonempty");
  check_cap(a.n, cap, g);
  return PBWShape::from_j(a.n, parse_csv(a.j));
}

Json envelope(const std::string& command, const Globals& g) {
  Json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["seed"] = g.seed;
  j["samples"] = g.samples;
  return j;
}

int emit(const Json& doc, const std::string& key, const Globals& g) {
  std::cout << render(doc, key, parse_format(g.format));
  return 0;
}

int cmd_shape(const ShapeArgs& a, bool list_fixed_points, const Globals& g) {
  const PBWShape s = shape_from(a, g, kVerifyCap);
  Json rec = shape_json(s);
  rec["r"] = s.r();
  rec["ambient"] = s.ambient();
  if (list_fixed_points) rec["fixed_points"] = fixed_points(s);
  Json doc;
  doc["command"] = "shape";
  doc["version"] = kVersion;
  doc["shapes"] = Json::array({rec});
  return emit(doc, "shapes", g);
}

int cmd_verify(const ShapeArgs& a, std::optional<int> all, const Globals& g) {
  PipelineOptions options;
  options.seed = g.seed;
  options.samples = g.samples;
  options.pi = g.strict_pi ? PiConvention::Literal : PiConvention::Corrected;

  std::vector<ShapeReport> reports;
  if (all) {
    if (*all < 3) throw UsageError("--all needs n >= 3");
    check_cap(*all, kVerifyCap, g);
    reports = run_all_parallel(*all, options);
  } else {
    reports.push_back(run_pipeline(shape_from(a, g, kVerifyCap), options));
  }
  Json doc = envelope("verify", g);
  doc["pi"] = g.strict_pi ? "literal" : "corrected";
  doc["verdicts"] = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    doc["verdicts"].push_back(verdict_json(r));
    ok = ok && r.ok();
  }
  emit(doc, "verdicts", g);
  return ok ? 0 : kExitFalsified;
}

int cmd_betti(const ShapeArgs& a, const Globals& g) {
  const PBWShape s = shape_from(a, g, kVerifyCap);
  Json doc;
  doc["command"] = "betti";
  doc["version"] = kVersion;
  doc["rows"] = Json::array({betti_json(s, derive_cells(s))});
  return emit(doc, "rows", g);
}

int cmd_ring(const ShapeArgs& a, const Globals& g) {
  const PBWShape s = shape_from(a, g, kRingCap);
  const Permutation w = derive_w_j(s);
  const PresentedRing ring = cohomology_of_schubert(w, s.ell_shape());
  Json doc;
  doc["command"] = "ring";
  doc["version"] = kVersion;
  doc["shape"] = shape_json(s);
  doc["w_j"] = w.to_string();
  doc["graded_ranks"] = ring.graded_ranks();
  doc["associative"] = ring.is_associative();
  doc["elements"] = Json::array();
  for (const auto& u : ring.basis()) {
    Json e;
    e["element"] = u.to_string();
    e["degree"] = u.length();
    e["schubert_polynomial"] = stable_schubert_polynomial(u).to_string();
    doc["elements"].push_back(e);
  }
  doc["ring"] = ring_json(ring);
  emit(doc, "elements", g);
  return doc["associative"].get<bool>() ? 0 : kExitFalsified;
}

int cmd_sp_verify(int n, const Globals& g) {
  if (n < 2) throw UsageError("--n must be at least 2");
  check_cap(n, kSpCap, g);
  const SymplecticVerdict v = sp_verify_surjectivity(n, g.samples, g.seed);
  const bool commutes = check_commuting_diagram(n, g.samples, g.seed);
  Json doc = envelope("sp verify", g);
  doc["verdicts"] = Json::array({sp_verdict_json(v, commutes)});
  emit(doc, "verdicts", g);
  return v.ok() && commutes ? 0 : kExitFalsified;
}

void add_shape_options(CLI::App* cmd, ShapeArgs& a) {
  cmd->add_option("--n", a.n, "dimension of the underlying space");
  cmd->add_option("--j", a.j, "degeneration indices, e.g. 1,3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for PBW degenerations of flag varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "json, tsv or pretty")->capture_default_str();
  app.add_option("--seed", g.seed, "sampling seed")->capture_default_str();
  app.add_option("--samples", g.samples, "random points per check")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_flag("--strict-pi", g.strict_pi, "use the uncorrected kernel bound for pi_i");
  app.add_flag("--cap-override", g.cap_override, "allow n beyond the default caps");

  ShapeArgs shape_args, verify_args, betti_args, ring_args;
  std::optional<int> all;
  bool list_fixed_points = false;
  int sp_n = 0;

  auto* shape = app.add_subcommand("shape", "echo b, ell, r and the ambient dimension");
  add_shape_options(shape, shape_args);
  shape->add_flag("--fixed-points", list_fixed_points, "also list the coordinate points of the t = 0 fibre");
  auto* verify = app.add_subcommand("verify", "run the surjectivity pipeline");
  add_shape_options(verify, verify_args);
  auto* all_opt = verify->add_option("--all", all, "every shape of this n");
  all_opt->excludes(verify->get_option("--n"))->excludes(verify->get_option("--j"));
  auto* betti = app.add_subcommand("betti", "Poincare data of Fl_n and Y, kernel lower bounds");
  add_shape_options(betti, betti_args);
  auto* ring = app.add_subcommand("ring", "Schubert-basis presentation of H^*(Y)");
  add_shape_options(ring, ring_args);
  auto* sp = app.add_subcommand("sp", "symplectic layer");
  sp->require_subcommand(1);
  sp->fallthrough();
  auto* sp_verify = sp->add_subcommand("verify", "symplectic surjectivity verdict");
  sp_verify->fallthrough();
  sp_verify->add_option("--n", sp_n, "rank n of Sp_{2n}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    parse_format(g.format);
    if (*shape) return cmd_shape(shape_args, list_fixed_points, g);
    if (*verify) return cmd_verify(verify_args, all, g);
    if (*betti) return cmd_betti(betti_args, g);
    if (*ring) return cmd_ring(ring_args, g);
    if (*sp_verify) return cmd_sp_verify(sp_n, g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Falsified& e) {
    std::cerr << "falsified: " << e.what() << '\n';
    return kExitFalsified;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
