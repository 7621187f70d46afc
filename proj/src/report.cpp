#include "pbwdeg/report.hpp"

#include <algorithm>
#include <sstream>

#include "pbwdeg/error.hpp"

namespace pbwdeg {

namespace {

Json window_json(const Permutation& w) { return Json(std::vector<int>(w.window().begin(), w.window().end())); }

Json matrix_json(const IntegerMatrix& m) { return Json(m.to_rows()); }

std::string cell_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    const bool nested = !v.empty() && v.front().is_array();
    const bool deep = nested && !v.front().empty() && v.front().front().is_array();
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out += deep ? " | " : nested ? ";" : ",";
      out += cell_string(v[k]);
    }
    return out;
  }
  return v.dump();
}

void splice(const Json& record, const std::string& parent, std::vector<std::string>& keys,
            std::vector<std::string>& values) {
  for (const auto& [key, value] : record.items()) {
    if (value.is_object()) {
      splice(value, key, keys, values);
    } else if (key != "failures") {
      const bool taken = std::find(keys.begin(), keys.end(), key) != keys.end();
      keys.push_back(taken ? parent + "." + key : key);
      values.push_back(cell_string(value));
    }
  }
}

std::vector<std::string> collect_failures(const Json& records) {
  std::vector<std::string> out;
  for (const auto& r : records) {
    if (r.contains("failures")) {
      for (const auto& f : r["failures"]) out.push_back(f.get<std::string>());
    }
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "tsv") return Format::Tsv;
  if (name == "pretty") return Format::Pretty;
  throw UsageError("unknown format '" + std::string(name) + "' (json, tsv, pretty)");
}

Json shape_json(const PBWShape& shape) {
  Json j;
  j["n"] = shape.n();
  j["j"] = std::vector<int>(shape.j().begin(), shape.j().end());
  j["b"] = std::vector<int>(shape.b().begin(), shape.b().end());
  j["ell"] = std::vector<int>(shape.ell().begin(), shape.ell().end());
  return j;
}

Json verdict_json(const ShapeReport& report) {
  Json j;
  j["shape"] = shape_json(report.shape);
  j["fixed_points"] = report.fixed_point_count;
  j["w_j"] = window_json(report.w_j);
  j["g2"] = matrix_json(report.surjectivity.g2);
  j["elementary_divisors"] = report.surjectivity.snf.divisors;
  j["surjective"] = report.surjectivity.split_injective;
  j["equivariant"] = report.equivariant.holds();
  j["kernel_lower_bounds"] = report.kernel_lower_bounds;
  j["failures"] = report.failures;
  return j;
}

Json betti_json(const PBWShape& shape, const DegenerationCells& cells) {
  Json j;
  j["shape"] = shape_json(shape);
  j["fixed_points"] = cells.fixed_point_count;
  j["w_j"] = window_json(cells.w);
  j["poincare_y"] = poincare_polynomial_of_y(shape);
  j["betti_fl"] = betti_numbers(FlagShape::complete(shape.n()));
  const auto bounds = kernel_lower_bounds(shape);
  j["kernel_lower_bounds"] = bounds;
  long long total = 0;
  for (auto b : bounds) total += b;
  j["kernel_lower_bound_total"] = total;
  return j;
}

Json sp_verdict_json(const SymplecticVerdict& verdict, bool commuting_diagram) {
  Json j;
  j["n"] = verdict.n;
  j["shape"] = shape_json(verdict.shape);
  j["fixed_points"] = verdict.fixed_point_count;
  j["generic_fixed_points"] = verdict.generic_fixed_point_count;
  j["characters"] = verdict.characters;
  j["g2"] = matrix_json(verdict.g2);
  j["elementary_divisors"] = verdict.snf.divisors;
  j["surjective"] = verdict.split_injective;
  j["equivariant"] = verdict.characters_distinct;
  j["commuting_diagram"] = commuting_diagram;
  const auto excess = static_cast<long long>(verdict.fixed_point_count) -
                      static_cast<long long>(verdict.generic_fixed_point_count);
  j["kernel_lower_bound_total"] = std::max(0LL, excess);
  j["failures"] = verdict.failures;
  return j;
}

Json ring_json(const PresentedRing& ring) {
  Json j;
  const auto basis = ring.basis();
  Json names = Json::array();
  for (const auto& u : basis) names.push_back(u.to_string());
  j["basis"] = names;
  Json products = Json::object();
  for (const auto& u : basis) {
    Json row = Json::object();
    for (const auto& v : basis) {
      Json entry = Json::object();
      for (const auto& [w, c] : ring.product(u, v).coeffs()) entry[w.to_string()] = c;
      row[v.to_string()] = entry;
    }
    products[u.to_string()] = row;
  }
  j["products"] = products;
  return j;
}

Table table_from(const Json& records) {
  Table t;
  for (const auto& r : records) {
    std::vector<std::string> keys, values;
    splice(r, "", keys, values);
    if (t.headers.empty()) t.headers = keys;
    t.rows.push_back(values);
  }
  return t;
}

std::string render(const Json& report, const std::string& table_key, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  const Json& records = report.at(table_key);
  const Table t = table_from(records);
  const auto failures = collect_failures(records);
  std::ostringstream os;
  if (format == Format::Tsv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "\t" : "") << cells[k];
      os << '\n';
    };
    line(t.headers);
    for (const auto& r : t.rows) line(r);
    for (const auto& f : failures) os << "# " << f << '\n';
    return os.str();
  }
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t k = 0; k < t.headers.size(); ++k) {
    width[k] = t.headers[k].size();
    for (const auto& r : t.rows) width[k] = std::max(width[k], r[k].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      os << cells[k];
      if (k + 1 < cells.size()) os << std::string(width[k] - cells[k].size() + 2, ' ');
    }
    os << '\n';
  };
  os << report.at("command").get<std::string>() << '\n';
  line(t.headers);
  for (const auto& r : t.rows) line(r);
  for (const auto& f : failures) os << "FALSIFIED  " << f << '\n';
  return os.str();
}

}  // namespace pbwdeg
