#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pbwdeg/coinvariant.hpp"
#include "pbwdeg/homology.hpp"
#include "pbwdeg/symplectic.hpp"

namespace pbwdeg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

enum class Format { Json, Tsv, Pretty };
Format parse_format(std::string_view name);

/// {"n":3,"j":[1],"b":[1,0],"ell":[1,3]}
Json shape_json(const PBWShape& shape);
Json verdict_json(const ShapeReport& report);
Json betti_json(const PBWShape& shape, const DegenerationCells& cells);
Json sp_verdict_json(const SymplecticVerdict& verdict, bool commuting_diagram);
/// {"basis": [...], "products": {u: {v: {w: c}}}}
Json ring_json(const PresentedRing& ring);

/// Rows of flat records; nested objects are spliced into the row.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};
Table table_from(const Json& records);

/// JSON is dumped with two-space indent. TSV and pretty print `table_key`
/// (an array of records) as a table followed by any failures.
std::string render(const Json& report, const std::string& table_key, Format format);

}  // namespace pbwdeg
