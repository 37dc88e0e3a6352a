#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "yangdex/complex.hpp"
#include "yangdex/exact.hpp"

namespace yangdex {

using Json = nlohmann::json;

/* Complex file schema: {"name", "facets", optional "involution", optional
 * "coordinates"} with rationals as "p/q" strings.  Parsing validates through
 * the library checks; serialization is canonical (sorted names, sorted
 * facets) so round trips are byte-stable. */
struct ParsedComplex {
  SimplicialComplex complex;
  std::optional<FreeInvolution> involution;
  std::optional<std::vector<std::vector<Rat>>> coordinates;
};

Rat parse_rational(const std::string& s, const std::string& origin);
std::string rational_string(const Rat& r);

/* Whole-file JSON parse with file:line positions on syntax errors. */
Json load_json(const std::string& path);

ParsedComplex complex_from_json(const Json& j, const std::string& origin);
ParsedComplex load_complex(const std::string& path);
Json complex_to_json(const ParsedComplex& p);

struct LabelsFile {
  std::map<std::string, int> labels;
  std::optional<int> m;  // inferred as max |label| when absent
};
LabelsFile labels_from_json(const Json& j, const std::string& origin);

struct PointsFile {
  int n = 0;
  std::vector<std::vector<Rat>> points;  // points[i] belongs to label i+1
};
PointsFile points_from_json(const Json& j, const std::string& origin);

struct SelectionFile {
  int n = 0;
  std::map<std::string, std::vector<Rat>> y;
};
SelectionFile selection_from_json(const Json& j, const std::string& origin);

struct CoordsFile {
  int d = 0;
  std::map<std::string, std::vector<Rat>> coords;
};
CoordsFile coords_from_json(const Json& j, const std::string& origin);

struct MapFile {
  ParsedComplex source;
  ParsedComplex target;
  std::map<std::string, std::string> vertex_map;
};
MapFile map_from_json(const Json& j, const std::string& origin);

/* Witness serialization: simplices as sorted vertex-name lists, cochains as
 * the list of simplices in their support. */
Json simplex_names(const SimplicialComplex& k, const Simplex& s);
Json cochain_support(const SimplicialComplex& k, int deg, const std::vector<uint8_t>& c);

}  // namespace yangdex
