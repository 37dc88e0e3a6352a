#include "yangdex/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "yangdex/errors.hpp"

namespace yangdex {

namespace {

[[noreturn]] void bad(const std::string& origin, const std::string& message) {
  fail(ErrorCode::BadInput, origin + ": " + message);
}

const Json* find_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& need_field(const Json& j, const char* key, const std::string& origin) {
  const Json* f = find_field(j, key);
  if (!f) bad(origin, std::string("missing field \"") + key + "\"");
  return *f;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const std::string& origin) {
  if (!j.is_object()) bad(origin, "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }))
      bad(origin, "unknown field \"" + key + "\"");
  }
}

std::string need_string(const Json& j, const std::string& origin, const char* what) {
  if (!j.is_string()) bad(origin, std::string(what) + " must be a string");
  return j.get<std::string>();
}

int need_int(const Json& j, const std::string& origin, const char* what) {
  if (!j.is_number_integer()) bad(origin, std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<Rat> rational_vector(const Json& j, const std::string& origin,
                                 const char* what) {
  if (!j.is_array()) bad(origin, std::string(what) + " must be an array of rationals");
  std::vector<Rat> out;
  for (const Json& c : j) out.push_back(parse_rational(need_string(c, origin, what), origin));
  return out;
}

}  // namespace

Rat parse_rational(const std::string& s, const std::string& origin) {
  if (s.empty()) bad(origin, "empty rational");
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = t[0] == '-' || t[0] == '+' ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(num) || !digits(den)) bad(origin, "malformed rational \"" + s + "\"");
  Int d(den);
  if (d == 0) bad(origin, "zero denominator in \"" + s + "\"");
  return Rat(Int(num), d);
}

std::string rational_string(const Rat& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::BadInput, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    byte = std::min(byte, text.size());
    long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n');
    fail(ErrorCode::BadInput,
         path + ":" + std::to_string(line) + ": " + e.what());
  }
}

ParsedComplex complex_from_json(const Json& j, const std::string& origin) {
  check_keys(j, {"name", "facets", "involution", "coordinates"}, origin);
  std::string name = need_string(need_field(j, "name", origin), origin, "\"name\"");
  const Json& facets_json = need_field(j, "facets", origin);
  if (!facets_json.is_array()) bad(origin, "\"facets\" must be an array");
  std::vector<std::vector<std::string>> facets;
  for (const Json& f : facets_json) {
    if (!f.is_array()) bad(origin, "each facet must be an array of vertex names");
    std::vector<std::string> facet;
    for (const Json& v : f) facet.push_back(need_string(v, origin, "vertex name"));
    facets.push_back(std::move(facet));
  }

  ParsedComplex p;
  try {
    p.complex = SimplicialComplex::from_facets(name, facets);
  } catch (const Error& e) {
    fail(e.code(), origin + ": " + e.what());
  }

  if (const Json* inv = find_field(j, "involution")) {
    if (!inv->is_object()) bad(origin, "\"involution\" must map vertex names");
    std::map<std::string, std::string> action;
    for (const auto& [from, to] : inv->items())
      action[from] = need_string(to, origin, "involution image");
    try {
      p.involution = check_free_involution(p.complex, action);
    } catch (const Error& e) {
      fail(e.code(), origin + ": " + e.what());
    }
  }

  if (const Json* coords = find_field(j, "coordinates")) {
    if (!coords->is_object()) bad(origin, "\"coordinates\" must map vertex names");
    std::vector<std::vector<Rat>> by_vertex(
        static_cast<size_t>(p.complex.vertex_count()));
    std::vector<bool> seen(by_vertex.size(), false);
    for (const auto& [vertex, value] : coords->items()) {
      auto v = p.complex.find_vertex(vertex);
      if (!v) bad(origin, "coordinates for unknown vertex \"" + vertex + "\"");
      by_vertex[static_cast<size_t>(*v)] = rational_vector(value, origin, "coordinate");
      seen[static_cast<size_t>(*v)] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      bad(origin, "coordinates must cover every vertex");
    size_t dim = by_vertex.empty() ? 0 : by_vertex[0].size();
    for (const auto& c : by_vertex)
      if (c.size() != dim) bad(origin, "coordinate vectors must share one dimension");
    p.coordinates = std::move(by_vertex);
  }
  return p;
}

ParsedComplex load_complex(const std::string& path) {
  return complex_from_json(load_json(path), path);
}

Json complex_to_json(const ParsedComplex& p) {
  Json j;
  j["name"] = p.complex.name();
  /* facet_list is sorted by vertex id and ids follow sorted names, so this
   * serialization is canonical as is. */
  Json facets = Json::array();
  for (const Simplex& f : p.complex.facet_list()) facets.push_back(simplex_names(p.complex, f));
  j["facets"] = std::move(facets);
  if (p.involution) {
    Json inv = Json::object();
    for (Vertex v = 0; v < p.complex.vertex_count(); ++v)
      inv[p.complex.vertex_name(v)] = p.complex.vertex_name((*p.involution)(v));
    j["involution"] = std::move(inv);
  }
  if (p.coordinates) {
    Json coords = Json::object();
    for (Vertex v = 0; v < p.complex.vertex_count(); ++v) {
      Json point = Json::array();
      for (const Rat& c : (*p.coordinates)[static_cast<size_t>(v)])
        point.push_back(rational_string(c));
      coords[p.complex.vertex_name(v)] = std::move(point);
    }
    j["coordinates"] = std::move(coords);
  }
  return j;
}

LabelsFile labels_from_json(const Json& j, const std::string& origin) {
  check_keys(j, {"labels", "m"}, origin);
  LabelsFile out;
  const Json& labels = need_field(j, "labels", origin);
  if (!labels.is_object()) bad(origin, "\"labels\" must map vertex names to integers");
  for (const auto& [vertex, value] : labels.items())
    out.labels[vertex] = need_int(value, origin, "label");
  if (const Json* m = find_field(j, "m")) out.m = need_int(*m, origin, "\"m\"");
  return out;
}

PointsFile points_from_json(const Json& j, const std::string& origin) {
  check_keys(j, {"n", "points"}, origin);
  PointsFile out;
  out.n = need_int(need_field(j, "n", origin), origin, "\"n\"");
  const Json& points = need_field(j, "points", origin);
  if (!points.is_array()) bad(origin, "\"points\" must be an array");
  for (const Json& p : points) out.points.push_back(rational_vector(p, origin, "point"));
  return out;
}

SelectionFile selection_from_json(const Json& j, const std::string& origin) {
  check_keys(j, {"n", "y"}, origin);
  SelectionFile out;
  out.n = need_int(need_field(j, "n", origin), origin, "\"n\"");
  const Json& y = need_field(j, "y", origin);
  if (!y.is_object()) bad(origin, "\"y\" must map vertex names to points");
  for (const auto& [vertex, value] : y.items())
    out.y[vertex] = rational_vector(value, origin, "selected point");
  return out;
}

CoordsFile coords_from_json(const Json& j, const std::string& origin) {
  check_keys(j, {"d", "coords"}, origin);
  CoordsFile out;
  out.d = need_int(need_field(j, "d", origin), origin, "\"d\"");
  const Json& coords = need_field(j, "coords", origin);
  if (!coords.is_object()) bad(origin, "\"coords\" must map vertex names to points");
  for (const auto& [vertex, value] : coords.items())
    out.coords[vertex] = rational_vector(value, origin, "coordinate");
  return out;
}

MapFile map_from_json(const Json& j, const std::string& origin) {
  check_keys(j, {"source", "target", "map"}, origin);
  MapFile out;
  out.source = complex_from_json(need_field(j, "source", origin), origin + " (source)");
  out.target = complex_from_json(need_field(j, "target", origin), origin + " (target)");
  const Json& m = need_field(j, "map", origin);
  if (!m.is_object()) bad(origin, "\"map\" must map vertex names to vertex names");
  for (const auto& [from, to] : m.items())
    out.vertex_map[from] = need_string(to, origin, "map image");
  return out;
}

Json simplex_names(const SimplicialComplex& k, const Simplex& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(k.vertex_name(v));
  return out;
}

Json cochain_support(const SimplicialComplex& k, int deg, const std::vector<uint8_t>& c) {
  const auto& faces = k.faces(deg);
  require_internal(c.size() == faces.size(), "cochain does not match the face list");
  Json out = Json::array();
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i]) out.push_back(simplex_names(k, faces[i]));
  return out;
}

}  // namespace yangdex
