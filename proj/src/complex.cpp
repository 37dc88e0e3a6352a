#include "yangdex/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "yangdex/errors.hpp"

namespace yangdex {

namespace detail {

struct ComplexData {
  std::string name;
  std::vector<std::string> vertex_names;          // sorted, unique
  std::map<std::string, Vertex> name_to_vertex;
  std::vector<std::vector<Simplex>> faces_by_dim; // each level lex sorted
  std::vector<Simplex> facets;                    // lex sorted
  std::vector<std::string> warnings;
  mutable Cache cache;
};

}  // namespace detail

namespace {

std::string join_names(const std::vector<std::string>& names, const Simplex& s) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << names[static_cast<size_t>(s[i])];
  }
  out << '}';
  return out.str();
}

/* Shared back end: takes interned, sorted facets, absorbs duplicates and
 * non-maximal entries, closes under faces. */
std::shared_ptr<detail::ComplexData> build(std::string name, std::vector<std::string> vertex_names,
                                           std::vector<Simplex> raw_facets) {
  auto data = std::make_shared<detail::ComplexData>();
  data->name = std::move(name);
  data->vertex_names = std::move(vertex_names);
  for (size_t i = 0; i < data->vertex_names.size(); ++i)
    data->name_to_vertex[data->vertex_names[i]] = static_cast<Vertex>(i);

  for (const Simplex& f : raw_facets) {
    if (f.size() > 25) fail(ErrorCode::BadInput, "facet with more than 25 vertices");
    for (Vertex v : f)
      require_internal(v >= 0 && static_cast<size_t>(v) < data->vertex_names.size(),
                       "facet vertex out of range");
  }

  /* Absorb duplicates and faces of other facets, largest first so a kept
   * facet can absorb later ones. */
  std::stable_sort(raw_facets.begin(), raw_facets.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  std::vector<Simplex> kept;
  for (const Simplex& f : raw_facets) {
    bool absorbed = false;
    for (const Simplex& g : kept) {
      if (f.size() <= g.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        if (f == g)
          data->warnings.push_back("duplicate facet " + join_names(data->vertex_names, f));
        else
          data->warnings.push_back("facet " + join_names(data->vertex_names, f) +
                                   " is a face of " + join_names(data->vertex_names, g));
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  data->facets = std::move(kept);

  int dim = -1;
  for (const Simplex& f : data->facets) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  data->faces_by_dim.assign(static_cast<size_t>(dim + 1), {});

  std::set<Simplex> seen;
  for (const Simplex& f : data->facets)
    for (const Simplex& s : nonempty_subsets(f))
      if (seen.insert(s).second)
        data->faces_by_dim[s.size() - 1].push_back(s);
  for (auto& level : data->faces_by_dim) std::sort(level.begin(), level.end());

  /* Every named vertex must occur; constructions are expected to prune. */
  require_internal(data->faces_by_dim.empty() ||
                       data->faces_by_dim[0].size() == data->vertex_names.size(),
                   "vertex names not covered by facets");
  require_internal(!data->faces_by_dim.empty() || data->vertex_names.empty(),
                   "vertex names with no facets");
  return data;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::string& name, const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty()) fail(ErrorCode::EmptyInput, "no facets given");
  std::set<std::string> names;
  for (const auto& f : facets) {
    if (f.empty()) fail(ErrorCode::MalformedFacet, "empty facet");
    for (const auto& n : f) {
      if (n.empty()) fail(ErrorCode::MalformedFacet, "empty vertex name");
      names.insert(n);
    }
    std::set<std::string> unique(f.begin(), f.end());
    if (unique.size() != f.size())
      fail(ErrorCode::MalformedFacet, "repeated vertex in facet of " + name);
  }
  std::vector<std::string> vertex_names(names.begin(), names.end());
  std::map<std::string, Vertex> index;
  for (size_t i = 0; i < vertex_names.size(); ++i)
    index[vertex_names[i]] = static_cast<Vertex>(i);
  std::vector<Simplex> interned;
  interned.reserve(facets.size());
  for (const auto& f : facets) {
    Simplex s;
    s.reserve(f.size());
    for (const auto& n : f) s.push_back(index.at(n));
    std::sort(s.begin(), s.end());
    interned.push_back(std::move(s));
  }
  return SimplicialComplex(build(name, std::move(vertex_names), std::move(interned)));
}

SimplicialComplex SimplicialComplex::from_simplices(const std::string& name,
                                                    std::vector<std::string> vertex_names,
                                                    std::vector<Simplex> facets) {
  /* Indices in `facets` refer to `vertex_names` as given; remap them onto
   * the sorted name order used internally. */
  std::vector<size_t> perm(vertex_names.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](size_t a, size_t b) { return vertex_names[a] < vertex_names[b]; });
  std::vector<Vertex> new_index(vertex_names.size());
  std::vector<std::string> sorted_names(vertex_names.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    sorted_names[i] = vertex_names[perm[i]];
    new_index[perm[i]] = static_cast<Vertex>(i);
  }
  for (size_t i = 1; i < sorted_names.size(); ++i)
    require_internal(sorted_names[i - 1] != sorted_names[i], "duplicate vertex name");
  for (Simplex& f : facets) {
    for (Vertex& v : f) {
      require_internal(v >= 0 && static_cast<size_t>(v) < new_index.size(),
                       "facet vertex out of range");
      v = new_index[static_cast<size_t>(v)];
    }
    f = sorted_simplex(std::move(f));
  }
  return SimplicialComplex(build(name, std::move(sorted_names), std::move(facets)));
}

const std::string& SimplicialComplex::name() const { return data_->name; }

int SimplicialComplex::dim() const {
  return static_cast<int>(data_->faces_by_dim.size()) - 1;
}

int SimplicialComplex::vertex_count() const {
  return static_cast<int>(data_->vertex_names.size());
}

const std::vector<std::string>& SimplicialComplex::vertex_names() const {
  return data_->vertex_names;
}

const std::string& SimplicialComplex::vertex_name(Vertex v) const {
  require_internal(v >= 0 && v < vertex_count(), "vertex out of range");
  return data_->vertex_names[static_cast<size_t>(v)];
}

std::optional<Vertex> SimplicialComplex::find_vertex(const std::string& name) const {
  auto it = data_->name_to_vertex.find(name);
  if (it == data_->name_to_vertex.end()) return std::nullopt;
  return it->second;
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k > dim()) return none;
  return data_->faces_by_dim[static_cast<size_t>(k)];
}

const std::vector<Simplex>& SimplicialComplex::facet_list() const { return data_->facets; }

std::vector<int> SimplicialComplex::f_vector() const {
  std::vector<int> f;
  for (const auto& level : data_->faces_by_dim) f.push_back(static_cast<int>(level.size()));
  return f;
}

long SimplicialComplex::total_faces() const {
  long n = 0;
  for (const auto& level : data_->faces_by_dim) n += static_cast<long>(level.size());
  return n;
}

bool SimplicialComplex::contains(const Simplex& s) const { return face_index(s) >= 0; }

int SimplicialComplex::face_index(const Simplex& s) const {
  if (s.empty()) return -1;
  int k = static_cast<int>(s.size()) - 1;
  if (k > dim()) return -1;
  const auto& level = data_->faces_by_dim[static_cast<size_t>(k)];
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return -1;
  return static_cast<int>(it - level.begin());
}

const std::vector<std::string>& SimplicialComplex::warnings() const { return data_->warnings; }

std::string SimplicialComplex::simplex_label(const Simplex& s) const {
  return join_names(data_->vertex_names, s);
}

detail::Cache& SimplicialComplex::cache() const { return data_->cache; }

Simplex FreeInvolution::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(action[static_cast<size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> FreeInvolution::orbit_representatives() const {
  std::vector<Vertex> reps;
  for (Vertex v = 0; v < complex.vertex_count(); ++v)
    if (v < action[static_cast<size_t>(v)]) reps.push_back(v);
  return reps;
}

FreeInvolution check_free_involution(const SimplicialComplex& k,
                                     const std::map<std::string, std::string>& action) {
  std::vector<Vertex> a(static_cast<size_t>(k.vertex_count()), -1);
  for (const auto& [from, to] : action) {
    auto u = k.find_vertex(from);
    if (!u) fail(ErrorCode::BadInput, "involution maps unknown vertex " + from);
    auto v = k.find_vertex(to);
    if (!v) fail(ErrorCode::BadInput, "involution sends " + from + " to unknown vertex " + to);
    a[static_cast<size_t>(*u)] = *v;
  }
  for (Vertex v = 0; v < k.vertex_count(); ++v)
    if (a[static_cast<size_t>(v)] < 0)
      fail(ErrorCode::BadInput, "involution missing vertex " + k.vertex_name(v));
  return check_free_involution(k, std::move(a));
}

FreeInvolution check_free_involution(const SimplicialComplex& k, std::vector<Vertex> action) {
  require_internal(action.size() == static_cast<size_t>(k.vertex_count()),
                   "involution has wrong vertex count");
  for (Vertex v = 0; v < k.vertex_count(); ++v) {
    Vertex av = action[static_cast<size_t>(v)];
    require_internal(av >= 0 && av < k.vertex_count(), "involution image out of range");
    if (action[static_cast<size_t>(av)] != v)
      fail(ErrorCode::NotOrder2, "composing the action with itself moves " + k.vertex_name(v));
    if (av == v) fail(ErrorCode::NotFree, "vertex " + k.vertex_name(v) + " is fixed");
  }
  FreeInvolution inv{k, std::move(action)};
  for (const Simplex& f : k.facet_list()) {
    Simplex img = inv.image(f);
    if (!k.contains(img))
      fail(ErrorCode::NotSimplicial,
           "action image of facet " + k.simplex_label(f) + " is not a simplex");
  }
  /* A simplex fixed setwise but not vertexwise contains a pair {v, A(v)},
   * so the edge list decides freeness. */
  for (const Simplex& e : k.faces(1)) {
    if (inv.action[static_cast<size_t>(e[0])] == e[1])
      fail(ErrorCode::NotFree, "edge " + k.simplex_label(e) + " joins an orbit pair");
  }
  return inv;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(vertex_map[static_cast<size_t>(v)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EquivarianceSpec whole_complex_equivariance(const FreeInvolution& source_inv,
                                            const FreeInvolution& target_inv) {
  EquivarianceSpec spec;
  spec.region.resize(static_cast<size_t>(source_inv.complex.vertex_count()));
  std::iota(spec.region.begin(), spec.region.end(), 0);
  spec.source_action = source_inv.action;
  spec.target_action = target_inv.action;
  return spec;
}

SimplicialMap check_simplicial_map(const SimplicialComplex& x, const SimplicialComplex& y,
                                   const std::map<std::string, std::string>& vertex_map,
                                   const std::optional<EquivarianceSpec>& equivariant_on) {
  std::vector<Vertex> m(static_cast<size_t>(x.vertex_count()), -1);
  for (const auto& [from, to] : vertex_map) {
    auto u = x.find_vertex(from);
    if (!u) fail(ErrorCode::BadInput, "map defined on unknown vertex " + from);
    auto v = y.find_vertex(to);
    if (!v) fail(ErrorCode::BadInput, "map sends " + from + " to unknown vertex " + to);
    m[static_cast<size_t>(*u)] = *v;
  }
  for (Vertex v = 0; v < x.vertex_count(); ++v)
    if (m[static_cast<size_t>(v)] < 0)
      fail(ErrorCode::BadInput, "map missing vertex " + x.vertex_name(v));
  return check_simplicial_map(x, y, std::move(m), equivariant_on);
}

SimplicialMap check_simplicial_map(const SimplicialComplex& x, const SimplicialComplex& y,
                                   std::vector<Vertex> vertex_map,
                                   const std::optional<EquivarianceSpec>& equivariant_on) {
  require_internal(vertex_map.size() == static_cast<size_t>(x.vertex_count()),
                   "vertex map has wrong size");
  for (Vertex v : vertex_map)
    require_internal(v >= 0 && v < y.vertex_count(), "vertex map image out of range");
  SimplicialMap f{x, y, std::move(vertex_map)};
  for (const Simplex& s : x.facet_list()) {
    Simplex img = f.image(s);
    if (!y.contains(img))
      fail(ErrorCode::NotSimplicial,
           "image of facet " + x.simplex_label(s) + " is not a simplex of " + y.name());
  }
  if (equivariant_on) {
    const EquivarianceSpec& spec = *equivariant_on;
    for (Vertex v : spec.region) {
      Vertex av = spec.source_action[static_cast<size_t>(v)];
      require_internal(av >= 0, "equivariance region escapes the source action");
      Vertex lhs = f.vertex_map[static_cast<size_t>(av)];
      Vertex rhs = spec.target_action[static_cast<size_t>(f.vertex_map[static_cast<size_t>(v)])];
      if (lhs != rhs)
        fail(ErrorCode::NotEquivariant,
             "map does not intertwine the actions at vertex " + x.vertex_name(v));
    }
  }
  return f;
}

SimplicialMap inclusion_map(const SimplicialComplex& x, const SimplicialComplex& y) {
  std::vector<Vertex> m;
  m.reserve(static_cast<size_t>(x.vertex_count()));
  for (Vertex v = 0; v < x.vertex_count(); ++v) {
    auto w = y.find_vertex(x.vertex_name(v));
    if (!w)
      fail(ErrorCode::BadInput,
           "vertex " + x.vertex_name(v) + " of " + x.name() + " is not a vertex of " + y.name());
    m.push_back(*w);
  }
  return check_simplicial_map(x, y, std::move(m));
}

PseudomanifoldReport classify_pseudomanifold(const SimplicialComplex& k) {
  PseudomanifoldReport report;
  report.dimension = k.dim();
  report.boundary = SimplicialComplex::from_simplices(k.name() + ".boundary", {}, {});
  if (k.dim() < 0) return report;

  const int d = k.dim();
  report.pure = true;
  for (const Simplex& f : k.facet_list())
    if (static_cast<int>(f.size()) != d + 1) report.pure = false;

  if (d == 0) {
    /* Every vertex shares the empty ridge. */
    report.is_almost_pseudomanifold = report.pure && k.vertex_count() <= 2;
    report.is_strongly_connected = report.pure && k.vertex_count() <= 2;
    report.is_pseudomanifold = report.is_almost_pseudomanifold;
    report.is_closed = report.is_almost_pseudomanifold && k.vertex_count() == 2;
    return report;
  }
  if (!report.pure) return report;

  const auto& ridges = k.faces(d - 1);
  const auto& facets = k.facet_list();
  std::vector<int> cofacets(ridges.size(), 0);
  std::vector<std::vector<int>> ridge_facets(ridges.size());
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    Simplex r(facets[fi].size() - 1);
    for (size_t drop = 0; drop < facets[fi].size(); ++drop) {
      size_t w = 0;
      for (size_t i = 0; i < facets[fi].size(); ++i)
        if (i != drop) r[w++] = facets[fi][i];
      int ri = k.face_index(r);
      require_internal(ri >= 0, "ridge missing from face lattice");
      ++cofacets[static_cast<size_t>(ri)];
      ridge_facets[static_cast<size_t>(ri)].push_back(static_cast<int>(fi));
    }
  }

  report.is_almost_pseudomanifold = true;
  for (int c : cofacets)
    if (c > 2) report.is_almost_pseudomanifold = false;

  /* Strong connectivity through shared ridges. */
  std::vector<int> component(facets.size(), -1);
  int components = 0;
  for (size_t seed = 0; seed < facets.size(); ++seed) {
    if (component[seed] >= 0) continue;
    std::vector<int> stack{static_cast<int>(seed)};
    component[seed] = components;
    while (!stack.empty()) {
      int fi = stack.back();
      stack.pop_back();
      for (size_t drop = 0; drop < facets[static_cast<size_t>(fi)].size(); ++drop) {
        Simplex r(facets[static_cast<size_t>(fi)].size() - 1);
        size_t w = 0;
        for (size_t i = 0; i < facets[static_cast<size_t>(fi)].size(); ++i)
          if (i != drop) r[w++] = facets[static_cast<size_t>(fi)][i];
        for (int gi : ridge_facets[static_cast<size_t>(k.face_index(r))]) {
          if (component[static_cast<size_t>(gi)] < 0) {
            component[static_cast<size_t>(gi)] = components;
            stack.push_back(gi);
          }
        }
      }
    }
    ++components;
  }
  report.is_strongly_connected = components <= 1;
  report.is_pseudomanifold = report.is_almost_pseudomanifold && report.is_strongly_connected;

  if (report.is_almost_pseudomanifold) {
    std::vector<Simplex> boundary_ridges;
    for (size_t ri = 0; ri < ridges.size(); ++ri)
      if (cofacets[ri] == 1) boundary_ridges.push_back(ridges[ri]);
    std::set<Vertex> used;
    for (const Simplex& r : boundary_ridges)
      for (Vertex v : r) used.insert(v);
    std::vector<std::string> names;
    std::map<Vertex, Vertex> reindex;
    for (Vertex v : used) {
      reindex[v] = static_cast<Vertex>(names.size());
      names.push_back(k.vertex_name(v));
    }
    for (Simplex& r : boundary_ridges)
      for (Vertex& v : r) v = reindex[v];
    report.boundary =
        SimplicialComplex::from_simplices(k.name() + ".boundary", names, boundary_ridges);
    report.is_closed = boundary_ridges.empty();
  }
  return report;
}

namespace {

/* Relative sign of two cofacets of a shared ridge: if s = r + vertex at
 * position i and t = r + vertex at position j, coherence forces
 * sign(t) = -(-1)^(i+j) sign(s). */
int adjacency_flip(const Simplex& s, const Simplex& t, const Simplex& ridge) {
  auto apex_position = [&](const Simplex& facet) {
    for (size_t i = 0; i < facet.size(); ++i) {
      bool in_ridge = std::binary_search(ridge.begin(), ridge.end(), facet[i]);
      if (!in_ridge) return static_cast<int>(i);
    }
    require_internal(false, "cofacet does not extend ridge");
    return -1;
  };
  int i = apex_position(s);
  int j = apex_position(t);
  return ((i + j) % 2 == 0) ? -1 : 1;
}

}  // namespace

Orientation orient(const SimplicialComplex& k) {
  Orientation result;
  PseudomanifoldReport report = classify_pseudomanifold(k);
  if (!report.is_almost_pseudomanifold || k.dim() < 1) {
    if (k.dim() == 0 && report.is_almost_pseudomanifold) {
      result.orientable = true;
      result.facet_signs.assign(k.facet_list().size(), 1);
    }
    return result;
  }

  const auto& facets = k.facet_list();
  const int d = k.dim();
  std::vector<std::vector<std::pair<int, int>>> adjacency(facets.size());
  std::map<Simplex, std::vector<int>> by_ridge;
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    for (size_t drop = 0; drop < facets[fi].size(); ++drop) {
      Simplex r(static_cast<size_t>(d));
      size_t w = 0;
      for (size_t i = 0; i < facets[fi].size(); ++i)
        if (i != drop) r[w++] = facets[fi][i];
      by_ridge[r].push_back(static_cast<int>(fi));
    }
  }
  for (const auto& [ridge, fs] : by_ridge) {
    if (fs.size() != 2) continue;
    int flip = adjacency_flip(facets[static_cast<size_t>(fs[0])],
                              facets[static_cast<size_t>(fs[1])], ridge);
    adjacency[static_cast<size_t>(fs[0])].push_back({fs[1], flip});
    adjacency[static_cast<size_t>(fs[1])].push_back({fs[0], flip});
  }

  std::vector<int8_t> signs(facets.size(), 0);
  for (size_t seed = 0; seed < facets.size(); ++seed) {
    if (signs[seed] != 0) continue;
    signs[seed] = 1;
    std::vector<int> stack{static_cast<int>(seed)};
    while (!stack.empty()) {
      int fi = stack.back();
      stack.pop_back();
      for (auto [gi, flip] : adjacency[static_cast<size_t>(fi)]) {
        int8_t want = static_cast<int8_t>(flip * signs[static_cast<size_t>(fi)]);
        if (signs[static_cast<size_t>(gi)] == 0) {
          signs[static_cast<size_t>(gi)] = want;
          stack.push_back(gi);
        } else if (signs[static_cast<size_t>(gi)] != want) {
          return result;  // orientable stays false
        }
      }
    }
  }
  result.orientable = true;
  result.facet_signs = std::move(signs);
  return result;
}

bool orientation_coherent(const SimplicialComplex& k, const std::vector<int8_t>& facet_signs) {
  if (k.dim() < 1) return true;
  const auto& facets = k.facet_list();
  require_internal(facet_signs.size() == facets.size(), "one sign per facet required");
  std::map<Simplex, std::vector<int>> by_ridge;
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    for (size_t drop = 0; drop < facets[fi].size(); ++drop) {
      Simplex r;
      for (size_t i = 0; i < facets[fi].size(); ++i)
        if (i != drop) r.push_back(facets[fi][i]);
      by_ridge[r].push_back(static_cast<int>(fi));
    }
  }
  for (const auto& [ridge, fs] : by_ridge) {
    if (fs.size() != 2) continue;
    int flip = adjacency_flip(facets[static_cast<size_t>(fs[0])],
                              facets[static_cast<size_t>(fs[1])], ridge);
    if (facet_signs[static_cast<size_t>(fs[1])] !=
        flip * facet_signs[static_cast<size_t>(fs[0])])
      return false;
  }
  return true;
}

Simplex sorted_simplex(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i - 1] == vertices[i])
      fail(ErrorCode::MalformedFacet, "repeated vertex in simplex");
  return vertices;
}

std::vector<Simplex> nonempty_subsets(const Simplex& s) {
  require_internal(s.size() <= 25, "simplex too large to enumerate subsets");
  std::vector<Simplex> out;
  const uint32_t n = static_cast<uint32_t>(s.size());
  out.reserve((1u << n) - 1);
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    Simplex sub;
    for (uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(s[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<Simplex> face_closure(const std::vector<Simplex>& generators) {
  std::set<Simplex> seen;
  for (const Simplex& g : generators)
    for (const Simplex& s : nonempty_subsets(g)) seen.insert(s);
  return std::vector<Simplex>(seen.begin(), seen.end());
}

}  // namespace yangdex
