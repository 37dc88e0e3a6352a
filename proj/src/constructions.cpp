#include "yangdex/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "yangdex/errors.hpp"

namespace yangdex {

namespace {

std::string fresh_name(const std::set<std::string>& used, std::string base) {
  while (used.count(base)) base += "'";
  return base;
}

std::set<std::string> name_set(const SimplicialComplex& k) {
  return std::set<std::string>(k.vertex_names().begin(), k.vertex_names().end());
}

std::vector<Rat> barycenter(const std::vector<std::vector<Rat>>& coords, const Simplex& s) {
  std::vector<Rat> c(coords.at(0).size(), Rat(0));
  for (Vertex v : s)
    for (size_t i = 0; i < c.size(); ++i) c[i] += coords[static_cast<size_t>(v)][i];
  Rat scale(1, static_cast<int>(s.size()));
  for (Rat& x : c) x *= scale;
  return c;
}

}  // namespace

EquivariantComplex cross_polytope_sphere(int n) {
  if (n < 0) fail(ErrorCode::BadInput, "sphere dimension must be nonnegative");
  const int axes = n + 1;
  std::vector<std::vector<std::string>> facets;
  for (int mask = 0; mask < (1 << axes); ++mask) {
    std::vector<std::string> f;
    for (int i = 0; i < axes; ++i)
      f.push_back("e" + std::to_string(i + 1) + ((mask >> i & 1) ? "-" : "+"));
    facets.push_back(std::move(f));
  }
  auto sphere = SimplicialComplex::from_facets("S" + std::to_string(n), facets);
  std::map<std::string, std::string> antipode;
  for (int i = 0; i < axes; ++i) {
    std::string p = "e" + std::to_string(i + 1) + "+";
    std::string m = "e" + std::to_string(i + 1) + "-";
    antipode[p] = m;
    antipode[m] = p;
  }
  EquivariantComplex result{sphere, check_free_involution(sphere, antipode), std::nullopt};
  std::vector<std::vector<Rat>> coords(static_cast<size_t>(sphere.vertex_count()),
                                       std::vector<Rat>(static_cast<size_t>(axes), Rat(0)));
  for (int i = 0; i < axes; ++i) {
    coords[static_cast<size_t>(*sphere.find_vertex("e" + std::to_string(i + 1) + "+"))]
          [static_cast<size_t>(i)] = 1;
    coords[static_cast<size_t>(*sphere.find_vertex("e" + std::to_string(i + 1) + "-"))]
          [static_cast<size_t>(i)] = -1;
  }
  result.coordinates = std::move(coords);
  return result;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  /* Flags are enumerated as vertex orderings of each facet: the chain of
   * prefixes of an ordering is a maximal flag, and every maximal flag arises
   * exactly once this way. */
  std::vector<std::vector<std::string>> facets;
  for (const Simplex& f : k.facet_list()) {
    Simplex perm = f;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<std::string> flag;
      Simplex prefix;
      for (Vertex v : perm) {
        prefix.push_back(v);
        flag.push_back(k.simplex_label(sorted_simplex(prefix)));
      }
      facets.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex::from_facets("sd(" + k.name() + ")", facets);
}

EquivariantComplex barycentric_subdivision(const EquivariantComplex& e) {
  SimplicialComplex sd = barycentric_subdivision(e.complex);
  std::vector<Vertex> action(static_cast<size_t>(sd.vertex_count()), -1);
  for (int deg = 0; deg <= e.complex.dim(); ++deg) {
    for (const Simplex& s : e.complex.faces(deg)) {
      auto from = sd.find_vertex(e.complex.simplex_label(s));
      auto to = sd.find_vertex(e.complex.simplex_label(e.involution.image(s)));
      require_internal(from && to, "subdivision vertex missing");
      action[static_cast<size_t>(*from)] = *to;
    }
  }
  EquivariantComplex out{sd, check_free_involution(sd, std::move(action)), std::nullopt};
  if (e.coordinates) {
    std::vector<std::vector<Rat>> coords(static_cast<size_t>(sd.vertex_count()));
    for (int deg = 0; deg <= e.complex.dim(); ++deg)
      for (const Simplex& s : e.complex.faces(deg)) {
        auto v = sd.find_vertex(e.complex.simplex_label(s));
        coords[static_cast<size_t>(*v)] = barycenter(*e.coordinates, s);
      }
    out.coordinates = std::move(coords);
  }
  return out;
}

SimplicialComplex suspension(const SimplicialComplex& k, const std::string& north,
                             const std::string& south) {
  if (north == south) fail(ErrorCode::BadInput, "poles must be distinct");
  auto used = name_set(k);
  if (used.count(north) || used.count(south))
    fail(ErrorCode::BadInput, "pole name already used in " + k.name());
  std::vector<std::vector<std::string>> facets;
  for (const Simplex& f : k.facet_list()) {
    std::vector<std::string> base;
    for (Vertex v : f) base.push_back(k.vertex_name(v));
    for (const std::string& pole : {north, south}) {
      auto joined = base;
      joined.push_back(pole);
      facets.push_back(std::move(joined));
    }
  }
  return SimplicialComplex::from_facets("susp(" + k.name() + ")", facets);
}

EquivariantComplex suspension(const EquivariantComplex& e) {
  auto used = name_set(e.complex);
  std::string north = fresh_name(used, "pole+");
  std::string south = fresh_name(used, "pole-");
  SimplicialComplex s = suspension(e.complex, north, south);
  std::map<std::string, std::string> action;
  for (Vertex v = 0; v < e.complex.vertex_count(); ++v)
    action[e.complex.vertex_name(v)] = e.complex.vertex_name(e.involution(v));
  action[north] = south;
  action[south] = north;
  EquivariantComplex out{s, check_free_involution(s, action), std::nullopt};
  if (e.coordinates) {
    size_t width = e.coordinates->at(0).size() + 1;
    std::vector<std::vector<Rat>> coords(static_cast<size_t>(s.vertex_count()),
                                         std::vector<Rat>(width, Rat(0)));
    for (Vertex v = 0; v < e.complex.vertex_count(); ++v) {
      auto sv = s.find_vertex(e.complex.vertex_name(v));
      for (size_t i = 0; i + 1 < width; ++i)
        coords[static_cast<size_t>(*sv)][i] = (*e.coordinates)[static_cast<size_t>(v)][i];
    }
    coords[static_cast<size_t>(*s.find_vertex(north))][width - 1] = 1;
    coords[static_cast<size_t>(*s.find_vertex(south))][width - 1] = -1;
    out.coordinates = std::move(coords);
  }
  return out;
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Simplex& face,
                                    const std::string& new_vertex) {
  if (face.size() < 2) fail(ErrorCode::BadInput, "stellar subdivision needs a face of dim >= 1");
  if (!k.contains(face))
    fail(ErrorCode::BadInput, "stellar subdivision at a non-face of " + k.name());
  if (name_set(k).count(new_vertex))
    fail(ErrorCode::BadInput, "vertex name " + new_vertex + " already used");
  std::vector<std::vector<std::string>> facets;
  for (const Simplex& f : k.facet_list()) {
    bool containing = std::includes(f.begin(), f.end(), face.begin(), face.end());
    if (!containing) {
      std::vector<std::string> keep;
      for (Vertex v : f) keep.push_back(k.vertex_name(v));
      facets.push_back(std::move(keep));
      continue;
    }
    for (Vertex drop : face) {
      std::vector<std::string> part{new_vertex};
      for (Vertex v : f)
        if (v != drop) part.push_back(k.vertex_name(v));
      facets.push_back(std::move(part));
    }
  }
  return SimplicialComplex::from_facets(k.name(), facets);
}

bool is_full_subcomplex(const SimplicialComplex& z, const SimplicialComplex& x) {
  std::vector<Vertex> to_x(static_cast<size_t>(z.vertex_count()), -1);
  for (Vertex v = 0; v < z.vertex_count(); ++v)
    if (auto xv = x.find_vertex(z.vertex_name(v))) to_x[static_cast<size_t>(v)] = *xv;
  for (int deg = 1; deg <= z.dim(); ++deg) {
    for (const Simplex& s : z.faces(deg)) {
      Simplex mapped;
      bool spans = true;
      for (Vertex v : s) {
        if (to_x[static_cast<size_t>(v)] < 0) {
          spans = false;
          break;
        }
        mapped.push_back(to_x[static_cast<size_t>(v)]);
      }
      if (spans && !x.contains(sorted_simplex(std::move(mapped)))) return false;
    }
  }
  return true;
}

SimplicialComplex make_full(const SimplicialComplex& z, const SimplicialComplex& x) {
  SimplicialComplex current = z;
  int counter = 0;
  for (;;) {
    /* Find the largest offending simplex: spanned by X-vertices but absent
     * from X.  Subdividing it removes it and creates only simplices through
     * the new vertex, which is outside X, so the offender count drops. */
    std::vector<Vertex> to_x(static_cast<size_t>(current.vertex_count()), -1);
    for (Vertex v = 0; v < current.vertex_count(); ++v)
      if (auto xv = x.find_vertex(current.vertex_name(v))) to_x[static_cast<size_t>(v)] = *xv;
    Simplex offender;
    for (int deg = current.dim(); deg >= 1 && offender.empty(); --deg) {
      for (const Simplex& s : current.faces(deg)) {
        Simplex mapped;
        bool spans = true;
        for (Vertex v : s) {
          if (to_x[static_cast<size_t>(v)] < 0) {
            spans = false;
            break;
          }
          mapped.push_back(to_x[static_cast<size_t>(v)]);
        }
        if (spans && !x.contains(sorted_simplex(std::move(mapped)))) {
          offender = s;
          break;
        }
      }
    }
    if (offender.empty()) return current;
    auto used = name_set(current);
    current = stellar_subdivide(current, offender,
                                fresh_name(used, "f" + std::to_string(counter++)));
  }
}

CamomileResult camomile(const SimplicialComplex& z, const FreeInvolution& x_involution,
                        FullnessPolicy policy) {
  const SimplicialComplex& x = x_involution.complex;
  try {
    check_free_involution(x, x_involution.action);
  } catch (const Error& e) {
    fail(ErrorCode::NotFreeOnX, e.what());
  }
  try {
    inclusion_map(x, z);
  } catch (const Error& e) {
    fail(ErrorCode::BadInput, std::string("X is not a subcomplex of Z: ") + e.what());
  }

  SimplicialComplex zz = z;
  if (!is_full_subcomplex(zz, x)) {
    if (policy == FullnessPolicy::Reject)
      fail(ErrorCode::XNotFullSubcomplex, x.name() + " is not full in " + z.name());
    zz = make_full(zz, x);
    require_internal(is_full_subcomplex(zz, x), "fullness repair failed");
  }

  CamomileResult result;
  result.z_used = zz;

  if (x.vertex_count() == zz.vertex_count()) {
    /* Nothing outside X: the double is X itself. */
    result.doubled = EquivariantComplex{x, x_involution, std::nullopt};
    result.embedding = inclusion_map(zz, x);
    result.tags.assign(static_cast<size_t>(x.vertex_count()), CopyTag::Shared);
    return result;
  }

  auto shared = name_set(x);
  auto all = name_set(zz);
  auto tagged = [&](const std::string& n, int copy) {
    return n + (copy == 1 ? ".1" : ".2");
  };
  for (const std::string& n : all) {
    if (shared.count(n)) continue;
    for (int copy : {1, 2})
      if (all.count(tagged(n, copy)))
        fail(ErrorCode::BadInput, "vertex name " + tagged(n, copy) + " collides with a copy tag");
  }

  std::vector<std::vector<std::string>> facets;
  for (const Simplex& f : zz.facet_list()) {
    std::vector<std::string> copy1, copy2;
    for (Vertex v : f) {
      const std::string& n = zz.vertex_name(v);
      if (auto xv = x.find_vertex(n)) {
        copy1.push_back(n);
        copy2.push_back(x.vertex_name(x_involution(*xv)));
      } else {
        copy1.push_back(tagged(n, 1));
        copy2.push_back(tagged(n, 2));
      }
    }
    facets.push_back(std::move(copy1));
    facets.push_back(std::move(copy2));
  }
  auto doubled = SimplicialComplex::from_facets("D(" + x.name() + "," + zz.name() + ")", facets);

  std::map<std::string, std::string> action;
  for (Vertex v = 0; v < x.vertex_count(); ++v)
    action[x.vertex_name(v)] = x.vertex_name(x_involution(v));
  for (const std::string& n : all) {
    if (shared.count(n)) continue;
    action[tagged(n, 1)] = tagged(n, 2);
    action[tagged(n, 2)] = tagged(n, 1);
  }
  result.doubled = EquivariantComplex{doubled, check_free_involution(doubled, action), std::nullopt};

  std::map<std::string, std::string> embed;
  for (Vertex v = 0; v < zz.vertex_count(); ++v) {
    const std::string& n = zz.vertex_name(v);
    embed[n] = shared.count(n) ? n : tagged(n, 1);
  }
  result.embedding = check_simplicial_map(zz, doubled, embed);

  result.tags.assign(static_cast<size_t>(doubled.vertex_count()), CopyTag::Shared);
  for (Vertex v = 0; v < doubled.vertex_count(); ++v) {
    const std::string& n = doubled.vertex_name(v);
    if (shared.count(n)) continue;
    result.tags[static_cast<size_t>(v)] =
        n.size() >= 2 && n.substr(n.size() - 2) == ".1" ? CopyTag::Copy1 : CopyTag::Copy2;
  }
  return result;
}

CamomileResult connected_sum_double(const SimplicialComplex& m, const Simplex& facet) {
  auto report = classify_pseudomanifold(m);
  if (!(report.is_pseudomanifold && report.is_closed))
    fail(ErrorCode::NotClosedPseudomanifold, m.name() + " is not a closed pseudomanifold");
  const int d = m.dim();
  if (d < 1) fail(ErrorCode::BadInput, "connected sum needs dimension at least 1");
  auto it = std::find(m.facet_list().begin(), m.facet_list().end(), facet);
  if (it == m.facet_list().end())
    fail(ErrorCode::BadInput, "chosen simplex is not a facet of " + m.name());

  /* Open the facet into a ball around a center c whose link becomes an
   * octahedral sphere: first the cone point c, then one stellar subdivision
   * per step at a triangle {c, a, b}, which splits the link edge {a, b} at a
   * new vertex.  The popped pair (a, b) ends up antipodal in the link; after
   * d-1 steps the two queue survivors form the last pair. */
  auto used = name_set(m);
  std::string center = fresh_name(used, "c*");
  used.insert(center);

  SimplicialComplex current = stellar_subdivide(m, facet, center);
  std::vector<std::string> queue;
  for (Vertex v : facet) queue.push_back(m.vertex_name(v));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int step = 0; step + 1 < d; ++step) {
    std::string a = queue[0], b = queue[1];
    queue.erase(queue.begin(), queue.begin() + 2);
    std::string split = fresh_name(used, "s" + std::to_string(step));
    used.insert(split);
    Simplex tri = sorted_simplex({*current.find_vertex(center), *current.find_vertex(a),
                                  *current.find_vertex(b)});
    current = stellar_subdivide(current, tri, split);
    pairs.push_back({a, b});
    queue.push_back(split);
  }
  require_internal(queue.size() == 2, "octahedral link bookkeeping failed");
  pairs.push_back({queue[0], queue[1]});

  /* Z = complex minus the open star of the center; X = link of the center. */
  Vertex c = *current.find_vertex(center);
  std::vector<std::vector<std::string>> z_facets, x_facets;
  for (const Simplex& f : current.facet_list()) {
    bool has_center = std::binary_search(f.begin(), f.end(), c);
    std::vector<std::string> names;
    for (Vertex v : f)
      if (v != c) names.push_back(current.vertex_name(v));
    if (has_center)
      x_facets.push_back(std::move(names));
    else
      z_facets.push_back(std::move(names));
  }
  auto z = SimplicialComplex::from_facets("cut(" + m.name() + ")", z_facets);
  auto x = SimplicialComplex::from_facets("seam(" + m.name() + ")", x_facets);
  require_internal(x.vertex_count() == 2 * d, "octahedral seam has wrong vertex count");

  std::map<std::string, std::string> antipode;
  for (const auto& [a, b] : pairs) {
    antipode[a] = b;
    antipode[b] = a;
  }
  FreeInvolution seam_involution = check_free_involution(x, antipode);
  return camomile(z, seam_involution, FullnessPolicy::Repair);
}

}  // namespace yangdex
