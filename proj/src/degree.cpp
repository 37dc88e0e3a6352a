#include "yangdex/degree.hpp"

#include <algorithm>
#include <map>

#include "yangdex/cohomology.hpp"
#include "yangdex/errors.hpp"
#include "yangdex/lemmas.hpp"
#include "yangdex/yang.hpp"

namespace yangdex {

namespace {

int require_closed_equal_dims(const SimplicialMap& f) {
  PseudomanifoldReport s = classify_pseudomanifold(f.source);
  if (!s.is_almost_pseudomanifold || !s.is_closed)
    fail(ErrorCode::NotClosed, "source is not a closed almost pseudomanifold");
  PseudomanifoldReport t = classify_pseudomanifold(f.target);
  if (!t.is_almost_pseudomanifold || !t.is_closed)
    fail(ErrorCode::NotClosed, "target is not a closed almost pseudomanifold");
  if (f.source.dim() != f.target.dim())
    fail(ErrorCode::DimensionMismatch, "degree needs equal dimensions");
  return f.source.dim();
}

std::map<Simplex, int> facet_indices(const SimplicialComplex& k) {
  std::map<Simplex, int> index;
  const auto& facets = k.facet_list();
  for (size_t i = 0; i < facets.size(); ++i) index[facets[i]] = static_cast<int>(i);
  return index;
}

int permutation_sign(const std::vector<Vertex>& seq) {
  int sign = 1;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) sign = -sign;
  return sign;
}

}  // namespace

DegreeResult degree_mod2(const SimplicialMap& f, bool verify) {
  int d = require_closed_equal_dims(f);
  std::map<Simplex, int> index = facet_indices(f.target);
  std::vector<int> count(f.target.facet_list().size(), 0);
  for (const Simplex& s : f.source.facet_list()) {
    Simplex image = f.image(s);
    if (static_cast<int>(image.size()) != d + 1) continue;
    auto it = index.find(image);
    require_internal(it != index.end(), "full-dimensional image is not a facet");
    ++count[static_cast<size_t>(it->second)];
  }
  DegreeResult r;
  r.mod2 = count[0] & 1;
  r.facet_used = 0;
  if (verify) {
    for (size_t i = 1; i < count.size(); ++i)
      if ((count[i] & 1) != r.mod2)
        fail(ErrorCode::IllDefined,
             "facet " + f.target.simplex_label(f.target.facet_list()[i]) +
                 " disagrees with facet " + f.target.simplex_label(f.target.facet_list()[0]));
    r.well_defined_verified = true;
  }
  return r;
}

DegreeResult degree_int(const SimplicialMap& f, const Orientation& source_orientation,
                        const Orientation& target_orientation, bool verify) {
  int d = require_closed_equal_dims(f);
  if (!source_orientation.orientable)
    fail(ErrorCode::NonOrientable, "source orientation is missing");
  if (!target_orientation.orientable)
    fail(ErrorCode::NonOrientable, "target orientation is missing");
  const auto& source_facets = f.source.facet_list();
  const auto& target_facets = f.target.facet_list();
  if (source_orientation.facet_signs.size() != source_facets.size() ||
      target_orientation.facet_signs.size() != target_facets.size())
    fail(ErrorCode::BadInput, "orientation does not match the complex");

  std::map<Simplex, int> index = facet_indices(f.target);
  std::vector<long long> sum(target_facets.size(), 0);
  for (size_t si = 0; si < source_facets.size(); ++si) {
    const Simplex& s = source_facets[si];
    std::vector<Vertex> mapped;
    mapped.reserve(s.size());
    for (Vertex v : s) mapped.push_back(f(v));
    Simplex image = mapped;
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) continue;
    if (static_cast<int>(image.size()) != d + 1) continue;
    auto it = index.find(image);
    require_internal(it != index.end(), "full-dimensional image is not a facet");
    int sign = source_orientation.facet_signs[si] * permutation_sign(mapped) *
               target_orientation.facet_signs[static_cast<size_t>(it->second)];
    sum[static_cast<size_t>(it->second)] += sign;
  }
  DegreeResult r;
  r.integer = sum[0];
  r.mod2 = static_cast<int>(((sum[0] % 2) + 2) % 2);
  r.facet_used = 0;
  if (verify) {
    for (size_t i = 1; i < sum.size(); ++i)
      if (sum[i] != sum[0])
        fail(ErrorCode::IllDefined,
             "facet " + f.target.simplex_label(target_facets[i]) + " gives " +
                 std::to_string(sum[i]) + ", facet " +
                 f.target.simplex_label(target_facets[0]) + " gives " +
                 std::to_string(sum[0]));
    r.well_defined_verified = true;
  }
  DegreeResult parity = degree_mod2(f, verify);
  require_internal(parity.mod2 == r.mod2, "integer degree parity disagrees with deg_2");
  return r;
}

DegreeResult degree_int(const SimplicialMap& f, bool verify) {
  return degree_int(f, orient(f.source), orient(f.target), verify);
}

OddDegreeReport odd_degree_check(const SimplicialMap& f, const FreeInvolution& source_inv,
                                 const FreeInvolution& target_inv) {
  if (source_inv.complex.id() != f.source.id() || target_inv.complex.id() != f.target.id())
    fail(ErrorCode::BadInput, "involutions must act on the map's source and target");
  check_simplicial_map(f.source, f.target, f.vertex_map,
                       whole_complex_equivariance(source_inv, target_inv));

  OddDegreeReport r;
  r.degree = degree_mod2(f);
  r.dim = f.source.dim();
  r.source_hind2 = hind2(f.source, source_inv).hind2;
  r.target_hind2 = hind2(f.target, target_inv).hind2;
  r.both_full_index = r.source_hind2 == r.dim && r.target_hind2 == r.dim;
  require_internal(!(r.both_full_index && r.degree.mod2 == 0),
                   "a map between spaces of full index has odd degree");

  std::vector<int> betti = betti_gf2(f.target);
  bool sphere_betti = betti[0] == 1 && betti[static_cast<size_t>(r.dim)] == 1;
  for (int k = 1; k < r.dim; ++k)
    if (betti[static_cast<size_t>(k)] != 0) sphere_betti = false;
  r.sphere_like_target = r.dim >= 1 && sphere_betti && r.target_hind2 == r.dim;

  if (r.sphere_like_target) {
    r.source_top_but = r.degree.mod2 == 1;
    ButCertificate cert = but_certificate(f.source, source_inv);
    ButVerdict v = cert.but_n[static_cast<size_t>(r.dim)];
    if (v != ButVerdict::Unknown)
      r.certificate_consistent = (v == ButVerdict::Yes) == *r.source_top_but;
  }
  return r;
}

PLMap check_pl_map(const SimplicialComplex& k, int target_dim,
                   std::vector<std::vector<Rat>> coords) {
  if (target_dim < 1) fail(ErrorCode::BadInput, "target dimension must be positive");
  if (coords.size() != static_cast<size_t>(k.vertex_count()))
    fail(ErrorCode::BadInput, "one coordinate vector per vertex required");
  for (const auto& c : coords)
    if (static_cast<int>(c.size()) != target_dim)
      fail(ErrorCode::BadInput, "coordinate vectors must have the target dimension");
  return PLMap{k, target_dim, std::move(coords)};
}

PLMap check_pl_map(const SimplicialComplex& k, int target_dim,
                   const std::map<std::string, std::vector<Rat>>& coords) {
  std::vector<std::vector<Rat>> by_vertex(static_cast<size_t>(k.vertex_count()));
  for (Vertex v = 0; v < k.vertex_count(); ++v) {
    auto it = coords.find(k.vertex_name(v));
    if (it == coords.end())
      fail(ErrorCode::BadInput, "no coordinates for vertex " + k.vertex_name(v));
    by_vertex[static_cast<size_t>(v)] = it->second;
  }
  if (coords.size() != static_cast<size_t>(k.vertex_count()))
    fail(ErrorCode::BadInput, "coordinates name vertices the complex does not have");
  return check_pl_map(k, target_dim, std::move(by_vertex));
}

ZeroReport pl_zeros(const PLMap& h, const std::optional<FreeInvolution>& involution) {
  PseudomanifoldReport s = classify_pseudomanifold(h.source);
  if (!s.is_almost_pseudomanifold || !s.is_closed)
    fail(ErrorCode::NotClosed, "zero counting needs a closed almost pseudomanifold");
  int d = h.source.dim();
  if (d != h.target_dim)
    fail(ErrorCode::DimensionMismatch, "the map must land in Q^dim");
  if (involution) {
    if (involution->complex.id() != h.source.id())
      fail(ErrorCode::BadInput, "involution acts on a different complex");
    for (Vertex v = 0; v < h.source.vertex_count(); ++v) {
      const auto& a = h(v);
      const auto& b = h((*involution)(v));
      for (int i = 0; i < d; ++i)
        if (a[static_cast<size_t>(i)] != -b[static_cast<size_t>(i)])
          fail(ErrorCode::NotAntipodal,
               "map is not antipodal at " + h.source.vertex_name(v));
    }
  }

  ZeroReport r;
  for (const Simplex& facet : h.source.facet_list()) {
    std::vector<std::vector<Rat>> pts;
    pts.reserve(facet.size());
    for (Vertex v : facet) pts.push_back(h(v));
    if (!origin_in_hull(pts, d)) continue;
    RatMatrix m(d + 1, d + 1);
    for (int c = 0; c <= d; ++c) {
      for (int row = 0; row < d; ++row) m.at(row, c) = pts[static_cast<size_t>(c)][row];
      m.at(d, c) = 1;
    }
    std::vector<Rat> rhs(static_cast<size_t>(d) + 1, Rat(0));
    rhs.back() = 1;
    auto solved = rational_solve(m, rhs);
    require_internal(solved.has_value(), "hull certificate without a solution");
    bool interior = solved->unique;
    for (const Rat& x : solved->solution)
      if (x <= 0) interior = false;
    if (!interior)
      fail(ErrorCode::NotTransversal,
           "zero meets the boundary of facet " + h.source.simplex_label(facet));
    r.zeros.push_back(Zero{facet, solved->solution});
  }
  r.count = static_cast<int>(r.zeros.size());
  r.transversal = true;
  if (involution) {
    r.count_mod4 = r.count % 4;
    r.is_4k_plus_2 = r.count % 4 == 2;
  }
  return r;
}

}  // namespace yangdex
