#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "yangdex/exact.hpp"

namespace yangdex {

using Vertex = int;
/* Vertices in strictly increasing internal order. */
using Simplex = std::vector<Vertex>;

namespace detail {

/* Type-erased per-complex cache for memoized derived data (coboundary
 * matrices, cohomology bases).  Guarded by its own mutex so complexes can be
 * shared across threads. */
struct Cache {
  std::mutex mutex;
  std::map<std::string, std::shared_ptr<const void>> entries;
};

struct ComplexData;

}  // namespace detail

/* Immutable abstract simplicial complex.  Construction validates and closes
 * the facet list under faces; afterwards the object is shared freely and all
 * derived data is cached behind it. */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /* Validates facet lists given by vertex name.  Duplicate and non-maximal
   * facets are absorbed with a warning recorded on the result. */
  static SimplicialComplex from_facets(const std::string& name,
                                       const std::vector<std::vector<std::string>>& facets);

  /* Internal constructor used by quotients and constructions: vertex names
   * define the interning order after sorting, facets use indices into the
   * sorted name list.  An empty facet list is allowed here (boundary of a
   * closed complex); from_facets rejects it. */
  static SimplicialComplex from_simplices(const std::string& name,
                                          std::vector<std::string> vertex_names,
                                          std::vector<Simplex> facets);

  bool valid() const { return data_ != nullptr; }
  const std::string& name() const;
  int dim() const;  // -1 for the empty complex
  int vertex_count() const;
  bool empty() const { return vertex_count() == 0; }

  const std::vector<std::string>& vertex_names() const;
  const std::string& vertex_name(Vertex v) const;
  std::optional<Vertex> find_vertex(const std::string& name) const;

  /* All k-simplices, lexicographically sorted; k in [0, dim]. */
  const std::vector<Simplex>& faces(int k) const;
  const std::vector<Simplex>& facet_list() const;
  std::vector<int> f_vector() const;
  long total_faces() const;

  bool contains(const Simplex& s) const;
  /* Position of s within faces(k), -1 if absent. */
  int face_index(const Simplex& s) const;

  const std::vector<std::string>& warnings() const;

  std::string simplex_label(const Simplex& s) const;  // "{a,b,c}" for reports

  /* Identity of the underlying immutable data; used as cache key. */
  const void* id() const { return data_.get(); }
  detail::Cache& cache() const;

 private:
  std::shared_ptr<const detail::ComplexData> data_;
  explicit SimplicialComplex(std::shared_ptr<const detail::ComplexData> d) : data_(std::move(d)) {}
};

/* Simplicial involution with no fixed simplex: s and A(s) are disjoint for
 * every simplex s. */
struct FreeInvolution {
  SimplicialComplex complex;
  std::vector<Vertex> action;  // vertex -> vertex

  Vertex operator()(Vertex v) const { return action[v]; }
  Simplex image(const Simplex& s) const;
  /* Orbit representatives, one per {v, A(v)} pair, ascending. */
  std::vector<Vertex> orbit_representatives() const;
};

FreeInvolution check_free_involution(const SimplicialComplex& k,
                                     const std::map<std::string, std::string>& action);
FreeInvolution check_free_involution(const SimplicialComplex& k, std::vector<Vertex> action);

/* A simplicial complex with a free involution, optionally carrying exact
 * coordinates (one rational vector per vertex). */
struct EquivariantComplex {
  SimplicialComplex complex;
  FreeInvolution involution;
  std::optional<std::vector<std::vector<Rat>>> coordinates;
};

struct SimplicialMap {
  SimplicialComplex source, target;
  std::vector<Vertex> vertex_map;  // source vertex -> target vertex

  Vertex operator()(Vertex v) const { return vertex_map[v]; }
  /* Image as a vertex set; collapsed vertices keep one copy, so the result
   * can have lower dimension than s. */
  Simplex image(const Simplex& s) const;
};

/* Equivariance requirement for check_simplicial_map: a vertex action on a
 * region of the source must intertwine with an action on the target. */
struct EquivarianceSpec {
  std::vector<Vertex> region;         // source vertices the condition covers
  std::vector<Vertex> source_action;  // indexed by source vertex; -1 outside region
  std::vector<Vertex> target_action;  // indexed by target vertex
};

EquivarianceSpec whole_complex_equivariance(const FreeInvolution& source_inv,
                                            const FreeInvolution& target_inv);

SimplicialMap check_simplicial_map(const SimplicialComplex& x, const SimplicialComplex& y,
                                   const std::map<std::string, std::string>& vertex_map,
                                   const std::optional<EquivarianceSpec>& equivariant_on = {});
SimplicialMap check_simplicial_map(const SimplicialComplex& x, const SimplicialComplex& y,
                                   std::vector<Vertex> vertex_map,
                                   const std::optional<EquivarianceSpec>& equivariant_on = {});

/* Inclusion of a complex whose vertex names form a subset of y's and whose
 * simplices are all simplices of y. */
SimplicialMap inclusion_map(const SimplicialComplex& x, const SimplicialComplex& y);

struct PseudomanifoldReport {
  int dimension = -1;
  bool pure = false;
  /* Pure and every (dim-1)-simplex lies in one or two facets. */
  bool is_almost_pseudomanifold = false;
  /* Facets connected through shared ridges. */
  bool is_strongly_connected = false;
  bool is_pseudomanifold = false;
  /* Subcomplex generated by ridges with exactly one cofacet. */
  SimplicialComplex boundary;
  bool is_closed = false;
};

PseudomanifoldReport classify_pseudomanifold(const SimplicialComplex& k);

struct Orientation {
  bool orientable = false;
  /* Sign per facet (index into facet_list) relative to ascending vertex
   * order; empty when not orientable. */
  std::vector<int8_t> facet_signs;
};

/* Coherent orientation of an almost pseudomanifold, or orientable=false.
 * Each strongly connected component is seeded with +1 on its first facet,
 * so the result is deterministic. */
Orientation orient(const SimplicialComplex& k);

/* True when facet_signs induce opposite orientations on every ridge shared
 * by two facets.  Exposed so tests can check the global-flip torsor
 * property. */
bool orientation_coherent(const SimplicialComplex& k, const std::vector<int8_t>& facet_signs);

/* --- simplex utilities shared across modules --- */

/* Sorts and rejects duplicate vertices. */
Simplex sorted_simplex(std::vector<Vertex> vertices);

/* All nonempty subsets of s, each sorted.  s must be sorted. */
std::vector<Simplex> nonempty_subsets(const Simplex& s);

/* The set of all faces of the given simplices, sorted and deduplicated. */
std::vector<Simplex> face_closure(const std::vector<Simplex>& generators);

}  // namespace yangdex
