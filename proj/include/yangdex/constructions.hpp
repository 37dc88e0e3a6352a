#pragma once

#include <string>
#include <vector>

#include "yangdex/complex.hpp"

namespace yangdex {

/* Boundary of the (n+1)-dimensional cross polytope: an n-sphere with the
 * antipodal involution and rational coordinates +-e_i attached. */
EquivariantComplex cross_polytope_sphere(int n);

/* Vertices of the subdivision are the faces of the input (named by their
 * label), simplices are chains under inclusion.  The equivariant overload
 * carries the induced involution, re-verified free; both overloads place
 * subdivision vertices at barycenters when coordinates are present. */
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);
EquivariantComplex barycentric_subdivision(const EquivariantComplex& e);

/* Join with two fresh poles; the equivariant overload swaps the poles and
 * picks fresh pole names itself. */
SimplicialComplex suspension(const SimplicialComplex& k, const std::string& north,
                             const std::string& south);
EquivariantComplex suspension(const EquivariantComplex& e);

/* Replace the star of `face` (dim >= 1) with the cone from a new vertex. */
SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Simplex& face,
                                    const std::string& new_vertex);

/* X (given by vertex names shared with Z) is full in Z when every simplex
 * of Z spanned by X-vertices is a simplex of X. */
bool is_full_subcomplex(const SimplicialComplex& z, const SimplicialComplex& x);

/* Stellar-subdivides offending simplices of Z, largest first, until X is
 * full.  X itself is never touched: offenders and their cofaces lie outside
 * X.  X must already be a subcomplex of Z. */
SimplicialComplex make_full(const SimplicialComplex& z, const SimplicialComplex& x);

enum class FullnessPolicy {
  Repair,  // run make_full on Z when X is not full
  Reject,  // raise XNotFullSubcomplex instead
};

enum class CopyTag : uint8_t { Shared, Copy1, Copy2 };

/* Double of Z along X: two copies of Z glued over X, carrying the free
 * involution that applies A on the shared part and swaps the copies. */
struct CamomileResult {
  EquivariantComplex doubled;
  SimplicialComplex z_used;     // Z after any fullness repair
  SimplicialMap embedding;      // z_used -> doubled, the copy1 side
  std::vector<CopyTag> tags;    // per vertex of doubled
};

CamomileResult camomile(const SimplicialComplex& z, const FreeInvolution& x_involution,
                        FullnessPolicy policy = FullnessPolicy::Repair);

/* M # M with the summand-swapping involution: the chosen facet is opened up
 * into a ball whose boundary is an octahedral sphere S (stellar subdivisions
 * only, nothing outside the facet is touched), Z = M minus the open ball,
 * and the result is camomile(S inside Z).  M must be a closed pseudomanifold
 * and the facet choice is the caller's. */
CamomileResult connected_sum_double(const SimplicialComplex& m, const Simplex& facet);

}  // namespace yangdex
