#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yangdex/complex.hpp"
#include "yangdex/exact.hpp"

namespace yangdex {

/* Degree of a simplicial map between closed (almost) pseudomanifolds of the
 * same dimension, counted over one target facet.  The integer value is set
 * only when both sides were oriented. */
struct DegreeResult {
  int mod2 = 0;
  std::optional<long long> integer;
  int facet_used = 0;  // index into target facet_list()
  /* Every target facet was counted and gave the same value. */
  bool well_defined_verified = false;
};

/* Parity of the number of source facets mapping bijectively onto a target
 * facet; degenerate preimages do not count.  With verify, all target facets
 * are counted and a disagreement raises IllDefined. */
DegreeResult degree_mod2(const SimplicialMap& f, bool verify = true);

/* Signed count: a bijective preimage contributes the product of its source
 * sign, the sign of the vertex permutation induced by f, and the target
 * facet's sign. */
DegreeResult degree_int(const SimplicialMap& f, const Orientation& source_orientation,
                        const Orientation& target_orientation, bool verify = true);
/* Orients both sides itself; NonOrientable when either side fails. */
DegreeResult degree_int(const SimplicialMap& f, bool verify = true);

/* Odd-degree criteria for an equivariant map of closed almost
 * pseudomanifolds carrying free involutions.  When both sides have full
 * Yang index the mod-2 degree must be odd; when the target is sphere-like
 * the converse reads the source's top Borsuk-Ulam property off the degree. */
struct OddDegreeReport {
  DegreeResult degree;
  int dim = -1;
  int source_hind2 = -1;
  int target_hind2 = -1;
  bool both_full_index = false;
  /* Closed almost pseudomanifold with the mod-2 Betti numbers of a sphere
   * and full Yang index. */
  bool sphere_like_target = false;
  /* Set when the target is sphere-like: source is BUT in its top dimension
   * iff the degree is odd. */
  std::optional<bool> source_top_but;
  /* source_top_but, when present, does not contradict but_certificate. */
  bool certificate_consistent = true;
};

OddDegreeReport odd_degree_check(const SimplicialMap& f, const FreeInvolution& source_inv,
                                 const FreeInvolution& target_inv);

/* Map to Q^d, affine on each simplex, given exactly by vertex images. */
struct PLMap {
  SimplicialComplex source;
  int target_dim = 0;
  std::vector<std::vector<Rat>> coords;  // per vertex

  const std::vector<Rat>& operator()(Vertex v) const {
    return coords[static_cast<size_t>(v)];
  }
};

PLMap check_pl_map(const SimplicialComplex& k, int target_dim,
                   std::vector<std::vector<Rat>> coords);
PLMap check_pl_map(const SimplicialComplex& k, int target_dim,
                   const std::map<std::string, std::vector<Rat>>& coords);

struct Zero {
  Simplex facet;
  std::vector<Rat> barycentric;  // strictly positive, matching facet order
};

struct ZeroReport {
  bool transversal = false;
  std::vector<Zero> zeros;
  int count = 0;
  /* Present when an involution was supplied (h verified antipodal). */
  std::optional<int> count_mod4;
  std::optional<bool> is_4k_plus_2;
};

/* All zeros of h on a closed d-pseudomanifold mapped to Q^d.  A zero on the
 * (d-1)-skeleton, or a degenerate facet whose image captures 0, raises
 * NotTransversal naming the facet; the caller perturbs and retries. */
ZeroReport pl_zeros(const PLMap& h, const std::optional<FreeInvolution>& involution = {});

}  // namespace yangdex
