#pragma once

#include <vector>

#include "yangdex/complex.hpp"
#include "yangdex/exact.hpp"
#include "yangdex/gf2.hpp"

namespace yangdex {

/* Cochains in degree k are vectors indexed by faces(k) in their sorted
 * order.  The coboundary of deg-cochains has one row per (deg+1)-face and
 * one column per deg-face; degrees outside [0, dim] give empty matrices of
 * the right shape.
 *
 * Functions returning references hand out data cached on the complex; the
 * reference stays valid as long as some SimplicialComplex handle to the
 * same underlying data is alive. */
const GF2Matrix& coboundary_gf2(const SimplicialComplex& k, int deg);
const IntMatrix& coboundary_int(const SimplicialComplex& k, int deg);

bool is_cocycle_gf2(const SimplicialComplex& k, int deg, const std::vector<uint8_t>& c);
bool is_coboundary_gf2(const SimplicialComplex& k, int deg, const std::vector<uint8_t>& c);

/* Mod 2 Betti numbers b_0..b_dim. */
std::vector<int> betti_gf2(const SimplicialComplex& k);

int euler_characteristic(const SimplicialComplex& k);

/* Basis of H^deg with GF(2) coefficients, with coordinates for arbitrary
 * cocycles.  Representatives and coordinates are deterministic. */
class Gf2Cohomology {
 public:
  int deg() const { return deg_; }
  const std::vector<std::vector<uint8_t>>& basis() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.size()); }

  /* Coordinates of the class of a cocycle in `basis`; throws NotCocycle when
   * the input is not closed. */
  std::vector<uint8_t> coordinates(const std::vector<uint8_t>& cocycle) const;
  bool class_is_zero(const std::vector<uint8_t>& cocycle) const;

 private:
  friend const Gf2Cohomology& gf2_cohomology(const SimplicialComplex&, int);
  int deg_ = 0;
  std::vector<std::vector<uint8_t>> basis_;
  GF2Matrix delta_;       // coboundary out of this degree
  GF2Matrix decompose_;   // [coboundary columns | basis columns]
  int prev_cols_ = 0;
};

const Gf2Cohomology& gf2_cohomology(const SimplicialComplex& k, int deg);

struct IntCohomology {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility order
};

IntCohomology integer_cohomology(const SimplicialComplex& k, int deg);

/* Integer cohomology with explicit generators: coordinates of a cocycle's
 * class are reported per generator, reduced into [0, order) for torsion
 * generators.  Built from Smith normal forms of the two coboundaries. */
class IntCohomologyModel {
 public:
  int deg() const { return deg_; }
  /* One entry per generator: 0 for an infinite-order generator, d > 1 for a
   * torsion generator of order d.  Torsion generators come first. */
  const std::vector<Int>& orders() const { return orders_; }
  const std::vector<std::vector<Int>>& generator_cocycles() const { return generators_; }

  std::vector<Int> coordinates(const std::vector<Int>& cocycle) const;
  bool class_is_zero(const std::vector<Int>& cocycle) const;

 private:
  friend const IntCohomologyModel& int_cohomology_model(const SimplicialComplex&, int);
  int deg_ = 0;
  std::vector<Int> orders_;
  std::vector<std::vector<Int>> generators_;
  std::vector<int> kept_;       // generator index -> row in the SNF frame
  std::vector<Int> frame_orders_;  // per SNF row: d' (possibly 1) or 0
  IntMatrix delta_;             // coboundary out of this degree
  IntMatrix kernel_coords_;     // bottom rows of V^-1 from SNF(delta)
  IntMatrix uprime_;            // U' from SNF of the relation matrix
};

const IntCohomologyModel& int_cohomology_model(const SimplicialComplex& k, int deg);

/* Alexander-Whitney cup product of cochains, front p-face against back
 * q-face in the global vertex order. */
std::vector<uint8_t> cup_gf2(const SimplicialComplex& k, int p, const std::vector<uint8_t>& a,
                             int q, const std::vector<uint8_t>& b);

/* f^# on cochains.  The integer version carries the sign of the permutation
 * that sorts the image vertices; simplices collapsed by f contribute 0. */
std::vector<uint8_t> pullback_gf2(const SimplicialMap& f, int deg, const std::vector<uint8_t>& c);
std::vector<Int> pullback_int(const SimplicialMap& f, int deg, const std::vector<Int>& c);

}  // namespace yangdex
