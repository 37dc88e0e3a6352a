#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yangdex/complex.hpp"

namespace yangdex {

/* Orbit space of a free involution.  `cover` is the complex the projection
 * maps from: the input itself when the action is regular, its equivariant
 * barycentric subdivision otherwise.  Regular means two simplices project to
 * the same image only when they form an orbit pair. */
struct QuotientData {
  EquivariantComplex cover;
  SimplicialComplex quotient;
  std::vector<Vertex> projection;  // V(cover) -> V(quotient)
  std::vector<Vertex> section;     // V(quotient) -> V(cover), right inverse
  bool subdivided = false;
};

QuotientData quotient(const SimplicialComplex& x, const FreeInvolution& a);

/* The 1-cocycle on X/T classifying the double cover X -> X/T: an edge is
 * marked when the chosen section breaks over it. */
struct CharacteristicCocycle {
  QuotientData data;
  std::vector<uint8_t> w;  // indexed by the sorted edge list of the quotient
};

CharacteristicCocycle characteristic_cocycle(const SimplicialComplex& x,
                                             const FreeInvolution& a);

/* Yang's mod 2 index: the largest n with w^n not a coboundary. */
struct IndexReport {
  int hind2 = 0;
  CharacteristicCocycle characteristic;
  /* witnesses[n-1] holds the cochain of w^n for n = 1..hind2; each one has a
   * nonzero class on the quotient. */
  std::vector<std::vector<uint8_t>> witnesses;
  /* hind2 + 1: w to this power is a coboundary or exceeds the dimension. */
  int first_vanishing_power = 1;
};

IndexReport hind2(const SimplicialComplex& x, const FreeInvolution& a);

enum class ButVerdict : std::uint8_t { Yes, No, Unknown };
enum class Equivalence : std::uint8_t { None, Manifold, AlmostPseudomanifold, TwoPrimary };

std::string to_string(ButVerdict v);
std::string to_string(Equivalence e);

/* Certified interval for the equivariant mapping index tind, with one
 * Borsuk-Ulam verdict per candidate dimension.  hind2 <= tind <= dim always;
 * the top verdict is settled negatively only when an equivalence applies:
 * for a closed almost pseudomanifold, or under the two-primary hypothesis,
 * tind = dim forces hind2 = dim. */
struct ButCertificate {
  int hind2 = 0;
  int dim = 0;
  int tind_lower = 0;
  int tind_upper = 0;
  std::vector<ButVerdict> but_n;  // verdict for BUT_n, n = 0..dim
  Equivalence equivalence_applied = Equivalence::None;
  bool closed_almost_pseudomanifold = false;
  bool two_primary_ok = false;
  std::vector<std::string> notes;
  IndexReport index;
};

ButCertificate but_certificate(const SimplicialComplex& x, const FreeInvolution& a);

enum class Coefficients : std::uint8_t { GF2, Integer };

/* Hypothesis of the relative intersection theorem: X an invariant subcomplex
 * of Z with hind2(X) >= d - 1 and the restriction H^{d-1}(Z) -> H^{d-1}(X)
 * zero in the chosen coefficients. */
struct RelativeReport {
  int d = 0;
  Coefficients coefficients = Coefficients::GF2;
  int hind2_x = 0;
  bool index_ok = false;
  bool restriction_zero = false;
  bool holds = false;
};

RelativeReport relative_hypothesis(const SimplicialComplex& z, const SimplicialComplex& x,
                                   const FreeInvolution& a, int d, Coefficients coeff);

}  // namespace yangdex
