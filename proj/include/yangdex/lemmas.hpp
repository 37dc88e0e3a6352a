#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yangdex/complex.hpp"
#include "yangdex/exact.hpp"

namespace yangdex {

constexpr Vertex kNoVertex = -1;

/* Total vertex labeling into {+-1, ..., +-m}, antipodal on a declared
 * region: the whole vertex set, or the vertices of a subcomplex. */
struct Labeling {
  SimplicialComplex complex;
  std::vector<int> labels;  // per vertex, never 0, absolute value <= m
  int m = 0;
  std::vector<Vertex> region;  // vertices the antipodality condition covers
  std::vector<Vertex> partner;  // involution on the region; kNoVertex outside

  int operator()(Vertex v) const { return labels[static_cast<size_t>(v)]; }
};

Labeling check_labeling(const SimplicialComplex& k, const std::vector<int>& labels, int m,
                        const FreeInvolution& a);
Labeling check_labeling(const SimplicialComplex& k,
                        const std::map<std::string, int>& labels, int m,
                        const FreeInvolution& a);
/* Antipodality only on a subcomplex (its involution given on its own vertex
 * ids); interior labels are unconstrained. */
Labeling check_labeling_on(const SimplicialComplex& k, const std::vector<int>& labels,
                           int m, const SimplicialComplex& region,
                           const FreeInvolution& region_involution);

/* All edges {u, v} with L(u) = -L(v). */
std::vector<Simplex> complementary_edges(const Labeling& l);

/* Top-dimensional simplices whose labels, sorted by absolute value, have
 * pairwise distinct absolute values and strictly alternating signs.  The
 * standard form starts positive; the relative variant accepts the globally
 * negated form as well.  Requires a labeling without complementary edges. */
std::vector<Simplex> fan_simplices(const Labeling& l, bool same_sign_variant = false);

/* One label per absolute value 1..d+1. */
struct LabelPattern {
  std::vector<int> labels;  // labels[i] has absolute value i+1
};

LabelPattern check_pattern(const std::vector<int>& labels);

struct ShashkinCount {
  int count = 0;
  bool odd = false;
};

/* Number of top simplices of a closed almost pseudomanifold whose label set
 * is exactly the pattern (or its negation, when included). */
ShashkinCount shashkin_count(const Labeling& l, const LabelPattern& pattern,
                             bool include_negation = false);

/* Centrally symmetric rational configuration p_{+-1..+-m} in Q^n, stored by
 * its positive half so p_{-k} = -p_k holds exactly. */
struct PointConfiguration {
  int m = 0;
  int n = 0;
  std::vector<std::vector<Rat>> positive;  // positive[k-1] = p_k

  std::vector<Rat> at(int label) const;
};

PointConfiguration check_points(int n, const std::vector<std::vector<Rat>>& positive);

struct PnWitness {
  Simplex simplex;
  std::vector<int> labels;      // labels of the simplex vertices
  std::vector<Rat> lambda;      // convex coefficients per vertex, sum 1
};

/* Smallest simplex whose labeled points capture the origin in their convex
 * hull, with the exact certificate; throws NoWitness when none exists. */
PnWitness pn_witness(const Labeling& l, const PointConfiguration& p);

enum class CoverKind : std::uint8_t { LS, T, TB };

/* Closed covers are modeled by subcomplexes.  LS uses n+1 sets, TB uses
 * n+2; T uses n pairs (C_i, C_{-i}) that must satisfy C_{-i} = A(C_i). */
struct CoverFamily {
  CoverKind kind = CoverKind::LS;
  std::vector<SimplicialComplex> sets;
  std::vector<std::pair<SimplicialComplex, SimplicialComplex>> pairs;
};

struct CoverWitness {
  int index = 0;    // the i of LS, the k of T, the j echoed for TB
  Simplex simplex;  // LS/T: simplex in the double intersection; TB: the p
};

/* Finds the witness the corresponding cover statement guarantees on a
 * Borsuk-Ulam space; throws NoWitness otherwise. */
CoverWitness cover_check(const SimplicialComplex& x, const FreeInvolution& a,
                         const CoverFamily& cover, std::optional<int> j = {});

/* Vertexwise selection y(v) from a set-valued map, antipodal under the
 * involution. */
struct SetValuedSelection {
  int n = 0;
  std::vector<std::vector<Rat>> y;  // per vertex
};

SetValuedSelection check_selection(const EquivariantComplex& e, int n,
                                   const std::vector<std::vector<Rat>>& y);

struct KakutaniWitness {
  Simplex simplex;
  std::vector<Rat> lambda;
};

/* Simplex (smallest dimension first) whose selected points capture the
 * origin; one triangulation level of the finite Kakutani argument. */
KakutaniWitness kakutani_pl_zero(const EquivariantComplex& e, const SetValuedSelection& sel);

/* Exact certificate that 0 lies in the convex hull of the points: convex
 * coefficients per point (zeros allowed), or nothing. */
std::optional<std::vector<Rat>> origin_in_hull(const std::vector<std::vector<Rat>>& points,
                                               int n);

}  // namespace yangdex
