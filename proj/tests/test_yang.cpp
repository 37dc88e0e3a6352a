#include <functional>
#include <map>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "yangdex/cohomology.hpp"
#include "yangdex/constructions.hpp"
#include "yangdex/errors.hpp"
#include "yangdex/yang.hpp"

using namespace yangdex;

namespace {

SimplicialComplex cone_disk() {
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < 6; ++i)
    facets.push_back({corpus::padded("p", i), corpus::padded("p", (i + 1) % 6), "q"});
  return SimplicialComplex::from_facets("cone", facets);
}

EquivariantComplex two_points() {
  auto s0 = SimplicialComplex::from_facets("s0", {{"a"}, {"b"}});
  return EquivariantComplex{
      s0, check_free_involution(s0, std::map<std::string, std::string>{{"a", "b"}, {"b", "a"}}),
      {}};
}

}  // namespace

TEST_CASE("quotients") {
  SUBCASE("two points collapse to one") {
    auto e = two_points();
    auto qd = quotient(e.complex, e.involution);
    CHECK_FALSE(qd.subdivided);
    CHECK(qd.quotient.f_vector() == std::vector<int>{1});
  }
  SUBCASE("hexagon half-turn is regular") {
    auto hex = corpus::cycle(6);
    auto qd = quotient(hex, corpus::cycle_antipode(hex, 6));
    CHECK_FALSE(qd.subdivided);
    CHECK(qd.quotient.f_vector() == std::vector<int>{3, 3});
    CHECK(betti_gf2(qd.quotient) == std::vector<int>{1, 1});
    for (Vertex v = 0; v < qd.quotient.vertex_count(); ++v)
      CHECK(qd.projection[static_cast<size_t>(qd.section[static_cast<size_t>(v)])] == v);
  }
  SUBCASE("octahedron antipode needs one subdivision") {
    auto oct = corpus::octahedron();
    auto qd = quotient(oct, corpus::octahedron_antipode(oct));
    CHECK(qd.subdivided);
    CHECK(qd.quotient.f_vector() == std::vector<int>{13, 36, 24});
    CHECK(betti_gf2(qd.quotient) == std::vector<int>{1, 1, 1});
    CHECK(integer_cohomology(qd.quotient, 2).torsion == std::vector<Int>{2});
    for (Vertex v = 0; v < qd.quotient.vertex_count(); ++v)
      CHECK(qd.projection[static_cast<size_t>(qd.section[static_cast<size_t>(v)])] == v);
  }
  SUBCASE("grid torus shift collides on diagonals and subdivides") {
    /* The edges {g00, g11} and {g00, g33} share one projected image, so the
     * quotient comes from the subdivision: half of (96, 288, 192). */
    auto t = corpus::grid_torus();
    auto qd = quotient(t, corpus::grid_torus_shift(t));
    CHECK(qd.subdivided);
    CHECK(qd.quotient.f_vector() == std::vector<int>{48, 144, 96});
    CHECK(euler_characteristic(qd.quotient) == 0);
  }
}

TEST_CASE("characteristic cocycle") {
  SUBCASE("no edges below dimension one") {
    auto e = two_points();
    auto cc = characteristic_cocycle(e.complex, e.involution);
    CHECK(cc.w.empty());
  }
  SUBCASE("hexagon cover class is the nonzero class of the 3-cycle") {
    auto hex = corpus::cycle(6);
    auto cc = characteristic_cocycle(hex, corpus::cycle_antipode(hex, 6));
    int total = 0;
    for (uint8_t b : cc.w) total += b;
    CHECK(total % 2 == 1);
    auto q = cc.data.quotient;
    CHECK_FALSE(gf2_cohomology(q, 1).class_is_zero(cc.w));
  }
  SUBCASE("swapped disjoint triangles give a trivial cover") {
    auto x = SimplicialComplex::from_facets("pair", {{"a1", "a2", "a3"}, {"b1", "b2", "b3"}});
    std::map<std::string, std::string> action;
    for (int i = 1; i <= 3; ++i) {
      action["a" + std::to_string(i)] = "b" + std::to_string(i);
      action["b" + std::to_string(i)] = "a" + std::to_string(i);
    }
    auto cc = characteristic_cocycle(x, check_free_involution(x, action));
    auto q = cc.data.quotient;
    CHECK(q.f_vector() == std::vector<int>{3, 3, 1});
    CHECK(is_coboundary_gf2(q, 1, cc.w));
  }
}

TEST_CASE("hind2 on spheres") {
  for (int n = 0; n <= 3; ++n) {
    auto s = cross_polytope_sphere(n);
    auto report = hind2(s.complex, s.involution);
    CHECK(report.hind2 == n);
    CHECK(report.first_vanishing_power == n + 1);
    CHECK(static_cast<int>(report.witnesses.size()) == n);
  }
}

TEST_CASE("hind2 on surfaces") {
  auto t = corpus::grid_torus();
  CHECK(hind2(t, corpus::grid_torus_shift(t)).hind2 == 1);

  auto t7 = corpus::torus7();
  auto genus2 = connected_sum_double(t7, t7.facet_list()[0]);
  CHECK(hind2(genus2.doubled.complex, genus2.doubled.involution).hind2 == 2);

  auto rp2 = corpus::rp2_6();
  auto klein = connected_sum_double(rp2, rp2.facet_list()[0]);
  CHECK(hind2(klein.doubled.complex, klein.doubled.involution).hind2 == 2);
}

TEST_CASE("index properties") {
  SUBCASE("stability under suspension") {
    std::vector<EquivariantComplex> corpus_list;
    corpus_list.push_back(two_points());
    auto hex = corpus::cycle(6);
    corpus_list.push_back(EquivariantComplex{hex, corpus::cycle_antipode(hex, 6), {}});
    auto t = corpus::grid_torus();
    corpus_list.push_back(EquivariantComplex{t, corpus::grid_torus_shift(t), {}});
    for (const auto& e : corpus_list) {
      int base = hind2(e.complex, e.involution).hind2;
      auto sx = suspension(e);
      CHECK(hind2(sx.complex, sx.involution).hind2 == base + 1);
    }
  }
  SUBCASE("connected complexes have positive index") {
    auto hex = corpus::cycle(6);
    CHECK(hind2(hex, corpus::cycle_antipode(hex, 6)).hind2 >= 1);
    auto oct = corpus::octahedron();
    CHECK(hind2(oct, corpus::octahedron_antipode(oct)).hind2 >= 1);
  }
  SUBCASE("vanishing below the top degree forces a full index") {
    for (int n = 1; n <= 3; ++n) {
      auto s = cross_polytope_sphere(n);
      bool gap = true;
      for (int i = 1; i < n; ++i)
        if (betti_gf2(s.complex)[static_cast<size_t>(i)] != 0) gap = false;
      CHECK(gap);
      CHECK(hind2(s.complex, s.involution).hind2 == n);
    }
  }
  SUBCASE("equivariant subdivision keeps the index") {
    auto hex = corpus::cycle(6);
    auto e = EquivariantComplex{hex, corpus::cycle_antipode(hex, 6), {}};
    auto sd = barycentric_subdivision(e);
    CHECK(hind2(sd.complex, sd.involution).hind2 == 1);
    auto oct = cross_polytope_sphere(2);
    auto sd2 = barycentric_subdivision(oct);
    CHECK(hind2(sd2.complex, sd2.involution).hind2 == 2);
  }
  SUBCASE("monotone under equivariant maps") {
    /* Triple wrap of the 18-gon onto the hexagon, both with half-turns. */
    auto big = corpus::cycle(18, "big");
    auto hex = corpus::cycle(6);
    std::map<std::string, std::string> to_hex;
    for (int i = 0; i < 18; ++i) to_hex[corpus::padded("p", i)] = corpus::padded("p", i % 6);
    auto spec = whole_complex_equivariance(corpus::cycle_antipode(big, 18),
                                           corpus::cycle_antipode(hex, 6));
    check_simplicial_map(big, hex, to_hex, spec);
    CHECK(hind2(big, corpus::cycle_antipode(big, 18)).hind2 <=
          hind2(hex, corpus::cycle_antipode(hex, 6)).hind2);

    /* Equator inclusion into the octahedral sphere. */
    auto oct = cross_polytope_sphere(2);
    auto square = cross_polytope_sphere(1);
    std::map<std::string, std::string> inc;
    for (std::string n : {"e1+", "e1-", "e2+", "e2-"}) inc[n] = n;
    auto spec2 = whole_complex_equivariance(square.involution, oct.involution);
    check_simplicial_map(square.complex, oct.complex, inc, spec2);
    CHECK(hind2(square.complex, square.involution).hind2 <=
          hind2(oct.complex, oct.involution).hind2);
  }
  SUBCASE("equal index maps induce a nonzero pullback at the top power") {
    /* The triple wrap has degree 3, odd, so the quotient map pulls the
     * generator of H^1 back nontrivially. */
    auto big = corpus::cycle(18, "big");
    auto hex = corpus::cycle(6);
    auto rb = hind2(big, corpus::cycle_antipode(big, 18));
    auto rh = hind2(hex, corpus::cycle_antipode(hex, 6));
    REQUIRE(rb.hind2 == rh.hind2);
    /* Quotients are the 9-cycle and 3-cycle; the induced map wraps three
     * times as well. */
    std::map<std::string, std::string> qmap;
    for (int i = 0; i < 9; ++i) qmap[corpus::padded("p", i)] = corpus::padded("p", i % 3);
    auto qb = rb.characteristic.data.quotient;
    auto qh = rh.characteristic.data.quotient;
    auto f = check_simplicial_map(qb, qh, qmap);
    auto pulled = pullback_gf2(f, 1, rh.witnesses[0]);
    CHECK_FALSE(gf2_cohomology(qb, 1).class_is_zero(pulled));
  }
}

TEST_CASE("but certificates") {
  SUBCASE("octahedral sphere is certified at the top") {
    auto oct = corpus::octahedron();
    auto cert = but_certificate(oct, corpus::octahedron_antipode(oct));
    CHECK(cert.hind2 == 2);
    CHECK(cert.dim == 2);
    CHECK(cert.tind_lower == 2);
    CHECK(cert.tind_upper == 2);
    CHECK(cert.closed_almost_pseudomanifold);
    CHECK(cert.equivalence_applied == Equivalence::AlmostPseudomanifold);
    REQUIRE(cert.but_n.size() == 3);
    CHECK(cert.but_n[0] == ButVerdict::Yes);
    CHECK(cert.but_n[1] == ButVerdict::Yes);
    CHECK(cert.but_n[2] == ButVerdict::Yes);
  }
  SUBCASE("grid torus fails at the top") {
    auto t = corpus::grid_torus();
    auto cert = but_certificate(t, corpus::grid_torus_shift(t));
    CHECK(cert.hind2 == 1);
    CHECK(cert.tind_lower == 1);
    CHECK(cert.tind_upper == 1);
    CHECK(cert.closed_almost_pseudomanifold);
    CHECK(cert.equivalence_applied == Equivalence::AlmostPseudomanifold);
    REQUIRE(cert.but_n.size() == 3);
    CHECK(cert.but_n[1] == ButVerdict::Yes);
    CHECK(cert.but_n[2] == ButVerdict::No);
  }
  SUBCASE("genus two double is certified at the top") {
    auto t7 = corpus::torus7();
    auto genus2 = connected_sum_double(t7, t7.facet_list()[0]);
    auto cert =
        but_certificate(genus2.doubled.complex, genus2.doubled.involution);
    CHECK(cert.hind2 == 2);
    CHECK(cert.but_n[2] == ButVerdict::Yes);
    CHECK(cert.equivalence_applied == Equivalence::AlmostPseudomanifold);
  }
  SUBCASE("two points") {
    auto e = two_points();
    auto cert = but_certificate(e.complex, e.involution);
    CHECK(cert.hind2 == 0);
    CHECK(cert.dim == 0);
    REQUIRE(cert.but_n.size() == 1);
    CHECK(cert.but_n[0] == ButVerdict::Yes);
    CHECK(cert.two_primary_ok);
  }
  SUBCASE("hexagon, odd dimension, settles through the suspension") {
    auto hex = corpus::cycle(6);
    auto cert = but_certificate(hex, corpus::cycle_antipode(hex, 6));
    CHECK(cert.hind2 == 1);
    CHECK(cert.dim == 1);
    CHECK(cert.but_n[1] == ButVerdict::Yes);
    CHECK(cert.two_primary_ok);
    CHECK(cert.equivalence_applied == Equivalence::AlmostPseudomanifold);
  }
  SUBCASE("two-primary settlement without a closed pseudomanifold") {
    /* A cylinder with the half-turn is not closed, but the orbit space has
     * trivial top integer cohomology, so the two-primary route still rules
     * out the top dimension. */
    auto band = SimplicialComplex::from_facets(
        "band", {{"u1", "u2", "v1"}, {"u2", "v1", "v2"}, {"u2", "u3", "v2"},
                 {"u3", "v2", "v3"}, {"u3", "u4", "v3"}, {"u4", "v3", "v4"},
                 {"u4", "u1", "v4"}, {"u1", "v4", "v1"}});
    std::map<std::string, std::string> action;
    for (int i = 1; i <= 4; ++i) {
      std::string u = "u" + std::to_string(i), v = "v" + std::to_string(i);
      std::string uo = "u" + std::to_string((i + 1) % 4 + 1);
      std::string vo = "v" + std::to_string((i + 1) % 4 + 1);
      action[u] = uo;
      action[v] = vo;
    }
    auto inv = check_free_involution(band, action);
    auto cert = but_certificate(band, inv);
    CHECK(cert.hind2 == 1);
    CHECK_FALSE(cert.closed_almost_pseudomanifold);
    CHECK(cert.two_primary_ok);
    CHECK(cert.equivalence_applied == Equivalence::TwoPrimary);
    CHECK(cert.tind_upper == 1);
    CHECK(cert.but_n[2] == ButVerdict::No);
  }
}

TEST_CASE("relative hypothesis") {
  auto hex = corpus::cycle(6);
  auto inv = corpus::cycle_antipode(hex, 6);
  SUBCASE("hexagon bounding a disk") {
    auto disk = cone_disk();
    auto r = relative_hypothesis(disk, hex, inv, 2, Coefficients::GF2);
    CHECK(r.holds);
    CHECK(r.index_ok);
    CHECK(r.restriction_zero);
    auto ri = relative_hypothesis(disk, hex, inv, 2, Coefficients::Integer);
    CHECK(ri.holds);
  }
  SUBCASE("a space inside itself fails") {
    auto r = relative_hypothesis(hex, hex, inv, 2, Coefficients::GF2);
    CHECK_FALSE(r.holds);
    CHECK(r.index_ok);
    CHECK_FALSE(r.restriction_zero);
  }
  SUBCASE("equator inside the octahedral sphere") {
    auto oct = corpus::octahedron();
    auto equator = SimplicialComplex::from_facets(
        "equator", {{"x+", "y+"}, {"y+", "x-"}, {"x-", "y-"}, {"y-", "x+"}});
    std::map<std::string, std::string> action{
        {"x+", "x-"}, {"x-", "x+"}, {"y+", "y-"}, {"y-", "y+"}};
    auto einv = check_free_involution(equator, action);
    auto r = relative_hypothesis(oct, equator, einv, 2, Coefficients::GF2);
    CHECK(r.holds);
    auto ri = relative_hypothesis(oct, equator, einv, 2, Coefficients::Integer);
    CHECK(ri.holds);
  }
  SUBCASE("index shortfall is reported") {
    auto disk = cone_disk();
    auto r = relative_hypothesis(disk, hex, inv, 3, Coefficients::GF2);
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.index_ok);
  }
  SUBCASE("bad inputs") {
    bool caught = false;
    try {
      relative_hypothesis(hex, corpus::cycle(8, "other"), inv, 2, Coefficients::GF2);
    } catch (const Error& e) {
      caught = e.code() == ErrorCode::BadInput;
    }
    CHECK(caught);
  }
}
